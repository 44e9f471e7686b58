"""Local multiplicities and logarithmic index bookkeeping.

Milnor numbers are computed two independent ways: as a saturation
defect (dimension of the quotient minus the dimension after saturating
away the point) and as a stabilized jet dimension.  The logarithmic
index at a point is the alternating sum of Milnor numbers of the
restrictions to all strata through the point, with the convention that
a zero-dimensional stratum contributes 1 when the point is singular.
Points off the divisor take their plain Milnor number.

Global totals never enumerate points: they are quotient dimensions of
chart singular ideals, with saturation by the earlier chart coordinates
removing the overlap between charts, so irrational singularities are
counted with full multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from . import linalg
from .chern import ChernInput, lhs_integral
from .errors import NC_VIOLATION, NOT_LOGARITHMIC, POSITIVE_DIM_SING, InputError
from .foliations import (
    Arrangement,
    Foliation,
    ambient_names,
    require_logarithmic,
    restrict_to_stratum,
    validate_arrangement,
    _form_vector,
)
from .groebner import INFINITE, Ideal, buchberger, divide, quotient_dimension, saturate
from .polynomials import GREVLEX, MultiPoly


# ------------------------------------------------------------------- points

class RationalPoint:
    """A rational point of P^n in canonical scaling (first nonzero = 1)."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        coords = [Fraction(c) for c in coords]
        pivot = next((c for c in coords if c != 0), None)
        if pivot is None:
            raise ValueError("all coordinates are zero")
        self.coords = tuple(c / pivot for c in coords)

    @classmethod
    def parse(cls, items: Sequence) -> "RationalPoint":
        return cls([Fraction(str(x)) for x in items])

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    @property
    def chart_index(self) -> int:
        return next(i for i, c in enumerate(self.coords) if c != 0)

    def affine_coords(self, j: int) -> tuple:
        if self.coords[j] == 0:
            raise ValueError(f"point is not in chart {j}")
        return tuple(c / self.coords[j] for i, c in enumerate(self.coords) if i != j)

    def display(self) -> str:
        return "[" + ":".join(str(c) for c in self.coords) + "]"

    def __eq__(self, other):
        return isinstance(other, RationalPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"RationalPoint({self.display()})"


# -------------------------------------------------------- local multiplicity

def maximal_ideal_at(nvars: int, point: Sequence) -> Ideal:
    gens = [MultiPoly.variable(nvars, i) - Fraction(point[i]) for i in range(nvars)]
    return Ideal(nvars, gens)


def milnor_at_point(ideal: Ideal, point: Sequence) -> int:
    """Multiplicity of a zero-dimensional ideal at one rational point.

    quotient_dimension(I) - quotient_dimension(I : m_p^infinity); zero
    exactly when the point is not in the zero set.
    """
    return milnor_at_maximal_ideal(ideal,
                                   maximal_ideal_at(ideal.nvars, point))


def milnor_at_maximal_ideal(ideal: Ideal, locus: Ideal) -> int:
    """Scheme length of the part of V(ideal) supported on V(locus).

    Accepts any ideal as the locus, so points with irrational
    coordinates work through their defining equations.  The raw length
    is returned; it is not divided by any residue-field degree.
    """
    total = quotient_dimension(ideal)
    if total == INFINITE:
        raise ValueError("ideal is not zero-dimensional")
    away = saturate(ideal, locus)
    rest = quotient_dimension(away)
    assert rest != INFINITE
    return total - rest


def milnor_oracle(ideal: Ideal, point: Sequence, max_jet: int = 24) -> int:
    """Independent multiplicity: dimension of I + m_p^N once N stabilizes.

    The jet dimensions are nondecreasing and strictly increase until
    they reach the multiplicity, so two equal consecutive values end the
    scan.
    """
    n = ideal.nvars
    shifts = [MultiPoly.variable(n, i) - Fraction(point[i]) for i in range(n)]
    previous = None
    for jet in range(1, max_jet + 1):
        gens = list(ideal.generators)
        for combo in combinations_with_replacement(range(n), jet):
            g = MultiPoly.constant(n, 1)
            for i in combo:
                g = g * shifts[i]
            gens.append(g)
        value = quotient_dimension(buchberger(gens, n))
        assert value != INFINITE
        if value == previous:
            return value
        previous = value
    raise ValueError(f"jet dimensions did not stabilize below N={max_jet}")


# ------------------------------------------------------------ point queries

def is_singular_point(fol: Foliation, point: RationalPoint) -> bool:
    j = point.chart_index
    aff = point.affine_coords(j)
    return all(c.evaluate(aff) == 0 for c in fol.chart_field(j).components)


def point_milnor(fol: Foliation, point: RationalPoint) -> int:
    """Milnor number of the foliation at a rational point (0 off Sing)."""
    j = point.chart_index
    return milnor_at_point(fol.singular_ideal(j), point.affine_coords(j))


def components_through(arr: Arrangement, point: RationalPoint) -> tuple:
    return tuple(i for i, f in enumerate(arr.forms)
                 if f.evaluate(point.coords) == 0)


def log_index_at_point(fol: Foliation, arr: Arrangement,
                       point: RationalPoint) -> int:
    """Alternating sum of restricted Milnor numbers over strata through p.

    Off the divisor this is just the Milnor number; at a nonsingular
    point it is 0.  Every hyperplane through the point must be
    invariant.
    """
    through = components_through(arr, point)
    require_logarithmic(fol, arr, through)
    if not is_singular_point(fol, point):
        return 0
    n = fol.n
    total = 0
    for size in range(len(through) + 1):
        for subset in combinations(through, size):
            sign = -1 if size % 2 else 1
            if size == n:
                total += sign  # point stratum; p is singular here
                continue
            restricted, stratum = restrict_to_stratum(fol, arr, subset)
            assert restricted is not None
            sp = RationalPoint(stratum.ambient_to_stratum(point.coords))
            total += sign * point_milnor(restricted, sp)
    return total


def hom_index_at_point(fol: Foliation, arr: Arrangement,
                       point: RationalPoint) -> int:
    """Milnor number minus logarithmic index; only defined on the divisor."""
    if not components_through(arr, point):
        raise ValueError("point does not lie on the divisor")
    return point_milnor(fol, point) - log_index_at_point(fol, arr, point)


# ------------------------------------------------------------- global sums

def _chart_locus_ideal(fol: Foliation, j: int) -> Ideal:
    return fol.singular_ideal(j)


def _overlap_vars(n: int, j: int) -> list:
    # chart-j coordinates covering the ambient variables z_0..z_{j-1}
    return [MultiPoly.variable(n, i) for i in range(j)]


def total_milnor(fol: Foliation) -> int:
    """Sum of all Milnor numbers of the foliation, multiplicity included.

    Chart by chart, the singular scheme dimension minus the part already
    seen in earlier charts (components along the vanishing of the
    earlier coordinates, removed by saturation).  For a valid foliation
    of degree d on P^n this totals sum_{i<=n} d^i.
    """
    n = fol.n
    total = 0
    for j in range(n + 1):
        ideal = _chart_locus_ideal(fol, j)
        full = quotient_dimension(ideal)
        if full == INFINITE:
            raise InputError(POSITIVE_DIM_SING,
                             f"singular scheme has positive dimension in chart {j}")
        if j == 0:
            total += full
            continue
        fresh = saturate(ideal, Ideal(n, _overlap_vars(n, j)))
        total += full - quotient_dimension(fresh)
    return total


def complement_milnor_sum(fol: Foliation, arr: Arrangement) -> int:
    """Total Milnor number of the singularities off the arrangement."""
    n = fol.n
    total = 0
    for j in range(n + 1):
        ideal = _chart_locus_ideal(fol, j)
        product = MultiPoly.constant(n, 1)
        for f in arr.forms:
            product = product * f.dehomogenize(j)
        if product.is_zero():
            raise ValueError("arrangement contains the zero form")
        off = saturate(ideal, Ideal(n, [product]))
        full = quotient_dimension(off)
        assert full != INFINITE
        if j == 0:
            total += full
            continue
        fresh = saturate(off, Ideal(n, _overlap_vars(n, j)))
        total += full - quotient_dimension(fresh)
    return total


@dataclass(frozen=True)
class StratumTotal:
    """One stratum's share of the stratified right-hand side."""

    indices: tuple
    dim: int
    sign: int
    total: int


def _point_stratum_point(arr: Arrangement, indices) -> RationalPoint:
    vectors = [_form_vector(arr.forms[i]) for i in indices]
    kernel = linalg.nullspace(vectors)
    assert len(kernel) == 1
    return RationalPoint(kernel[0])


def stratum_breakdown(fol: Foliation, arr: Arrangement) -> list:
    """Signed total Milnor numbers of all stratum restrictions.

    Zero-dimensional strata report 1 when their point is singular for
    the ambient foliation (it always is, under tangency) and 0
    otherwise.
    """
    violation = validate_arrangement(arr)
    if violation is not None:
        raise InputError(NC_VIOLATION, violation.describe())
    require_logarithmic(fol, arr)
    n = fol.n
    k = len(arr.forms)
    out = []
    for size in range(0, min(k, n) + 1):
        sign = -1 if size % 2 else 1
        for subset in combinations(range(k), size):
            if size == 0:
                value = total_milnor(fol)
            elif size == n:
                point = _point_stratum_point(arr, subset)
                value = 1 if is_singular_point(fol, point) else 0
            else:
                restricted, _ = restrict_to_stratum(fol, arr, subset)
                if restricted is None:
                    raise InputError(POSITIVE_DIM_SING,
                                     f"restriction to stratum {subset} vanishes")
                value = total_milnor(restricted)
            out.append(StratumTotal(indices=tuple(subset), dim=n - size,
                                    sign=sign, total=value))
    return out


def rhs_total(fol: Foliation, arr: Arrangement) -> int:
    """The stratified sum of logarithmic indices over all singularities."""
    return sum(s.sign * s.total for s in stratum_breakdown(fol, arr))


# ------------------------------------------------------------- affine germs

def germ_milnor(components: Sequence[MultiPoly], point: Sequence) -> int:
    """Milnor number of an affine vector-field germ at a rational point."""
    ideal = buchberger(list(components))
    return milnor_at_point(ideal, [Fraction(c) for c in point])


def _linear_part(form: MultiPoly) -> list:
    n = form.nvars
    return [form.coefficient(tuple(1 if j == i else 0 for j in range(n)))
            for i in range(n)]


def germ_log_index(components: Sequence[MultiPoly], forms: Sequence[MultiPoly],
                   point: Sequence) -> int:
    """Logarithmic index of an affine germ along a union of hyperplanes.

    `forms` are affine-linear; only those vanishing at the point enter.
    Each of them must be invariant: the derivative of the form along the
    field has to be divisible by the form.
    """
    components = list(components)
    n = components[0].nvars
    point = [Fraction(c) for c in point]
    through = []
    for f in forms:
        if f.total_degree() != 1:
            raise ValueError("divisor components must be affine-linear")
        if f.evaluate(point) == 0:
            through.append(f)
    for f in through:
        along = MultiPoly.zero(n)
        for a, v in zip(_linear_part(f), components):
            if a:
                along = along + v * a
        if not (along.is_zero() or divide(along, [f], GREVLEX)[1].is_zero()):
            raise InputError(NOT_LOGARITHMIC,
                             "germ is not tangent to one of the divisor components")
    singular_here = all(v.evaluate(point) == 0 for v in components)
    total = 0
    for size in range(len(through) + 1):
        for subset in combinations(range(len(through)), size):
            sign = -1 if size % 2 else 1
            if size == n:
                total += sign * (1 if singular_here else 0)
                continue
            restricted, origin = _restrict_germ(components, [through[i] for i in subset],
                                                point)
            total += sign * germ_milnor(restricted, origin)
    return total


def _restrict_germ(components, chosen, point):
    """Restrict an affine germ to the intersection of invariant hyperplanes.

    Moves the point to the origin, sends the chosen forms to the
    trailing coordinates, and drops those directions.
    """
    n = components[0].nvars
    if not chosen:
        return list(components), list(point)
    rows = [_linear_part(f) for f in chosen]
    change = linalg.complete_to_square(rows)
    inverse = linalg.invert(change)
    # x = point + inverse . u
    images = [MultiPoly.constant(n, point[i]) +
              MultiPoly(n, {tuple(1 if c == j else 0 for c in range(n)): inverse[i][j]
                            for j in range(n) if inverse[i][j] != 0})
              for i in range(n)]
    transformed = [v.compose(images) for v in components]
    keep = n - len(chosen)
    restricted = []
    for row in change[:keep]:
        w = MultiPoly.zero(n)
        for a, v in zip(row, transformed):
            if a:
                w = w + v * a
        restricted.append(w.set_trailing_zero(keep))
    return restricted, [Fraction(0)] * keep


def germ_hom_index(components: Sequence[MultiPoly], forms: Sequence[MultiPoly],
                   point: Sequence) -> int:
    point = [Fraction(c) for c in point]
    if all(f.evaluate(point) != 0 for f in forms):
        raise ValueError("point does not lie on the divisor")
    return germ_milnor(components, point) - germ_log_index(components, forms, point)


# -------------------------------------------------------------- full report

@dataclass(frozen=True)
class PointRecord:
    point: RationalPoint
    on_divisor: tuple
    singular: bool
    milnor: int
    log_index: int
    hom_index: int | None


@dataclass(frozen=True)
class IndexReport:
    n: int
    degree: int
    hyperplanes: int
    lhs_chern: int
    rhs_total: int
    verified: bool
    strata: tuple
    points: tuple


def point_record(fol: Foliation, arr: Arrangement,
                 point: RationalPoint) -> PointRecord:
    on = components_through(arr, point)
    singular = is_singular_point(fol, point)
    mu = point_milnor(fol, point) if singular else 0
    log = log_index_at_point(fol, arr, point)
    hom = (mu - log) if on else None
    return PointRecord(point=point, on_divisor=on, singular=singular,
                       milnor=mu, log_index=log, hom_index=hom)


def verify_instance(fol: Foliation, arr: Arrangement,
                    points: Sequence[RationalPoint] = ()) -> IndexReport:
    """Compare the Chern-number side with the stratified index side."""
    strata = stratum_breakdown(fol, arr)
    rhs = sum(s.sign * s.total for s in strata)
    lhs = lhs_integral(ChernInput(n=fol.n, divisor_degrees=(1,) * len(arr.forms),
                                  foliation_degree=fol.degree))
    records = tuple(point_record(fol, arr, p) for p in points)
    return IndexReport(n=fol.n, degree=fol.degree, hyperplanes=len(arr.forms),
                       lhs_chern=lhs, rhs_total=rhs, verified=(lhs == rhs),
                       strata=tuple(strata), points=records)
