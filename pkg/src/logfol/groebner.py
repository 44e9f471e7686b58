"""Groebner bases over Q and the ideal operations built on them.

Buchberger's algorithm with the classical pair pruning (coprime leading
monomials and the chain criterion) followed by full interreduction, so
every call yields *the* reduced basis of the ideal under the chosen
order.  Determinism matters more than speed here: inputs are sorted
canonically, pairs are processed smallest-lcm first, and bases come out
sorted by leading monomial.

Colon ideals go through the classical tag-variable intersection trick;
saturation iterates single-generator colons round-robin until the chain
stabilizes.  Vector-space dimensions of quotients are staircase counts
read off the reduced basis.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .polynomials import (
    GREVLEX,
    BlockOrder,
    MonomialOrder,
    MultiPoly,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

INFINITE = float("inf")


# ------------------------------------------------------------------- ideals

class Ideal:
    """An ideal given by generators, with a cached reduced Groebner basis.

    The cache is a single (order, basis) slot filled by `buchberger`;
    operations that need a basis under a different order recompute and
    replace it.  Two ideals compare equal when their reduced grevlex
    bases coincide.
    """

    __slots__ = ("nvars", "generators", "_order", "_basis")

    def __init__(self, nvars: int, generators: Iterable[MultiPoly]):
        gens = []
        for g in generators:
            if not isinstance(g, MultiPoly):
                raise TypeError("generators must be MultiPoly")
            if g.nvars != nvars:
                raise ValueError("generator lives in the wrong ring")
            if not g.is_zero():
                gens.append(g)
        self.nvars = nvars
        self.generators = tuple(gens)
        self._order = None
        self._basis = None

    @property
    def basis_cache(self):
        if self._order is None:
            return None
        return (self._order, self._basis)

    def groebner_basis(self, order: MonomialOrder = GREVLEX) -> tuple:
        if self._order is not None and self._order.name == order.name:
            return self._basis
        basis = _reduced_groebner(self.generators, self.nvars, order)
        self._order = order
        self._basis = basis
        return basis

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        return self.groebner_basis(GREVLEX) == other.groebner_basis(GREVLEX)

    def __hash__(self):
        return hash((self.nvars, self.groebner_basis(GREVLEX)))

    def __repr__(self):
        return f"Ideal({self.nvars}, {len(self.generators)} generators)"


def buchberger(generators: Sequence[MultiPoly], nvars: int | None = None,
               order: MonomialOrder = GREVLEX) -> Ideal:
    """Build an Ideal and cache its reduced Groebner basis."""
    gens = list(generators)
    if nvars is None:
        if not gens:
            raise ValueError("need nvars for an empty generator list")
        nvars = gens[0].nvars
    ideal = Ideal(nvars, gens)
    ideal.groebner_basis(order)
    return ideal


# ----------------------------------------------------------------- division

def divide(f: MultiPoly, divisors: Sequence[MultiPoly],
           order: MonomialOrder = GREVLEX) -> tuple[list, MultiPoly]:
    """Multivariate division.  Returns (quotients, remainder).

    Every monomial of the remainder is divisible by no leading monomial
    of the divisors; the divisor scanned first is always the first
    listed, which makes the outcome deterministic for a fixed list.
    """
    leads = [g.lead_term(order) for g in divisors]
    quotients = [MultiPoly.zero(f.nvars) for _ in divisors]
    remainder: dict = {}
    work = dict(f.terms)
    while work:
        exps = max(work, key=order.key)
        coeff = work.pop(exps)
        for i, (lm, lc) in enumerate(leads):
            if mono_divides(lm, exps):
                shift = mono_div(exps, lm)
                factor = coeff / lc
                quotients[i] = quotients[i] + MultiPoly.monomial(f.nvars, shift, factor)
                for e2, c2 in divisors[i].terms.items():
                    if e2 == lm:
                        continue
                    e = mono_mul(shift, e2)
                    val = work.get(e, Fraction(0)) - factor * c2
                    if val:
                        work[e] = val
                    else:
                        work.pop(e, None)
                break
        else:
            remainder[exps] = remainder.get(exps, Fraction(0)) + coeff
    return quotients, MultiPoly(f.nvars, remainder)


def normal_form(f: MultiPoly, ideal: Ideal, order: MonomialOrder | None = None) -> MultiPoly:
    """Remainder of f modulo the ideal's cached reduced basis.

    Requires a cached basis (compute one with `buchberger` first); with
    a reduced basis the result is the unique normal form, so membership
    is `normal_form(f, I).is_zero()`.
    """
    cache = ideal.basis_cache
    if cache is None:
        raise ValueError("ideal has no cached Groebner basis; call buchberger first")
    cached_order, basis = cache
    if order is not None and order.name != cached_order.name:
        basis = ideal.groebner_basis(order)
        cached_order = order
    if not basis:
        return f
    return divide(f, basis, cached_order)[1]


def contains(ideal: Ideal, f: MultiPoly) -> bool:
    return normal_form(f, ideal).is_zero()


def exact_divide(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """f / g when g divides f exactly; raises ValueError otherwise."""
    if g.is_zero():
        raise ValueError("division by the zero polynomial")
    quotients, rem = divide(f, [g], GREVLEX)
    if not rem.is_zero():
        raise ValueError("not an exact division")
    return quotients[0]


# ------------------------------------------------------------ basis machinery

def s_polynomial(f: MultiPoly, g: MultiPoly, order: MonomialOrder = GREVLEX) -> MultiPoly:
    lf, cf = f.lead_term(order)
    lg, cg = g.lead_term(order)
    lcm = mono_lcm(lf, lg)
    mf = MultiPoly.monomial(f.nvars, mono_div(lcm, lf), Fraction(1) / cf)
    mg = MultiPoly.monomial(g.nvars, mono_div(lcm, lg), Fraction(1) / cg)
    return mf * f - mg * g


def _canonical_sort(polys: Sequence[MultiPoly], order: MonomialOrder) -> list:
    def key(p):
        return (order.key(p.lead_term(order)[0]),
                sorted(((order.key(e), c) for e, c in p.terms.items()), reverse=True))
    return sorted(polys, key=key)


def _monic(p: MultiPoly, order: MonomialOrder) -> MultiPoly:
    _, c = p.lead_term(order)
    return p * (Fraction(1) / c)


def _interreduce(polys: list, order: MonomialOrder) -> tuple:
    """Minimalize then fully reduce; yields the unique reduced basis."""
    polys = [_monic(p, order) for p in polys if not p.is_zero()]
    # minimal: drop any element whose lead is divisible by another lead
    minimal = []
    leads = [p.lead_term(order)[0] for p in polys]
    for i, p in enumerate(polys):
        li = leads[i]
        redundant = any(
            j != i and mono_divides(leads[j], li)
            and not (leads[j] == li and j > i)
            for j in range(len(polys))
        )
        if not redundant:
            minimal.append(p)
    # full tail reduction until stable
    changed = True
    while changed:
        changed = False
        for i in range(len(minimal)):
            others = minimal[:i] + minimal[i + 1:]
            if not others:
                continue
            _, reduced = divide(minimal[i], others, order)
            if reduced != minimal[i]:
                changed = True
                if reduced.is_zero():
                    minimal.pop(i)
                else:
                    minimal[i] = _monic(reduced, order)
                break
    return tuple(_canonical_sort(minimal, order))


def _reduced_groebner(generators: Sequence[MultiPoly], nvars: int,
                      order: MonomialOrder) -> tuple:
    basis = [_monic(g, order) for g in _canonical_sort(
        [g for g in generators if not g.is_zero()], order)]
    if not basis:
        return ()
    leads = [p.lead_term(order)[0] for p in basis]

    def lcm_key(i, j):
        return (order.key(mono_lcm(leads[i], leads[j])), i, j)

    pending = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    done = set()
    while pending:
        i, j = min(pending, key=lambda p: lcm_key(*p))
        pending.discard((i, j))
        done.add((i, j))
        lcm = mono_lcm(leads[i], leads[j])
        # coprime leads: the S-polynomial reduces to zero
        if lcm == mono_mul(leads[i], leads[j]):
            continue
        # chain criterion: some processed k divides the lcm
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not mono_divides(leads[k], lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in done and b in done:
                skip = True
                break
        if skip:
            continue
        _, rem = divide(s_polynomial(basis[i], basis[j], order), basis, order)
        if rem.is_zero():
            continue
        rem = _monic(rem, order)
        basis.append(rem)
        leads.append(rem.lead_term(order)[0])
        new = len(basis) - 1
        for k in range(new):
            pending.add((k, new))
    return _interreduce(basis, order)


# --------------------------------------------------------- derived operations

def _prefix_var(p: MultiPoly, count: int = 1) -> MultiPoly:
    return MultiPoly(p.nvars + count,
                     {(0,) * count + e: c for e, c in p.terms.items()})


def _strip_prefix(p: MultiPoly, count: int = 1) -> MultiPoly:
    assert all(not any(e[:count]) for e in p.terms)
    return MultiPoly(p.nvars - count, {e[count:]: c for e, c in p.terms.items()})


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """Ideal intersection via the tag variable t: (t*A + (1-t)*B) ∩ Q[x]."""
    if a.nvars != b.nvars:
        raise ValueError("ideals live in different rings")
    n = a.nvars
    t = MultiPoly.variable(n + 1, 0)
    one = MultiPoly.constant(n + 1, 1)
    gens = [t * _prefix_var(g) for g in a.generators]
    gens += [(one - t) * _prefix_var(g) for g in b.generators]
    basis = buchberger(gens, n + 1, BlockOrder(1)).groebner_basis(BlockOrder(1))
    kept = [_strip_prefix(g) for g in basis if not any(e[0] for e in g.terms)]
    return buchberger(kept, n)


def ideal_quotient(ideal: Ideal, f: MultiPoly) -> Ideal:
    """The colon ideal I : (f) for a single nonzero f."""
    if f.nvars != ideal.nvars:
        raise ValueError("f lives in the wrong ring")
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    if f.total_degree() == 0:
        return buchberger(ideal.generators, ideal.nvars)
    meet = intersect(ideal, buchberger([f], ideal.nvars))
    gens = [exact_divide(g, f) for g in meet.groebner_basis(GREVLEX)]
    return buchberger(gens, ideal.nvars)


def colon_by_ideal(ideal: Ideal, other: Ideal) -> Ideal:
    """I : J as the intersection of the single-generator colons."""
    gens = [g for g in other.generators if not g.is_zero()]
    if not gens:
        raise ValueError("cannot take a colon by the zero ideal")
    gens = _canonical_sort(gens, GREVLEX)
    result = ideal_quotient(ideal, gens[0])
    for f in gens[1:]:
        result = intersect(result, ideal_quotient(ideal, f))
    return result


def saturate(ideal: Ideal, other: Ideal) -> Ideal:
    """I : J^infinity: iterate the colon by J until the chain stabilizes.

    Each round goes through J's generators one at a time (single
    colons, then an intersection); equality of the reduced bases of two
    consecutive rounds detects the fixed point.
    """
    current = buchberger(ideal.generators, ideal.nvars)
    while True:
        step = colon_by_ideal(current, other)
        if step.groebner_basis(GREVLEX) == current.groebner_basis(GREVLEX):
            return current
        current = step


def quotient_dimension(ideal: Ideal):
    """dim_Q of the quotient ring, or INFINITE.

    Counts the staircase of the cached reduced basis: monomials not
    divisible by any leading monomial.  Finite exactly when every
    variable appears as a pure power among the leads.
    """
    cache = ideal.basis_cache
    if cache is None:
        raise ValueError("ideal has no cached Groebner basis; call buchberger first")
    order, basis = cache
    n = ideal.nvars
    if not basis:
        return 1 if n == 0 else INFINITE
    leads = [g.lead_term(order)[0] for g in basis]
    if any(mono_deg(lm) == 0 for lm in leads):
        return 0
    bounds = []
    for i in range(n):
        pure = [lm[i] for lm in leads if all(k == 0 for j, k in enumerate(lm) if j != i)]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    count = 0
    stack = [(0,) * n]
    seen = {(0,) * n}
    while stack:
        exps = stack.pop()
        if any(mono_divides(lm, exps) for lm in leads):
            continue
        count += 1
        for i in range(n):
            if exps[i] + 1 < bounds[i]:
                up = exps[:i] + (exps[i] + 1,) + exps[i + 1:]
                if up not in seen:
                    seen.add(up)
                    stack.append(up)
    return count


def staircase(ideal: Ideal) -> list:
    """The standard monomials of a zero-dimensional ideal, sorted."""
    cache = ideal.basis_cache
    if cache is None:
        raise ValueError("ideal has no cached Groebner basis; call buchberger first")
    order, basis = cache
    dim = quotient_dimension(ideal)
    if dim is INFINITE:
        raise ValueError("staircase is infinite")
    leads = [g.lead_term(order)[0] for g in basis]
    n = ideal.nvars
    out = []
    stack = [(0,) * n]
    seen = {(0,) * n}
    while stack:
        exps = stack.pop()
        if any(mono_divides(lm, exps) for lm in leads):
            continue
        out.append(exps)
        for i in range(n):
            up = exps[:i] + (exps[i] + 1,) + exps[i + 1:]
            if up not in seen:
                seen.add(up)
                stack.append(up)
    return sorted(out, key=order.key)
