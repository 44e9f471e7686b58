"""Sparse multivariate polynomials over exact rationals.

A monomial is an exponent tuple of fixed length (the ring's variable
count).  A polynomial maps monomials to nonzero Fraction coefficients.
All arithmetic is exact; nothing here ever touches floats.  Polynomials
are immutable by convention and hashable, so they can be shared freely
between ideals, foliations and reports.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exponents = tuple  # tuple[int, ...]


# ------------------------------------------------------------------ monomials

def mono_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Exponents, b: Exponents) -> bool:
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Exponents, b: Exponents) -> Exponents:
    """Exponents of x^a / x^b.  Caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a: Exponents) -> int:
    return sum(a)


# ------------------------------------------------------------------ orderings

class MonomialOrder:
    """A multiplicative well-order on monomials, exposed as a sort key.

    key(a) < key(b) exactly when a precedes b in the order, so the
    leading monomial of a polynomial is max(terms, key=order.key).
    """

    name: str = "?"

    def key(self, exps: Exponents):
        raise NotImplementedError

    def __repr__(self):
        return self.name


def _grevlex_key(exps: Exponents):
    # Graded, ties broken by the *last* differing exponent being smaller.
    return (sum(exps), tuple(-e for e in reversed(exps)))


class GrevlexOrder(MonomialOrder):
    name = "grevlex"

    def key(self, exps):
        return _grevlex_key(exps)


class LexOrder(MonomialOrder):
    """Pure lexicographic order; variable 0 is the most significant."""

    name = "lex"

    def key(self, exps):
        return tuple(exps)


class BlockOrder(MonomialOrder):
    """Elimination order for the first `block` variables.

    Compares the leading block by grevlex first, so any monomial that
    involves an eliminated variable dominates every monomial that does
    not.  Used to compute intersections and colon ideals.
    """

    def __init__(self, block: int):
        if block < 1:
            raise ValueError("block size must be >= 1")
        self.block = block
        self.name = f"elim({block})"

    def key(self, exps):
        return (_grevlex_key(exps[: self.block]), _grevlex_key(exps[self.block:]))


GREVLEX = GrevlexOrder()
LEX = LexOrder()


# ---------------------------------------------------------------- polynomials

class MultiPoly:
    """A polynomial in Q[x_0, ..., x_{nvars-1}] stored as {exponents: coeff}."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponents, Fraction] | Iterable = ()):
        self.nvars = nvars
        clean: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, c in items:
            c = Fraction(c)
            if c == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps} for {nvars} variables")
            clean[exps] = clean.get(exps, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c != 0}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        if not 0 <= i < nvars:
            raise ValueError("variable index out of range")
        exps = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], coeff=1) -> "MultiPoly":
        return cls(nvars, {tuple(exps): Fraction(coeff)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return max((mono_deg(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {mono_deg(e) for e in self.terms}
        return len(degs) <= 1

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def lead_term(self, order: MonomialOrder = GREVLEX):
        """(exponents, coefficient) of the leading term.  Errors on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=order.key)
        return exps, self.terms[exps]

    def sorted_terms(self, order: MonomialOrder = GREVLEX, reverse: bool = True):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=reverse)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("mixed variable counts")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MultiPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return MultiPoly(self.nvars, {e: k * c for e, k in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- calculus / substitution -------------------------------------------

    def derivative(self, i: int) -> "MultiPoly":
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                down = list(e)
                down[i] -= 1
                exps = tuple(down)
                terms[exps] = terms.get(exps, Fraction(0)) + c * e[i]
        return MultiPoly(self.nvars, terms)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("point has wrong length")
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            val = c
            for x, k in zip(pt, e):
                if k:
                    val *= x ** k
            total += val
        return total

    def compose(self, polys: Sequence["MultiPoly"]) -> "MultiPoly":
        """Substitute variable i by polys[i].  All images share one ring."""
        if len(polys) != self.nvars:
            raise ValueError("need one image per variable")
        if not polys:
            raise ValueError("cannot compose in an empty ring")
        tvars = polys[0].nvars
        if any(p.nvars != tvars for p in polys):
            raise ValueError("images live in different rings")
        powers: dict = {}

        def power(i, k):
            if (i, k) not in powers:
                powers[(i, k)] = polys[i] ** k
            return powers[(i, k)]

        out = MultiPoly.zero(tvars)
        for e, c in self.terms.items():
            piece = MultiPoly.constant(tvars, c)
            for i, k in enumerate(e):
                if k:
                    piece = piece * power(i, k)
            out = out + piece
        return out

    def dehomogenize(self, i: int) -> "MultiPoly":
        """Set variable i to 1 and drop it from the ring."""
        terms: dict = {}
        for e, c in self.terms.items():
            exps = e[:i] + e[i + 1:]
            terms[exps] = terms.get(exps, Fraction(0)) + c
        return MultiPoly(self.nvars - 1, terms)

    def set_trailing_zero(self, keep: int) -> "MultiPoly":
        """Set the last nvars-keep variables to 0 and drop them."""
        terms = {}
        for e, c in self.terms.items():
            if any(e[keep:]):
                continue
            terms[e[:keep]] = c
        return MultiPoly(keep, terms)

    # -- presentation --------------------------------------------------------

    def __str__(self):
        return format_poly(self, [f"x{i}" for i in range(self.nvars)])

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.terms!r})"


# ------------------------------------------------------------- substitutions

def linear_substitute(f: MultiPoly, matrix: Sequence[Sequence]) -> MultiPoly:
    """Compose f with the invertible linear change of variables x -> M.x."""
    from . import linalg

    n = f.nvars
    rows = [[Fraction(x) for x in row] for row in matrix]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError("matrix shape does not match the ring")
    if linalg.rank(rows) != n:
        raise ValueError("substitution matrix is singular")
    images = [
        MultiPoly(n, {tuple(1 if j == k else 0 for k in range(n)): rows[i][j]
                      for j in range(n) if rows[i][j] != 0})
        for i in range(n)
    ]
    return f.compose(images)


# ------------------------------------------------------------------- parsing

class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self):
        ch = self.peek()
        self.pos += 1
        return ch

    def error(self, msg):
        raise ValueError(f"{msg} at position {self.pos} in {self.text!r}")

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a number")
        return int(self.text[start:self.pos])

    def name(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        if start == self.pos:
            self.error("expected a name")
        return self.text[start:self.pos]


def parse_polynomial(text: str, names: Sequence[str]) -> MultiPoly:
    """Parse +, -, *, ^, rational coefficients and parentheses.

    Multiplication is explicit (write 2*x, not 2x).  Raises ValueError
    with a position on malformed input.
    """
    nvars = len(names)
    index = {name: i for i, name in enumerate(names)}
    sc = _Scanner(text)

    def parse_expr() -> MultiPoly:
        sign = 1
        if sc.peek() == "-":
            sc.take()
            sign = -1
        elif sc.peek() == "+":
            sc.take()
        total = parse_term() * sign
        while True:
            ch = sc.peek()
            if ch == "+":
                sc.take()
                total = total + parse_term()
            elif ch == "-":
                sc.take()
                total = total - parse_term()
            else:
                return total

    def parse_term() -> MultiPoly:
        p = parse_factor()
        while sc.peek() == "*":
            sc.take()
            p = p * parse_factor()
        return p

    def parse_factor() -> MultiPoly:
        base = parse_atom()
        if sc.peek() == "^":
            sc.take()
            return base ** sc.integer()
        return base

    def parse_atom() -> MultiPoly:
        ch = sc.peek()
        if ch == "(":
            sc.take()
            inner = parse_expr()
            if sc.peek() != ")":
                sc.error("expected ')'")
            sc.take()
            return inner
        if ch == "-":
            sc.take()
            return -parse_atom()
        if ch.isdigit():
            num = sc.integer()
            if sc.peek() == "/":
                sc.take()
                den = sc.integer()
                if den == 0:
                    sc.error("zero denominator")
                return MultiPoly.constant(nvars, Fraction(num, den))
            return MultiPoly.constant(nvars, num)
        if ch.isalpha() or ch == "_":
            name = sc.name()
            if name not in index:
                sc.error(f"unknown variable {name!r}")
            return MultiPoly.variable(nvars, index[name])
        sc.error("unexpected character")

    result = parse_expr()
    sc.skip_ws()
    if sc.pos != len(sc.text):
        sc.error("trailing input")
    return result


def format_poly(p: MultiPoly, names: Sequence[str], order: MonomialOrder = GREVLEX) -> str:
    """Deterministic text form; output reparses to the same polynomial."""
    if p.is_zero():
        return "0"
    if len(names) != p.nvars:
        raise ValueError("need one name per variable")
    pieces = []
    for exps, coeff in p.sorted_terms(order):
        factors = [f"{names[i]}^{k}" if k > 1 else names[i]
                   for i, k in enumerate(exps) if k]
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not pieces:
            pieces.append(body if coeff > 0 else "-" + body)
        else:
            pieces.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(pieces)
