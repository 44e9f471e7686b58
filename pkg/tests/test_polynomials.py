from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logfol.polynomials import (
    GREVLEX,
    LEX,
    BlockOrder,
    MultiPoly,
    format_poly,
    linear_substitute,
    parse_polynomial,
)

XY = ["x", "y"]
XYZ = ["x", "y", "z"]


def poly(text, names=XY):
    return parse_polynomial(text, names)


# ----------------------------------------------------------------- parsing


def test_parse_basic_arithmetic():
    assert poly("x + y") == MultiPoly.variable(2, 0) + MultiPoly.variable(2, 1)
    assert poly("x*y - 3") == poly("-3 + y*x")
    assert poly("(x + y)^2") == poly("x^2 + 2*x*y + y^2")
    assert poly("0") == MultiPoly.zero(2)


def test_parse_rational_coefficients():
    p = poly("1/2*x - 3/4")
    assert p.coefficient((1, 0)) == Fraction(1, 2)
    assert p.constant_term() == Fraction(-3, 4)


def test_parse_unary_minus_and_nesting():
    assert poly("-(x - y)") == poly("y - x")
    assert poly("-x^2") == -poly("x^2")
    assert poly("2*(x - (y - x))") == poly("4*x - 2*y")


def test_parse_errors_carry_position():
    with pytest.raises(ValueError, match="position"):
        poly("x + + y")
    with pytest.raises(ValueError, match="unknown variable"):
        poly("x + w")
    with pytest.raises(ValueError):
        poly("x * ")
    with pytest.raises(ValueError):
        poly("(x")
    with pytest.raises(ValueError):
        poly("x^-2")


def test_format_round_trips():
    for text in ["0", "x^2 - y", "x*y + 1/3", "-x + y^4 - 2",
                 "x^2*y^3 - 7*x*y - 5/2"]:
        p = poly(text)
        assert poly(format_poly(p, XY)) == p


# -------------------------------------------------------------- arithmetic


def test_ring_identities():
    x, y = poly("x"), poly("y")
    assert (x + y) * (x - y) == x**2 - y**2
    assert (x + y) ** 3 == poly("x^3 + 3*x^2*y + 3*x*y^2 + y^3")
    assert x * 0 == MultiPoly.zero(2)
    assert (x - x).is_zero()


def test_degree_and_homogeneity():
    assert poly("x^2*y + y^3").total_degree() == 3
    assert poly("x^2*y + y^3").is_homogeneous()
    assert not poly("x^2 + y").is_homogeneous()
    assert MultiPoly.zero(2).total_degree() == -1


def test_derivative_and_evaluate():
    p = poly("x^3 - 2*x*y + 5")
    assert p.derivative(0) == poly("3*x^2 - 2*y")
    assert p.derivative(1) == poly("-2*x")
    assert p.evaluate([Fraction(2), Fraction(3)]) == 8 - 12 + 5


def test_compose():
    p = poly("x^2 + y")
    assert p.compose([poly("x + y"), poly("x*y")]) == poly(
        "x^2 + 2*x*y + y^2 + x*y")


def test_dehomogenize_merges_colliding_terms():
    # z*x + x both land on x once z is set to 1
    p = parse_polynomial("z*x + x", ["x", "y", "z"])
    assert p.dehomogenize(2) == poly("2*x")


def test_set_trailing_zero_drops_variables():
    p = parse_polynomial("x + y*z + z^2", XYZ)
    q = p.set_trailing_zero(2)
    assert q == poly("x")
    assert q.nvars == 2


# ------------------------------------------------------------ substitution


def test_linear_substitute_examples():
    x = poly("x")
    ident = [[1, 0], [0, 1]]
    swap = [[0, 1], [1, 0]]
    shear = [[1, 1], [0, 1]]
    assert linear_substitute(x, ident) == x
    assert linear_substitute(poly("x + y"), swap) == poly("x + y")
    assert linear_substitute(poly("x^2"), shear) == poly("x^2 + 2*x*y + y^2")


def test_linear_substitute_rejects_singular():
    with pytest.raises(ValueError):
        linear_substitute(poly("x"), [[1, 1], [2, 2]])


# ----------------------------------------------------------------- orders


def test_lead_terms_under_orders():
    p = parse_polynomial("x^2 + y^3 + x*y*z", XYZ)
    grev_lead, _ = p.lead_term(GREVLEX)
    lex_lead, _ = p.lead_term(LEX)
    # grevlex tiebreak among degree-3 monomials: smaller last exponent wins
    assert grev_lead == (0, 3, 0)
    assert lex_lead == (2, 0, 0)


def test_block_order_eliminates_first_block():
    # any monomial containing the first variable beats any that does not
    order = BlockOrder(1)
    assert order.key((1, 0, 0)) > order.key((0, 5, 5))
    assert order.key((0, 2, 1)) > order.key((0, 1, 1))


def test_order_respects_one():
    for order in (GREVLEX, LEX, BlockOrder(1)):
        assert order.key((0, 0, 0)) < order.key((1, 0, 0))
        assert order.key((0, 0, 0)) < order.key((0, 0, 1))


# -------------------------------------------------------------- hypothesis


def exponents(nvars=2, max_deg=3):
    return st.tuples(*[st.integers(0, max_deg)] * nvars)


def fractions():
    return st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))


def polys(nvars=2):
    return st.dictionaries(exponents(nvars), fractions(), max_size=5).map(
        lambda d: MultiPoly(nvars, d))


@given(polys(), polys(), polys())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a


@given(polys())
@settings(max_examples=60, deadline=None)
def test_format_parse_round_trip(p):
    assert parse_polynomial(format_poly(p, XY), XY) == p


@given(polys(), polys())
@settings(max_examples=40, deadline=None)
def test_linear_substitute_is_a_ring_map(a, b):
    matrix = [[1, 2], [1, 3]]
    assert linear_substitute(a * b, matrix) == \
        linear_substitute(a, matrix) * linear_substitute(b, matrix)
    assert linear_substitute(a + b, matrix) == \
        linear_substitute(a, matrix) + linear_substitute(b, matrix)


@given(exponents(3), exponents(3), exponents(3))
@settings(max_examples=60, deadline=None)
def test_orders_are_multiplicative(a, b, m):
    for order in (GREVLEX, LEX, BlockOrder(1)):
        if order.key(a) < order.key(b):
            shifted_a = tuple(i + j for i, j in zip(a, m))
            shifted_b = tuple(i + j for i, j in zip(b, m))
            assert order.key(shifted_a) < order.key(shifted_b)
