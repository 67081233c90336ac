"""Unit and property tests for the exact bivariate arithmetic layer."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hodge_series.ratfun import (
    ONE,
    U,
    V,
    BivarPoly,
    NonIntegralExpansion,
    NonUnitDenominator,
    NotDivisible,
    NotPolynomialWithinBound,
    DivisionByZeroFunction,
    RatFun2,
    TruncSeries2,
    UniPoly,
    RatFun1,
    ZeroDenominatorAfterSubstitution,
    cancel_factor,
    expand_series,
    substitute,
    to_polynomial,
    w_power,
)

P = BivarPoly
W = w_power(1)


def poly(d):
    return BivarPoly(d)


class TestPolyOps:
    def test_mul_simple(self):
        assert (1 + U) * (1 + V) == poly({(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1})

    def test_pow_zero(self):
        assert (1 + W) ** 0 == ONE

    def test_difference_of_squares(self):
        assert (1 - W) * (1 + W) == 1 - w_power(2)

    def test_add_cancels(self):
        assert ((1 + U) - (1 + U)).is_zero()

    def test_zero_coefficients_dropped(self):
        assert poly({(1, 1): 0, (0, 0): 2}).terms == {(0, 0): 2}

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            poly({(-1, 0): 1})


class TestDivision:
    def test_exact(self):
        assert (1 - w_power(2)).divide_exact(1 - W) == 1 + W

    def test_square(self):
        assert ((1 + U) ** 2).divide_exact(1 + U) == 1 + U

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            (1 + U + V).divide_exact(1 + U)

    def test_non_divisible_coefficient(self):
        with pytest.raises(NotDivisible):
            poly({(1, 0): 3}).divide_exact(poly({(1, 0): 2}))


class TestRatOps:
    def test_semantic_zero(self):
        r = RatFun2(ONE, 1 - W)
        assert (r + (-r)).num.is_zero()
        assert (r - r).rat_eq(RatFun2(BivarPoly(), (1 - W) ** 2))

    def test_inv(self):
        assert RatFun2(W).inv().rat_eq(RatFun2(ONE, W))

    def test_inv_zero(self):
        with pytest.raises(DivisionByZeroFunction):
            RatFun2(BivarPoly()).inv()

    def test_mul(self):
        r = RatFun2(1 + U, 1 - W) * RatFun2(1 + V)
        assert r.rat_eq(RatFun2((1 + U) * (1 + V), 1 - W))

    def test_negative_power(self):
        r = RatFun2(1 + U, 1 - W)
        assert (r ** -2).rat_eq(RatFun2((1 - W) ** 2, (1 + U) ** 2))

    def test_rat_eq_examples(self):
        assert RatFun2(1 - w_power(2), 1 - W).rat_eq(RatFun2(1 + W))
        assert not RatFun2(ONE, 1 - W).rat_eq(RatFun2(ONE, 1 - w_power(2)))
        assert RatFun2(BivarPoly(), 1 + U).rat_eq(RatFun2(BivarPoly(), 1 + V))


class TestExpand:
    def test_geometric(self):
        s = expand_series(RatFun2(ONE, 1 - W), 3)
        assert s == TruncSeries2(3, {(0, 0): 1, (1, 1): 1})

    def test_derived_square_case(self):
        # (1+u)^2 (1+v)^2 / (1-uv) expanded to total degree 2:
        # (1+2u+u^2)(1+2v+v^2)(1+uv+...) = 1 + 2u + 2v + u^2 + 5uv + v^2 + ...
        r = RatFun2((1 + U) ** 2 * (1 + V) ** 2, 1 - W)
        assert r.expand(2) == TruncSeries2(
            2, {(0, 0): 1, (1, 0): 2, (0, 1): 2, (2, 0): 1, (1, 1): 5, (0, 2): 1})

    def test_alternating(self):
        s = expand_series(RatFun2(ONE, 1 + U), 2)
        assert s == TruncSeries2(2, {(0, 0): 1, (1, 0): -1, (2, 0): 1})

    def test_non_unit(self):
        with pytest.raises(NonUnitDenominator):
            RatFun2(ONE, U).expand(2)

    def test_non_integral(self):
        with pytest.raises(NonIntegralExpansion):
            RatFun2(ONE, BivarPoly.constant(2)).expand(1)

    def test_integral_with_constant_two(self):
        s = RatFun2(BivarPoly.constant(2) * (1 + U), BivarPoly.constant(2)).expand(2)
        assert s.to_poly() == 1 + U


class TestSeriesOps:
    def test_mul(self):
        s = TruncSeries2(2, {(0, 0): 1, (1, 1): 1})
        assert s * s == TruncSeries2(2, {(0, 0): 1, (1, 1): 2})

    def test_truncate(self):
        s = TruncSeries2(4, {(0, 0): 1, (1, 1): 1, (2, 2): 1})
        assert s.truncate(2) == TruncSeries2(2, {(0, 0): 1, (1, 1): 1})

    def test_add_to_zero(self):
        a = TruncSeries2(3, {(0, 0): 1, (1, 0): 1})
        assert (a + (-a)).is_zero()

    def test_shift(self):
        s = TruncSeries2(4, {(0, 0): 1, (1, 0): 1})
        assert s.shift_uv(1) == TruncSeries2(4, {(1, 1): 1, (2, 1): 1})

    def test_mismatched_orders_take_min(self):
        a = TruncSeries2(5, {(0, 0): 1, (2, 2): 1})
        b = TruncSeries2(3, {(1, 1): 1})
        assert (a + b) == TruncSeries2(3, {(0, 0): 1, (1, 1): 1})
        assert (a * b).order == 3


class TestCancelFactor:
    def test_basic(self):
        r = RatFun2((1 + U) ** 2 * (1 + V), 1 + U)
        red, m = r.cancel_factor(1 + U)
        assert m == 1
        assert red.rat_eq(RatFun2((1 + U) * (1 + V)))

    def test_absent(self):
        r = RatFun2(ONE, 1 - W)
        red, m = cancel_factor(r, 1 + U)
        assert m == 0 and red is r

    def test_full(self):
        r = RatFun2((1 + U) ** 3, (1 + U) ** 3)
        red, m = r.cancel_factor(1 + U)
        assert m == 3 and red.rat_eq(RatFun2(ONE))


class TestSubstitute:
    def test_diagonal(self):
        f = substitute(RatFun2(ONE, 1 - W), diagonal=True)
        assert f.rat_eq(RatFun1(UniPoly.constant(1), UniPoly({0: 1, 2: -1})))

    def test_u_minus_one(self):
        p = (1 + U) * (1 + V)
        assert p.subs_u(-1).is_zero()

    def test_both(self):
        val = (W * (1 + U) * (1 + V)).subs_uv(-1, 1)
        assert val == 0

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominatorAfterSubstitution):
            RatFun2(ONE, 1 + U).subs_u(-1)

    def test_rational_value(self):
        assert (1 + U).subs_u(Fraction(1, 2)) == UniPoly.constant(Fraction(3, 2))


class TestToPolynomial:
    def test_basic(self):
        assert to_polynomial(RatFun2(1 - w_power(2), 1 - W), 2) == 1 + W

    def test_not_polynomial(self):
        with pytest.raises(NotPolynomialWithinBound):
            to_polynomial(RatFun2(ONE, 1 - W), 10)

    def test_bound_too_small(self):
        with pytest.raises(NotPolynomialWithinBound):
            to_polynomial(RatFun2(1 - w_power(4), 1 - W), 2)


class TestSerialization:
    def test_round_trip(self):
        p = (1 + U) ** 2 * (1 - 3 * V)
        assert BivarPoly.from_json_terms(p.json_terms()) == p

    def test_sorted(self):
        trip = ((1 + U + V) ** 2).json_terms()
        assert trip == sorted(trip)

    def test_series_round_trip(self):
        s = RatFun2(ONE, 1 - W - U).expand(5)
        assert TruncSeries2.from_json_obj(s.json_obj()) == s

    def test_big_coefficients_as_strings(self):
        p = BivarPoly({(0, 0): 10 ** 40})
        assert p.json_terms() == [[0, 0, str(10 ** 40)]]


# -- property-based checks ---------------------------------------------------

small_polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.integers(-4, 4),
    max_size=5,
).map(BivarPoly)


@settings(max_examples=60, deadline=None)
@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


unit_dens = st.builds(
    lambda p: p + 1 - BivarPoly.constant(p.constant_term()),
    small_polys,
)


@settings(max_examples=40, deadline=None)
@given(small_polys, unit_dens, small_polys, unit_dens)
def test_expand_multiplicative(n1, d1, n2, d2):
    r1, r2 = RatFun2(n1, d1), RatFun2(n2, d2)
    lhs = (r1 * r2).expand(6)
    rhs = r1.expand(6) * r2.expand(6)
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(small_polys, unit_dens, st.integers(0, 6), st.integers(0, 6))
def test_expand_truncation_consistent(n, d, big, small):
    big, small = max(big, small), min(big, small)
    r = RatFun2(n, d)
    assert r.expand(big).truncate(small) == r.expand(small)


@settings(max_examples=40, deadline=None)
@given(small_polys, unit_dens, unit_dens)
def test_rat_eq_implies_equal_expansion(n, d, scale):
    r = RatFun2(n, d)
    scaled = RatFun2(n * scale, d * scale)
    assert r.rat_eq(scaled)
    assert r.expand(6) == scaled.expand(6)


@settings(max_examples=40, deadline=None)
@given(small_polys, unit_dens, small_polys, unit_dens)
def test_rat_eq_equivalence_relation(n1, d1, n2, d2):
    a, b = RatFun2(n1, d1), RatFun2(n2, d2)
    assert a.rat_eq(a)
    assert a.rat_eq(b) == b.rat_eq(a)
    # transitivity along a chain of rescalings
    c = RatFun2(n1 * d2, d1 * d2)
    assert a.rat_eq(c)
    if a.rat_eq(b):
        assert c.rat_eq(b)


@settings(max_examples=40, deadline=None)
@given(small_polys, unit_dens, st.integers(0, 3))
def test_cancel_factor_round_trip(n, d, k):
    f = 1 + U
    r = RatFun2(n * f ** k, d * f)
    red, mult = r.cancel_factor(f)
    # dividing a common factor out of num and den preserves the function
    assert red.rat_eq(r)
    assert RatFun2(red.num * f ** mult, red.den * f ** mult).rat_eq(r)
    # no common power of f survives
    if not n.is_zero():
        assert not (red.num.is_divisible_by(f) and red.den.is_divisible_by(f))
