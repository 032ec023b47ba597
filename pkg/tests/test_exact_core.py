from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zetaspecial.exact_core import (
    QPolynomial,
    bernoulli_number,
    bernoulli_poly,
    binomial,
    poly_eval,
    poly_reflect,
    stirling2,
)

fractions = st.fractions(min_value=-100, max_value=100, max_denominator=50)
small_polys = st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=12), max_size=6).map(QPolynomial)


# --- frozen oracles -----------------------------------------------------------------

BERNOULLI_LIST = {
    0: QPolynomial([1]),
    1: QPolynomial([F(-1, 2), 1]),
    2: QPolynomial([F(1, 6), -1, 1]),
    3: QPolynomial([0, F(1, 2), F(-3, 2), 1]),
    4: QPolynomial([F(-1, 30), 0, 1, -2, 1]),
}


@pytest.mark.parametrize("n", sorted(BERNOULLI_LIST))
def test_bernoulli_poly_matches_listed(n):
    assert bernoulli_poly(n) == BERNOULLI_LIST[n]


@pytest.mark.parametrize("n,expected", [(0, 1), (1, F(1, 2)), (2, F(1, 6)), (4, F(-1, 30)), (3, 0), (12, F(-691, 2730))])
def test_bernoulli_number(n, expected):
    assert bernoulli_number(n) == expected


@pytest.mark.parametrize("n,r,expected", [(3, 3, 1), (3, 2, 3), (4, 2, 7), (0, 0, 1), (5, 0, 0), (10, 3, 9330)])
def test_stirling2(n, r, expected):
    assert stirling2(n, r) == expected


def test_stirling2_rejects_r_above_n():
    with pytest.raises(ValueError):
        stirling2(2, 3)


@pytest.mark.parametrize(
    "p,x,expected",
    [(bernoulli_poly(2), F(1, 2), F(-1, 12)), (bernoulli_poly(1), F(1, 2), 0), (bernoulli_poly(3), F(1, 4), F(3, 64))],
)
def test_poly_eval(p, x, expected):
    assert poly_eval(p, x) == expected


def test_poly_reflect_examples():
    assert poly_reflect(bernoulli_poly(1)) == QPolynomial([F(1, 2), -1])
    assert poly_reflect(bernoulli_poly(2)) == bernoulli_poly(2)
    assert poly_reflect(bernoulli_poly(3)) == -bernoulli_poly(3)


def test_trailing_zeros_stripped():
    assert QPolynomial([1, 2, 0, 0]) == QPolynomial([1, 2])
    assert QPolynomial([0, 0]).is_zero()
    assert QPolynomial([0, 0]).degree == -1 or QPolynomial([0, 0]).coeffs == ()


def test_binomial_edges():
    assert binomial(5, 2) == 10
    assert binomial(5, 6) == 0
    assert binomial(5, -1) == 0


def test_bernoulli_beyond_cache_cap():
    p = bernoulli_poly(70)
    assert p.degree == 70
    assert poly_eval(p, F(0)) == poly_eval(p, F(1))


# --- properties ---------------------------------------------------------------------


@given(st.integers(0, 30), fractions)
def test_bernoulli_reflection(n, t):
    # B_n(1 - t) = (-1)^n B_n(t)
    p = bernoulli_poly(n)
    assert poly_eval(p, 1 - t) == (-1) ** n * poly_eval(p, t)


@given(st.integers(1, 30), fractions)
def test_bernoulli_difference(n, t):
    # B_n(t + 1) - B_n(t) = n t^(n-1)
    p = bernoulli_poly(n)
    assert poly_eval(p, t + 1) - poly_eval(p, t) == n * t ** (n - 1)


@given(st.integers(1, 30))
def test_bernoulli_derivative(n):
    assert bernoulli_poly(n).derivative() == bernoulli_poly(n - 1) * n


@given(st.integers(2, 40))
def test_bernoulli_odd_numbers_vanish(n):
    if n % 2:
        assert bernoulli_number(n) == 0


@given(st.integers(1, 14), st.integers(0, 14))
def test_stirling_recurrence(n, r):
    if r > n:
        return
    # S(n, r) = r S(n-1, r) + S(n-1, r-1)
    left = stirling2(n - 1, r) if r <= n - 1 else 0
    right = stirling2(n - 1, r - 1) if r >= 1 else 0
    assert stirling2(n, r) == r * left + right


@given(small_polys, small_polys, fractions)
def test_ring_homomorphism(p, q, x):
    assert poly_eval(p * q, x) == poly_eval(p, x) * poly_eval(q, x)
    assert poly_eval(p + q, x) == poly_eval(p, x) + poly_eval(q, x)


@given(small_polys, small_polys)
def test_divmod_identity(p, q):
    if q.is_zero():
        return
    quo, rem = p.divmod(q)
    assert quo * q + rem == p
    assert rem.is_zero() or rem.degree < q.degree


@given(small_polys)
def test_reflect_is_involution(p):
    assert poly_reflect(poly_reflect(p)) == p


@given(st.lists(fractions, max_size=5))
def test_fraction_coefficients_stay_reduced(cs):
    for c in QPolynomial(cs).coeffs:
        assert c.denominator > 0
        assert c == F(c.numerator, c.denominator)
