from __future__ import annotations

import math
from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import combined_mp
from zetaspecial.cyclotomic import as_rational
from zetaspecial.errors import ArgumentError, NoClosedFormError, PoleError
from zetaspecial.exact_core import QPolynomial
from zetaspecial.exact_value import ExactValue
from zetaspecial.special_values import (
    SYMBOLIC,
    FunctionTag,
    RationalPoint,
    classify_value,
    exact_value,
    parse_argument,
    routes_agree,
    symbolic_at_point,
    value_at_negative_int,
    value_at_positive_int,
    vanishing_pattern,
)

TAGS = [t.value for t in FunctionTag]


def rational_of(v: ExactValue):
    v = v.collapsed()
    return v.pi_exponent, v.body if isinstance(v.body, F) else as_rational(v.body)


# --- listed examples ------------------------------------------------------------------


def test_negative_examples():
    assert value_at_negative_int("Z", 0, SYMBOLIC).is_zero()
    assert rational_of(value_at_negative_int("Z", 1, "1/3")) == (0, F(1, 18))
    assert value_at_negative_int("Y", 0, SYMBOLIC).body == QPolynomial([1, -2])
    assert rational_of(value_at_negative_int("P", 0, "1/3")) == (0, -1)
    assert rational_of(value_at_negative_int("O", 2, "1/4")) == (0, -1)
    assert value_at_negative_int("O", 1, SYMBOLIC).is_zero()
    assert rational_of(value_at_negative_int("Q", 0, "1/5")) == (0, F(-1, 2))


def test_p_minus_one_symbolic():
    from zetaspecial.euler_symbolic import CPoly, RationalFunctionC

    v = value_at_negative_int("P", 1, SYMBOLIC)
    assert v.body == RationalFunctionC(CPoly([0, -2]), CPoly([1, 1]) ** 2)


def test_positive_examples():
    assert rational_of(value_at_positive_int("Z", 2, "1/2")) == (2, 1)
    assert value_at_positive_int("P", 2, SYMBOLIC) == ExactValue(2, QPolynomial([F(1, 3), -2, 2]))
    assert rational_of(value_at_positive_int("P", 2, "1/3")) == (2, F(-1, 9))
    assert rational_of(value_at_positive_int("O", 1, "1/4")) == (1, F(1, 2))
    assert rational_of(value_at_positive_int("Y", 3, "1/4")) == (3, 2)
    assert value_at_positive_int("Z", 2, SYMBOLIC).to_complex(0.5) == pytest.approx(math.pi**2, rel=1e-15)


def test_y1_symbolic_is_pi_cot():
    v = value_at_positive_int("Y", 1, SYMBOLIC)
    assert v.pi_exponent == 1
    oracle = float(mpmath.digamma(0.7) - mpmath.digamma(0.3))
    assert v.to_complex(0.3) == pytest.approx(oracle, abs=1e-13)


def test_spot_values_by_series():
    # direct series, independent of the Bernoulli formulas
    assert float(2 * mpmath.zeta(2, 0.5)) == pytest.approx(math.pi**2, rel=1e-15)
    p = mpmath.nsum(lambda n: 2 * (-1) ** n / n**2, [1, mpmath.inf])
    assert float(p) == pytest.approx(-(math.pi**2) / 6, rel=1e-15)
    o = mpmath.nsum(lambda k: 2 * ((-1) ** k) / (2 * k + 1), [0, mpmath.inf])
    assert float(o) == pytest.approx(math.pi / 2, rel=1e-14)
    y = mpmath.nsum(lambda k: 64 * (1 / (4 * k + 1) ** 3 - 1 / (4 * k + 3) ** 3), [0, mpmath.inf])
    assert float(y) == pytest.approx(2 * math.pi**3, rel=1e-14)
    z = 1j
    li2 = lambda w: w * (1 + w) / (1 - w) ** 3  # noqa: E731
    assert complex(-1j * (li2(z) - li2(z.conjugate()))) == pytest.approx(-1)


def test_parity_and_pole_errors():
    with pytest.raises(NoClosedFormError, match="no closed form in source"):
        exact_value("Z", 3, "1/3")
    with pytest.raises(NoClosedFormError):
        exact_value("O", 2, "1/3")
    with pytest.raises(PoleError):
        exact_value("Z", 1, "1/3")
    with pytest.raises(PoleError):
        exact_value("Q", 1, SYMBOLIC)
    with pytest.raises(NoClosedFormError):
        exact_value("P", 1, "1/3")


def test_classification_examples():
    assert classify_value(value_at_negative_int("Z", 1, "1/3")) == "rational"
    assert classify_value(value_at_positive_int("Z", 2, "1/5")) == "π² × cyclotomic(ℚ(ζ_20))"
    assert classify_value(value_at_negative_int("P", 1, SYMBOLIC)) == "rational function of c"
    assert classify_value(value_at_negative_int("Z", 3, SYMBOLIC)) == "polynomial in a"
    assert classify_value(value_at_negative_int("Q", 3, SYMBOLIC)) == "polynomial in a + rational function of c"


def test_vanishing_patterns():
    assert vanishing_pattern("P", range(-10, 0)) == [-10, -8, -6, -4, -2]
    assert vanishing_pattern("Y", range(-10, 0)) == [-9, -7, -5, -3, -1]
    assert vanishing_pattern("Z", range(-10, 1)) == [-10, -8, -6, -4, -2, 0]
    assert vanishing_pattern("Q", range(-10, 0)) == [-10, -8, -6, -4, -2]
    assert vanishing_pattern("O", range(-10, 0)) == [-9, -7, -5, -3, -1]
    assert vanishing_pattern("X", range(-10, 0)) == [-9, -7, -5, -3, -1]


@pytest.mark.parametrize("text", ["2/4", "3/4", "0/1", "1", "abc", "-1/3"])
def test_bad_arguments(text):
    with pytest.raises(ArgumentError):
        parse_argument(text)


def test_parse_argument():
    assert parse_argument("symbolic") is SYMBOLIC
    assert parse_argument(" 2/5 ") == RationalPoint(2, 5)
    with pytest.raises(ArgumentError):
        FunctionTag.parse("W")


# --- P(0) and Q(0) collapse over every q <= 12 ------------------------------------------


@pytest.mark.parametrize("q", range(2, 13))
def test_p0_q0_collapse(q):
    for r in range(1, q // 2 + 1):
        if math.gcd(r, q) != 1:
            continue
        p0 = value_at_negative_int("P", 0, RationalPoint(r, q))
        q0 = value_at_negative_int("Q", 0, RationalPoint(r, q))
        assert as_rational(p0.body) == -1
        assert rational_of(q0) == (0, F(-1, 2))


# --- properties ------------------------------------------------------------------------


@st.composite
def rational_points(draw, q_max=12):
    q = draw(st.integers(2, q_max))
    r = draw(st.integers(1, q // 2))
    if math.gcd(r, q) != 1:
        r = 1
    return RationalPoint(r, q)


admissible = st.tuples(st.sampled_from(TAGS), st.integers(-9, 9)).filter(
    lambda p: p[1] <= 0 or (p[1] % 2 == 0) == FunctionTag(p[0]).even_family and not (p[1] == 1 and p[0] in "ZPQ")
)


@given(admissible, rational_points())
def test_exact_matches_mpmath(fs, pt):
    f, s = fs
    v = exact_value(f, s, pt)
    oracle = combined_mp(f, s, pt.fraction)
    assert abs(v.to_complex() - oracle) <= 1e-12 * max(1.0, abs(oracle))


@given(admissible, st.floats(0.01, 0.49))
def test_symbolic_matches_mpmath(fs, a):
    f, s = fs
    v = exact_value(f, s, SYMBOLIC)
    oracle = combined_mp(f, s, a)
    assert abs(v.to_complex(a) - oracle) <= 1e-10 * max(1.0, abs(oracle))


@given(admissible, rational_points())
def test_dual_route(fs, pt):
    f, s = fs
    assert routes_agree(f, s, pt.r, pt.q)


@given(admissible, rational_points())
def test_values_are_real(fs, pt):
    f, s = fs
    v = exact_value(f, s, pt).to_complex()
    assert abs(v.imag) <= 1e-12 * max(1.0, abs(v))


@given(st.sampled_from(TAGS), st.integers(0, 9), rational_points())
def test_half_sums(f, n, pt):
    z, p = value_at_negative_int("Z", n, pt), value_at_negative_int("P", n, pt)
    q = value_at_negative_int("Q", n, pt)
    assert (z + p).scale(F(1, 2)).collapsed() == q.collapsed() or abs(
        (z + p).scale(F(1, 2)).to_complex() - q.to_complex()
    ) < 1e-12


@given(st.integers(1, 8), rational_points())
def test_symbolic_at_point_pi_exponent(n, pt):
    v = exact_value("Z", 2 * n, SYMBOLIC)
    assert symbolic_at_point(v, pt.r, pt.q).pi_exponent == 2 * n


@given(st.sampled_from(TAGS), st.integers(1, 9))
def test_vanishing_parity_classes(f, n):
    # identical vanishing at -n: Z at even n (incl. 0), P and Q at even n >= 2, Y, O, X at odd n
    zero = value_at_negative_int(f, n, SYMBOLIC).is_zero()
    expected = n % 2 == 0 if f in "ZPQ" else n % 2 == 1
    assert zero == expected
