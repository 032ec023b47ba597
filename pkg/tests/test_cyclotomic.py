from __future__ import annotations

import cmath
import math
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zetaspecial.cyclotomic import (
    CyclotomicElement,
    as_rational,
    canonical_order,
    cos_frac,
    cyclotomic_polynomial,
    embed_complex,
    euler_phi,
    is_real,
    root_of_unity,
    sin_frac,
)
from zetaspecial.exact_core import QPolynomial


def zeta(n: int, k: int = 1) -> CyclotomicElement:
    return CyclotomicElement.zeta_power(n, k)


@pytest.mark.parametrize(
    "n,coeffs",
    [(1, [-1, 1]), (2, [1, 1]), (4, [1, 0, 1]), (12, [1, 0, -1, 0, 1]), (6, [1, -1, 1]), (9, [1, 0, 0, 1, 0, 0, 1])],
)
def test_cyclotomic_polynomial(n, coeffs):
    assert cyclotomic_polynomial(n) == QPolynomial(coeffs)


def test_field_arithmetic_examples():
    assert zeta(4) * zeta(4) == CyclotomicElement.rational(-1)
    assert zeta(3) + zeta(3, 2) == CyclotomicElement.rational(-1)
    assert zeta(8) * zeta(8) == zeta(4).lift(8)
    assert zeta(8) * zeta(8) == zeta(4)


@pytest.mark.parametrize("k,q,expected", [(1, 4, 0), (1, 3, F(-1, 2)), (1, 1, 1), (1, 2, -1), (1, 6, F(1, 2))])
def test_cos_frac_rational_values(k, q, expected):
    assert as_rational(cos_frac(k, q)) == expected


@pytest.mark.parametrize("k,q,expected", [(1, 4, 1), (1, 2, 0), (1, 12, F(1, 2)), (3, 4, -1)])
def test_sin_frac_rational_values(k, q, expected):
    assert as_rational(sin_frac(k, q)) == expected


def test_embeddings():
    assert embed_complex(cos_frac(1, 3)) == pytest.approx(-0.5, abs=1e-15)
    assert embed_complex(zeta(4)) == 1j
    assert embed_complex(cos_frac(1, 5)).real == pytest.approx(0.30901699437494745, abs=1e-15)


def test_as_rational():
    assert as_rational(zeta(3) + zeta(3, 2) + 1) == 0
    assert as_rational(zeta(4)) is None
    assert as_rational(cos_frac(1, 2)) == -1


def test_cos_sin_not_rational_where_irrational():
    assert as_rational(cos_frac(1, 5)) is None
    assert as_rational(sin_frac(1, 8)) is None


def test_division_and_inverse():
    x = zeta(5) + 2
    assert x * x.inverse() == CyclotomicElement.rational(1)
    assert (x / x) == CyclotomicElement.rational(1)


def test_mixed_order_equality_and_hash():
    a = CyclotomicElement.rational(F(3, 7))
    b = a.lift(20)
    assert a == b
    assert hash(a) == hash(b)


def test_euler_phi():
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


# --- properties ---------------------------------------------------------------------

orders = st.integers(1, 40)


@st.composite
def elements(draw, order=None):
    n = order or draw(orders)
    dim = euler_phi(n)
    cs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=dim, max_size=dim))
    return CyclotomicElement(n, cs)


@given(orders)
def test_phi_degree(n):
    assert cyclotomic_polynomial(n).degree == euler_phi(n)


@given(orders)
def test_primitive_root_is_a_root(n):
    z = embed_complex(zeta(n))
    assert abs(cyclotomic_polynomial(n)(z)) < 1e-9


@st.composite
def element_pairs(draw):
    n = draw(orders)
    m = draw(st.sampled_from([n, 1, 2, 3, 4]))
    return draw(elements(n)), draw(elements(m))


@given(element_pairs())
def test_embedding_is_homomorphism(pair):
    x, y = pair
    ex, ey = embed_complex(x), embed_complex(y)
    scale = 1 + abs(ex) * abs(ey)
    assert abs(embed_complex(x * y) - ex * ey) < 1e-10 * scale
    assert abs(embed_complex(x + y) - (ex + ey)) < 1e-10 * (1 + abs(ex) + abs(ey))


@given(elements())
def test_conjugate_embeds_to_complex_conjugate(x):
    assert abs(embed_complex(x.conjugate()) - embed_complex(x).conjugate()) < 1e-10 * (1 + abs(embed_complex(x)))


@given(elements())
def test_inverse(x):
    if x.is_zero():
        return
    assert x * x.inverse() == CyclotomicElement.rational(1, x.order)


@given(st.integers(0, 50), st.integers(1, 30))
def test_cos_sin_embed(k, q):
    t = 2 * math.pi * k / q
    assert embed_complex(cos_frac(k, q)) == pytest.approx(math.cos(t), abs=1e-13)
    assert embed_complex(sin_frac(k, q)) == pytest.approx(math.sin(t), abs=1e-13)
    assert is_real(cos_frac(k, q)) and is_real(sin_frac(k, q))


@given(st.integers(0, 50), st.integers(1, 30))
def test_pythagoras_exact(k, q):
    c, s = cos_frac(k, q), sin_frac(k, q)
    assert c * c + s * s == CyclotomicElement.rational(1)


@given(st.integers(-40, 40), st.integers(1, 24))
def test_root_of_unity(k, q):
    z = root_of_unity(k, q)
    assert z.order == canonical_order(q)
    assert abs(embed_complex(z) - cmath.exp(2j * math.pi * k / q)) < 1e-13
    assert z**q == CyclotomicElement.rational(1)
