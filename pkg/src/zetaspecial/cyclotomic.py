"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis ``1, z, ..., z^(phi(N)-1)`` reduced
modulo the N-th cyclotomic polynomial, with ``z = zeta_N`` embedded as
``exp(2 pi i / N)``. Elements of different orders are combined in the
field of the lcm order.
"""

from __future__ import annotations

import math
import threading
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Union

from .exact_core import QPolynomial

__all__ = [
    "CyclotomicElement",
    "cyclotomic_polynomial",
    "euler_phi",
    "root_of_unity",
    "cos_frac",
    "sin_frac",
    "embed_complex",
    "as_rational",
    "canonical_order",
    "is_real",
]

Scalar = Union[int, Fraction]

_phi_lock = threading.Lock()


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def _cyclotomic_cached(n: int) -> QPolynomial:
    poly = QPolynomial.monomial(n) - 1
    for d in _divisors(n):
        if d < n:
            quot, rem = poly.divmod(_cyclotomic_cached(d))
            assert rem.is_zero()
            poly = quot
    return poly


def cyclotomic_polynomial(n: int) -> QPolynomial:
    """``Phi_n`` from ``x^n - 1 = prod_{d | n} Phi_d`` by exact division."""
    if n < 1:
        raise ValueError("order must be >= 1")
    with _phi_lock:
        return _cyclotomic_cached(n)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[Fraction, ...], ...]:
    # reduced coordinates of z^k for 0 <= k < n
    phi = cyclotomic_polynomial(n)
    dim = phi.degree
    rows = []
    for k in range(n):
        r = QPolynomial.monomial(k) % phi
        rows.append(tuple(r.coeff(j) for j in range(dim)))
    return tuple(rows)


def canonical_order(q: int) -> int:
    """Order used for values attached to modulus ``q``: ``lcm(4, q)``."""
    return math.lcm(4, q)


class CyclotomicElement:
    """Element ``sum coeffs[k] * zeta_N^k`` of Q(zeta_N) in reduced power basis."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Scalar]):
        if order < 1:
            raise ValueError("order must be >= 1")
        self.order = order
        dim = cyclotomic_polynomial(order).degree
        raw = [Fraction(c) for c in coeffs]
        if len(raw) > dim:
            raw = list(_reduce(order, raw))
        raw += [Fraction(0)] * (dim - len(raw))
        self.coeffs: tuple[Fraction, ...] = tuple(raw)

    @classmethod
    def rational(cls, value: Scalar, order: int = 1) -> "CyclotomicElement":
        return cls(order, [value])

    @classmethod
    def zeta_power(cls, order: int, k: int) -> "CyclotomicElement":
        return cls(order, _power_table(order)[k % order])

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def lift(self, order: int) -> "CyclotomicElement":
        """Re-express this element in Q(zeta_order); ``self.order`` must divide ``order``."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} into {order}")
        step = order // self.order
        table = _power_table(order)
        dim = cyclotomic_polynomial(order).degree
        acc = [Fraction(0)] * dim
        for k, c in enumerate(self.coeffs):
            if c:
                row = table[(k * step) % order]
                for j in range(dim):
                    if row[j]:
                        acc[j] += c * row[j]
        return CyclotomicElement(order, acc)

    def _coerce(self, other) -> tuple["CyclotomicElement", "CyclotomicElement"]:
        if isinstance(other, (int, Fraction)):
            other = CyclotomicElement.rational(other, self.order)
        if not isinstance(other, CyclotomicElement):
            raise TypeError(f"cannot combine CyclotomicElement with {type(other).__name__}")
        n = math.lcm(self.order, other.order)
        return self.lift(n), other.lift(n)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, CyclotomicElement)):
            a, b = self._coerce(other)
            return a.coeffs == b.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        r = as_rational(self)
        if r is not None:
            return hash(r)
        return hash((self.order, self.coeffs))

    def __neg__(self) -> "CyclotomicElement":
        return CyclotomicElement(self.order, [-c for c in self.coeffs])

    def __add__(self, other) -> "CyclotomicElement":
        a, b = self._coerce(other)
        return CyclotomicElement(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __sub__(self, other) -> "CyclotomicElement":
        a, b = self._coerce(other)
        return CyclotomicElement(a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other) -> "CyclotomicElement":
        return (-self) + other

    def __mul__(self, other) -> "CyclotomicElement":
        if isinstance(other, (int, Fraction)):
            return self.scalar_mul(other)
        a, b = self._coerce(other)
        prod = [Fraction(0)] * (2 * a.dim)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicElement(a.order, _reduce(a.order, prod))

    __rmul__ = __mul__

    def scalar_mul(self, k: Scalar) -> "CyclotomicElement":
        k = Fraction(k)
        return CyclotomicElement(self.order, [c * k for c in self.coeffs])

    def __pow__(self, e: int) -> "CyclotomicElement":
        if e < 0:
            return self.inverse() ** (-e)
        result = CyclotomicElement.rational(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "CyclotomicElement":
        """Multiplicative inverse via the extended Euclidean algorithm modulo Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        phi = cyclotomic_polynomial(self.order)
        r0, r1 = phi, QPolynomial(self.coeffs)
        t0, t1 = QPolynomial(), QPolynomial.constant(1)
        while not r1.is_zero():
            quot, rem = r0.divmod(r1)
            r0, r1 = r1, rem
            t0, t1 = t1, t0 - quot * t1
        # r0 is a nonzero constant since Phi_N is irreducible
        inv = t0 * (1 / r0.leading())
        return CyclotomicElement(self.order, (inv % phi).coeffs)

    def __truediv__(self, other) -> "CyclotomicElement":
        if isinstance(other, (int, Fraction)):
            return self.scalar_mul(1 / Fraction(other))
        a, b = self._coerce(other)
        return a * b.inverse()

    def __rtruediv__(self, other) -> "CyclotomicElement":
        return self.inverse() * other

    def conjugate(self) -> "CyclotomicElement":
        acc = CyclotomicElement.rational(0, self.order)
        for k, c in enumerate(self.coeffs):
            if c:
                acc = acc + CyclotomicElement.zeta_power(self.order, -k).scalar_mul(c)
        return acc

    def __complex__(self) -> complex:
        return embed_complex(self)

    def __repr__(self) -> str:
        return f"CyclotomicElement(order={self.order}, coeffs={[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        r = as_rational(self)
        if r is not None:
            return str(r)
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            basis = "" if k == 0 else (f"z{self.order}" if k == 1 else f"z{self.order}^{k}")
            if not basis:
                terms.append(str(c))
            elif c == 1:
                terms.append(basis)
            elif c == -1:
                terms.append("-" + basis)
            else:
                terms.append(f"{c}*{basis}")
        return " + ".join(terms).replace("+ -", "- ")


def _reduce(order: int, coeffs: Iterable[Fraction]) -> list[Fraction]:
    table = _power_table(order)
    dim = cyclotomic_polynomial(order).degree
    acc = [Fraction(0)] * dim
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if k < dim:
            acc[k] += c
        else:
            row = table[k % order]
            for j in range(dim):
                if row[j]:
                    acc[j] += c * row[j]
    return acc


def root_of_unity(k: int, q: int, order: Optional[int] = None) -> CyclotomicElement:
    """``exp(2 pi i k / q)`` as an element of Q(zeta_order) (default ``lcm(4, q)``)."""
    n = order if order is not None else canonical_order(q)
    if n % q:
        raise ValueError(f"order {n} is not a multiple of {q}")
    return CyclotomicElement.zeta_power(n, k * (n // q))


def cos_frac(k: int, q: int) -> CyclotomicElement:
    """``cos(2 pi k / q)`` in Q(zeta_N), ``N = lcm(4, q)``."""
    if q < 1:
        raise ValueError("q must be >= 1")
    n = canonical_order(q)
    j = k * (n // q)
    return (CyclotomicElement.zeta_power(n, j) + CyclotomicElement.zeta_power(n, -j)).scalar_mul(
        Fraction(1, 2)
    )


def sin_frac(k: int, q: int) -> CyclotomicElement:
    """``sin(2 pi k / q)`` in Q(zeta_N), ``N = lcm(4, q)``, with ``i = zeta_N^(N/4)``."""
    if q < 1:
        raise ValueError("q must be >= 1")
    n = canonical_order(q)
    j = k * (n // q)
    diff = CyclotomicElement.zeta_power(n, j) - CyclotomicElement.zeta_power(n, -j)
    minus_i = CyclotomicElement.zeta_power(n, 3 * n // 4)
    return (diff * minus_i).scalar_mul(Fraction(1, 2))


_PI_50 = Decimal("3.14159265358979323846264338327950288419716939937510582097494")


def _cos_sin_decimal(x: Decimal) -> tuple[Decimal, Decimal]:
    # Taylor series; |x| <= pi/4 after reduction, so 40 terms are ample at 50 digits
    x2 = x * x
    c, s = Decimal(1), x
    term_c, term_s = Decimal(1), x
    for k in range(1, 40):
        term_c = -term_c * x2 / ((2 * k - 1) * (2 * k))
        term_s = -term_s * x2 / ((2 * k) * (2 * k + 1))
        c += term_c
        s += term_s
    return c, s


@lru_cache(maxsize=256)
def _unit_circle(n: int) -> tuple[tuple[Fraction, Fraction], ...]:
    """``(cos, sin)`` of ``2 pi k / n`` as Fractions accurate to about 1e-48."""
    pts = []
    with localcontext() as ctx:
        ctx.prec = 55
        for k in range(n):
            # nearest quarter turn j, residual angle |x| <= pi/4
            j = (8 * k + n) // (2 * n)
            x = _PI_50 / 2 * Decimal(4 * k - j * n) / Decimal(n)
            c, s = _cos_sin_decimal(x)
            for _ in range(j % 4):
                c, s = -s, c
            pts.append((Fraction(c), Fraction(s)))
    return tuple(pts)


def embed_complex(e: CyclotomicElement) -> complex:
    """Evaluate under ``zeta_N -> exp(2 pi i / N)``.

    The sum is formed exactly from high-precision unit-circle values and then
    rounded once, so large cancelling coefficients do not lose accuracy.
    """
    pts = _unit_circle(e.order)
    re = im = Fraction(0)
    for k, c in enumerate(e.coeffs):
        if c:
            x, y = pts[k]
            re += c * x
            im += c * y
    return complex(float(re), float(im))


def as_rational(e: CyclotomicElement) -> Optional[Fraction]:
    """The rational value of ``e`` if it lies in Q, otherwise ``None``."""
    if any(c != 0 for c in e.coeffs[1:]):
        return None
    return e.coeffs[0] if e.coeffs else Fraction(0)


def is_real(e: CyclotomicElement) -> bool:
    return e == e.conjugate()

