"""Exact rational arithmetic: polynomials over Q, Bernoulli and Stirling numbers.

Rationals are :class:`fractions.Fraction` throughout. Bernoulli numbers follow
the ``B_n := B_n(1)`` convention, so ``B_1 = +1/2``.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb
from typing import Iterable, Union

__all__ = [
    "Rational",
    "QPolynomial",
    "binomial",
    "bernoulli_poly",
    "bernoulli_number",
    "stirling2",
    "poly_eval",
    "poly_reflect",
    "BERNOULLI_CACHE_CAP",
]

Rational = Fraction
Number = Union[int, Fraction]

BERNOULLI_CACHE_CAP = 64


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k)


class QPolynomial:
    """Immutable polynomial with rational coefficients, ascending degree.

    ``QPolynomial([1, -1, 1])`` is ``1 - t + t**2``. Trailing zeros are
    stripped so that equal polynomials compare equal.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, value: Number) -> "QPolynomial":
        return cls([value])

    @classmethod
    def monomial(cls, degree: int, coeff: Number = 1) -> "QPolynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QPolynomial.constant(other)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QPolynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return self.format("t")

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else f"{mag}*"
                body = head + (var if k == 1 else f"{var}^{k}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-c for c in self.coeffs)

    def __add__(self, other: "QPolynomial | Number") -> "QPolynomial":
        if isinstance(other, (int, Fraction)):
            other = QPolynomial.constant(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __sub__(self, other: "QPolynomial | Number") -> "QPolynomial":
        return self + (-other if isinstance(other, QPolynomial) else -Fraction(other))

    def __rsub__(self, other: Number) -> "QPolynomial":
        return QPolynomial.constant(other) - self

    def __mul__(self, other: "QPolynomial | Number") -> "QPolynomial":
        if isinstance(other, (int, Fraction)):
            return QPolynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QPolynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result = QPolynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, divisor: "QPolynomial") -> tuple["QPolynomial", "QPolynomial"]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.leading()
        if len(rem) - 1 < dd:
            return QPolynomial(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            f = c / lead
            quot[k - dd] = f
            for j, d in enumerate(divisor.coeffs):
                rem[k - dd + j] -= f * d
        return QPolynomial(quot), QPolynomial(rem[:dd])

    def __floordiv__(self, other: "QPolynomial") -> "QPolynomial":
        return self.divmod(other)[0]

    def __mod__(self, other: "QPolynomial") -> "QPolynomial":
        return self.divmod(other)[1]

    def derivative(self) -> "QPolynomial":
        return QPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def compose(self, inner: "QPolynomial") -> "QPolynomial":
        result = QPolynomial()
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def __call__(self, x):
        return poly_eval(self, x)


def poly_eval(p: QPolynomial, x):
    """Horner evaluation. Exact for int/Fraction ``x``; float and complex also accepted."""
    if isinstance(x, (int, Fraction)):
        acc = Fraction(0)
        for c in reversed(p.coeffs):
            acc = acc * x + c
        return acc
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * x + float(c)
    return acc


def poly_reflect(p: QPolynomial) -> QPolynomial:
    """Return ``p(1 - t)``."""
    return p.compose(QPolynomial([1, -1]))


_bern_lock = threading.Lock()
_bern_polys: list[QPolynomial] = [QPolynomial([1])]


def _extend_bernoulli(n: int) -> list[QPolynomial]:
    # sum_{k=0}^{n} C(n+1, k) B_k(t) = (n+1) t^n
    table = list(_bern_polys)
    for m in range(len(table), n + 1):
        acc = QPolynomial.monomial(m, m + 1)
        for k in range(m):
            acc = acc - table[k] * binomial(m + 1, k)
        table.append(acc * Fraction(1, m + 1))
    return table


def bernoulli_poly(n: int) -> QPolynomial:
    """Bernoulli polynomial ``B_n(t)`` from ``z e^{tz}/(e^z - 1)``.

    Orders up to ``BERNOULLI_CACHE_CAP`` are memoized on first use; higher
    orders are built on demand and only the capped prefix is retained.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n < len(_bern_polys):
        return _bern_polys[n]
    with _bern_lock:
        if n < len(_bern_polys):
            return _bern_polys[n]
        table = _extend_bernoulli(n)
        keep = max(len(_bern_polys), min(len(table), BERNOULLI_CACHE_CAP + 1))
        _bern_polys.extend(table[len(_bern_polys):keep])
        return table[n]


def bernoulli_number(n: int) -> Fraction:
    """``B_n = B_n(1)``; note ``B_1 = 1/2`` in this convention."""
    return poly_eval(bernoulli_poly(n), Fraction(1))


_stirling_lock = threading.Lock()
_stirling_cache: dict[tuple[int, int], int] = {}


def stirling2(n: int, r: int) -> Fraction:
    """Stirling number of the second kind via the alternating binomial sum.

    ``r! S(n, r) = sum_{m=1}^{r} (-1)^{r-m} C(r, m) m^n``, with ``S(0, 0) = 1``.
    """
    if n < 0 or r < 0:
        raise ValueError("n and r must be nonnegative")
    if r > n:
        raise ValueError(f"stirling2 requires r <= n, got n={n}, r={r}")
    key = (n, r)
    hit = _stirling_cache.get(key)
    if hit is not None:
        return Fraction(hit)
    if r == 0:
        value = 1 if n == 0 else 0
    else:
        total = sum((-1) ** (r - m) * comb(r, m) * m**n for m in range(1, r + 1))
        fact = 1
        for j in range(2, r + 1):
            fact *= j
        value, rem = divmod(total, fact)
        assert rem == 0
    with _stirling_lock:
        _stirling_cache[key] = value
    return Fraction(value)
