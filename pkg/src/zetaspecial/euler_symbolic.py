"""Rational functions of ``c = -exp(2 pi i a)`` and generalized Euler polynomials.

The generalized Euler polynomials ``E_{c,n}(t)`` are the coefficients of

    (1 + c) e^{tz} / (e^z + c) = sum_n E_{c,n}(t) z^n / n!

and satisfy ``E_{c,n}(t) = t^n + b sum_{k<n} C(n,k) E_{c,k}(t)`` with
``b = -1/(1 + c)``. Coefficients live in Q(i)(c) so that the powers of ``i``
coming from ``(2 pi i)^{n+1}`` fold into exact values.
"""

from __future__ import annotations

import cmath
import math
import threading
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .cyclotomic import CyclotomicElement
from .errors import ArgumentError, PoleError
from .exact_core import QPolynomial, binomial, stirling2
from .exact_value import ExactValue

__all__ = [
    "GaussianRational",
    "CPoly",
    "RationalFunctionC",
    "EulerPolynomialC",
    "euler_poly",
    "euler_poly_b",
    "euler_at_zero",
    "li_neg_stirling",
    "li_neg_euler",
    "f_lattice_symbolic",
    "substitute_c_numeric",
    "substitute_c_cyclotomic",
    "C",
    "ONE_PLUS_C",
]

Scalar = Union[int, Fraction]


class GaussianRational:
    """Exact element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re: Scalar = 0, im: Scalar = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other: object) -> bool:
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other) -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> "GaussianRational":
        return GaussianRational.coerce(other) - self

    def __mul__(self, other) -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussianRational":
        o = GaussianRational.coerce(other)
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * o.conjugate()
        return GaussianRational(num.re / den, num.im / den)

    def __rtruediv__(self, other) -> "GaussianRational":
        return GaussianRational.coerce(other) / self

    def __pow__(self, e: int) -> "GaussianRational":
        out = GaussianRational(1)
        base = self if e >= 0 else GaussianRational(1) / self
        for _ in range(abs(e)):
            out = out * base
        return out

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re} {sign} {abs(self.im)}i)"


I = GaussianRational(0, 1)


class CPoly:
    """Polynomial in ``c`` over Q(i), ascending coefficients, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [GaussianRational.coerce(x) for x in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[GaussianRational, ...] = tuple(cs)

    @classmethod
    def from_q(cls, p: QPolynomial) -> "CPoly":
        return cls(p.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else GaussianRational(0)

    def coeff(self, k: int) -> GaussianRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else GaussianRational(0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "CPoly":
        return CPoly(-x for x in self.coeffs)

    def __add__(self, other: "CPoly") -> "CPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return CPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    def __sub__(self, other: "CPoly") -> "CPoly":
        return self + (-other)

    def __mul__(self, other) -> "CPoly":
        if not isinstance(other, CPoly):
            g = GaussianRational.coerce(other)
            return CPoly(x * g for x in self.coeffs)
        if self.is_zero() or other.is_zero():
            return CPoly()
        out = [GaussianRational(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return CPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CPoly":
        out = CPoly([1])
        for _ in range(e):
            out = out * self
        return out

    def divmod(self, divisor: "CPoly") -> tuple["CPoly", "CPoly"]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return CPoly(), self
        lead = divisor.leading()
        quot = [GaussianRational(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            ck = rem[k]
            if ck.is_zero():
                continue
            f = ck / lead
            quot[k - dd] = f
            for j, d in enumerate(divisor.coeffs):
                rem[k - dd + j] = rem[k - dd + j] - f * d
        return CPoly(quot), CPoly(rem[:dd])

    def monic(self) -> "CPoly":
        if self.is_zero():
            return self
        return self * (GaussianRational(1) / self.leading())

    def reversed_to(self, degree: int) -> "CPoly":
        """``c^degree * p(1/c)``; requires ``degree >= self.degree``."""
        cs = list(self.coeffs) + [GaussianRational(0)] * (degree + 1 - len(self.coeffs))
        return CPoly(reversed(cs))

    def evaluate(self, x):
        acc = 0j if isinstance(x, (complex, float)) else None
        if acc is not None:
            for g in reversed(self.coeffs):
                acc = acc * x + complex(g)
            return acc
        raise TypeError("use evaluate_cyclotomic for exact points")

    def evaluate_cyclotomic(self, x: CyclotomicElement, i_elem: CyclotomicElement) -> CyclotomicElement:
        acc = CyclotomicElement.rational(0, x.order)
        for g in reversed(self.coeffs):
            term = CyclotomicElement.rational(g.re, x.order)
            if g.im:
                term = term + i_elem.scalar_mul(g.im)
            acc = acc * x + term
        return acc

    def abs_coeff_sum(self) -> float:
        return sum(abs(complex(g)) for g in self.coeffs)


def poly_gcd(p: CPoly, q: CPoly) -> CPoly:
    a, b = p, q
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else CPoly([1])


class RationalFunctionC:
    """Reduced quotient ``num(c)/den(c)`` over Q(i); ``den`` is monic, zero is ``0/1``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced: bool = False):
        num = num if isinstance(num, CPoly) else CPoly(num if isinstance(num, (list, tuple)) else [num])
        if den is None:
            den = CPoly([1])
        elif not isinstance(den, CPoly):
            den = CPoly(den if isinstance(den, (list, tuple)) else [den])
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = CPoly([1])
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num.divmod(g)[0]
                    den = den.divmod(g)[0]
                lead = den.leading()
                num = num * (GaussianRational(1) / lead)
                den = den * (GaussianRational(1) / lead)
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, value) -> "RationalFunctionC":
        return cls(CPoly([value]))

    @classmethod
    def from_q(cls, p: QPolynomial) -> "RationalFunctionC":
        return cls(CPoly.from_q(p))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num.coeff(0)

    def _coerce(self, other) -> "RationalFunctionC":
        if isinstance(other, RationalFunctionC):
            return other
        return RationalFunctionC.constant(other)

    def __eq__(self, other: object) -> bool:
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self) -> "RationalFunctionC":
        return RationalFunctionC(-self.num, self.den, _reduced=True)

    def __add__(self, other) -> "RationalFunctionC":
        o = self._coerce(other)
        if self.den == o.den:
            return RationalFunctionC(self.num + o.num, self.den)
        return RationalFunctionC(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunctionC":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalFunctionC":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalFunctionC":
        o = self._coerce(other)
        return RationalFunctionC(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunctionC":
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunctionC(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "RationalFunctionC":
        return self._coerce(other) / self

    def __pow__(self, e: int) -> "RationalFunctionC":
        if e < 0:
            return RationalFunctionC.constant(1) / (self ** (-e))
        return RationalFunctionC(self.num**e, self.den**e)

    def subs_inverse(self) -> "RationalFunctionC":
        """Substitute ``c -> 1/c``."""
        d = max(self.num.degree, self.den.degree, 0)
        return RationalFunctionC(self.num.reversed_to(d), self.den.reversed_to(d))

    def conjugate_coeffs(self) -> "RationalFunctionC":
        return RationalFunctionC(
            CPoly(g.conjugate() for g in self.num.coeffs),
            CPoly(g.conjugate() for g in self.den.coeffs),
        )

    def has_real_coefficients(self) -> bool:
        return all(g.im == 0 for g in self.num.coeffs + self.den.coeffs)

    def __repr__(self) -> str:
        return f"RationalFunctionC({self})"

    def __str__(self) -> str:
        n = _format_cpoly(self.num)
        if self.den.degree == 0:
            return n
        return f"({n})/({_format_cpoly(self.den)})"

    def to_payload(self) -> dict:
        return {
            "numerator": [[str(g.re), str(g.im)] for g in self.num.coeffs],
            "denominator": [[str(g.re), str(g.im)] for g in self.den.coeffs],
        }


def _format_cpoly(p: CPoly) -> str:
    if p.is_zero():
        return "0"
    terms = []
    for k, g in enumerate(p.coeffs):
        if g.is_zero():
            continue
        var = "" if k == 0 else ("c" if k == 1 else f"c^{k}")
        coef = str(g)
        if not var:
            terms.append(coef)
        elif coef == "1":
            terms.append(var)
        elif coef == "-1":
            terms.append("-" + var)
        else:
            terms.append(f"{coef}*{var}")
    return " + ".join(terms).replace("+ -", "- ")


C = RationalFunctionC(CPoly([0, 1]))
ONE_PLUS_C = RationalFunctionC(CPoly([1, 1]))
B_SYMBOL = RationalFunctionC(CPoly([-1]), CPoly([1, 1]))


def b_poly_to_c(p: QPolynomial) -> RationalFunctionC:
    """Rewrite a polynomial in ``b = -1/(1 + c)`` as a reduced function of ``c``."""
    if p.is_zero():
        return RationalFunctionC.constant(0)
    deg = p.degree
    one_plus_c = CPoly([1, 1])
    num = CPoly()
    for j, beta in enumerate(p.coeffs):
        if beta:
            num = num + (one_plus_c ** (deg - j)) * ((-1) ** j * beta)
    return RationalFunctionC(num, one_plus_c**deg)


class EulerPolynomialC:
    """Polynomial in ``t`` whose coefficients are rational functions of ``c``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[RationalFunctionC]):
        cs = [x if isinstance(x, RationalFunctionC) else RationalFunctionC.constant(x) for x in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[RationalFunctionC, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> RationalFunctionC:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else RationalFunctionC.constant(0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EulerPolynomialC):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other: "EulerPolynomialC") -> "EulerPolynomialC":
        n = max(len(self.coeffs), len(other.coeffs))
        return EulerPolynomialC([self.coeff(k) + other.coeff(k) for k in range(n)])

    def scale(self, f) -> "EulerPolynomialC":
        return EulerPolynomialC([x * f for x in self.coeffs])

    def at_zero(self) -> RationalFunctionC:
        return self.coeff(0)

    def derivative(self) -> "EulerPolynomialC":
        return EulerPolynomialC([self.coeffs[k] * k for k in range(1, len(self.coeffs))])

    def _compose_linear(self, shift: int, sign: int) -> "EulerPolynomialC":
        # p(sign*t + shift)
        n = len(self.coeffs)
        out = [RationalFunctionC.constant(0)] * max(n, 1)
        for k, ck in enumerate(self.coeffs):
            if ck.is_zero():
                continue
            for j in range(k + 1):
                w = binomial(k, j) * sign**j * shift ** (k - j)
                if w:
                    out[j] = out[j] + ck * w
        return EulerPolynomialC(out)

    def shift_one(self) -> "EulerPolynomialC":
        """``p(t + 1)``."""
        return self._compose_linear(1, 1)

    def reflect(self) -> "EulerPolynomialC":
        """``p(1 - t)``."""
        return self._compose_linear(1, -1)

    def subs_inverse(self) -> "EulerPolynomialC":
        """Apply ``c -> 1/c`` to every coefficient."""
        return EulerPolynomialC([x.subs_inverse() for x in self.coeffs])

    def __repr__(self) -> str:
        return "EulerPolynomialC(" + ", ".join(str(x) for x in self.coeffs) + ")"


_euler_lock = threading.Lock()
_euler_b_table: list[tuple[QPolynomial, ...]] = [(QPolynomial([1]),)]
_euler_c_cache: dict[int, EulerPolynomialC] = {}


def euler_poly_b(n: int) -> tuple[QPolynomial, ...]:
    """``E_{c,n}(t)`` with each t-coefficient written as a rational polynomial in ``b``."""
    if n < 0:
        raise ArgumentError("n must be >= 0")
    with _euler_lock:
        for m in range(len(_euler_b_table), n + 1):
            coeffs = []
            for j in range(m + 1):
                acc = QPolynomial()
                for k in range(j, m):
                    prev = _euler_b_table[k]
                    if j < len(prev):
                        acc = acc + prev[j] * binomial(m, k)
                acc = acc * QPolynomial([0, 1])
                if j == m:
                    acc = acc + 1
                coeffs.append(acc)
            _euler_b_table.append(tuple(coeffs))
        return _euler_b_table[n]


def euler_poly(n: int) -> EulerPolynomialC:
    """Generalized Euler polynomial ``E_{c,n}(t)`` over Q(c)."""
    with _euler_lock:
        hit = _euler_c_cache.get(n)
    if hit is not None:
        return hit
    poly = EulerPolynomialC([b_poly_to_c(p) for p in euler_poly_b(n)])
    with _euler_lock:
        _euler_c_cache[n] = poly
    return poly


def euler_at_zero(n: int) -> RationalFunctionC:
    """``E_{c,n}(0)`` as a reduced rational function of ``c``."""
    return b_poly_to_c(euler_poly_b(n)[0])


def li_neg_stirling(n: int) -> RationalFunctionC:
    """``Li_{-n}(-c)`` from ``sum_r r! (-c)^r S(n,r) / (1+c)^(r+1)``; ``n >= 1``."""
    if n < 1:
        raise ArgumentError("li_neg_stirling requires n >= 1; Li_0 is handled separately")
    one_plus_c = CPoly([1, 1])
    minus_c = CPoly([0, -1])
    num = CPoly()
    # common denominator (1+c)^(n+1)
    for r in range(n + 1):
        s = stirling2(n, r)
        if s:
            num = num + (minus_c**r) * (one_plus_c ** (n - r)) * (math.factorial(r) * s)
    return RationalFunctionC(num, one_plus_c ** (n + 1))


def li_neg_euler(n: int) -> RationalFunctionC:
    """``Li_{-n}(-c) = (-1)^(n+1) c E_{c,n}(0) / (1+c)``; ``n >= 1``."""
    if n < 1:
        raise ArgumentError("li_neg_euler requires n >= 1; Li_0 is handled separately")
    return C * euler_at_zero(n) * (-1) ** (n + 1) / ONE_PLUS_C


def f_lattice_symbolic(n: int) -> ExactValue:
    """``sum_{l in Z} (l + a)^{-(n+1)} = pi^{n+1} (2i)^{n+1} E_{c,n}(0) / (n! (1 + 1/c))``."""
    if n < 1:
        raise ArgumentError("f_lattice_symbolic requires n >= 1")
    factor = (GaussianRational(0, 2) ** (n + 1)) / math.factorial(n)
    body = euler_at_zero(n) * C / ONE_PLUS_C * factor
    return ExactValue(n + 1, body)


_SHIFT_CACHE: dict[CPoly, CPoly] = {}


def _shift_to_u(p: CPoly) -> CPoly:
    """Coefficients of ``p`` in powers of ``u = 1 + c``."""
    hit = _SHIFT_CACHE.get(p)
    if hit is None:
        acc = CPoly()
        u_minus_one = CPoly([-1, 1])
        for g in reversed(p.coeffs):
            acc = acc * u_minus_one + CPoly([g])
        hit = _SHIFT_CACHE.setdefault(p, acc)
    return hit


def _eval_bound(p: CPoly, x: complex) -> tuple[complex, float]:
    """``p(x)`` together with ``sum |p_k| |x|^k`` (the rounding-error scale)."""
    value, scale, ax = 0j, 0.0, abs(x)
    for g in reversed(p.coeffs):
        value = value * x + complex(g)
        scale = scale * ax + abs(complex(g))
    return value, scale


def substitute_c_numeric(f: RationalFunctionC, a: float) -> complex:
    """Evaluate ``f`` at ``c = -exp(2 pi i a)`` in floating point.

    Near ``c = -1`` (``a`` close to an integer) both parts are re-expanded in
    ``u = 1 + c = -2i sin(pi a) e^{i pi a}``, which keeps the relative accuracy
    of high powers of ``1 + c``.
    """
    r = math.remainder(a, 1.0)
    sn, cs = math.sin(math.pi * r), math.cos(math.pi * r)
    u = -2j * sn * complex(cs, sn)
    if abs(u) < 1.0:
        num, den, x = _shift_to_u(f.num), _shift_to_u(f.den), u
    else:
        num, den, x = f.num, f.den, u - 1.0
    d, d_scale = _eval_bound(den, x)
    if d == 0 or abs(d) <= 1e-14 * d_scale:
        raise PoleError(f"denominator vanishes at a={a}")
    return _eval_bound(num, x)[0] / d


def substitute_c_cyclotomic(f: RationalFunctionC, r: int, q: int) -> CyclotomicElement:
    """Evaluate ``f`` exactly at ``c = -zeta_q^r`` in Q(zeta_N), ``N = lcm(4, 2q)``."""
    if q < 1 or math.gcd(r, q) != 1 or not 0 < r < q:
        raise ArgumentError(f"need 0 < r < q with gcd(r, q) = 1, got r={r}, q={q}")
    n = math.lcm(4, 2 * q)
    c = CyclotomicElement.zeta_power(n, (q + 2 * r) * (n // (2 * q)))
    i_elem = CyclotomicElement.zeta_power(n, n // 4)
    den = f.den.evaluate_cyclotomic(c, i_elem)
    if den.is_zero():
        raise PoleError(f"denominator vanishes at c = -zeta_{q}^{r}")
    return f.num.evaluate_cyclotomic(c, i_elem) / den
