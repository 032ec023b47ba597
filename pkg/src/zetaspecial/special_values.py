"""Exact special values of Z, P, Q, Y, O, X at integers.

At a rational point ``a = r/q`` values are rational numbers or elements of
the cyclotomic field Q(zeta_N), ``N = lcm(4, q)``. For symbolic ``a`` they are
polynomials in ``a`` with rational coefficients, rational functions of
``c = -exp(2 pi i a)``, or a sum of one of each (for the half-sums Q and X).

Powers of pi are never evaluated: ``ExactValue.pi_exponent`` carries them.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .cyclotomic import CyclotomicElement, as_rational, cos_frac, sin_frac
from .errors import ArgumentError, NoClosedFormError, PoleError
from .euler_symbolic import (
    C,
    ONE_PLUS_C,
    CPoly,
    GaussianRational,
    RationalFunctionC,
    euler_at_zero,
)
from .exact_core import QPolynomial, bernoulli_poly, poly_eval
from .exact_value import ExactValue, body_is_zero

__all__ = [
    "FunctionTag",
    "RationalPoint",
    "SYMBOLIC",
    "ArgumentSpec",
    "parse_argument",
    "value_at_negative_int",
    "value_at_positive_int",
    "exact_value",
    "classify_value",
    "vanishing_pattern",
    "symbolic_at_point",
    "routes_agree",
]


class FunctionTag(str, enum.Enum):
    Z = "Z"
    P = "P"
    Q = "Q"
    Y = "Y"
    O = "O"  # noqa: E741
    X = "X"

    @classmethod
    def parse(cls, value: "FunctionTag | str") -> "FunctionTag":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise ArgumentError(f"unknown function {value!r}; expected one of Z, P, Q, Y, O, X") from None

    @property
    def even_family(self) -> bool:
        """Z, P, Q have closed forms at positive even integers; Y, O, X at odd ones."""
        return self in (FunctionTag.Z, FunctionTag.P, FunctionTag.Q)


@dataclass(frozen=True)
class RationalPoint:
    """The point ``a = r/q`` with ``gcd(r, q) = 1`` and ``0 < r/q <= 1/2``."""

    r: int
    q: int

    def __post_init__(self):
        if self.q < 1 or self.r < 1:
            raise ArgumentError(f"r and q must be positive, got {self.r}/{self.q}")
        if math.gcd(self.r, self.q) != 1:
            raise ArgumentError(f"{self.r}/{self.q} is not in lowest terms")
        if 2 * self.r > self.q:
            raise ArgumentError(f"a = {self.r}/{self.q} must satisfy 0 < a <= 1/2")

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.r, self.q)

    def __float__(self) -> float:
        return self.r / self.q

    def __str__(self) -> str:
        return f"{self.r}/{self.q}"


class _Symbolic:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "SYMBOLIC"

    __str__ = lambda self: "symbolic"  # noqa: E731

    def __reduce__(self):
        return (_Symbolic, ())


SYMBOLIC = _Symbolic()

ArgumentSpec = Union[RationalPoint, _Symbolic]


def parse_argument(text: "str | ArgumentSpec") -> ArgumentSpec:
    """Parse ``"r/q"`` or ``"symbolic"``."""
    if isinstance(text, (RationalPoint, _Symbolic)):
        return text
    t = str(text).strip().lower()
    if t in ("symbolic", "a", "sym"):
        return SYMBOLIC
    try:
        frac = Fraction(t)
    except (ValueError, ZeroDivisionError):
        raise ArgumentError(f"cannot parse a = {text!r}; use r/q or 'symbolic'") from None
    if "/" in t:
        num, den = (int(x) for x in t.split("/"))
        if math.gcd(num, den) != 1:
            raise ArgumentError(f"{text} is not in lowest terms")
    return RationalPoint(frac.numerator, frac.denominator)


# --- shared building blocks ------------------------------------------------------


def _bernoulli_side(k: Fraction, degree: int, a: ArgumentSpec):
    """``k * B_degree(a)`` as a Fraction or as a polynomial in ``a``."""
    if k == 0:
        return Fraction(0)
    poly = bernoulli_poly(degree) * k
    if isinstance(a, RationalPoint):
        return poly_eval(poly, a.fraction)
    return poly


def _trig_sum(kind: str, r: int, q: int, degree: int) -> CyclotomicElement:
    """``sum_{m=1}^{q} trig(2 pi r m / q) B_degree(m/q)`` in Q(zeta_N)."""
    trig = cos_frac if kind == "cos" else sin_frac
    bern = bernoulli_poly(degree)
    acc = CyclotomicElement.rational(0, math.lcm(4, q))
    for m in range(1, q + 1):
        acc = acc + trig(r * m, q).scalar_mul(poly_eval(bern, Fraction(m, q)))
    return acc


def _cot_in_c() -> RationalFunctionC:
    # cot(pi a) = i (c - 1)/(1 + c) with c = -exp(2 pi i a)
    i = GaussianRational(0, 1)
    return RationalFunctionC(CPoly([-i, i]), CPoly([1, 1]))


def _half_sum(x: ExactValue, y: ExactValue) -> ExactValue:
    return (x + y).scale(Fraction(1, 2))


def _tidy(value: ExactValue) -> ExactValue:
    # constant polynomials and real constant rational functions become Fractions
    body = value.body
    if isinstance(body, QPolynomial) and body.is_constant():
        return ExactValue(value.pi_exponent, body.coeff(0))
    if isinstance(body, RationalFunctionC) and body.is_constant():
        g = body.constant_value()
        if g.im == 0:
            return ExactValue(value.pi_exponent, g.re)
    return value


# --- negative integers ---------------------------------------------------------


def value_at_negative_int(f: "FunctionTag | str", n: int, a: "ArgumentSpec | str") -> ExactValue:
    """Exact value of ``f(-n, a)`` for ``n >= 0``; ``pi_exponent`` is always 0."""
    f = FunctionTag.parse(f)
    a = parse_argument(a)
    if n < 0:
        raise ArgumentError("n must be >= 0")
    sign = (-1) ** n

    if f is FunctionTag.Z:
        return _tidy(ExactValue(0, _bernoulli_side(Fraction(sign - 1, n + 1), n + 1, a)))
    if f is FunctionTag.Y:
        return _tidy(ExactValue(0, _bernoulli_side(Fraction(-sign - 1, n + 1), n + 1, a)))
    if f is FunctionTag.P:
        if isinstance(a, RationalPoint):
            k = Fraction(-2 * a.q**n, n + 1)
            return ExactValue(0, _trig_sum("cos", a.r, a.q, n + 1).scalar_mul(k))
        if n == 0:
            return ExactValue(0, Fraction(-1))
        return _tidy(ExactValue(0, euler_at_zero(n) * C / ONE_PLUS_C * (1 - sign)))
    if f is FunctionTag.O:
        if isinstance(a, RationalPoint):
            k = Fraction(-2 * a.q**n, n + 1)
            return ExactValue(0, _trig_sum("sin", a.r, a.q, n + 1).scalar_mul(k))
        if n == 0:
            return ExactValue(0, _cot_in_c())
        # sign fixed by E_{1/c,n}(0) = (-1)^(n+1) c E_{c,n}(0)
        factor = GaussianRational(0, 1 + sign)
        return _tidy(ExactValue(0, euler_at_zero(n) * C / ONE_PLUS_C * factor))
    if f is FunctionTag.Q:
        return _tidy(_half_sum(value_at_negative_int("Z", n, a), value_at_negative_int("P", n, a)))
    return _tidy(_half_sum(value_at_negative_int("Y", n, a), value_at_negative_int("O", n, a)))


# --- positive integers ---------------------------------------------------------


def _check_parity(f: FunctionTag, s: int) -> None:
    if s < 1:
        raise ArgumentError("s must be a positive integer here; use value_at_negative_int for s <= 0")
    if f.even_family:
        if s == 1:
            if f is FunctionTag.P:
                raise NoClosedFormError("P(1, a) = -2 log(2 sin(pi a)) is not a pi-power multiple of an algebraic number")
            raise PoleError(f"{f.value}(s, a) has a pole at s=1")
        if s % 2:
            raise NoClosedFormError(f"no closed form in source for {f.value} at odd s={s}")
    elif s % 2 == 0:
        raise NoClosedFormError(f"no closed form in source for {f.value} at even s={s}")


def value_at_positive_int(f: "FunctionTag | str", s: int, a: "ArgumentSpec | str") -> ExactValue:
    """Exact value of ``f(s, a)`` for ``s >= 1`` of the admissible parity.

    Z, P, Q are available at even ``s``; Y, O, X at odd ``s``. The result
    carries ``pi_exponent = s``.
    """
    f = FunctionTag.parse(f)
    a = parse_argument(a)
    _check_parity(f, s)

    if f is FunctionTag.Z:
        n = s // 2
        if isinstance(a, RationalPoint):
            k = Fraction((-1) ** (n + 1) * a.q ** (2 * n - 1) * 4**n, math.factorial(2 * n))
            return ExactValue(s, _trig_sum("cos", a.r, a.q, 2 * n).scalar_mul(k))
        k = Fraction((-1) ** n * 4**n, math.factorial(2 * n - 1))
        return _tidy(ExactValue(s, euler_at_zero(2 * n - 1) * C / ONE_PLUS_C * k))
    if f is FunctionTag.P:
        n = s // 2
        k = Fraction((-1) ** (n + 1) * 4**n, math.factorial(2 * n))
        return _tidy(ExactValue(s, _bernoulli_side(k, 2 * n, a)))
    if f is FunctionTag.Y:
        n = (s + 1) // 2
        if isinstance(a, RationalPoint):
            k = Fraction((-1) ** n * a.q ** (2 * n - 2) * 2 ** (2 * n - 1), math.factorial(2 * n - 1))
            return ExactValue(s, _trig_sum("sin", a.r, a.q, 2 * n - 1).scalar_mul(k))
        if n == 1:
            return ExactValue(1, _cot_in_c())
        k = GaussianRational(0, (-1) ** (n + 1) * Fraction(2 ** (2 * n - 1), math.factorial(2 * n - 2)))
        return _tidy(ExactValue(s, euler_at_zero(2 * n - 2) * C / ONE_PLUS_C * k))
    if f is FunctionTag.O:
        n = (s + 1) // 2
        k = Fraction((-1) ** n * 2 ** (2 * n - 1), math.factorial(2 * n - 1))
        return _tidy(ExactValue(s, _bernoulli_side(k, 2 * n - 1, a)))
    if f is FunctionTag.Q:
        return _tidy(_half_sum(value_at_positive_int("Z", s, a), value_at_positive_int("P", s, a)))
    return _tidy(_half_sum(value_at_positive_int("Y", s, a), value_at_positive_int("O", s, a)))


def exact_value(f: "FunctionTag | str", s: int, a: "ArgumentSpec | str") -> ExactValue:
    """Dispatch on the sign of ``s``."""
    if s <= 0:
        return value_at_negative_int(f, -s, a)
    return value_at_positive_int(f, s, a)


# --- classification ------------------------------------------------------------

_SUPERSCRIPT = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def _pi_prefix(k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return "π × "
    return f"π{str(k).translate(_SUPERSCRIPT)} × "


def classify_value(v: ExactValue) -> str:
    """Describe the value class of ``v`` after collapsing rational bodies.

    Examples: ``"rational"``, ``"π² × cyclotomic(ℚ(ζ_20))"``,
    ``"rational function of c"``.
    """
    v = _tidy(v.collapsed())
    kind = v.kind
    if kind == "rational":
        core = "rational"
    elif kind == "cyclotomic":
        core = f"cyclotomic(ℚ(ζ_{v.body.order}))"
    elif kind == "polynomial":
        core = "polynomial in a"
    elif kind == "ratfunc":
        core = "rational function of c"
    else:
        core = "polynomial in a + rational function of c"
    return _pi_prefix(v.pi_exponent) + core


def vanishing_pattern(f: "FunctionTag | str", n_range: Iterable[int]) -> list[int]:
    """Non-positive integers ``s`` in ``n_range`` where ``f(s, a)`` vanishes for every ``a``.

    Positive entries of ``n_range`` are ignored.
    """
    f = FunctionTag.parse(f)
    zeros = []
    for s in sorted(set(n_range)):
        if s > 0:
            continue
        if body_is_zero(value_at_negative_int(f, -s, SYMBOLIC).body):
            zeros.append(s)
    return zeros


def is_rational_collapse(v: ExactValue):
    """The rational coefficient of ``pi^k`` if ``v`` has one, else ``None``."""
    v = _tidy(v.collapsed())
    if isinstance(v.body, Fraction):
        return v.body
    if isinstance(v.body, CyclotomicElement):
        return as_rational(v.body)
    return None


def symbolic_at_point(v: ExactValue, r: int, q: int) -> ExactValue:
    """Specialize a symbolic value exactly to ``a = r/q`` (``c = -zeta_q^r``)."""
    from .euler_symbolic import substitute_c_cyclotomic
    from .exact_value import MixedSymbolic

    body = v.body
    a = Fraction(r, q)
    if isinstance(body, (Fraction, CyclotomicElement)):
        out = body
    elif isinstance(body, QPolynomial):
        out = poly_eval(body, a)
    elif isinstance(body, RationalFunctionC):
        out = substitute_c_cyclotomic(body, r, q)
    elif isinstance(body, MixedSymbolic):
        out = substitute_c_cyclotomic(body.ratfunc_part, r, q) + poly_eval(body.poly_part, a)
    else:
        raise TypeError(f"unsupported body {type(body).__name__}")
    return ExactValue(v.pi_exponent, out)


def routes_agree(f: "FunctionTag | str", s: int, r: int, q: int) -> bool:
    """Whether the symbolic value specialized to ``r/q`` equals the direct rational-point value."""
    direct = exact_value(f, s, RationalPoint(r, q))
    via = symbolic_at_point(exact_value(f, s, SYMBOLIC), r, q)
    if direct.pi_exponent != via.pi_exponent:
        return False
    zero = CyclotomicElement.rational(0)
    return (zero + direct.body) == (zero + via.body)
