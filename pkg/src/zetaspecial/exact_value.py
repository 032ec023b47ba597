"""Tagged exact values ``pi^k * body``.

``body`` is one of: ``Fraction``, ``CyclotomicElement``, ``QPolynomial`` (in
the variable ``a``), ``RationalFunctionC`` (in ``c = -exp(2 pi i a)``) or
``MixedSymbolic`` (a polynomial part plus a rational-function part).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Union

from .cyclotomic import CyclotomicElement, as_rational, embed_complex
from .exact_core import QPolynomial, poly_eval

__all__ = ["ExactValue", "pi_power", "MixedSymbolic", "body_kind", "add_bodies", "scale_body", "body_is_zero"]


@dataclass(frozen=True)
class MixedSymbolic:
    poly_part: QPolynomial
    ratfunc_part: Any  # RationalFunctionC; typed loosely to avoid an import cycle

    def __str__(self) -> str:
        return f"[{self.poly_part.format('a')}] + [{self.ratfunc_part}]"


Body = Union[Fraction, CyclotomicElement, QPolynomial, MixedSymbolic, Any]


def _is_ratfunc(x) -> bool:
    return type(x).__name__ == "RationalFunctionC"


def body_kind(body: Body) -> str:
    if isinstance(body, Fraction):
        return "rational"
    if isinstance(body, CyclotomicElement):
        return "cyclotomic"
    if isinstance(body, QPolynomial):
        return "polynomial"
    if isinstance(body, MixedSymbolic):
        return "mixed"
    if _is_ratfunc(body):
        return "ratfunc"
    raise TypeError(f"unsupported body type {type(body).__name__}")


def body_is_zero(body: Body) -> bool:
    kind = body_kind(body)
    if kind == "rational":
        return body == 0
    if kind == "mixed":
        # a polynomial in a equals a rational function of exp(2 pi i a)
        # identically only when both are constants
        poly, rf = body.poly_part, body.ratfunc_part
        if not poly.is_constant() or not rf.is_constant():
            return False
        total = rf.constant_value() + poly.coeff(0)
        return total.is_zero()
    return body.is_zero()


def _split_symbolic(body: Body):
    from .euler_symbolic import RationalFunctionC

    kind = body_kind(body)
    if kind == "rational":
        return QPolynomial.constant(body), RationalFunctionC.constant(0)
    if kind == "polynomial":
        return body, RationalFunctionC.constant(0)
    if kind == "ratfunc":
        return QPolynomial(), body
    if kind == "mixed":
        return body.poly_part, body.ratfunc_part
    raise TypeError("cyclotomic bodies cannot be combined with symbolic ones")


def _normalize_symbolic(poly: QPolynomial, rf) -> Body:
    if rf.is_constant():
        g = rf.constant_value()
        if g.im == 0:
            poly = poly + g.re
            rf = None
    if rf is None or rf.is_zero():
        if poly.is_constant():
            return poly.coeff(0)
        return poly
    if poly.is_zero():
        return rf
    return MixedSymbolic(poly, rf)


def add_bodies(x: Body, y: Body) -> Body:
    kx, ky = body_kind(x), body_kind(y)
    if kx == "rational" and ky == "rational":
        return x + y
    if "cyclotomic" in (kx, ky):
        if {kx, ky} - {"cyclotomic", "rational"}:
            raise TypeError("cannot add a cyclotomic body to a symbolic one")
        return _as_cyc(x) + _as_cyc(y)
    px, rx = _split_symbolic(x)
    py, ry = _split_symbolic(y)
    return _normalize_symbolic(px + py, rx + ry)


def _as_cyc(x) -> CyclotomicElement:
    if isinstance(x, CyclotomicElement):
        return x
    return CyclotomicElement.rational(x)


def scale_body(body: Body, k) -> Body:
    k = Fraction(k)
    kind = body_kind(body)
    if kind == "rational":
        return body * k
    if kind == "cyclotomic":
        return body.scalar_mul(k)
    if kind == "polynomial":
        return body * k
    if kind == "ratfunc":
        return body * k
    return _normalize_symbolic(body.poly_part * k, body.ratfunc_part * k)


# pi = _PI_HI + _PI_LO to about 32 significant digits
_PI_HI = math.pi
_PI_LO = 1.2246467991473532e-16


def pi_power(k: int) -> float:
    """``pi**k`` correctly rounded up to a couple of ulps, for moderate ``|k|``."""
    return _PI_HI**k * (1.0 + k * _PI_LO / _PI_HI)


@dataclass(frozen=True)
class ExactValue:
    """The value ``pi**pi_exponent * body``."""

    pi_exponent: int
    body: Body

    @property
    def kind(self) -> str:
        return body_kind(self.body)

    def is_zero(self) -> bool:
        return body_is_zero(self.body)

    def collapsed(self) -> "ExactValue":
        """Replace a cyclotomic or constant body by its rational value when possible."""
        kind = self.kind
        if kind == "cyclotomic":
            r = as_rational(self.body)
            if r is not None:
                return ExactValue(self.pi_exponent, r)
        if kind == "polynomial" and self.body.is_constant():
            return ExactValue(self.pi_exponent, self.body.coeff(0))
        if kind == "ratfunc" and self.body.is_constant():
            g = self.body.constant_value()
            if g.im == 0:
                return ExactValue(self.pi_exponent, g.re)
        return self

    def __add__(self, other: "ExactValue") -> "ExactValue":
        if self.pi_exponent != other.pi_exponent:
            if self.is_zero():
                return other
            if other.is_zero():
                return self
            raise ValueError("cannot add exact values with different powers of pi")
        return ExactValue(self.pi_exponent, add_bodies(self.body, other.body))

    def scale(self, k) -> "ExactValue":
        return ExactValue(self.pi_exponent, scale_body(self.body, k))

    def body_complex(self, a: Optional[float] = None) -> complex:
        """Numeric value of the body; symbolic bodies need the point ``a``."""
        from .euler_symbolic import substitute_c_numeric

        kind = self.kind
        if kind == "rational":
            return complex(float(self.body))
        if kind == "cyclotomic":
            return embed_complex(self.body)
        if a is None:
            raise ValueError("symbolic value needs a numeric point a")
        if kind == "polynomial":
            return complex(poly_eval(self.body, float(a)))
        if kind == "ratfunc":
            return substitute_c_numeric(self.body, float(a))
        return complex(poly_eval(self.body.poly_part, float(a))) + substitute_c_numeric(
            self.body.ratfunc_part, float(a)
        )

    def to_complex(self, a: Optional[float] = None) -> complex:
        return pi_power(self.pi_exponent) * self.body_complex(a)

    def __str__(self) -> str:
        body = self.body
        text = body.format("a") if isinstance(body, QPolynomial) else str(body)
        if self.pi_exponent == 0:
            return text
        pi = "pi" if self.pi_exponent == 1 else f"pi^{self.pi_exponent}"
        return f"{pi} * ({text})"
