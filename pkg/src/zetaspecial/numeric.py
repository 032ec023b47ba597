"""Double-precision evaluation of the Hurwitz and periodic zeta functions.

Routing, chosen so that no path suffers catastrophic cancellation:

* ``hurwitz_zeta``: Euler-Maclaurin for ``Re s >= 0``; for ``Re s < 0`` the
  Hurwitz functional equation expresses ``zeta(s, a)`` through periodic zeta
  values at ``1 - s`` (``Re > 1``).
* ``periodic_zeta``: for ``Re s >= 1/2`` a direct partial sum plus an
  Euler-Boole tail expansion; for ``Re s < 1/2`` the functional equation
  ``Li_{1-w}(e^{2 pi i a}) = Gamma(w)/(2pi)^w (e^{pi i w/2} zeta(w,a) + e^{-pi i w/2} zeta(w,1-a))``.
* ``hurwitz_zeta_hermite``: an independent second backend built on the
  Hermite integral, used for cross-validation.

Quarter-period phases ``exp(+-i pi s/2)`` are computed with exact values at
integers, so identically vanishing combinations come out as exact zeros.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Union

import numpy as np

from .errors import ArgumentError, DegradedAccuracyWarning, NumericOverflowError, PoleError
from .exact_core import bernoulli_number

__all__ = [
    "PrecisionContract",
    "DEFAULT_CONTRACT",
    "FUNCTION_TAGS",
    "hurwitz_zeta",
    "hurwitz_zeta_regular",
    "hurwitz_zeta_hermite",
    "periodic_zeta",
    "gamma_complex",
    "loggamma",
    "digamma_real",
    "combined",
    "fourier_bernoulli",
    "functional_equation_residual",
    "multiplication_residual",
    "FourierResult",
]

ComplexLike = Union[complex, float, int]

FUNCTION_TAGS = ("Z", "P", "Q", "Y", "O", "X")

TWO_PI = 2.0 * math.pi
LOG_2PI = math.log(TWO_PI)


@dataclass(frozen=True)
class PrecisionContract:
    """Domain inside which the numeric layer is validated to ``abs_tol``.

    ``abs_tol`` is relative to ``max(1, |value|)``.
    """

    abs_tol: float = 1e-12
    re_max: float = 30.0
    im_max: float = 30.0
    a_min: float = 1e-3

    def contains(self, s: complex, a: float) -> bool:
        return (
            abs(s.real) <= self.re_max
            and abs(s.imag) <= self.im_max
            and self.a_min <= a <= 1.0 - self.a_min
        )

    def check(self, s: complex, a: float) -> bool:
        ok = self.contains(s, a)
        if not ok:
            warnings.warn(
                f"s={s}, a={a} lies outside the validated domain; accuracy may be degraded",
                DegradedAccuracyWarning,
                stacklevel=3,
            )
        return ok


DEFAULT_CONTRACT = PrecisionContract()


def _finite(z: complex, what: str) -> complex:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NumericOverflowError(f"{what} is not finite")
    return z


# --- elementary helpers -------------------------------------------------------


def _sinpi_real(x: float) -> float:
    """``sin(pi x)`` with the argument reduced exactly to ``[-1/2, 1/2]``.

    Near a nonzero integer ``k``, ``sin(pi x)`` is evaluated as
    ``+-sin(pi (x - k))`` so the result keeps full relative accuracy.
    """
    r = math.remainder(x, 2.0)  # exact, in [-1, 1]
    if r > 0.5:
        r = 1.0 - r  # exact (Sterbenz)
    elif r < -0.5:
        r = -1.0 - r
    if r == 0.0:
        return 0.0
    if abs(r) == 0.5:
        return math.copysign(1.0, r)
    return math.sin(math.pi * r)


def _cospi_real(x: float) -> float:
    """``cos(pi x)``, accurate near its zeros at half-integers."""
    r = abs(math.remainder(x, 2.0))  # exact, in [0, 1]
    if r <= 0.25:
        return math.cos(math.pi * r)
    # cos(pi r) = sin(pi (1/2 - r)); 1/2 - r is exact for r in [1/4, 1]
    return _sinpi_real(0.5 - r)


def sinpi(z: complex) -> complex:
    """``sin(pi z)`` with exact zeros at integers."""
    z = complex(z)
    x, y = z.real, z.imag
    if y == 0:
        return complex(_sinpi_real(x), 0.0)
    return complex(_sinpi_real(x) * math.cosh(math.pi * y), _cospi_real(x) * math.sinh(math.pi * y))


def cospi(z: complex) -> complex:
    """``cos(pi z)`` with exact zeros at half-integers."""
    z = complex(z)
    x, y = z.real, z.imag
    if y == 0:
        return complex(_cospi_real(x), 0.0)
    return complex(_cospi_real(x) * math.cosh(math.pi * y), -_sinpi_real(x) * math.sinh(math.pi * y))


def _exp_i_pi_half(s: complex, sign: int = 1) -> complex:
    """``exp(sign * i pi s / 2)``."""
    s = complex(s)
    h = s.real / 2.0
    mag = math.exp(-sign * math.pi * s.imag / 2.0)
    return complex(_cospi_real(h) * mag, sign * _sinpi_real(h) * mag)


def _expm1c(u: complex) -> complex:
    x, y = u.real, u.imag
    if y == 0:
        return complex(math.expm1(x), 0.0)
    s2 = math.sin(y / 2.0)
    re = math.expm1(x) * math.cos(y) - 2.0 * s2 * s2
    im = math.exp(x) * math.sin(y)
    return complex(re, im)


def _expm1_over(u: complex) -> complex:
    """``(e^u - 1)/u`` with the removable singularity at 0."""
    if abs(u) < 1e-8:
        return 1.0 + u / 2.0 + u * u / 6.0
    return _expm1c(u) / u


def _sinc(x: complex) -> complex:
    if abs(x) < 1e-4:
        x2 = x * x
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0
    return cmath.sin(x) / x


# --- gamma and digamma --------------------------------------------------------


@lru_cache(maxsize=1)
def _stirling_coeffs() -> tuple[float, ...]:
    return tuple(float(bernoulli_number(2 * k)) / (2 * k * (2 * k - 1)) for k in range(1, 13))


def _loggamma_right(z: complex) -> complex:
    # Stirling series after upward recurrence; requires Re z > 0
    shift = 0j
    while abs(z) < 16.0 or z.real < 8.0:
        shift += cmath.log(z)
        z += 1.0
    zinv = 1.0 / z
    zinv2 = zinv * zinv
    series = 0j
    power = zinv
    for c in _stirling_coeffs():
        series += c * power
        power *= zinv2
    return (z - 0.5) * cmath.log(z) - z + 0.5 * LOG_2PI + series - shift


def _is_nonpositive_int(z: complex) -> bool:
    return z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real)


def loggamma(s: ComplexLike) -> complex:
    """A branch of ``log Gamma(s)``; only ``exp`` of it is used downstream."""
    s = complex(s)
    if _is_nonpositive_int(s):
        raise PoleError(f"Gamma has a pole at s={s.real:g}")
    if s.real >= 0.5:
        return _loggamma_right(s)
    return math.log(math.pi) - cmath.log(sinpi(s)) - _loggamma_right(1.0 - s)


def gamma_complex(s: ComplexLike) -> complex:
    """Complex Gamma function (Stirling series + recurrence, reflection for Re s < 1/2)."""
    s = complex(s)
    if _is_nonpositive_int(s):
        raise PoleError(f"Gamma has a pole at s={s.real:g}")
    if s.imag == 0:
        try:
            return complex(math.gamma(s.real), 0.0)
        except OverflowError:
            raise NumericOverflowError(f"Gamma({s.real:g}) overflows") from None
    if s.real >= 0.5:
        return _finite(cmath.exp(_loggamma_right(s)), "Gamma(s)")
    return _finite(math.pi / (sinpi(s) * cmath.exp(_loggamma_right(1.0 - s))), "Gamma(s)")


def _gamma_over_2pi_pow(w: complex) -> complex:
    """``Gamma(w) / (2 pi)^w`` without intermediate overflow (Re w > 0)."""
    if w.imag == 0 and w.real < 140.0:
        return complex(math.gamma(w.real) / TWO_PI**w.real, 0.0)
    return _finite(cmath.exp(_loggamma_right(w) - w * LOG_2PI), "Gamma(w)/(2pi)^w")


def digamma_real(a: float) -> float:
    """Digamma for real ``a > 0``: upward recurrence then the asymptotic series."""
    a = float(a)
    if a <= 0 and a == math.floor(a):
        raise PoleError(f"digamma has a pole at {a:g}")
    if a <= 0:
        raise ArgumentError("digamma_real requires a > 0")
    acc = 0.0
    while a < 12.0:
        acc -= 1.0 / a
        a += 1.0
    inv2 = 1.0 / (a * a)
    series = 0.0
    power = inv2
    for k in range(1, 10):
        series += float(bernoulli_number(2 * k)) / (2 * k) * power
        power *= inv2
    return acc + math.log(a) - 0.5 / a - series


# --- Hurwitz zeta: Euler-Maclaurin ---------------------------------------------


@lru_cache(maxsize=1)
def _em_coeffs() -> tuple[float, ...]:
    # B_{2j}/(2j)! for j = 1..13
    return tuple(float(bernoulli_number(2 * j) / math.factorial(2 * j)) for j in range(1, 14))


_EM_TERMS = 12


def _em_tail_bound(s: complex, x: float) -> float:
    j = _EM_TERMS + 1
    poch = 1.0
    for k in range(2 * j - 1):
        poch *= abs(s + k)
    return abs(_em_coeffs()[j - 1]) * poch * x ** (-s.real - 2 * j + 1)


def _split(a) -> tuple[float, float]:
    """``a`` as a float plus a small correction (nonzero for inexact Fractions)."""
    hi = float(a)
    if isinstance(a, Fraction):
        return hi, float(a - Fraction(hi))
    return hi, 0.0


def _complement(a: float, lo: float) -> tuple[float, float]:
    """``1 - (a + lo)`` in the same split form."""
    hi = 1.0 - a
    # (1 - hi) and (1 - hi) - a are exact by Sterbenz's lemma when a < 1/2
    err = ((1.0 - hi) - a) if a < 0.5 else 0.0
    return hi, err - lo


def _hurwitz_em(s: complex, a: float, regular: bool = False, lo: float = 0.0) -> complex:
    """Euler-Maclaurin evaluation; ``regular`` drops the ``1/(s-1)`` pole term.

    ``lo`` is the rounding residual of the true argument ``a + lo``; it enters
    through a first-order correction to the leading terms.
    """
    target = max(15.0, abs(s))
    m = max(0, math.ceil(target - a))
    scale = max(1.0, a ** (-s.real))
    while _em_tail_bound(s, m + a) > 1e-16 * scale:
        m = int(m * 1.25) + 1
    x = m + a
    real_s = s.imag == 0
    if m:
        n = np.arange(m, dtype=float) + a
        if real_s:
            terms = np.power(n, -s.real)
            if lo:
                terms = np.concatenate([terms, terms * (-s.real * lo / n)])
            head = complex(math.fsum(terms.tolist()), 0.0)
        else:
            terms = np.exp(-s * np.log(n))
            if lo:
                terms = np.concatenate([terms, terms * (-s * lo / n)])
            head = complex(math.fsum(terms.real.tolist()), math.fsum(terms.imag.tolist()))
    else:
        head = 0j
    logx = math.log(x)
    x_pow = cmath.exp(-s * logx) if not real_s else complex(x ** (-s.real), 0.0)
    if regular:
        pole_term = -logx * _expm1_over((1.0 - s) * logx)
    else:
        if s == 1:
            raise PoleError("Hurwitz zeta has a pole at s=1")
        pole_term = x_pow * x / (s - 1.0)
    tail = 0.5 * x_pow
    poch = s
    x_pow_k = x_pow / x
    inv_x2 = 1.0 / (x * x)
    terms = [tail, pole_term]
    coeffs = _em_coeffs()
    for j in range(1, _EM_TERMS + 1):
        terms.append(coeffs[j - 1] * poch * x_pow_k)
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        x_pow_k *= inv_x2
    body = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    return head + body


def _riemann_reflected(s: complex) -> complex:
    # zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s), Re s < 0
    w = 1.0 - s
    log_factor = s * math.log(2.0) + (s - 1.0) * math.log(math.pi) + _loggamma_right(w)
    return cmath.exp(log_factor) * sinpi(s / 2.0) * _hurwitz_em(w, 1.0)


def _hurwitz_reflected(s: complex, a: float, lo: float = 0.0) -> complex:
    # zeta(1-w, a) = Gamma(w)/(2pi)^w (e^{-i pi w/2} Li_w(e^{2pi i a}) + e^{i pi w/2} Li_w(e^{-2pi i a}))
    w = 1.0 - s
    li_a = _periodic(w, a, lo, "em")
    li_b = _periodic(w, *_complement(a, lo), "em")
    return _gamma_over_2pi_pow(w) * (_exp_i_pi_half(w, -1) * li_a + _exp_i_pi_half(w, 1) * li_b)


def _hurwitz_near_one(s: complex, delta: float, terms: int = 8) -> complex:
    # zeta(s, 1 - delta) = sum_k (s)_k delta^k / k! zeta(s + k); the Euler-Boole
    # series behind the reflection cannot resolve a phase this close to zero
    total = _hurwitz(s, 1.0)
    rising = 1.0 + 0j  # (s)_{k-1}
    scale = 1.0
    for k in range(1, terms):
        scale *= delta / k
        u = s + (k - 1)
        if abs(u) < 0.5:
            # u zeta(1 + u) = 1 + u R(1 + u) stays finite through the pole
            inner = 1.0 + u * _hurwitz_em(1.0 + u, 1.0, True)
        else:
            inner = u * _hurwitz(s + k, 1.0)
        total += scale * rising * inner
        rising *= u
    return total


def _hurwitz(s: complex, a: float, regular: bool = False, lo: float = 0.0) -> complex:
    # Euler-Maclaurin is accurate down to Re s = -1; reflecting any closer to
    # s = 0 would evaluate zeta(1 - s, .) next to its pole
    if s.real >= -1.0:
        return _hurwitz_em(s, a, regular, lo)
    if a > 1.0:
        frac = a - math.floor(a)
        if frac == 0.0:
            frac = 1.0
        steps = int(round(a - frac))
        base = _hurwitz(s, frac)
        corr = math.fsum(((frac + j) ** (-s)).real for j in range(steps)) if s.imag == 0 else None
        if corr is not None:
            value = base - corr
        else:
            value = base - sum(cmath.exp(-s * math.log(frac + j)) for j in range(steps))
    elif a == 1.0:
        value = _riemann_reflected(s)
    elif 1.0 - a < 1e-6:
        value = _hurwitz_near_one(s, (1.0 - a) - lo)
    else:
        value = _hurwitz_reflected(s, a, lo)
    if regular:
        value -= 1.0 / (s - 1.0)
    return value


def hurwitz_zeta(s: ComplexLike, a: float) -> complex:
    """Hurwitz zeta ``sum_{n>=0} (n + a)^{-s}``, analytically continued; ``a > 0``."""
    s = complex(s)
    a = float(a)
    if a <= 0:
        raise ArgumentError("hurwitz_zeta requires a > 0")
    if s == 1:
        raise PoleError("Hurwitz zeta has a pole at s=1")
    DEFAULT_CONTRACT.check(s, min(a, 0.5) if a >= 1 else a)
    return _finite(_hurwitz(s, a), "hurwitz_zeta")


def hurwitz_zeta_regular(s: ComplexLike, a: float) -> complex:
    """``zeta(s, a) - 1/(s - 1)``, finite at ``s = 1``."""
    s = complex(s)
    a = float(a)
    if a <= 0:
        raise ArgumentError("hurwitz_zeta_regular requires a > 0")
    return _finite(_hurwitz(s, a, regular=True), "hurwitz_zeta_regular")


# --- Hurwitz zeta: Hermite integral ------------------------------------------


@lru_cache(maxsize=1)
def _gl_rule() -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(20)


def _hermite_integrand(s: complex, a: float, x: np.ndarray) -> np.ndarray:
    theta = np.arctan(x / a)
    logr2 = np.log(x * x + a * a)
    # 1/(e^{2 pi x} - 1) written as e^{-2 pi x}/(1 - e^{-2 pi x}) so large x cannot overflow
    y = TWO_PI * x
    return np.sin(s * theta) * np.exp(-0.5 * s * logr2 - y) / -np.expm1(-y)


def _gl_panel(s: complex, a: float, lo: float, hi: float) -> complex:
    nodes, weights = _gl_rule()
    half = 0.5 * (hi - lo)
    x = lo + half * (nodes + 1.0)
    vals = _hermite_integrand(s, a, x)
    return complex(half * np.dot(weights, vals))


def _adaptive_panel(s: complex, a: float, lo: float, hi: float, tol: float) -> complex:
    # iterative bisection; a panel is accepted when the 20-point rule agrees
    # with its two halves to within the absolute tolerance or to rounding level
    total = 0j
    stack = [(lo, hi, _gl_panel(s, a, lo, hi), 0)]
    while stack:
        lo, hi, whole, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _gl_panel(s, a, lo, mid)
        right = _gl_panel(s, a, mid, hi)
        err = abs(left + right - whole)
        if err <= max(tol, 1e-15 * (abs(left) + abs(right))) or depth >= 30:
            if depth >= 30:
                warnings.warn("Hermite quadrature hit the bisection limit", DegradedAccuracyWarning, stacklevel=3)
            total += left + right
        else:
            stack.append((lo, mid, left, depth + 1))
            stack.append((mid, hi, right, depth + 1))
    return total


def _hermite_integral(s: complex, a: float) -> complex:
    # breakpoints resolve the a-scale structure near 0, then unit panels
    edges = [0.0]
    x = a
    while x < 1.0:
        edges.append(x)
        x *= 2.0
    edges.append(1.0)
    probe = np.linspace(1e-3, 8.0, 400)
    scale = float(np.max(np.abs(_hermite_integrand(s, a, probe))))
    tol = 1e-16 * max(scale, 1e-300)
    total = 0j
    for lo, hi in zip(edges[:-1], edges[1:]):
        total += _adaptive_panel(s, a, lo, hi, tol)
    peak = max(1.0, -s.real / TWO_PI)
    lo = 1.0
    growth = math.pi * abs(s.imag) / 2.0
    while lo < 400.0:
        hi = lo + 1.0
        total += _adaptive_panel(s, a, lo, hi, tol)
        lo = hi
        if lo > peak:
            log_env = growth - 0.5 * s.real * math.log(lo * lo + a * a) - TWO_PI * lo
            if log_env < math.log(1e-18 * max(abs(total), 1e-300)):
                break
    return total


def _hermite(s: complex, a: float, regular: bool = False) -> complex:
    # The integrand grows like exp(|t| arctan(x/a)), so small a with large
    # |Im s| cancels badly. Shifting a up to about |t|/10 fixes that; shifting
    # further costs accuracy at very negative Re s through the finite head sum.
    base = abs(s.imag) / 10.0
    if a < base:
        steps = math.ceil(base - a)
        head_terms = [cmath.exp(-s * math.log(a + k)) for k in range(steps)]
        rest = _hermite(s, a + steps, regular)
        return complex(
            math.fsum([z.real for z in head_terms] + [rest.real]),
            math.fsum([z.imag for z in head_terms] + [rest.imag]),
        )
    loga = math.log(a)
    head = 0.5 * cmath.exp(-s * loga)
    if regular:
        pole = -loga * _expm1_over((1.0 - s) * loga)
    else:
        if s == 1:
            raise PoleError("Hurwitz zeta has a pole at s=1")
        pole = cmath.exp((1.0 - s) * loga) / (s - 1.0)
    return head + pole + 2.0 * _hermite_integral(s, a)


def hurwitz_zeta_hermite(s: ComplexLike, a: float) -> complex:
    """Hurwitz zeta via the Hermite integral representation (second backend)."""
    s = complex(s)
    a = float(a)
    if a <= 0:
        raise ArgumentError("hurwitz_zeta_hermite requires a > 0")
    if s == 1:
        raise PoleError("Hurwitz zeta has a pole at s=1")
    return _finite(_hermite(s, a), "hurwitz_zeta_hermite")


# --- periodic zeta -------------------------------------------------------------

_BOOLE_TERMS = 40


def _frac_times(a: float, n: np.ndarray) -> np.ndarray:
    """``frac(a * n)`` for integer arrays ``n < 2**27`` with ~1 ulp error."""
    hi = math.floor(a * 2.0**26) / 2.0**26
    lo = a - hi
    prod = hi * n  # exact: 26 + 27 significant bits
    return np.mod(prod, 1.0) + lo * n


@lru_cache(maxsize=4096)
def _neg_polylog_table(a: float) -> tuple[complex, ...]:
    """``A_k = sum_{m>=0} m^k z^m`` (Abel sense) at ``z = e^{2 pi i a}``, k = 0..K."""
    z = complex(_cospi_real(2 * a), _sinpi_real(2 * a))
    out = [1.0 / (1.0 - z)]
    x = 1.0 - a
    for k in range(1, _BOOLE_TERMS + 1):
        s = complex(k + 1)
        lattice = _hurwitz_em(s, x).real + (-1) ** (k + 1) * _hurwitz_em(s, 1.0 - x).real
        # k!/(2 pi i)^{k+1} * lattice sum, in log form to avoid overflow
        log_mag = math.lgamma(k + 1) - (k + 1) * LOG_2PI
        phase = (-1j) ** ((k + 1) % 4)
        out.append(math.exp(log_mag) * lattice * phase)
    return tuple(out)


def _li_boole(s: complex, a: float, lo: float = 0.0) -> complex:
    d = min(a, 1.0 - a)
    n_cut = max(16, math.ceil(4.0 * (abs(s) + _BOOLE_TERMS) / (TWO_PI * d)))
    if n_cut >= 2**27:
        raise ArgumentError(f"a={a} is too close to an integer for the series backend")
    n = np.arange(1, n_cut, dtype=float)
    logn = np.log(n)
    phase = TWO_PI * (_frac_times(a, n) + lo * n)
    if s.imag == 0:
        mag = np.power(n, -s.real)
        re = (mag * np.cos(phase)).tolist()
        im = (mag * np.sin(phase)).tolist()
    else:
        vals = np.exp(-s * logn + 1j * phase)
        re = vals.real.tolist()
        im = vals.imag.tolist()
    head = complex(math.fsum(re), math.fsum(im))

    big_n = float(n_cut)
    ph_n = TWO_PI * (float(_frac_times(a, np.array([big_n]))[0]) + lo * big_n)
    lead = cmath.exp(-s * math.log(big_n) + 1j * ph_n)
    table = _neg_polylog_table(a)
    coeff = 1.0 + 0j
    tail = 0j
    converged = False
    small = 0
    floor = 1e-17 * max(abs(head), 1e-300)
    for k in range(_BOOLE_TERMS + 1):
        if k:
            coeff *= -(s + (k - 1)) / (k * big_n)
        term = coeff * table[k]
        tail += term
        # at a = 1/2 every other coefficient vanishes, so require two quiet terms
        small = small + 1 if abs(term) * abs(lead) < floor else 0
        if k >= 2 and small >= 2:
            converged = True
            break
    if not converged:
        warnings.warn("Euler-Boole tail did not converge", DegradedAccuracyWarning, stacklevel=3)
    return head + lead * tail


def _periodic(s: complex, a: float, lo: float = 0.0, backend: str = "em") -> complex:
    if s.imag == 0 and a > 0.5:
        ca, clo = _complement(a, lo)
        return _periodic(s, ca, clo, backend).conjugate()
    if s.real >= 0.5:
        return _li_boole(s, a, lo)
    w = 1.0 - s
    plus = _exp_i_pi_half(w, 1)
    minus = _exp_i_pi_half(w, -1)
    ca, clo = _complement(a, lo)
    if backend == "hermite":
        def hz(w_, x, regular, _lo):
            return _hermite(w_, x, regular)
    else:
        hz = _hurwitz_em
    if abs(w - 1.0) < 0.5:
        # cancel the simple poles of zeta(w, .) analytically
        u = w - 1.0
        pole_part = -math.pi * _sinc(math.pi * u / 2.0)
        bracket = plus * hz(w, a, True, lo) + minus * hz(w, ca, True, clo) + pole_part
    else:
        bracket = plus * hz(w, a, False, lo) + minus * hz(w, ca, False, clo)
    return _gamma_over_2pi_pow(w) * bracket


def periodic_zeta(s: ComplexLike, a: float, backend: str = "em") -> complex:
    """Periodic zeta ``Li_s(e^{2 pi i a}) = sum_{n>=1} e^{2 pi i n a} n^{-s}``, ``0 < a < 1``."""
    s = complex(s)
    a = float(a)
    if not 0.0 < a < 1.0:
        raise ArgumentError("periodic_zeta requires 0 < a < 1")
    DEFAULT_CONTRACT.check(s, a)
    return _finite(_periodic(s, a, backend=backend), "periodic_zeta")


# --- the six combinations -----------------------------------------------------


def _zeta_pair(s: complex, a: float, lo: float, backend: str, regular: bool) -> tuple[complex, complex]:
    ca, clo = _complement(a, lo)
    if backend == "hermite":
        return _hermite(s, a, regular), _hermite(s, ca, regular)
    if a == 0.5 and lo == 0.0:
        v = _hurwitz(s, a, regular)
        return v, v
    return _hurwitz(s, a, regular, lo), _hurwitz(s, ca, regular, clo)


def _li_pair(s: complex, a: float, lo: float, backend: str) -> tuple[complex, complex]:
    first = _periodic(s, a, lo, backend)
    if s.imag == 0:
        return first, first.conjugate()
    return first, _periodic(s, *_complement(a, lo), backend)


def _reflect_factor(w: complex, kind: str) -> complex:
    """``2 Gamma(w)/(2 pi)^w`` times ``cos`` or ``sin`` of ``pi w/2``, for ``Re w > 0``."""
    trig = cospi(w / 2.0) if kind == "cos" else sinpi(w / 2.0)
    return 2.0 * _gamma_over_2pi_pow(w) * trig


def combined(f: str, s: ComplexLike, a: "float | Fraction", backend: str = "em") -> complex:
    """Evaluate one of Z, P, Q, Y, O, X at complex ``s`` and ``0 < a <= 1/2``.

    ``a`` may be a ``Fraction``; its binary rounding error is then carried
    as a correction term, which matters when ``|f|`` is large.
    ``backend="hermite"`` swaps the Hurwitz evaluations for the Hermite
    integral, giving an independent route for cross-checks.
    """
    f = f.upper()
    if f not in FUNCTION_TAGS:
        raise ArgumentError(f"unknown function tag {f!r}")
    s = complex(s)
    a, lo = _split(a)
    if not 0.0 < a < 1.0:
        raise ArgumentError("combined requires 0 < a < 1")
    if f in ("Z", "Q") and s == 1:
        raise PoleError(f"{f}(s, a) has a pole at s=1")
    DEFAULT_CONTRACT.check(s, a)

    # Left of the critical strip each combination is formed as one trig factor
    # times its partner at w = 1 - s. Combining the two reflected terms before
    # multiplying keeps the zeros of the trig factor exact, so values near the
    # trivial zeros do not inherit the rounding error of two large cancelling
    # terms.
    w = 1.0 - s

    def z_val() -> complex:
        if backend == "em" and s.real < -1.0:
            x, y = _li_pair(w, a, lo, backend)
            return _reflect_factor(w, "cos") * (x + y)
        x, y = _zeta_pair(s, a, lo, backend, regular=False)
        return x + y

    def y_val() -> complex:
        if a == 0.5 and lo == 0.0:
            return 0j
        if backend == "em" and s.real < -1.0:
            x, y = _li_pair(w, a, lo, backend)
            return _reflect_factor(w, "sin") * (-1j * (x - y))
        x, y = _zeta_pair(s, a, lo, backend, regular=s.real >= 0 or backend == "hermite")
        return x - y

    def p_val() -> complex:
        # near s = 0 the pole of Z(w) meets the zero of the cosine; the
        # per-term route cancels that analytically
        if s.real < 0.5 and abs(s) >= 0.5:
            x, y = _zeta_pair(w, a, lo, backend, regular=False)
            return _reflect_factor(w, "cos") * (x + y)
        x, y = _li_pair(s, a, lo, backend)
        return x + y

    def o_val() -> complex:
        if s.real < 0.5:
            x, y = _zeta_pair(w, a, lo, backend, regular=True)
            return _reflect_factor(w, "sin") * (x - y)
        x, y = _li_pair(s, a, lo, backend)
        return -1j * (x - y)

    if f == "Z":
        out = z_val()
    elif f == "P":
        out = p_val()
    elif f == "Y":
        out = y_val()
    elif f == "O":
        out = o_val()
    elif f == "Q":
        out = 0.5 * (z_val() + p_val())
    else:
        out = 0.5 * (y_val() + o_val())
    return _finite(out, f"{f}(s, a)")


# --- Fourier series of Bernoulli polynomials -----------------------------------


class FourierResult(NamedTuple):
    value: float
    tail_bound: float


def fourier_bernoulli(order: int, a: float, terms: int) -> FourierResult:
    """Truncated Fourier series for ``B_order(a)``, ``0 < a < 1``, with a tail bound.

    Even orders use the cosine series, odd orders the sine series.
    """
    if order < 1 or terms < 1:
        raise ArgumentError("order and terms must be >= 1")
    if not 0.0 < a < 1.0:
        raise ArgumentError("fourier_bernoulli requires 0 < a < 1")
    m = np.arange(1, terms + 1, dtype=float)
    phase = TWO_PI * _frac_times(a, m)
    weights = np.exp(-order * np.log(m))
    prefactor = 2.0 * math.factorial(order) / TWO_PI**order
    if order % 2 == 0:
        k = order // 2
        sign = (-1) ** (k + 1)
        series = math.fsum((weights * np.cos(phase)).tolist())
        tail = terms ** (1.0 - order) / (order - 1.0)
    else:
        k = (order + 1) // 2
        sign = (-1) ** k
        series = math.fsum((weights * np.sin(phase)).tolist())
        tail = (terms + 1.0) ** (-order) / abs(_sinpi_real(a))
    return FourierResult(sign * prefactor * series, prefactor * tail)


# --- identity residuals ---------------------------------------------------------

_FE_PARTNER = {"Z": ("P", "cos"), "P": ("Z", "cos"), "Y": ("O", "sin"), "O": ("Y", "sin"), "Q": ("Q", "cos"), "X": ("X", "sin")}


def _fe_factor(s: complex, kind: str) -> complex:
    trig = cospi(s / 2.0) if kind == "cos" else sinpi(s / 2.0)
    return 2.0 * gamma_complex(s) * cmath.exp(-s * LOG_2PI) * trig


def _near_integer(s: complex, tol: float = 1e-8) -> bool:
    return abs(s.imag) < tol and abs(s.real - round(s.real)) < tol


def functional_equation_residual(f: str, s: ComplexLike, a: float) -> float:
    """Scaled residual of ``f(1-s, a) = 2 Gamma(s)/(2pi)^s {cos|sin}(pi s/2) g(s, a)``.

    Each side is evaluated once with the Euler-Maclaurin backend and once with
    the Hermite backend; the larger cross residual, divided by
    ``max(1, |lhs|, |rhs|)``, is returned.
    """
    f = f.upper()
    if f not in _FE_PARTNER:
        raise ArgumentError(f"unknown function tag {f!r}")
    s = complex(s)
    if _near_integer(s) and round(s.real) <= 1:
        raise PoleError(f"s={s} is at a pole of one side of the functional equation")
    partner, kind = _FE_PARTNER[f]
    factor = _fe_factor(s, kind)
    lhs_em = combined(f, 1.0 - s, a, "em")
    lhs_h = combined(f, 1.0 - s, a, "hermite")
    rhs_em = factor * combined(partner, s, a, "em")
    rhs_h = factor * combined(partner, s, a, "hermite")
    scale = max(1.0, abs(lhs_em), abs(rhs_em))
    return max(abs(lhs_em - rhs_h), abs(lhs_h - rhs_em)) / scale


def multiplication_residual(s: ComplexLike, r: int, q: int) -> float:
    """Scaled residual of ``Li_s(e^{2 pi i r/q}) = q^{-s} sum_m e^{2 pi i r m/q} zeta(s, m/q)``.

    The difference is divided by ``max(1, |lhs|, q^{-Re s} sum_m |zeta(s, m/q)|)``.
    """
    s = complex(s)
    if math.gcd(r, q) != 1 or not 0 < r < q:
        raise ArgumentError("need 0 < r < q with gcd(r, q) = 1")
    if s == 1:
        raise PoleError("the right-hand side has a pole at s=1")
    lhs = periodic_zeta(s, r / q)
    terms = []
    for m in range(1, q + 1):
        k = (r * m) % q
        root = complex(_cospi_real(2 * k / q), _sinpi_real(2 * k / q))
        terms.append(root * _hurwitz(s, m / q))
    weight = cmath.exp(-s * math.log(q))
    rhs = weight * complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    # at negative Re s the summands dwarf the sum; measure against their size
    scale = max(1.0, abs(lhs), abs(weight) * math.fsum(abs(t) for t in terms))
    return abs(lhs - rhs) / scale
