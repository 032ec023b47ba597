"""Numerical checks of the zero and vanishing theorems, a0, and spectral densities."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .errors import ArgumentError, BracketError, PoleError, ZetaError
from .numeric import combined, hurwitz_zeta, periodic_zeta
from .special_values import FunctionTag

__all__ = [
    "ZeroLocation",
    "ZeroReport",
    "SpectralParams",
    "LatticeSum",
    "A0_REFERENCE",
    "default_a_grid",
    "expected_zero_set",
    "scan_real_zeros",
    "find_a0",
    "vanishing_max",
    "vanishing_check",
    "nonvanishing_witness",
    "lattice_sum",
    "spectral_density",
    "ft_spectral_density",
    "scan_matrix",
]

A0_REFERENCE = 0.1183751396
_A0_BRACKET = (0.05, 0.2)


def default_a_grid(points: int = 50) -> list[float]:
    """Equispaced stand-in for "all 0 < a < 1/2": ``points`` values on [0.01, 0.49]."""
    return np.linspace(0.01, 0.49, points).tolist()


# --- real zeros ----------------------------------------------------------------


@dataclass(frozen=True)
class ZeroLocation:
    location: float
    refined_tol: float
    simple: bool


@dataclass
class ZeroReport:
    function: str
    a: float
    window: tuple[float, float]
    zeros: list[ZeroLocation] = field(default_factory=list)
    expected: list[int] = field(default_factory=list)
    verdict: str = "mismatch"
    theorem_applies: bool = True
    identically_zero: bool = False

    @property
    def locations(self) -> list[float]:
        return [z.location for z in self.zeros]

    def to_dict(self) -> dict:
        out = asdict(self)
        out["window"] = list(self.window)
        return out


def _theorem_applies(f: FunctionTag, a: float) -> bool:
    if f in (FunctionTag.Z, FunctionTag.P):
        return 0.25 <= a <= 0.5
    if f is FunctionTag.Q:
        return A0_REFERENCE < a <= 0.5
    return 0.0 < a < 0.5


def expected_zero_set(f: "FunctionTag | str", lo: float, hi: float) -> list[int]:
    """Integers in ``[lo, hi]`` where the real-zero theorems place the zeros of ``f``."""
    f = FunctionTag.parse(f)
    ints = range(math.ceil(lo), math.floor(hi) + 1)
    if f is FunctionTag.Z:
        return [k for k in ints if k <= 0 and k % 2 == 0]
    if f in (FunctionTag.P, FunctionTag.Q):
        return [k for k in ints if k < 0 and k % 2 == 0]
    return [k for k in ints if k < 0 and k % 2]


def _bisect(g, lo: float, hi: float, glo: float, tol: float) -> float:
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if gm == 0.0:
            return mid
        if (gm < 0) == (glo < 0):
            lo, glo = mid, gm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def scan_real_zeros(
    f: "FunctionTag | str",
    a: float,
    sigma_lo: float = -20.5,
    sigma_hi: float = 0.5,
    step: float = 0.01,
    refine_tol: float = 1e-10,
) -> ZeroReport:
    """Locate the real zeros of ``f(., a)`` in ``[sigma_lo, sigma_hi]``.

    Sign changes on the grid are refined by bisection. A zero counts as simple
    when ``|f|`` is at least ``1e-6`` half a unit to either side of it.
    """
    f = FunctionTag.parse(f)
    if not 0.0 < a <= 0.5:
        raise ArgumentError("a must lie in (0, 1/2]")
    if step > 0.05 or step <= 0:
        raise ArgumentError("step must be in (0, 0.05]")
    if sigma_lo >= sigma_hi:
        raise ArgumentError("empty window")
    if f in (FunctionTag.Z, FunctionTag.Q) and sigma_lo <= 1.0 <= sigma_hi:
        raise PoleError(f"{f.value} has a pole at s=1 inside the window")

    def g(x: float) -> float:
        return combined(f.value, x, a).real

    count = int(round((sigma_hi - sigma_lo) / step)) + 1
    grid = np.linspace(sigma_lo, sigma_hi, count)
    values = [g(float(x)) for x in grid]
    report = ZeroReport(
        function=f.value,
        a=a,
        window=(sigma_lo, sigma_hi),
        expected=expected_zero_set(f, sigma_lo, sigma_hi),
        theorem_applies=_theorem_applies(f, a),
    )
    if all(v == 0.0 for v in values):
        report.identically_zero = True
        report.verdict = "degenerate"
        return report

    found: list[float] = []
    for i, v in enumerate(values):
        x = float(grid[i])
        if v == 0.0:
            found.append(x)
        elif i + 1 < count and values[i + 1] != 0.0 and (v < 0) != (values[i + 1] < 0):
            found.append(_bisect(g, x, float(grid[i + 1]), v, refine_tol))

    zeros = []
    for z in sorted(found):
        simple = abs(g(z - 0.5)) >= 1e-6 and abs(g(z + 0.5)) >= 1e-6
        zeros.append(ZeroLocation(z, refine_tol, simple))
    report.zeros = zeros

    locs = report.locations
    ok = len(locs) == len(report.expected) and all(
        abs(z - k) <= 1e-8 for z, k in zip(locs, report.expected)
    )
    report.verdict = "match" if ok else "mismatch"
    return report


def find_a0(tol: float = 1e-11) -> float:
    """The unique ``a0`` in ``(0.05, 0.2)`` with ``Q(1/2, a0) = 0``.

    At ``s = 1/2`` the functional equation forces ``Z = P``, so ``Z`` and ``P``
    vanish there too; both are checked to be at most ``1e-8``.
    """
    lo, hi = _A0_BRACKET

    def q(a: float) -> float:
        return combined("Q", 0.5, a).real

    qlo, qhi = q(lo), q(hi)
    if (qlo < 0) == (qhi < 0):
        raise BracketError(f"Q(1/2, a) does not change sign on [{lo}, {hi}]")
    a0 = _bisect(q, lo, hi, qlo, tol)
    for tag in ("Z", "P"):
        residual = abs(combined(tag, 0.5, a0))
        if residual > 1e-8:
            raise ZetaError(f"{tag}(1/2, a0) = {residual:.3e} does not vanish")
    return a0


# --- vanishing in a ---------------------------------------------------------------


def vanishing_max(f: "FunctionTag | str", s: complex, a_grid: Iterable[float]) -> float:
    """``max |f(s, a)|`` over the grid."""
    f = FunctionTag.parse(f)
    if f in (FunctionTag.Z, FunctionTag.Q) and s == 1:
        raise PoleError(f"{f.value} has a pole at s=1")
    grid = list(a_grid)
    if any(not 0.0 < a < 0.5 for a in grid):
        raise ArgumentError("grid points must lie in (0, 1/2)")
    return max(abs(combined(f.value, s, a)) for a in grid)


def vanishing_check(f: "FunctionTag | str", s: complex, a_grid: Iterable[float], tol: float = 1e-10) -> bool:
    """True when ``|f(s, a)| <= tol`` at every grid point."""
    return vanishing_max(f, s, a_grid) <= tol


def nonvanishing_witness(kind: str, s: complex, a_grid: Iterable[float]) -> dict:
    """Grid point maximizing ``|zeta(s, a)|`` (``kind="hurwitz"``) or ``|Li_s(e^{2 pi i a})|``."""
    if kind == "hurwitz":
        if s == 1:
            raise PoleError("Hurwitz zeta has a pole at s=1")
        fn = hurwitz_zeta
    elif kind == "periodic":
        fn = periodic_zeta
    else:
        raise ArgumentError("kind must be 'hurwitz' or 'periodic'")
    best_a, best = math.nan, -1.0
    for a in a_grid:
        m = abs(fn(s, a))
        if m > best:
            best_a, best = a, m
    return {"a": best_a, "magnitude": best}


# --- lattice sums and spectral densities --------------------------------------------


class LatticeSum(NamedTuple):
    value: float
    tail_bound: float


def lattice_sum(s: float, alpha: float, cutoff: int) -> LatticeSum:
    """``sum_{|n| <= cutoff} |n + alpha|^{-s}`` and a bound on the omitted tail.

    The tail is positive and at most ``2 (cutoff - 1/2)^{1-s} / (s - 1)``.
    """
    if s <= 1:
        raise ArgumentError("the lattice sum converges only for s > 1")
    if alpha == 0 or abs(alpha) > 0.5:
        raise ArgumentError("alpha must be in [-1/2, 1/2] and nonzero")
    if cutoff < 1:
        raise ArgumentError("cutoff must be >= 1")
    n = np.arange(-cutoff, cutoff + 1, dtype=float)
    terms = np.sort(np.power(np.abs(n + alpha), -s))
    value = float(np.sum(terms))
    tail = 2.0 * (cutoff - 0.5) ** (1.0 - s) / (s - 1.0)
    return LatticeSum(value, tail)


@dataclass(frozen=True)
class SpectralParams:
    lam: float
    C: float

    def __post_init__(self):
        if not 1.0 < self.lam < 2.0:
            raise ArgumentError(f"lambda must satisfy 1 < lambda < 2, got {self.lam}")
        if self.C <= 0:
            raise ArgumentError("C must be positive")


def _four_sin_sq(alpha: float) -> float:
    # |e^{2 pi i alpha} - 1|^2 = 2 - 2 cos(2 pi alpha), written without cancellation
    sn = math.sin(math.pi * abs(alpha))
    return 4.0 * sn * sn


def spectral_density(p: SpectralParams, alpha: float) -> float:
    """``C |e^{2 pi i alpha} - 1|^2 Z(lambda + 1, |alpha|)``; even in ``alpha``."""
    if alpha == 0 or abs(alpha) > 0.5:
        raise ArgumentError("alpha must be in [-1/2, 1/2] and nonzero")
    a = abs(alpha)
    return p.C * _four_sin_sq(a) * combined("Z", p.lam + 1.0, a).real


def ft_spectral_density(rho: float, delta: float, H: float, psi_exp: float, alpha: float) -> float:
    """Spectral density of a sampled fractionally integrated process.

    ``rho^2 delta^{2H} Gamma(2H+1) sin(pi H) / (2 pi)^{2+2H+2psi}
    (2 - 2cos 2 pi alpha)^{psi+1} Z(1 + 2H + 2psi, |alpha|)``.
    """
    if alpha == 0 or abs(alpha) > 0.5:
        raise ArgumentError("alpha must be in [-1/2, 1/2] and nonzero")
    if rho <= 0 or delta <= 0 or psi_exp <= 0 or not 0 < H <= 1:
        raise ArgumentError("need rho, delta, psi > 0 and 0 < H <= 1")
    a = abs(alpha)
    s = 1.0 + 2.0 * H + 2.0 * psi_exp
    prefactor = rho * rho * delta ** (2 * H) * math.gamma(2 * H + 1) * math.sin(math.pi * H)
    prefactor /= (2 * math.pi) ** (2 + 2 * H + 2 * psi_exp)
    return prefactor * _four_sin_sq(a) ** (psi_exp + 1) * combined("Z", s, a).real


def scan_matrix(
    pairs: Sequence[tuple[str, float]],
    sigma_lo: float = -20.5,
    sigma_hi: float = 0.5,
    step: float = 0.01,
    jobs: Optional[int] = None,
) -> list[ZeroReport]:
    """Run several scans, optionally in a process pool; order follows ``pairs``."""
    if not jobs or jobs <= 1:
        return [scan_real_zeros(f, a, sigma_lo, sigma_hi, step) for f, a in pairs]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(scan_real_zeros, f, a, sigma_lo, sigma_hi, step) for f, a in pairs]
        return [fut.result() for fut in futures]
