"""Invariant suites shared by the ``verify`` command and the test-suite.

Each suite yields ``Check`` records; a suite passes when every check does.
"""

from __future__ import annotations

import math
import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .analysis import default_a_grid, vanishing_max
from .errors import NoClosedFormError, PoleError
from .euler_symbolic import li_neg_euler, li_neg_stirling
from .numeric import FUNCTION_TAGS, combined, functional_equation_residual, multiplication_residual
from .special_values import exact_value, routes_agree, vanishing_pattern

__all__ = [
    "Check",
    "SUITES",
    "DEFAULT_TOLERANCES",
    "SPOT_POINTS",
    "exact_vs_numeric",
    "functional_equations",
    "dual_route",
    "vanishing",
    "multiplication",
    "run_suite",
    "coprime_points",
    "random_contract_point",
]

SPOT_POINTS = ("1/3", "1/4", "1/5", "2/5", "1/2")


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    passed: bool
    measure: str = "residual"

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} {self.measure}={self.residual:.3e}"


def coprime_points(q_max: int, q_min: int = 2) -> Iterator[tuple[int, int]]:
    """All ``(r, q)`` with ``q_min <= q <= q_max``, ``gcd(r, q) = 1``, ``r/q <= 1/2``."""
    for q in range(q_min, q_max + 1):
        for r in range(1, q // 2 + 1):
            if math.gcd(r, q) == 1:
                yield r, q


def random_contract_point(rng: random.Random) -> tuple[str, complex, float]:
    """A function tag, ``s`` and ``a`` with ``s`` and ``1 - s`` both in the validated box."""
    f = rng.choice(FUNCTION_TAGS)
    while True:
        s = complex(rng.uniform(-29.0, 29.0), rng.uniform(-29.0, 29.0))
        if abs(s.imag) > 1e-3 or abs(s.real - round(s.real)) > 1e-3:
            return f, s, rng.uniform(0.001, 0.5)


def exact_vs_numeric(tol: float = 1e-9, s_max: int = 9, points=SPOT_POINTS, seed: int = 0) -> Iterator[Check]:
    """Embedded exact values against the floating-point evaluator."""
    for f in FUNCTION_TAGS:
        for s in range(-s_max, s_max + 1):
            for a in points:
                try:
                    ex = exact_value(f, s, a)
                except (NoClosedFormError, PoleError):
                    continue
                num = combined(f, s, Fraction(a))
                res = abs(ex.to_complex() - num)
                yield Check(f"{f}({s}, {a})", res, res <= tol)


def functional_equations(tol: float = 1e-9, seed: int = 0, count: int = 100) -> Iterator[Check]:
    """Reflection ``s -> 1 - s`` residuals at seeded random points."""
    rng = random.Random(seed)
    for _ in range(count):
        f, s, a = random_contract_point(rng)
        res = functional_equation_residual(f, s, a)
        yield Check(f"FE[{f}] s={s.real:.4f}{s.imag:+.4f}i a={a:.5f}", res, res <= tol)


def multiplication(tol: float = 1e-9, seed: int = 0, per_point: int = 20, q_max: int = 8) -> Iterator[Check]:
    """Distribution-relation residuals for every reduced ``r/q`` with ``q <= q_max``."""
    rng = random.Random(seed)
    for q in range(2, q_max + 1):
        for r in range(1, q):
            if math.gcd(r, q) != 1:
                continue
            for _ in range(per_point):
                s = complex(rng.uniform(-29.0, 29.0), rng.uniform(-29.0, 29.0))
                res = multiplication_residual(s, r, q)
                yield Check(f"mult r/q={r}/{q} s={s.real:.4f}{s.imag:+.4f}i", res, res <= tol)


def dual_route(tol: float = 0.0, seed: int = 0, n_max: int = 12, q_max: int = 12, s_max: int = 8) -> Iterator[Check]:
    """Exact identities: two formulas for ``Li_{-n}`` and symbolic vs rational-point values."""
    for n in range(1, n_max + 1):
        ok = li_neg_stirling(n) == li_neg_euler(n)
        yield Check(f"Li_-{n}: stirling == euler", 0.0 if ok else 1.0, ok)
    for f in FUNCTION_TAGS:
        for s in range(-s_max, s_max + 1):
            for r, q in coprime_points(q_max):
                try:
                    ok = routes_agree(f, s, r, q)
                except (NoClosedFormError, PoleError):
                    continue
                yield Check(f"route {f}({s}, {r}/{q})", 0.0 if ok else 1.0, ok)


def vanishing(tol: float = 1e-10, seed: int = 0, s_range=range(-8, 0)) -> Iterator[Check]:
    """Numeric vanishing on the a-grid against the exact vanishing pattern.

    Where the exact value vanishes identically the grid maximum must be at most
    ``tol``; elsewhere it must exceed ``10 * tol``.
    """
    grid = default_a_grid()
    for f in FUNCTION_TAGS:
        expected = set(vanishing_pattern(f, s_range))
        for s in s_range:
            m = vanishing_max(f, s, grid)
            if s in expected:
                yield Check(f"vanish {f}({s})", m, m <= tol)
            else:
                yield Check(f"nonvanish {f}({s})", m, m > 10 * tol, "magnitude")


SUITES: dict[str, Callable[..., Iterator[Check]]] = {
    "exact-vs-numeric": exact_vs_numeric,
    "functional-equations": functional_equations,
    "multiplication": multiplication,
    "dual-route": dual_route,
    "vanishing": vanishing,
}

DEFAULT_TOLERANCES = {
    "exact-vs-numeric": 1e-9,
    "functional-equations": 1e-9,
    "multiplication": 1e-9,
    "dual-route": 0.0,
    "vanishing": 1e-10,
}


def run_suite(name: str, tol: Optional[float] = None, seed: int = 0) -> list[Check]:
    fn = SUITES[name]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return list(fn(tol=DEFAULT_TOLERANCES[name] if tol is None else tol, seed=seed))
