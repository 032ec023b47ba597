"""Command-line front end.

Exit codes: 0 on success, 1 when a verification or zero-pattern check fails,
2 for usage errors and argument/domain errors (reported as a JSON object).
"""

from __future__ import annotations

import csv
import functools
import io
import json
import math
import os
import re
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Optional

import click
import numpy as np

from .analysis import SpectralParams, find_a0, ft_spectral_density, scan_matrix, spectral_density
from .errors import ArgumentError, NoClosedFormError, PoleError, ZetaError
from .exact_value import ExactValue
from .numeric import FUNCTION_TAGS, combined
from .special_values import SYMBOLIC, RationalPoint, classify_value, exact_value, parse_argument
from .verify import DEFAULT_TOLERANCES, SUITES, run_suite

TOL_ENV = "ZETASPECIAL_TOL"
DEFAULT_RESIDUAL_TOL = 1e-9


# --- serialization -----------------------------------------------------------------


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def body_payload(v: ExactValue):
    """JSON-ready body: ``"p/q"``, ``{order, coeffs}``, ascending coefficient lists."""
    body = v.body
    kind = v.kind
    if kind == "rational":
        return _frac(body)
    if kind == "cyclotomic":
        return {"order": body.order, "coeffs": [_frac(c) for c in body.coeffs]}
    if kind == "polynomial":
        return [_frac(c) for c in body.coeffs]
    if kind == "ratfunc":
        return body.to_payload()
    return {
        "polynomial": [_frac(c) for c in body.poly_part.coeffs],
        "ratfunc": body.ratfunc_part.to_payload(),
    }


def exact_record(v: ExactValue) -> dict:
    v = v.collapsed()
    return {
        "pi_exponent": v.pi_exponent,
        "body_kind": v.kind,
        "body_payload": body_payload(v),
        "text": str(v),
        "classification": classify_value(v),
    }


_LATEX_RULES = [
    (re.compile(r"z(\d+)\^(\d+)"), r"\\zeta_{\1}^{\2}"),
    (re.compile(r"z(\d+)"), r"\\zeta_{\1}"),
    (re.compile(r"\^(-?\d+)"), r"^{\1}"),
    (re.compile(r"\bpi\b"), r"\\pi"),
    (re.compile(r"(?<![\d.])1i\b"), "i"),
    (re.compile(r"\*"), " "),
]


def latex_value(v: ExactValue) -> str:
    """Math-mode rendering of ``v`` (without the surrounding dollars)."""
    text = str(v.collapsed())
    for pattern, repl in _LATEX_RULES:
        text = pattern.sub(repl, text)
    return text


def _latex_class(v: ExactValue) -> str:
    v = v.collapsed()
    names = {
        "rational": r"\mathbb{Q}",
        "polynomial": r"\mathbb{Q}[a]",
        "ratfunc": r"\mathbb{Q}(i)(c)",
        "mixed": r"\mathbb{Q}[a] + \mathbb{Q}(i)(c)",
    }
    core = names.get(v.kind) or rf"\mathbb{{Q}}(\zeta_{{{v.body.order}}})"
    k = v.pi_exponent
    if k == 0:
        return core
    return (r"\pi" if k == 1 else rf"\pi^{{{k}}}") + r"\cdot " + core


# --- argument parsing ------------------------------------------------------------------


def _parse_s(text: str):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        z = complex(text.replace("i", "j"))
    except ValueError:
        raise ArgumentError(f"cannot parse s = {text!r}") from None
    if z.imag == 0 and z.real == int(z.real):
        return int(z.real)
    return z


def _is_decimal(text: str) -> bool:
    return any(ch in text.lower() for ch in ".e")


def _s_json(s):
    return s if isinstance(s, int) else [s.real, s.imag]


def _parse_window(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(x) for x in text.split(":"))
    except ValueError:
        raise ArgumentError(f"window must be lo:hi, got {text!r}") from None
    return lo, hi


def _tolerance(cli_tol: Optional[float], suite: str) -> float:
    if cli_tol is not None:
        return cli_tol
    env = os.environ.get(TOL_ENV)
    if env:
        try:
            return float(env)
        except ValueError:
            raise ArgumentError(f"{TOL_ENV}={env!r} is not a number") from None
    return DEFAULT_TOLERANCES[suite]


def _emit_error(err: ZetaError) -> None:
    click.echo(json.dumps({"error": {"code": err.code, "message": str(err)}}))
    sys.exit(2)


def _handles_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ZetaError as err:
            _emit_error(err)

    return wrapper


# --- value -------------------------------------------------------------------------------


def build_record(function: str, s_text: str, a_text: str, at: Optional[str] = None) -> dict:
    """An OutputRecord for one query; exact part omitted for decimal ``a`` or non-integer ``s``."""
    s = _parse_s(s_text)
    if function.upper() not in FUNCTION_TAGS:
        raise ArgumentError(f"unknown function {function!r}")
    f = function.upper()
    record: dict = {"function": f, "s": _s_json(s)}
    exact = None
    point: "Fraction | float | None"

    if _is_decimal(a_text):
        point = float(a_text)
        if not 0.0 < point < 1.0:
            raise ArgumentError("a must lie in (0, 1)")
        record["a"] = point
    else:
        spec = parse_argument(a_text)
        if spec is SYMBOLIC:
            record["a"] = "symbolic"
            point = None
            if at is not None:
                point = float(at) if _is_decimal(at) else Fraction(at)
                record["at"] = float(point)
        else:
            record["a"] = {"num": spec.r, "den": spec.q}
            point = spec.fraction
        if isinstance(s, int):
            exact = exact_value(f, s, spec)
    record["exact"] = exact_record(exact) if exact is not None else None

    numeric = None
    degraded = False
    if point is not None:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            numeric = complex(combined(f, s, point))
        degraded = bool(caught)
    record["numeric"] = None if numeric is None else {"re": numeric.real, "im": numeric.imag}

    residual = None
    if exact is not None and numeric is not None:
        ex = exact.to_complex(float(point))
        residual = abs(ex - numeric)
        degraded = degraded or residual > DEFAULT_RESIDUAL_TOL * max(1.0, abs(ex))
    record["residual"] = residual
    record["degraded"] = degraded
    return record


_VALUE_COLUMNS = [
    "function", "s", "a", "pi_exponent", "body_kind", "exact", "classification",
    "numeric_re", "numeric_im", "residual", "degraded",
]


def _record_row(rec: dict) -> dict:
    a = rec["a"]
    a_text = f"{a['num']}/{a['den']}" if isinstance(a, dict) else str(a)
    exact = rec["exact"] or {}
    num = rec["numeric"] or {}
    return {
        "function": rec["function"],
        "s": rec["s"] if isinstance(rec["s"], int) else complex(*rec["s"]),
        "a": a_text,
        "pi_exponent": exact.get("pi_exponent", ""),
        "body_kind": exact.get("body_kind", ""),
        "exact": exact.get("text", ""),
        "classification": exact.get("classification", ""),
        "numeric_re": num.get("re", ""),
        "numeric_im": num.get("im", ""),
        "residual": "" if rec["residual"] is None else rec["residual"],
        "degraded": rec["degraded"],
    }


def _write_csv(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


@click.group()
def cli() -> None:
    """Exact and numeric special values of the Hurwitz/periodic zeta combinations."""


@cli.command()
@click.option("--function", "function", required=True, type=click.Choice(FUNCTION_TAGS, case_sensitive=False))
@click.option("--s", "s_text", required=True, help="Integer (exact) or complex such as 0.5+2j (numeric only).")
@click.option("--a", "a_text", required=True, help="r/q, 'symbolic', or a decimal (numeric only).")
@click.option("--at", default=None, help="Point for the numeric cross-check of a symbolic value.")
@click.option("--format", "fmt", default="json", type=click.Choice(["json", "csv", "latex"]))
@_handles_errors
def value(function: str, s_text: str, a_text: str, at: Optional[str], fmt: str) -> None:
    """Exact value with a numeric cross-check."""
    rec = build_record(function, s_text, a_text, at)
    if fmt == "json":
        click.echo(json.dumps(rec))
    elif fmt == "csv":
        click.echo(_write_csv([_record_row(rec)], _VALUE_COLUMNS), nl=False)
    else:
        if rec["exact"] is None:
            raise ArgumentError("LaTeX output needs an exact value")
        ex = exact_value(rec["function"], rec["s"], a_text)
        a = "a" if rec["a"] == "symbolic" else a_text
        click.echo(f"${rec['function']}({rec['s']}, {a}) = {latex_value(ex)}$")


# --- table ---------------------------------------------------------------------------------


def _table_rows_for_q(q: int, n_max: int) -> list[dict]:
    rows = []
    for f in FUNCTION_TAGS:
        for r in range(1, q // 2 + 1):
            if math.gcd(r, q) != 1:
                continue
            for s in range(-n_max, n_max + 1):
                try:
                    v = exact_value(f, s, RationalPoint(r, q)).collapsed()
                except (NoClosedFormError, PoleError):
                    continue
                rows.append({
                    "function": f,
                    "s": s,
                    "a": f"{r}/{q}",
                    "q": q,
                    "r": r,
                    "pi_exponent": v.pi_exponent,
                    "body_kind": v.kind,
                    "value": str(v),
                    "classification": classify_value(v),
                    "latex_value": latex_value(v),
                    "latex_class": _latex_class(v),
                    "payload": body_payload(v),
                })
    return rows


def table_rows(q_max: int, n_max: int, jobs: Optional[int] = None) -> list[dict]:
    """All table cells for ``2 <= q <= q_max`` and ``|s| <= n_max``, sorted by (function, q, r, s)."""
    if q_max < 2 or n_max < 0:
        raise ArgumentError("need q_max >= 2 and n_max >= 0")
    qs = range(2, q_max + 1)
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_table_rows_for_q, qs, [n_max] * len(qs)))
    else:
        chunks = [_table_rows_for_q(q, n_max) for q in qs]
    rows = [row for chunk in chunks for row in chunk]
    order = {f: i for i, f in enumerate(FUNCTION_TAGS)}
    rows.sort(key=lambda row: (order[row["function"]], row["q"], row["r"], row["s"]))
    return rows


_TABLE_COLUMNS = ["function", "s", "a", "pi_exponent", "body_kind", "value", "classification"]


def render_table(rows: list[dict], fmt: str) -> str:
    if fmt == "csv":
        return _write_csv([{k: row[k] for k in _TABLE_COLUMNS} for row in rows], _TABLE_COLUMNS)
    if fmt == "json":
        keep = _TABLE_COLUMNS + ["payload"]
        return json.dumps([{k: row[k] for k in keep} for row in rows], indent=1) + "\n"
    lines = [
        r"\begin{longtable}{lllll}",
        r"\hline",
        r"$f$ & $s$ & $a$ & value & class \\",
        r"\hline",
        r"\endhead",
    ]
    for row in rows:
        lines.append(
            rf"${row['function']}$ & ${row['s']}$ & ${row['a']}$ & "
            rf"${row['latex_value']}$ & ${row['latex_class']}$ \\"
        )
    lines += [r"\hline", r"\end{longtable}"]
    return "\n".join(lines) + "\n"


@cli.command()
@click.option("--q-max", type=int, required=True)
@click.option("--n-max", type=int, required=True)
@click.option("--format", "fmt", default="csv", type=click.Choice(["json", "csv", "latex"]))
@click.option("--output", type=click.Path(dir_okay=False, writable=True), default=None)
@click.option("--jobs", type=int, default=1, show_default=True)
@_handles_errors
def table(q_max: int, n_max: int, fmt: str, output: Optional[str], jobs: int) -> None:
    """Grid of exact values at rational points with their value class."""
    text = render_table(table_rows(q_max, n_max, jobs), fmt)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


# --- verify --------------------------------------------------------------------------------------


@cli.command()
@click.option("--suite", default="all", type=click.Choice(sorted(SUITES) + ["all"]))
@click.option("--tol", type=float, default=None, help=f"Override tolerance (else ${TOL_ENV}, else per suite).")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--quiet", is_flag=True, help="Only print the summary and failures.")
@_handles_errors
def verify(suite: str, tol: Optional[float], seed: int, quiet: bool) -> None:
    """Run invariant suites; exit 1 if any check fails."""
    names = list(SUITES) if suite == "all" else [suite]
    failures = []
    for name in names:
        checks = run_suite(name, _tolerance(tol, name), seed)
        for chk in checks:
            if not quiet or not chk.passed:
                click.echo(f"[{name}] {chk.line()}")
        bad = [c for c in checks if not c.passed]
        worst = max((c.residual for c in checks if c.measure == "residual"), default=0.0)
        click.echo(f"[{name}] {len(checks)} checks, {len(bad)} failed, max residual {worst:.3e}")
        failures += [f"{name}: {c.name}" for c in bad]
    if failures:
        click.echo("FAILED CHECKS:")
        for item in failures:
            click.echo(f"  {item}")
        sys.exit(1)


# --- zeros ---------------------------------------------------------------------------------------------


@cli.command()
@click.option("--function", "function", type=click.Choice(FUNCTION_TAGS, case_sensitive=False), default=None)
@click.option("--a", "a_values", type=float, multiple=True)
@click.option("--window", default="-20.5:0.5", show_default=True)
@click.option("--step", type=float, default=0.01, show_default=True)
@click.option("--find-a0", "find_a0_flag", is_flag=True, help="Print the root a0 of Q(1/2, a) to 10 decimals.")
@click.option("--jobs", type=int, default=1, show_default=True)
@_handles_errors
def zeros(function: Optional[str], a_values: tuple[float, ...], window: str, step: float,
          find_a0_flag: bool, jobs: int) -> None:
    """Real-zero scans; exit 1 on a mismatch where a zero theorem applies."""
    if find_a0_flag:
        click.echo(f"{find_a0():.10f}")
        return
    if function is None or not a_values:
        raise click.UsageError("--function and at least one --a are required (or use --find-a0)")
    lo, hi = _parse_window(window)
    reports = scan_matrix([(function.upper(), a) for a in a_values], lo, hi, step, jobs)
    failed = False
    for rep in reports:
        click.echo(json.dumps(rep.to_dict()))
        failed = failed or (rep.theorem_applies and rep.verdict == "mismatch")
    if failed:
        sys.exit(1)


# --- spectral ------------------------------------------------------------------------------------------


def _alpha_grid(text: str) -> list[float]:
    try:
        lo, hi, step = (float(x) for x in text.split(":"))
    except ValueError:
        raise ArgumentError(f"alpha grid must be lo:hi:step, got {text!r}") from None
    if step <= 0 or hi < lo:
        raise ArgumentError("alpha grid needs step > 0 and lo <= hi")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [round(float(x), 12) for x in np.linspace(lo, lo + (count - 1) * step, count)]


@cli.command()
@click.option("--lambda", "lam", type=float, required=True)
@click.option("--C", "C", type=float, default=1.0, show_default=True)
@click.option("--alpha-grid", default="0.01:0.49:0.02", show_default=True)
@click.option("--ft", default=None, help="rho,delta,H,psi for the sampled fractional process column.")
@_handles_errors
def spectral(lam: float, C: float, alpha_grid: str, ft: Optional[str]) -> None:
    """CSV of the spectral density over an alpha grid."""
    params = SpectralParams(lam, C)
    ft_args = None
    if ft is not None:
        try:
            ft_args = [float(x) for x in ft.split(",")]
        except ValueError:
            raise ArgumentError(f"--ft must be rho,delta,H,psi, got {ft!r}") from None
        if len(ft_args) != 4:
            raise ArgumentError("--ft takes exactly four numbers")
    columns = ["alpha", "density"] + (["ft_density"] if ft_args else [])
    rows = []
    for alpha in _alpha_grid(alpha_grid):
        if alpha == 0:
            click.echo("note: alpha = 0 skipped (the density diverges there like |alpha|^(1 - lambda))", err=True)
            continue
        row = {"alpha": alpha, "density": spectral_density(params, alpha)}
        if ft_args:
            row["ft_density"] = ft_spectral_density(*ft_args, alpha)
        rows.append(row)
    click.echo(_write_csv(rows, columns), nl=False)


def main() -> None:  # pragma: no cover
    cli()


if __name__ == "__main__":  # pragma: no cover
    main()
