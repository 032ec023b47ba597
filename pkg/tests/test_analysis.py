from __future__ import annotations

import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zetaspecial.analysis import (
    A0_REFERENCE,
    SpectralParams,
    default_a_grid,
    expected_zero_set,
    find_a0,
    ft_spectral_density,
    lattice_sum,
    nonvanishing_witness,
    scan_real_zeros,
    spectral_density,
    vanishing_check,
    vanishing_max,
)
from zetaspecial.errors import ArgumentError, PoleError
from zetaspecial.numeric import combined

GRID = default_a_grid()


# --- real-zero scans ------------------------------------------------------------


@pytest.mark.parametrize(
    "f, a, expected",
    [
        ("Z", 0.3, list(range(-20, 1, 2))),
        ("Y", 0.2, list(range(-19, 0, 2))),
        ("Q", 0.4, list(range(-20, -1, 2))),
    ],
)
def test_scan_examples(f, a, expected):
    report = scan_real_zeros(f, a, -20.5, 0.5, 0.01)
    assert report.verdict == "match"
    assert report.expected == expected
    assert len(report.locations) == len(expected)
    for z, k in zip(report.locations, expected):
        assert abs(z - k) <= 1e-8
    assert report.locations == sorted(report.locations)
    assert all(z.simple for z in report.zeros)


def test_scan_reports_extra_zero_below_a0():
    # below a0 the zero set of Q is no longer the negative even integers
    report = scan_real_zeros("Q", 0.1, -20.5, 0.5, 0.01)
    assert not report.theorem_applies
    assert report.verdict == "mismatch"
    assert report.locations[:-1] == pytest.approx(list(range(-20, -1, 2)), abs=1e-8)
    assert report.locations[-1] == pytest.approx(0.2936922, abs=1e-6)


def test_scan_degenerate_at_half():
    # Y(s, 1/2) vanishes identically
    report = scan_real_zeros("Y", 0.5, -5.5, 0.5, 0.05)
    assert report.identically_zero
    assert report.verdict == "degenerate"


def test_scan_errors():
    with pytest.raises(PoleError):
        scan_real_zeros("Z", 0.3, -2.5, 1.5, 0.01)
    with pytest.raises(ArgumentError):
        scan_real_zeros("Z", 0.3, -2.5, 0.5, 0.1)
    with pytest.raises(ArgumentError):
        scan_real_zeros("Z", 0.7, -2.5, 0.5, 0.01)
    # P has no pole at s = 1
    assert scan_real_zeros("P", 0.3, -2.5, 1.5, 0.01).verdict == "match"


def test_expected_zero_sets():
    assert expected_zero_set("Z", -4.5, 0.5) == [-4, -2, 0]
    assert expected_zero_set("P", -4.5, 0.5) == [-4, -2]
    assert expected_zero_set("Q", -4.5, 0.5) == [-4, -2]
    for f in "YOX":
        assert expected_zero_set(f, -4.5, 0.5) == [-3, -1]


# --- the constant a0 ------------------------------------------------------------


def test_find_a0():
    a0 = find_a0()
    assert abs(a0 - 0.1183751396) <= 1e-9
    assert abs(combined("Z", 0.5, a0)) <= 1e-8
    assert abs(combined("P", 0.5, a0)) <= 1e-8
    assert A0_REFERENCE == 0.1183751396


def test_a0_bracket_sign_change():
    assert combined("Q", 0.5, 0.05).real * combined("Q", 0.5, 0.2).real < 0


# --- vanishing and nonvanishing ---------------------------------------------------


def test_vanishing_examples():
    assert vanishing_check("P", -4, GRID, 1e-10)
    assert not vanishing_check("P", -3, GRID, 1e-10)
    assert vanishing_max("P", -3, GRID) > 1e-9
    assert vanishing_check("O", -3, GRID, 1e-10)


def test_vanishing_rejects_bad_input():
    with pytest.raises(PoleError):
        vanishing_max("Q", 1, GRID)
    with pytest.raises(ArgumentError):
        vanishing_max("P", -2, [0.2, 0.6])


def test_nonvanishing_witnesses():
    w = nonvanishing_witness("hurwitz", -2, GRID)
    assert w["magnitude"] > 1e-3
    a = w["a"]
    assert w["magnitude"] == pytest.approx(abs(a**3 - 1.5 * a**2 + 0.5 * a) / 3, rel=1e-12)
    assert nonvanishing_witness("periodic", 1 + 5j, GRID)["magnitude"] > 1e-6
    assert nonvanishing_witness("hurwitz", 0.5, GRID)["magnitude"] > 1e-6
    with pytest.raises(PoleError):
        nonvanishing_witness("hurwitz", 1, GRID)
    with pytest.raises(ArgumentError):
        nonvanishing_witness("dirichlet", 2, GRID)


# --- lattice sums and spectral densities ------------------------------------------


def test_lattice_sum_examples():
    ls = lattice_sum(2, 0.5, 10**6)
    assert 0 < math.pi**2 - ls.value <= ls.tail_bound + 1e-10
    ls = lattice_sum(3, -0.25, 10**6)
    assert abs(ls.value - combined("Z", 3, 0.25).real) <= ls.tail_bound + 1e-10
    ls = lattice_sum(2, 1 / 3, 10**5)
    assert abs(ls.value - combined("Z", 2, 1 / 3).real) <= ls.tail_bound + 1e-10


def test_lattice_sum_random_pairs():
    rng = random.Random(0)
    for _ in range(20):
        s, alpha = rng.uniform(1.5, 4.0), rng.uniform(1e-9, 0.5)
        ls = lattice_sum(s, alpha, 10**6)
        z = combined("Z", s, alpha).real
        # the 1e-10 floor is relative: one ulp of |Z| exceeds it once |Z| > 4.5e5
        assert abs(ls.value - z) <= ls.tail_bound + 1e-10 * max(1.0, abs(z))


def test_lattice_sum_errors():
    for args in [(1.0, 0.25, 10), (2.0, 0.0, 10), (2.0, 0.7, 10), (2.0, 0.25, 0)]:
        with pytest.raises(ArgumentError):
            lattice_sum(*args)


def test_spectral_example():
    p = SpectralParams(1.5, 1.0)
    assert spectral_density(p, 0.5) == pytest.approx(4 * combined("Z", 2.5, 0.5).real, rel=1e-14)


@given(st.floats(1.01, 1.99), st.floats(0.1, 10.0), st.floats(1e-3, 0.5))
def test_spectral_even_and_positive(lam, C, alpha):
    p = SpectralParams(lam, C)
    rho = spectral_density(p, alpha)
    assert rho > 0
    assert spectral_density(p, -alpha) - rho == 0


def test_spectral_params_validation():
    for lam in (1.0, 2.0, 2.5):
        with pytest.raises(ArgumentError):
            SpectralParams(lam, 1.0)
    with pytest.raises(ArgumentError):
        SpectralParams(1.5, 0.0)
    with pytest.raises(ArgumentError):
        spectral_density(SpectralParams(1.5, 1.0), 0.0)


def test_ft_density_against_lattice_sum():
    value = ft_spectral_density(1.0, 1.0, 0.5, 0.5, 0.25)
    ls = lattice_sum(3, 0.25, 10**6)
    prefactor = math.gamma(2.0) * math.sin(math.pi / 2) / (2 * math.pi) ** 4 * 2.0**1.5
    assert abs(value - prefactor * ls.value) <= prefactor * (ls.tail_bound + 1e-10)


@given(st.floats(0.1, 5.0), st.floats(0.1, 5.0), st.floats(0.05, 1.0), st.floats(0.1, 2.0), st.floats(0.01, 0.5))
def test_ft_density_scaling(rho, delta, H, psi, alpha):
    base = ft_spectral_density(rho, delta, H, psi, alpha)
    assert base > 0
    assert ft_spectral_density(2 * rho, delta, H, psi, alpha) == pytest.approx(4 * base, rel=1e-12)
    assert ft_spectral_density(rho, 2 * delta, H, psi, alpha) == pytest.approx(2 ** (2 * H) * base, rel=1e-12)
    assert ft_spectral_density(rho, delta, H, psi, -alpha) == base
