import math

import numpy as np
import pytest

from pdmosc import bessel
from oracles import series_j, series_j_prime, series_zero

# first zeros frozen from the series-bisection oracle
J11 = 3.8317059702075123
J12 = 7.0155866698156188
J21 = 5.1356223018406826


def test_j_at_origin():
    assert bessel.bessel_j(0, 0.0) == pytest.approx(1.0, abs=0.0)
    assert bessel.bessel_j(1, 0.0) == 0.0
    assert bessel.bessel_j(2.5, 0.0) == 0.0


def test_j_vanishes_at_first_zero_of_j1():
    oracle_zero = series_zero(1, 1)
    assert oracle_zero == pytest.approx(J11, abs=1e-9)
    assert abs(bessel.bessel_j(1, oracle_zero)) < 1e-9


@pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 2.0, 5.5, 10.0])
def test_j_matches_series_oracle(nu):
    for x in np.linspace(0.05, 12.0, 40):
        expected = series_j(nu, float(x))
        assert bessel.bessel_j(nu, float(x)) == pytest.approx(expected, abs=2e-11)


def test_j_domain_and_order_validation():
    with pytest.raises(ValueError):
        bessel.bessel_j(1, -0.5)
    with pytest.raises(ValueError):
        bessel.bessel_j(-0.5, 1.0)
    with pytest.raises(ValueError):
        bessel.bessel_j(math.nan, 1.0)


def test_accuracy_warning_outside_box():
    with pytest.warns(bessel.AccuracyLossWarning):
        bessel.bessel_j(1, 2.0e3)
    with pytest.warns(bessel.AccuracyLossWarning):
        bessel.bessel_j(60.0, 1.0)


def test_y_divergence_toward_origin():
    # log singularity for nu = 0, pole for nu >= 1
    assert bessel.bessel_y(0, 1e-15) < -20.0
    assert bessel.bessel_y(1, 1e-15) < -1e10
    y_vals = [bessel.bessel_y(1, x) for x in (1e-2, 1e-4, 1e-6)]
    assert y_vals[0] > y_vals[1] > y_vals[2]


def test_y_domain_error():
    with pytest.raises(ValueError):
        bessel.bessel_y(0, 0.0)
    with pytest.raises(ValueError):
        bessel.bessel_y(1, -2.0)


def test_wronskian_at_two():
    x = 2.0
    for nu in (0.0, 0.5, 1.0, 3.0):
        w = bessel.bessel_j(nu, x) * bessel.bessel_y_prime(nu, x) - bessel.bessel_j_prime(
            nu, x
        ) * bessel.bessel_y(nu, x)
        assert w == pytest.approx(2.0 / (math.pi * x), abs=1e-9)


def test_wronskian_on_log_grid():
    xs = np.logspace(-1, 2, 50)
    for nu in range(11):
        w = (
            bessel.bessel_j(nu, xs) * bessel.bessel_y_prime(nu, xs)
            - bessel.bessel_j_prime(nu, xs) * bessel.bessel_y(nu, xs)
            - 2.0 / (math.pi * xs)
        )
        assert np.max(np.abs(w)) < 1e-9


def test_recurrence_identity():
    xs = np.logspace(-1, 2, 50)
    for nu in range(1, 11):
        res = (
            bessel.bessel_j(nu - 1, xs)
            + bessel.bessel_j(nu + 1, xs)
            - (2.0 * nu / xs) * bessel.bessel_j(nu, xs)
        )
        assert np.max(np.abs(res)) < 1e-9


def test_j_prime_identities():
    # J0' = -J1
    x = 1.5
    assert bessel.bessel_j_prime(0, x) == pytest.approx(-bessel.bessel_j(1, x), abs=1e-10)
    # at a zero of J1 both derivative routes agree: J1' = J0 = (J0 - J2)/2 there
    j = series_zero(1, 1)
    via_recurrence = bessel.bessel_j_prime(1, j)
    via_j0 = bessel.bessel_j(0, j) - bessel.bessel_j(1, j) / j
    assert via_recurrence == pytest.approx(via_j0, abs=1e-9)
    # series-oracle cross-check of the derivative itself
    assert via_recurrence == pytest.approx(series_j_prime(1.0, j), abs=1e-10)
    # order-2 derivative vanishes linearly at small argument
    small = bessel.bessel_j_prime(2, 0.001)
    assert 0.0 < small < 1e-3


def test_bound_for_integer_orders():
    xs = np.linspace(0.0, 80.0, 400)
    for n in range(0, 11):
        assert np.max(np.abs(bessel.bessel_j(n, xs))) <= 1.0 + 1e-12


@pytest.mark.parametrize(
    "n,N,frozen",
    [(1, 1, 3.8317059702), (1, 2, 7.0155866698), (2, 1, 5.1356223018)],
)
def test_zero_frozen_values(n, N, frozen):
    assert bessel.bessel_zero(n, N) == pytest.approx(frozen, abs=1e-9)


def test_zeros_match_series_oracle():
    for n in (1, 2):
        for N in (1, 2, 3):
            assert bessel.bessel_zero(n, N) == pytest.approx(series_zero(n, N), abs=1e-9)


def test_zero_interlacing():
    zeros = {(n, N): bessel.bessel_zero(n, N) for n in range(1, 7) for N in range(1, 6)}
    for n in range(1, 6):
        for N in range(1, 5):
            assert zeros[(n, N)] < zeros[(n + 1, N)] < zeros[(n, N + 1)]


def test_zero_large_order_bracketing():
    # McMahon's leading guess misbrackets here; the scan must not
    j = bessel.bessel_zero(10, 1)
    assert abs(bessel.bessel_j(10, j)) < 1e-12
    assert 14.0 < j < 15.0


def test_zero_argument_validation():
    with pytest.raises(ValueError):
        bessel.bessel_zero(0, 1)
    with pytest.raises(ValueError):
        bessel.bessel_zero(1, 0)
    with pytest.raises(ValueError):
        bessel.bessel_zero(1.5, 1)


def test_vectorized_evaluation():
    xs = np.array([0.5, 1.0, 2.0])
    out = bessel.bessel_j(1, xs)
    assert out.shape == xs.shape
    assert out[1] == pytest.approx(bessel.bessel_j(1, 1.0))
