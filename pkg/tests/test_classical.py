import math

import numpy as np
import pytest

from pdmosc import classical
from pdmosc.classical import ModelParams, SingularTrajectoryError
from oracles import trajectory_x, trajectory_xdot, trajectory_xddot

FIG1 = ModelParams(lam=1.0, c1=1.0, c2=-5.0)


def test_params_validation():
    with pytest.raises(ValueError):
        ModelParams(lam=1.0, c1=0.0)
    with pytest.raises(ValueError):
        ModelParams(lam=1.0, c1=-2.0)
    with pytest.raises(ValueError):
        ModelParams(lam=1.0, hbar=0.0)
    with pytest.raises(ValueError):
        ModelParams(lam=math.inf)


def test_exact_solution_examples():
    assert classical.exact_solution(5.0, FIG1) == pytest.approx(1.0, abs=1e-15)
    assert classical.exact_solution(0.0, FIG1) == pytest.approx(1.0 / math.sqrt(26.0), rel=1e-15)
    # temporally localized: decays toward zero for large |t|
    assert classical.exact_solution(1e6, FIG1) < 2e-6
    assert classical.exact_solution(-1e6, FIG1) < 2e-6


def test_exact_momentum_examples():
    assert classical.exact_momentum(5.0, FIG1) == pytest.approx(0.0, abs=1e-15)
    assert classical.exact_momentum(0.0, FIG1) == pytest.approx(10.0 * math.sqrt(26.0), rel=1e-15)


def test_energy_identity_along_closed_form():
    ts = np.linspace(-10.0, 10.0, 2001)
    xs = classical.exact_solution(ts, FIG1)
    ps = classical.exact_momentum(ts, FIG1)
    dev = np.abs(classical.hamiltonian(xs, ps, FIG1.lam) - FIG1.c1)
    assert np.max(dev) < 1e-12


def test_hamiltonian_examples():
    assert classical.hamiltonian(1.0, 0.0, 1.0) == 1.0
    assert classical.hamiltonian(1.0, 2.0, 0.5) == 1.5
    E, lam = 2.0, 0.5
    A = math.sqrt(E / lam)
    assert classical.hamiltonian(A, 0.0, lam) == pytest.approx(E, rel=1e-15)
    with pytest.raises(ValueError):
        classical.hamiltonian(0.0, 1.0, 1.0)


def test_eom_residual_from_analytic_derivatives():
    t = 1.0
    x = trajectory_x(t, 1.0, 1.0, -5.0)
    xd = trajectory_xdot(t, 1.0, 1.0, -5.0)
    xdd = trajectory_xddot(t, 1.0, 1.0, -5.0)
    assert abs(classical.eom_residual(x, xd, xdd, 1.0)) < 1e-10


def test_eom_residual_arithmetic():
    assert classical.eom_residual(1.0, 0.0, 0.0, 0.0) == 0.0
    assert classical.eom_residual(1.0, 1.0, 2.0, -1.0) == pytest.approx(-1.0, abs=1e-15)
    with pytest.raises(ValueError):
        classical.eom_residual(0.0, 1.0, 1.0, 1.0)


def test_integrator_matches_closed_form():
    x0 = classical.exact_solution(0.0, FIG1)
    v0 = classical.exact_momentum(0.0, FIG1) * x0**4 / 2.0
    traj = classical.integrate_eom(x0, v0, FIG1.lam, t_end=10.0, tol=1e-12)
    assert not traj.blew_up
    ts = np.array([s.t for s in traj])
    xs = np.array([s.x for s in traj])
    assert np.max(np.abs(xs - classical.exact_solution(ts, FIG1))) < 1e-8
    ps = np.array([s.p for s in traj])
    assert np.max(np.abs(classical.hamiltonian(xs, ps, FIG1.lam) - FIG1.c1)) < 1e-9


def test_integrator_blowup_recovers_singular_time():
    # lam = -1, c1 = 1, c2 = 0 blows up at the closed-form time t* = 1.
    # x(t) exists on |t| > 1 only, so start from the regular point t0 = 3 and
    # integrate backward toward the singularity; the event time is t* - t0.
    params = ModelParams(lam=-1.0, c1=1.0, c2=0.0)
    t_star = classical.singularity_time(params)
    assert t_star == pytest.approx(1.0, abs=1e-15)
    t0 = 3.0
    x0 = classical.exact_solution(t0, params)
    v0 = classical.exact_momentum(t0, params) * x0**4 / 2.0
    traj = classical.integrate_eom(x0, v0, params.lam, t_end=-2.5, tol=1e-10)
    assert traj.blew_up
    assert traj.singular_time is not None
    assert t0 + traj.singular_time == pytest.approx(t_star, abs=1e-6)


def test_trajectory_sequence_protocol():
    traj = classical.integrate_eom(1.0, 0.0, 1.0, t_end=1.0, tol=1e-9, n_samples=11)
    assert len(traj) == 11
    assert traj[0].t == 0.0
    assert all(isinstance(s.x, float) for s in traj)


def test_integrator_validation():
    with pytest.raises(ValueError):
        classical.integrate_eom(0.0, 1.0, 1.0, 1.0, 1e-9)
    with pytest.raises(ValueError):
        classical.integrate_eom(1.0, 1.0, 1.0, 1.0, 0.0)


def test_singularity_time_examples():
    assert classical.singularity_time(ModelParams(lam=-1.0, c1=1.0, c2=0.0)) == pytest.approx(1.0)
    assert classical.singularity_time(FIG1) is None
    assert classical.singularity_time(ModelParams(lam=-4.0, c1=4.0, c2=-5.0)) == pytest.approx(3.0)


def test_radicand_roots():
    params = ModelParams(lam=-1.0, c1=1.0, c2=0.0)
    roots = classical.radicand_roots(params)
    assert roots == pytest.approx((-1.0, 1.0))
    assert classical.radicand_roots(FIG1) is None
    for t in roots:
        assert abs(classical.radicand(t, params)) < 1e-14


def test_exact_solution_raises_near_singular_time():
    params = ModelParams(lam=-1.0, c1=1.0, c2=0.0)
    with pytest.raises(SingularTrajectoryError):
        classical.exact_solution(1.0, params)
    with pytest.raises(SingularTrajectoryError):
        classical.exact_solution(np.linspace(0.0, 5.0, 50), params)
    # regular piece of the same trajectory evaluates fine
    assert classical.exact_solution(3.0, params) == pytest.approx(1.0 / math.sqrt(8.0))


def test_localization_peak_and_monotone_decay():
    peak_t = -FIG1.c2 / math.sqrt(FIG1.c1)
    assert classical.exact_solution(peak_t, FIG1) == pytest.approx(
        math.sqrt(FIG1.c1 / FIG1.lam), rel=1e-15
    )
    left = classical.exact_solution(np.linspace(peak_t - 8.0, peak_t, 100), FIG1)
    right = classical.exact_solution(np.linspace(peak_t, peak_t + 8.0, 100), FIG1)
    assert np.all(np.diff(left) > 0.0)
    assert np.all(np.diff(right) < 0.0)


def test_classify_lambda_examples():
    assert classical.classify_lambda(FIG1, (0.0, 10.0)) == "bounded"
    singular = ModelParams(lam=-1.0, c1=1.0, c2=0.0)
    assert classical.classify_lambda(singular, (0.0, 10.0)) == "singular"
    assert classical.classify_lambda(singular, (2.0, 10.0)) == "bounded"
    with pytest.raises(ValueError):
        classical.classify_lambda(FIG1, (0.0, math.inf))


def test_classify_lambda_agrees_with_sign_scan():
    rng = np.random.default_rng(99)
    ts = np.linspace(0.0, 10.0, 10000)
    for _ in range(300):
        params = ModelParams(
            lam=float(rng.uniform(-2.0, 2.0)),
            c1=float(rng.uniform(0.1, 3.0)),
            c2=float(rng.uniform(-6.0, 6.0)),
        )
        brute = "singular" if np.min(classical.radicand(ts, params)) <= 0.0 else "bounded"
        assert classical.classify_lambda(params, (0.0, 10.0)) == brute


def test_phase_curve_turning_points_and_divergence():
    # turning points of the E = 0.5 curve at lam = 0.5 sit at x = +-1
    rows = classical.phase_curve(0.5, 0.5, [-1.0, 1.0])
    assert rows[:, 1] == pytest.approx([0.0, 0.0], abs=1e-12)
    rows = classical.phase_curve(1.0, 0.5, [1.0])
    assert rows[0, 1] == pytest.approx(math.sqrt(2.0), rel=1e-14)
    assert rows[0, 2] == pytest.approx(-math.sqrt(2.0), rel=1e-14)
    small = classical.phase_curve(1.0, 0.5, [1e-3])
    assert small[0, 1] > 1e5


def test_phase_curve_rejections():
    with pytest.raises(ValueError):
        classical.phase_curve(0.5, 0.5, [1.5])  # beyond the turning point
    with pytest.raises(ValueError):
        classical.phase_curve(0.5, 0.5, [0.0])
    with pytest.raises(ValueError):
        classical.phase_curve(-1.0, 0.5, [0.5])
