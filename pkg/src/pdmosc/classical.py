"""Classical dynamics of the singular-mass oscillator.

The model is H = x^4 p^2 / 4 + lam * x^2, i.e. a position-dependent mass
m(x) = 2 / x^4 (singular at the origin) in the potential V(x) = lam * x^2.
Its equation of motion  xdd - (2/x) xd^2 + lam x^5 = 0  integrates in closed
form to

    x(t) = 1 / sqrt(lam/c1 + (c2 + sqrt(c1) t)^2),

with first integral H = c1.  For lam > 0 the trajectory is temporally
localized (x -> 0 as t -> +-inf); for lam < 0 the radicand has real roots
and x blows up in finite time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

#: closed-form trajectories are only evaluated where the radicand exceeds
#: this floor, to avoid catastrophic cancellation next to a singular time
RADICAND_FLOOR = 1e-15

#: |x| beyond this declares a finite-time singularity during integration
BLOWUP_BOUND = 1e6


class SingularTrajectoryError(ValueError):
    """The trajectory radicand vanished inside the requested time range."""


@dataclass(frozen=True)
class ModelParams:
    """Coupling lam, Planck scale hbar, and the two integration constants.

    c1 is the first integral (total energy) and must be positive; c2 fixes
    the time of closest approach to the origin of the radicand.
    """

    lam: float
    hbar: float = 1.0
    c1: float = 1.0
    c2: float = 0.0

    def __post_init__(self):
        for name in ("lam", "hbar", "c1", "c2"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.c1 <= 0.0:
            raise ValueError(f"c1 must be positive (it is the total energy), got {self.c1}")
        if self.hbar <= 0.0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")


@dataclass(frozen=True)
class ClassicalState:
    t: float
    x: float
    p: float


@dataclass(frozen=True)
class Trajectory:
    """Immutable integration result; iterates over its states."""

    states: tuple[ClassicalState, ...]
    blew_up: bool = False
    singular_time: float | None = None

    def __len__(self):
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def __getitem__(self, i):
        return self.states[i]


def radicand(t, params: ModelParams):
    """lam/c1 + (c2 + sqrt(c1) t)^2, the quantity under the trajectory root."""
    w = params.c2 + math.sqrt(params.c1) * np.asarray(t, dtype=float)
    out = params.lam / params.c1 + w * w
    return float(out) if np.ndim(t) == 0 else out


def radicand_roots(params: ModelParams) -> tuple[float, float] | None:
    """Both real roots (t_minus, t_plus) of the radicand, or None if lam > 0.

    For lam = 0 the double root is returned twice.
    """
    if params.lam > 0.0:
        return None
    rc1 = math.sqrt(params.c1)
    half = math.sqrt(-params.lam / params.c1)
    return ((-half - params.c2) / rc1, (half - params.c2) / rc1)


def exact_solution(t, params: ModelParams):
    """Closed-form x(t); strictly positive wherever it is defined."""
    q = radicand(t, params)
    if np.any(np.asarray(q) <= RADICAND_FLOOR):
        raise SingularTrajectoryError(
            f"radicand <= {RADICAND_FLOOR:g} in the requested range "
            f"(singular roots at {radicand_roots(params)})"
        )
    out = 1.0 / np.sqrt(q)
    return float(out) if np.ndim(t) == 0 else out


def exact_momentum(t, params: ModelParams):
    """Canonical momentum p(t) = 2 xd / x^4 along the closed-form trajectory."""
    q = radicand(t, params)
    if np.any(np.asarray(q) <= RADICAND_FLOOR):
        raise SingularTrajectoryError(
            f"radicand <= {RADICAND_FLOOR:g} in the requested range "
            f"(singular roots at {radicand_roots(params)})"
        )
    rc1 = math.sqrt(params.c1)
    w = params.c2 + rc1 * np.asarray(t, dtype=float)
    out = -2.0 * rc1 * w * np.sqrt(q)
    return float(out) if np.ndim(t) == 0 else out


def hamiltonian(x, p, lam: float):
    """H(x, p) = x^4 p^2 / 4 + lam x^2.  The model excludes x = 0."""
    xa = np.asarray(x, dtype=float)
    if np.any(xa == 0.0):
        raise ValueError("x = 0 is outside the model domain (mass 2/x^4 is singular)")
    out = xa**4 * np.asarray(p, dtype=float) ** 2 / 4.0 + lam * xa**2
    return float(out) if np.ndim(x) == 0 else out


def eom_residual(x: float, xdot: float, xddot: float, lam: float) -> float:
    """xdd - (2/x) xd^2 + lam x^5; zero along true trajectories."""
    if x == 0.0:
        raise ValueError("equation of motion is singular at x = 0")
    return xddot - 2.0 * xdot**2 / x + lam * x**5


def singularity_time(params: ModelParams) -> float | None:
    """Finite blow-up time (sqrt(|lam|/c1) - c2)/sqrt(c1) for lam < 0.

    Returns None for lam >= 0 (temporally localized trajectory).  The
    radicand actually vanishes at two times; this closed form selects the
    later root t_plus, the conventional choice when c1, c2 > 0.  Use
    :func:`radicand_roots` when both are needed.
    """
    if params.lam >= 0.0:
        return None
    return (math.sqrt(-params.lam / params.c1) - params.c2) / math.sqrt(params.c1)


def classify_lambda(params: ModelParams, t_window: tuple[float, float]) -> str:
    """Classify a parameter set as "bounded" or "singular" on a time window.

    "singular" means the radicand vanishes or goes negative somewhere inside
    the window, i.e. the window meets the interval between the two radicand
    roots.  Since the radicand is an upward parabola in t its minimum on the
    window is attained at the vertex -c2/sqrt(c1) when that lies inside, at
    an endpoint otherwise; this reproduces a brute-force sign scan exactly.
    """
    t0, t1 = float(t_window[0]), float(t_window[1])
    if not (math.isfinite(t0) and math.isfinite(t1)):
        raise ValueError("t_window must be finite")
    if t1 < t0:
        t0, t1 = t1, t0
    vertex = -params.c2 / math.sqrt(params.c1)
    candidates = [t0, t1]
    if t0 <= vertex <= t1:
        candidates.append(vertex)
    q_min = min(radicand(t, params) for t in candidates)
    return "singular" if q_min <= 0.0 else "bounded"


def phase_curve(E: float, lam: float, x_grid) -> np.ndarray:
    """Momentum branches p = +-sqrt(4E/x^4 - 4 lam/x^2) on a grid.

    Returns an (N, 3) array of rows (x, p_plus, p_minus).  Every grid point
    must satisfy 0 < |x| <= A with A = sqrt(E/lam); p vanishes exactly at
    the turning points +-A.
    """
    if E <= 0.0 or lam <= 0.0:
        raise ValueError("phase_curve requires E > 0 and lam > 0")
    xs = np.asarray(x_grid, dtype=float)
    amp = math.sqrt(E / lam)
    if np.any(xs == 0.0):
        raise ValueError("x = 0 is outside the model domain")
    if np.any(np.abs(xs) > amp * (1.0 + 1e-12)):
        bad = xs[np.abs(xs) > amp * (1.0 + 1e-12)]
        raise ValueError(f"grid points outside the turning points +-{amp:g}: {bad[:3]}")
    rad = 4.0 * E / xs**4 - 4.0 * lam / xs**2
    p = np.sqrt(np.maximum(rad, 0.0))  # clamp roundoff at |x| = A
    return np.column_stack([xs, p, -p])


def integrate_eom(
    x0: float,
    xdot0: float,
    lam: float,
    t_end: float,
    tol: float,
    n_samples: int = 1001,
    blowup_bound: float = BLOWUP_BOUND,
) -> Trajectory:
    """Adaptive Runge-Kutta integration of the equation of motion.

    Integrates from t = 0 to t_end (negative t_end integrates backward)
    with local error tolerance tol, sampling n_samples points uniformly.
    The run terminates early, with ``blew_up`` set and the reached time in
    ``singular_time``, when |x| crosses blowup_bound or the step collapses;
    this is the expected outcome for lam < 0 trajectories heading into the
    finite-time singularity.
    """
    if x0 == 0.0:
        raise ValueError("x0 = 0 is outside the model domain")
    if tol <= 0.0:
        raise ValueError("tol must be positive")

    def rhs(t, y):
        x, v = y
        return (v, 2.0 * v * v / x - lam * x**5)

    def blowup(t, y):
        return abs(y[0]) - blowup_bound

    blowup.terminal = True

    t_eval = np.linspace(0.0, t_end, n_samples)
    sol = solve_ivp(
        rhs,
        (0.0, t_end),
        (x0, xdot0),
        method="DOP853",
        t_eval=t_eval,
        rtol=tol,
        atol=tol,
        events=blowup,
        dense_output=False,
    )
    ts = list(sol.t)
    xs = list(sol.y[0])
    vs = list(sol.y[1])

    blew_up = False
    singular_time = None
    if sol.status == 1 and len(sol.t_events[0]):
        blew_up = True
        singular_time = float(sol.t_events[0][0])
        ts.append(singular_time)
        xs.append(float(sol.y_events[0][0][0]))
        vs.append(float(sol.y_events[0][0][1]))
    elif sol.status == -1:
        # integrator step collapse: treat as blow-up at the last reached time
        blew_up = True
        singular_time = float(ts[-1]) if ts else 0.0

    states = tuple(
        ClassicalState(t=float(t), x=float(x), p=float(2.0 * v / x**4))
        for t, x, v in zip(ts, xs, vs)
    )
    return Trajectory(states=states, blew_up=blew_up, singular_time=singular_time)
