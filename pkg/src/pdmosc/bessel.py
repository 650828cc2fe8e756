"""Bessel-function kernel shared by every other module.

Evaluations of J_nu and Y_nu (real order nu >= 0) are delegated to the
cephes/AMOS routines behind :mod:`scipy.special`; derivatives use the
two-term recurrence J'_nu = (J_{nu-1} - J_{nu+1}) / 2 and its Y analogue.
Zeros of integer-order J_n are located here with a rightward scan plus a
safeguarded Newton polish, so the zero finder does not share code with any
library zero table.

Accuracy is guaranteed (relative error <= 1e-10 away from zeros) inside the
box x <= 1e3, nu <= 50.  Outside the box the functions still return
best-effort values but emit :class:`AccuracyLossWarning`.
"""

from __future__ import annotations

import warnings

import numpy as np
from scipy import special as _sp

#: guaranteed-accuracy box
ORDER_GUARANTEED_MAX = 50.0
ARGUMENT_GUARANTEED_MAX = 1.0e3

#: absolute accuracy of bessel_zero results
ZERO_ABS_TOL = 1e-12


class AccuracyLossWarning(UserWarning):
    """Evaluation left the guaranteed-accuracy box (x <= 1e3, nu <= 50)."""


class ZeroRefinementError(RuntimeError):
    """Zero search failed to bracket or converge.

    Carries the last bracket examined in :attr:`bracket` for diagnostics.
    """

    def __init__(self, message: str, bracket: tuple[float, float] | None = None):
        super().__init__(message)
        self.bracket = bracket


def _check_order(nu: float) -> float:
    nu = float(nu)
    if not np.isfinite(nu) or nu < 0.0:
        raise ValueError(f"Bessel order must be finite and non-negative, got {nu!r}")
    return nu


def _maybe_warn(nu: float, x) -> None:
    if nu > ORDER_GUARANTEED_MAX or np.any(np.asarray(x) > ARGUMENT_GUARANTEED_MAX):
        warnings.warn(
            "evaluation outside the guaranteed-accuracy box "
            f"(x <= {ARGUMENT_GUARANTEED_MAX:g}, nu <= {ORDER_GUARANTEED_MAX:g}); "
            "result is best effort",
            AccuracyLossWarning,
            stacklevel=3,
        )


def _as_result(x_in, out):
    arr = np.asarray(out)
    return float(arr) if np.ndim(x_in) == 0 else arr


def bessel_j(nu: float, x) -> float:
    """J_nu(x) for x >= 0.

    J_nu(0) = 0 for nu > 0 and J_0(0) = 1.  Negative arguments are a domain
    error: callers that need x < 0 are expected to apply the parity relation
    J_n(-z) = (-1)^n J_n(z) explicitly.
    """
    nu = _check_order(nu)
    xa = np.asarray(x, dtype=float)
    if np.any(xa < 0.0):
        raise ValueError("bessel_j requires x >= 0; map negative arguments via parity")
    _maybe_warn(nu, xa)
    return _as_result(x, _sp.jv(nu, xa))


def bessel_y(nu: float, x) -> float:
    """Y_nu(x) for x > 0.

    Diverges to -inf as x -> 0+ for every nu >= 0; the returned values grow
    without bound there, and x <= 0 itself is a domain error.
    """
    nu = _check_order(nu)
    xa = np.asarray(x, dtype=float)
    if np.any(xa <= 0.0):
        raise ValueError("bessel_y requires x > 0 (logarithmic/pole divergence at 0)")
    _maybe_warn(nu, xa)
    return _as_result(x, _sp.yv(nu, xa))


def bessel_j_prime(nu: float, x) -> float:
    """dJ_nu/dx via (J_{nu-1}(x) - J_{nu+1}(x)) / 2, x > 0."""
    nu = _check_order(nu)
    xa = np.asarray(x, dtype=float)
    if np.any(xa <= 0.0):
        raise ValueError("bessel_j_prime requires x > 0")
    _maybe_warn(nu, xa)
    return _as_result(x, 0.5 * (_sp.jv(nu - 1.0, xa) - _sp.jv(nu + 1.0, xa)))


def bessel_y_prime(nu: float, x) -> float:
    """dY_nu/dx via (Y_{nu-1}(x) - Y_{nu+1}(x)) / 2, x > 0."""
    nu = _check_order(nu)
    xa = np.asarray(x, dtype=float)
    if np.any(xa <= 0.0):
        raise ValueError("bessel_y_prime requires x > 0")
    _maybe_warn(nu, xa)
    return _as_result(x, 0.5 * (_sp.yv(nu - 1.0, xa) - _sp.yv(nu + 1.0, xa)))


def mcmahon_zero_estimate(n: int, N: int) -> float:
    """Leading McMahon approximation (N + n/2 - 1/4) * pi for j_{n,N}.

    Overestimates the true zero for n >= 1, so it doubles as an upper bound
    for the scan in :func:`bessel_zero`.
    """
    return (N + 0.5 * n - 0.25) * np.pi


def bessel_zero(n: int, N: int) -> float:
    """N-th positive zero j_{n,N} of J_n for integer n >= 1, N >= 1.

    Brackets the zero by scanning rightward from x = n in unit steps
    (consecutive zeros of J_n are more than pi apart for n >= 1, so a unit
    step cannot straddle two of them), counting sign changes up to the N-th.
    The bracket is then polished by Newton iteration with bisection fallback
    whenever an iterate leaves the bracket.  Absolute accuracy ~1e-12.
    """
    if int(n) != n or n < 1:
        raise ValueError(f"integer order n >= 1 required, got {n!r}")
    if int(N) != N or N < 1:
        raise ValueError(f"zero index N >= 1 required, got {N!r}")
    n, N = int(n), int(N)

    # J_n(x) > 0 on (0, j_{n,1}); scan terminates before the McMahon bound.
    x_lo = float(n) if n >= 1 else 0.5
    f_lo = _sp.jv(n, x_lo)
    x_max = mcmahon_zero_estimate(n, N) + 2.0
    crossings = 0
    bracket = None
    while x_lo < x_max:
        x_hi = x_lo + 1.0
        f_hi = _sp.jv(n, x_hi)
        if f_hi == 0.0:
            crossings += 1
            if crossings == N:
                return x_hi
            x_lo, f_lo = x_hi + 1e-9, _sp.jv(n, x_hi + 1e-9)
            continue
        if f_lo * f_hi < 0.0:
            crossings += 1
            if crossings == N:
                bracket = (x_lo, x_hi)
                break
        x_lo, f_lo = x_hi, f_hi
    if bracket is None:
        raise ZeroRefinementError(
            f"failed to bracket zero {N} of J_{n} while scanning up to {x_max:.3f}",
            bracket=(float(n), x_max),
        )

    a, b = bracket
    fa = _sp.jv(n, a)
    x = 0.5 * (a + b)
    for _ in range(100):
        f = _sp.jv(n, x)
        if f == 0.0:
            return x
        # maintain the sign-change bracket
        if fa * f < 0.0:
            b = x
        else:
            a, fa = x, f
        df = 0.5 * (_sp.jv(n - 1, x) - _sp.jv(n + 1, x))
        step = f / df if df != 0.0 else np.inf
        x_new = x - step
        if not (a < x_new < b):
            x_new = 0.5 * (a + b)  # bisection fallback
        if abs(x_new - x) < ZERO_ABS_TOL:
            return x_new
        x = x_new
    raise ZeroRefinementError(
        f"Newton refinement for zero {N} of J_{n} did not converge",
        bracket=(a, b),
    )
