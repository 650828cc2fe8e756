"""Quantum treatment of the singular-mass oscillator.

The kinetic term of H = p^2/(2m) + lam x^2 with m(x) = 2/x^4 admits a
family of operator orderings  (1/2) sum_i w_i m^{a_i} p m^{b_i} p m^{g_i}
with a_i + b_i + g_i = -1 and sum w_i = 1.  For a single (generally
non-Hermitian) term the wave equation becomes

    psi'' + 4(1 + a - g)/x psi'
          + [4E/(hbar^2 x^4) - (16 a g + 12 g + 4 lam/hbar^2)/x^2] psi = 0,

which the substitutions psi = x^d phi, g = -1/(2x), tau = (4 sqrt(E)/hbar) g
with d = 2g - 2a - 3/2 map onto Bessel's equation of order

    nu^2 = s^2 + 4 lam / hbar^2,      s = 2a + 2g + 3/2.

Boundedness at infinity and at the essential singularity x = 0 forces d = 0
and the first-kind solution; matching parity across the origin then forces
nu to a positive integer n, so the *coupling* is quantized,

    lam_n = (n^2 - s^2) hbar^2 / 4,

while the energy E stays continuous.  Restricting the motion to |x| >= eps
("box" regularization) discretizes E through the zeros of J_n instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special as _sp
from scipy.integrate import quad

from .bessel import bessel_j, bessel_zero
from .reporting import VerificationReport, residual_report

CONSTRAINT_TOL = 1e-12

#: default grid for residual-style checks: Chebyshev points on [0.2, 10],
#: dense enough to resolve the fastest oscillation for E <= 4, hbar >= 0.5
RESIDUAL_GRID_RANGE = (0.2, 10.0)
RESIDUAL_GRID_SIZE = 400

#: nu must be within this distance of an integer to be parity-admissible
PARITY_INT_TOL = 1e-9


class ComplexOrderError(ValueError):
    """nu^2 < 0: attractive inverse-square regime, outside this model's scope."""


class QuadratureFailure(RuntimeError):
    """Oscillatory overlap quadrature did not converge."""


# ---------------------------------------------------------------------------
# ordering schemes


@dataclass(frozen=True)
class OrderingTerm:
    w: float
    alpha: float
    beta: float
    gamma: float


@dataclass(frozen=True)
class OrderingScheme:
    """Weighted multi-term ordering; validated data type only."""

    terms: tuple[OrderingTerm, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise ValueError("OrderingScheme needs at least one term")

    @property
    def alpha_bar(self) -> float:
        return sum(t.w * t.alpha for t in self.terms)

    @property
    def gamma_bar(self) -> float:
        return sum(t.w * t.gamma for t in self.terms)

    @property
    def alphagamma_bar(self) -> float:
        return sum(t.w * t.alpha * t.gamma for t in self.terms)


def validate_ordering(scheme: OrderingScheme) -> VerificationReport:
    """Check sum(w) = 1 and alpha + beta + gamma = -1 for every term."""
    weight_dev = abs(sum(t.w for t in scheme.terms) - 1.0)
    worst = weight_dev
    notes = []
    if weight_dev > CONSTRAINT_TOL:
        notes.append(f"weights sum to 1{weight_dev:+.3e}")
    for i, t in enumerate(scheme.terms):
        dev = abs(t.alpha + t.beta + t.gamma + 1.0)
        if dev > CONSTRAINT_TOL:
            notes.append(f"term {i}: alpha+beta+gamma = -1{dev:+.3e}")
        worst = max(worst, dev)
    return residual_report(
        check_id="ordering_constraints",
        measured=worst,
        tolerance=CONSTRAINT_TOL,
        provenance="TRIVIAL",
        notes="; ".join(notes) if notes else "all constraints hold",
    )


@dataclass(frozen=True)
class SingleTermOrdering:
    """One kinetic-term ordering m^alpha1 p m^beta1 p m^gamma1."""

    alpha1: float
    beta1: float
    gamma1: float

    def __post_init__(self):
        if abs(self.alpha1 + self.beta1 + self.gamma1 + 1.0) > CONSTRAINT_TOL:
            raise ValueError(
                "ordering constraint alpha1 + beta1 + gamma1 = -1 violated: "
                f"{self.alpha1} + {self.beta1} + {self.gamma1} != -1"
            )

    @classmethod
    def from_alpha_gamma(cls, alpha1: float, gamma1: float) -> "SingleTermOrdering":
        return cls(alpha1=alpha1, beta1=-1.0 - alpha1 - gamma1, gamma1=gamma1)

    @property
    def eta(self) -> float:
        """Similarity exponent: H_her = m^eta H m^-eta with 2 eta = gamma1 - alpha1."""
        return 0.5 * (self.gamma1 - self.alpha1)

    @property
    def d_bessel(self) -> float:
        """Prefactor exponent 2 gamma1 - 2 alpha1 - 3/2 of the Bessel reduction."""
        return 2.0 * self.gamma1 - 2.0 * self.alpha1 - 1.5

    @property
    def d_pct(self) -> float:
        """Prefactor exponent 2 gamma1 - 2 alpha1 - 1 of the constant-mass reduction."""
        return 2.0 * self.gamma1 - 2.0 * self.alpha1 - 1.0

    @property
    def s(self) -> float:
        """The bracket 2 alpha1 + 2 gamma1 + 3/2 entering nu^2 = s^2 + 4 lam/hbar^2."""
        return 2.0 * self.alpha1 + 2.0 * self.gamma1 + 1.5


# ---------------------------------------------------------------------------
# wave equation and its Bessel reduction


@dataclass(frozen=True)
class OdeCoefficients:
    """psi'' + first_order/x psi' + (inv_x4/x^4 - inv_x2/x^2) psi = 0."""

    first_order: float
    inv_x2: float
    inv_x4: float


def ode_coefficients(
    ordering: SingleTermOrdering, lam: float, E: float, hbar: float
) -> OdeCoefficients:
    """Coefficients of the single-term-ordered wave equation."""
    a, g = ordering.alpha1, ordering.gamma1
    return OdeCoefficients(
        first_order=4.0 * (1.0 + a - g),
        inv_x2=16.0 * a * g + 12.0 * g + 4.0 * lam / hbar**2,
        inv_x4=4.0 * E / hbar**2,
    )


def nu_from_params(ordering: SingleTermOrdering, lam: float, hbar: float) -> float:
    """Positive Bessel order nu = sqrt(s^2 + 4 lam / hbar^2)."""
    nu_sq = ordering.s**2 + 4.0 * lam / hbar**2
    if nu_sq < 0.0:
        raise ComplexOrderError(
            f"nu^2 = {nu_sq:.6g} < 0 for s = {ordering.s:.6g}, lam = {lam:.6g}: "
            "complex order (attractive inverse-square regime) is out of scope"
        )
    return math.sqrt(nu_sq)


def lambda_quantized(n: int, ordering: SingleTermOrdering, hbar: float) -> float:
    """Quantized coupling lam = (n^2 - s^2) hbar^2 / 4, n = 1, 2, 3, ...

    Negative values (n < |s|) are legitimate outputs here; nothing in the
    quantization argument requires lam > 0.
    """
    if int(n) != n or n < 1:
        raise ValueError(f"quantum number n must be a positive integer, got {n!r}")
    return (n * n - ordering.s**2) * hbar**2 / 4.0


@dataclass(frozen=True)
class TransformChain:
    """Substitution chain mapping the wave equation onto Bessel's equation.

    d is the psi = x^d phi exponent; scale = 2 sqrt(E)/hbar so that
    tau(x) = -scale/x.  For x > 0 the raw tau is negative; evaluation uses
    the equivalent positive argument scale/|x| (J_n(-z) = (-1)^n J_n(z) for
    the integer orders that survive the parity condition), which
    :func:`eigenfunction` applies through an explicit parity factor.
    """

    d: float
    scale: float

    def g(self, x):
        return -0.5 / np.asarray(x, dtype=float)

    def tau(self, x):
        return 2.0 * self.scale * self.g(x)

    def bessel_argument(self, x):
        return self.scale / np.abs(np.asarray(x, dtype=float))


def transform_chain(ordering: SingleTermOrdering, E: float, hbar: float) -> TransformChain:
    if E <= 0.0:
        raise ValueError(f"E must be positive, got {E}")
    return TransformChain(d=ordering.d_bessel, scale=2.0 * math.sqrt(E) / hbar)


def general_solution(x, nu: float, E: float, C: float, D: float, d: float, hbar: float):
    """x^d [C J_nu(2 sqrt(E)/(hbar x)) + D Y_nu(2 sqrt(E)/(hbar x))] for x > 0.

    The half-line x < 0 is handled by :func:`eigenfunction` through parity.
    No boundary analysis happens here: D != 0 produces a solution that
    grows without bound as x -> infinity, and that is exactly what the
    boundary-selection checks probe.
    """
    xa = np.asarray(x, dtype=float)
    if np.any(xa <= 0.0):
        raise ValueError("general_solution is defined on x > 0; use parity for x < 0")
    arg = 2.0 * math.sqrt(E) / (hbar * xa)
    out = C * _sp.jv(nu, arg)
    if D != 0.0:
        out = out + D * _sp.yv(nu, arg)
    out = xa**d * out
    return float(out) if np.ndim(x) == 0 else out


# ---------------------------------------------------------------------------
# bound states on the full line


@dataclass(frozen=True)
class ContinuumState:
    """Bound state psi_n with continuous energy E and quantized coupling.

    The delta-normalization constant is not a finite number, so the stored
    amplitude is user-chosen (default 1); :func:`overlap_kernel` exposes the
    operational content of delta normalization.
    """

    n: int
    E: float
    amplitude: float = 1.0
    normalization: str = "delta"

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer (nu = 0 is excluded), got {self.n!r}")
        if self.E <= 0.0:
            raise ValueError(f"E must be positive, got {self.E}")


def eigenfunction(x, state: ContinuumState, hbar: float = 1.0, x_floor: float | None = None):
    """psi_n(x) = C J_n(2 sqrt(E)/(hbar |x|)) with parity factor (-1)^n for x < 0.

    Below |x| = x_floor (default 1e-3 * hbar / sqrt(E)) the Bessel factor
    oscillates infinitely fast; the squeeze-theorem envelope
    C sqrt(hbar |x| / (pi sqrt(E))) is returned there instead, signed so the
    parity relation psi(-x) = (-1)^n psi(x) is preserved exactly.  x = 0 is
    excluded (the limit is 0 by the squeeze argument).
    """
    if x_floor is None:
        x_floor = 1e-3 * hbar / math.sqrt(state.E)
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(xa == 0.0):
        raise ValueError("x = 0 is excluded; psi -> 0 there by the squeeze bound")
    ax = np.abs(xa)
    sign = np.where(xa > 0.0, 1.0, (-1.0) ** state.n)
    scale = 2.0 * math.sqrt(state.E) / hbar
    safe = ax >= x_floor
    out = np.empty_like(ax)
    out[safe] = _sp.jv(state.n, scale / ax[safe])
    out[~safe] = np.sqrt(hbar * ax[~safe] / (math.pi * math.sqrt(state.E)))
    out = state.amplitude * sign * out
    return float(out[0]) if np.ndim(x) == 0 else out.reshape(np.shape(x))


def _jn_signed(order: int, x):
    """J_order for possibly negative integer order: J_{-m} = (-1)^m J_m."""
    if order >= 0:
        return _sp.jv(order, x)
    return (-1.0) ** (-order) * _sp.jv(-order, x)


def ode_residual(
    state: ContinuumState,
    ordering: SingleTermOrdering,
    lam: float,
    hbar: float,
    grid=None,
) -> float:
    """Max absolute wave-equation residual of psi_n over a grid.

    Derivatives of psi = C J_n(a/x), a = 2 sqrt(E)/hbar, are taken
    analytically through the recurrence (no finite differences):
    J' = (J_{n-1} - J_{n+1})/2 applied twice gives
    J'' = (J_{n-2} - 2 J_n + J_{n+2})/4.  The residual is below 1e-8
    exactly when the ordering reduces cleanly (gamma1 - alpha1 = 3/4, so
    the x^d prefactor is absent) *and* lam sits at its quantized value; it
    is insensitive to E, which is the continuous-energy statement at the
    level of the differential equation.
    """
    if grid is None:
        lo, hi = RESIDUAL_GRID_RANGE
        k = np.arange(RESIDUAL_GRID_SIZE)
        grid = 0.5 * (lo + hi) + 0.5 * (hi - lo) * np.cos((2 * k + 1) * np.pi / (2 * RESIDUAL_GRID_SIZE))
    xs = np.asarray(grid, dtype=float)
    if np.any(xs <= 0.0):
        raise ValueError("residual grid must be strictly positive")

    n = state.n
    a = 2.0 * math.sqrt(state.E) / hbar
    u = a / xs
    j = _sp.jv(n, u)
    jp = 0.5 * (_jn_signed(n - 1, u) - _sp.jv(n + 1, u))
    jpp = 0.25 * (_jn_signed(n - 2, u) - 2.0 * j + _sp.jv(n + 2, u))

    # chain rule for psi(x) = C J(a/x):  u' = -a/x^2,  u'' = 2a/x^3
    psi = state.amplitude * j
    psi_p = state.amplitude * jp * (-a / xs**2)
    psi_pp = state.amplitude * (jpp * (a / xs**2) ** 2 + jp * (2.0 * a / xs**3))

    c = ode_coefficients(ordering, lam, state.E, hbar)
    res = psi_pp + c.first_order / xs * psi_p + (c.inv_x4 / xs**4 - c.inv_x2 / xs**2) * psi
    return float(np.max(np.abs(res)))


# ---------------------------------------------------------------------------
# constant-mass (point-canonical) reduction


@dataclass(frozen=True)
class PctReduction:
    """phi_gg + [k_squared - strength/g^2] phi = 0 in the g = -1/(2x) variable."""

    k_squared: float
    strength: float
    residual_max: float


def pct_reduce(
    ordering: SingleTermOrdering, lam: float, E: float, hbar: float, grid=None
) -> PctReduction:
    """Reduce to the constant-mass equation with an inverse-square potential.

    Choosing the prefactor exponent d_pct = 2 gamma1 - 2 alpha1 - 1 removes
    the first-derivative term entirely, leaving

        phi_gg + [16 E/hbar^2 - strength / g^2] phi = 0,
        strength = 4 lam/hbar^2 + (2a+2g+2)(2a+2g+1),

    with strength + 1/4 = nu^2 identically.  The reduction is verified on a
    grid: phi(g) = x^{d_bessel - d_pct} J_nu(2 sqrt(E)/(hbar x)) expressed in
    t = |g| is sqrt(2t) J_nu(2 a t), whose analytic derivatives must satisfy
    the equation; residual_max reports the worst violation.
    """
    if E <= 0.0:
        raise ValueError(f"E must be positive, got {E}")
    two_ag = 2.0 * ordering.alpha1 + 2.0 * ordering.gamma1
    k_squared = 16.0 * E / hbar**2
    strength = 4.0 * lam / hbar**2 + (two_ag + 2.0) * (two_ag + 1.0)
    nu = nu_from_params(ordering, lam, hbar)

    if grid is None:
        grid = np.linspace(0.05, 2.5, 200)
    t = np.asarray(grid, dtype=float)
    if np.any(t <= 0.0):
        raise ValueError("reduction grid must be strictly positive in |g|")

    a = 2.0 * math.sqrt(E) / hbar
    u = 2.0 * a * t
    j = _sp.jv(nu, u)
    jp = 0.5 * (_sp.jv(nu - 1.0, u) - _sp.jv(nu + 1.0, u))
    jpp = 0.25 * (_sp.jv(nu - 2.0, u) - 2.0 * j + _sp.jv(nu + 2.0, u))

    rt = np.sqrt(2.0 * t)
    phi = rt * j
    phi_pp = (
        -0.25 * rt / t**2 * j + (2.0 * a) * rt / t * jp + (2.0 * a) ** 2 * rt * jpp
    )
    res = phi_pp + (k_squared - strength / t**2) * phi
    return PctReduction(
        k_squared=k_squared, strength=strength, residual_max=float(np.max(np.abs(res)))
    )


# ---------------------------------------------------------------------------
# parity and normalization


@dataclass(frozen=True)
class ParityMatch:
    """Admissibility of a Bessel order under parity matching at the origin.

    relation is the sign in C_tilde = relation * C: -1 for odd integer nu,
    +1 for even, None when nu is not a positive integer (inadmissible).
    """

    admissible: bool
    relation: int | None


def parity_match(nu: float) -> ParityMatch:
    if nu <= 0.0:
        return ParityMatch(admissible=False, relation=None)
    nearest = round(nu)
    if nearest < 1 or abs(nu - nearest) > PARITY_INT_TOL:
        return ParityMatch(admissible=False, relation=None)
    return ParityMatch(admissible=True, relation=-1 if nearest % 2 else 1)


def overlap_kernel(n: int, E: float, E_prime: float, R: float, hbar: float = 1.0) -> float:
    """Truncated normalization integral 2^{3/4} int_0^R rho J_n J_n drho.

    The integrand pairs J_n(2 sqrt(E) rho/hbar) with J_n(2 sqrt(E') rho/hbar).
    For E = E' the value grows linearly in R without bound -- the overlap
    concentrates into a Dirac delta, which is why no finite normalization
    constant exists on the full line.  For E != E' it stays bounded and
    oscillatory.
    """
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if E <= 0.0 or E_prime <= 0.0 or R < 0.0:
        raise ValueError("E, E' must be positive and R non-negative")
    if R == 0.0:
        return 0.0
    ka = 2.0 * math.sqrt(E) / hbar
    kb = 2.0 * math.sqrt(E_prime) / hbar

    value, err = quad(
        lambda r: r * _sp.jv(n, ka * r) * _sp.jv(n, kb * r),
        0.0,
        R,
        limit=max(200, int(10 * R)),
        epsabs=1e-10,
        epsrel=1e-10,
    )
    if err > 1e-6 * max(1.0, abs(value)):
        raise QuadratureFailure(
            f"overlap quadrature error {err:.2e} too large at R={R}, n={n}"
        )
    return 2.0**0.75 * value


# ---------------------------------------------------------------------------
# box regularization


@dataclass(frozen=True)
class BoxState:
    """Normalizable state after excluding (-eps, eps) around the origin.

    energy = (hbar^2/4) j_{n,N}^2 eps^2 and norm_const = eps / J_{n+1}(j_{n,N});
    equivalently 2 sqrt(energy)/(hbar eps) = j_{n,N} exactly.
    """

    eps: float
    n: int
    N: int
    energy: float
    norm_const: float


def box_spectrum(n: int, N_max: int, eps: float, hbar: float = 1.0) -> list[BoxState]:
    """Discrete spectrum of the box-regularized problem for N = 1..N_max."""
    if eps <= 0.0:
        raise ValueError(f"eps must be positive, got {eps}")
    if int(N_max) != N_max or N_max < 1:
        raise ValueError(f"N_max must be a positive integer, got {N_max!r}")
    states = []
    for N in range(1, int(N_max) + 1):
        j = bessel_zero(n, N)
        energy = 0.25 * hbar**2 * j * j * eps * eps
        norm_const = eps / bessel_j(n + 1, j)
        states.append(BoxState(eps=eps, n=int(n), N=N, energy=energy, norm_const=norm_const))
    return states


def box_orthonormality(n: int, N: int, M: int, eps: float, hbar: float = 1.0) -> float:
    """Overlap 2 C_N C_M int_0^{1/eps} rho J_n(j_N eps rho) J_n(j_M eps rho) drho.

    Equals delta_{NM} within quadrature accuracy (Fourier-Bessel
    orthogonality on the interval fixed by the box radius).
    """
    jN = bessel_zero(n, N)
    jM = bessel_zero(n, M)
    cN = eps / bessel_j(n + 1, jN)
    cM = eps / bessel_j(n + 1, jM)
    value, err = quad(
        lambda r: r * _sp.jv(n, jN * eps * r) * _sp.jv(n, jM * eps * r),
        0.0,
        1.0 / eps,
        limit=400,
        epsabs=1e-13,
        epsrel=1e-13,
    )
    if err > 1e-9:
        raise QuadratureFailure(
            f"orthonormality quadrature error {err:.2e} too large (n={n}, N={N}, M={M})"
        )
    return 2.0 * cN * cM * value


# ---------------------------------------------------------------------------
# Hermitian ordering


def hermitian_wavefunction(x, n: int, E: float, C: float = 1.0, hbar: float = 1.0):
    """Similarity-transformed state C x^{-3/2} J_n(2 sqrt(E)/(hbar x)), x > 0.

    This is m^eta psi with eta = 3/8 for the cleanly reducing orderings
    (gamma1 - alpha1 = 3/4); the constant 2^{3/8} from m^eta = 2^{3/8} x^{-3/2}
    is folded into C.  Unlike psi itself, the x^{-3/2} prefactor beats the
    sqrt(x) squeeze envelope, so this function is singular at the origin:
    its local maxima grow like 1/x.  That growth is the reason only the
    non-Hermitian-ordered form yields bounded states.
    """
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if E <= 0.0:
        raise ValueError(f"E must be positive, got {E}")
    xa = np.asarray(x, dtype=float)
    if np.any(xa <= 0.0):
        raise ValueError("hermitian_wavefunction is defined on x > 0")
    out = C * xa**-1.5 * _sp.jv(n, 2.0 * math.sqrt(E) / (hbar * xa))
    return float(out) if np.ndim(x) == 0 else out


# 8th-order central stencils (offsets -4..+4)
_D1_COEFFS = np.array([1 / 280, -4 / 105, 1 / 5, -4 / 5, 0.0, 4 / 5, -1 / 5, 4 / 105, -1 / 280])
_D2_COEFFS = np.array(
    [-1 / 560, 8 / 315, -1 / 5, 8 / 5, -205 / 72, 8 / 5, -1 / 5, 8 / 315, -1 / 560]
)


def _stencil(values: np.ndarray, coeffs: np.ndarray, h: float, power: int) -> np.ndarray:
    half = len(coeffs) // 2
    inner = len(values) - 2 * half
    out = np.zeros(inner)
    for k, c in enumerate(coeffs):
        if c != 0.0:
            out += c * values[k : k + inner]
    return out / h**power


def _apply_ordered_operator(x, f, fp, fpp, alpha, beta, gamma, lam, hbar):
    """Apply (1/2) m^alpha p m^beta p m^gamma + V to sampled f.

    Expanded form (using alpha + beta + gamma = -1):
        -hbar^2/2 [ f''/m + (beta + 2 gamma) m'/m^2 f'
                    + gamma ((beta+gamma-1) m'^2/m^3 + m''/m^2) f ] + lam x^2 f
    with m = 2/x^4, m' = -8/x^5, m'' = 40/x^6.
    """
    m = 2.0 / x**4
    mp = -8.0 / x**5
    mpp = 40.0 / x**6
    kin = (
        fpp / m
        + (beta + 2.0 * gamma) * mp / m**2 * fp
        + gamma * ((beta + gamma - 1.0) * mp**2 / m**3 + mpp / m**2) * f
    )
    return -0.5 * hbar**2 * kin + lam * x**2 * f


def similarity_check(
    ordering: SingleTermOrdering,
    testfn,
    hbar: float = 1.0,
    lam: float = 0.0,
    grid: tuple[float, float, int] = (0.5, 5.0, 901),
) -> float:
    """Max discrepancy between H f and m^-eta H_her (m^eta f) on a grid.

    H is the single-term ordered operator; H_her the Hermitian one with both
    outer exponents (alpha1+gamma1)/2.  testfn is sampled on a uniform grid
    (with margin for the stencils) and differentiated by 8th-order central
    differences, so agreement to ~1e-6 on smooth test functions is the
    expected signature of the similarity relation.
    """
    lo, hi, npts = grid
    if npts < 32:
        raise ValueError("grid too coarse for the 8th-order stencils")
    h = (hi - lo) / (npts - 1)
    if lo - 4 * h <= 0.0:
        raise ValueError("grid (with stencil margin) must stay at positive x")
    xs = np.linspace(lo - 4 * h, hi + 4 * h, npts + 8)
    try:
        f = np.asarray(testfn(xs), dtype=float)
        if f.shape != xs.shape:
            raise TypeError
    except TypeError:
        f = np.array([float(testfn(x)) for x in xs])

    x_in = xs[4:-4]
    f_in = f[4:-4]
    f1 = _stencil(f, _D1_COEFFS, h, 1)
    f2 = _stencil(f, _D2_COEFFS, h, 2)
    lhs = _apply_ordered_operator(
        x_in, f_in, f1, f2, ordering.alpha1, ordering.beta1, ordering.gamma1, lam, hbar
    )

    eta = ordering.eta
    m_full = 2.0 / xs**4
    g_samples = m_full**eta * f
    g1 = _stencil(g_samples, _D1_COEFFS, h, 1)
    g2 = _stencil(g_samples, _D2_COEFFS, h, 2)
    half = 0.5 * (ordering.alpha1 + ordering.gamma1)
    her = _apply_ordered_operator(
        x_in, g_samples[4:-4], g1, g2, half, ordering.beta1, half, lam, hbar
    )
    rhs = (2.0 / x_in**4) ** (-eta) * her
    return float(np.max(np.abs(lhs - rhs)))
