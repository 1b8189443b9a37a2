"""Total Casimir potential and force scaling functions on the rectangle.

The potential decomposes into the strip part, a rho-independent
surface-corner part theta_sc(x), and the residual strip contribution,

    theta_total(x, rho) = theta_oo(x) + theta_sc(x)/rho + Psi(x, rho),

valid for rho >= 1; smaller aspect ratios go through the exchange symmetry
theta(x, rho) = rho^-2 theta(x rho, 1/rho).  The surface-corner part is
built at rho = 1 from the square symmetry, which turns the volume potential
into two one-dimensional integrals: a dilogarithm integral I1 over the
strip potential and an integral I2 over the strip force at unit aspect
ratio.  Both carry the corner-induced log divergence at x = 0, so the
potential itself is undefined there; the finite critical information lives
in the Casimir amplitude, one quarter of the log of the Dedekind eta
function.

The force scaling function is finite everywhere,

    vartheta_total(x, rho) = -theta_oo(x) + psi(x, rho)        (rho >= 1)

and for rho < 1 through the exchanged-direction expression built from the
strip force function and the combination x*theta_sc'(x), which stays finite
at x = 0 (it tends to -1/8, the corner log amplitude).  At the critical
point the force changes sign at the aspect ratio where the weight-two
Eisenstein series vanishes on the imaginary axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import quad, sigma, strip
from .quad import QuadratureSpec
from .specialfn import dilog, eisenstein_E2, log_dedekind_eta

__all__ = [
    "ScalingPoint",
    "CasimirSample",
    "Z_CRITICAL",
    "DEFAULT_ORDER",
    "integral_I1",
    "integral_I2",
    "theta_volume_rho1",
    "theta_sc",
    "x_dtheta_sc",
    "theta_total",
    "vartheta_total",
    "casimir_amplitude",
    "find_rho0",
    "lattice_to_scaling",
    "evaluate_sample",
]

Z_CRITICAL = math.sqrt(2.0) - 1.0
DEFAULT_ORDER = 8

I_SPEC = QuadratureSpec(rel_tol=1e-12, abs_tol=5e-12)


@dataclass(frozen=True)
class ScalingPoint:
    """Temperature scaling variable and aspect ratio of one system.

    The derived combinations x_volume = x sqrt(rho) and x_perp = x rho are
    the scaling variables tied to the geometric-mean length and to the
    perpendicular length.
    """

    x: float
    rho: float

    def __post_init__(self):
        if not (self.rho > 0.0 and math.isfinite(self.rho)):
            raise ValueError("aspect ratio must be positive and finite")

    @property
    def x_volume(self) -> float:
        return self.x * math.sqrt(self.rho)

    @property
    def x_perp(self) -> float:
        return self.x * self.rho


@dataclass(frozen=True)
class CasimirSample:
    """Full set of scaling-function values at one point."""

    point: ScalingPoint
    theta_total: float | None
    vartheta_total: float
    theta_sc: float
    psi_val: float
    Psi_val: float


@lru_cache(maxsize=None)
def _psi1(xi: float, N: int) -> float:
    """Strip force at unit aspect ratio, memoized over quadrature nodes."""
    return sigma.psi_strip(xi, 1.0, N)


@lru_cache(maxsize=None)
def _log_sigma(x: float, rho: float, N: int) -> float:
    return math.log(sigma.sigma_series(x, rho, N).value)


def integral_I1(x_vol: float, spec: QuadratureSpec = I_SPEC) -> float:
    """Dilogarithm integral over the strip potential.

    I1 = -(1/2pi) Int_{|x|}^inf dW (W^2-x^2)^{-1/2} Li2(-r(W) e^{-2W}) with
    r = (W-x)/(W+x), after the substitution W = sqrt(x^2+s^2).  Diverges
    logarithmically at x_vol = 0 (rejected); the jump across zero is twice
    Catalan's constant.  For x < 0 the integrand has an integrable squared
    log at s = 0, handled on (0, 1] in the variable s = e^{-u}.
    """
    if x_vol == 0.0:
        raise ValueError("logarithmically divergent at x_vol = 0")
    x = x_vol

    def integrand(s: np.ndarray) -> np.ndarray:
        s = np.asarray(s, dtype=float)
        omega = np.hypot(s, x)
        if x > 0.0:
            ratio = (s / (omega + x)) ** 2
        else:
            ratio = ((omega - x) / s) ** 2
        z = -ratio * np.exp(-2.0 * omega)
        return dilog(z) / omega

    half = QuadratureSpec(rel_tol=spec.rel_tol, abs_tol=0.5 * spec.abs_tol,
                          max_depth=spec.max_depth)
    tail = quad.integrate_finite(integrand, 1.0, abs(x) + 32.0, half)
    if x > 0.0:
        head = quad.integrate_finite(integrand, 0.0, 1.0, half)
    else:
        # map (0, 1] to [0, 52) via s = e^{-u}; the u^2 e^{-u} decay of the
        # squared-log endpoint makes this a plain smooth integral
        def transformed(u: np.ndarray) -> np.ndarray:
            s = np.exp(-u)
            return integrand(s) * s

        head = quad.integrate_finite(transformed, 0.0, 52.0, half)
    return -(head + tail) / (2.0 * math.pi)


_I2_SPLIT = 4.0


def integral_I2(x_vol: float, N: int = DEFAULT_ORDER,
                spec: QuadratureSpec = I_SPEC) -> float:
    """Integral of the unit-aspect strip force against the log kernel.

    I2 = psi(0,1) log(1+x^-2)
         + 2 Int_x^{sign(x) inf} dxi [psi(xi,1) - psi(0,1)/(1+xi^2)] / xi
         - log(2) * [x < 0].

    The regularized integrand is used on [|x|, S]; beyond S the subtraction
    is undone in closed form so that the remaining integrand decays
    exponentially (the subtraction term alone would leave a polynomial
    tail).  Integrating toward -inf for x < 0 starts from the ordered
    phase, whose two degenerate states contribute the boundary constant
    -log 2; together with the changed limit this produces the jump
    2C - (3/2) log 2 across x_vol = 0 (C = Catalan's constant).
    """
    if x_vol == 0.0:
        raise ValueError("logarithmically divergent at x_vol = 0")
    sgn = 1.0 if x_vol > 0.0 else -1.0
    h = abs(x_vol)
    psi0 = _psi1(0.0, N)
    total = psi0 * math.log1p(1.0 / (x_vol * x_vol))
    if x_vol < 0.0:
        total -= math.log(2.0)

    def far(eta):
        return 2.0 * _psi1(sgn * eta, N) / eta

    if h >= _I2_SPLIT:
        return total - psi0 * math.log1p(1.0 / (h * h)) + quad.integrate_semi_infinite(
            far, h, QuadratureSpec(rel_tol=spec.rel_tol, abs_tol=spec.abs_tol,
                                   max_depth=spec.max_depth, decay_scale=1.0))

    def near(eta):
        return 2.0 * (_psi1(sgn * eta, N) - psi0 / (1.0 + eta * eta)) / eta

    total += quad.integrate_finite(near, h, _I2_SPLIT, spec)
    total += quad.integrate_semi_infinite(
        far, _I2_SPLIT, QuadratureSpec(rel_tol=spec.rel_tol, abs_tol=spec.abs_tol,
                                       max_depth=spec.max_depth, decay_scale=1.0))
    total -= psi0 * math.log1p(1.0 / (_I2_SPLIT * _I2_SPLIT))
    return total


@lru_cache(maxsize=None)
def theta_volume_rho1(x_vol: float, N: int = DEFAULT_ORDER) -> float:
    """Volume potential on the square, theta_volume(x, 1) = I1(x) + I2(x)."""
    return integral_I1(x_vol) + integral_I2(x_vol, N)


@lru_cache(maxsize=None)
def theta_sc(x: float, N: int = DEFAULT_ORDER) -> float:
    """Surface-corner contribution, rho-independent.

    Assembled at unit aspect ratio:
    theta_sc(x) = -theta_oo(x) + log Sigma(x, 1) + theta_volume(x, 1).
    Carries the -log|x|/8 divergence and the -(3/4) log 2 * sign(x) jump;
    tends to -log 2 for x -> -inf and to 0 for x -> +inf.
    """
    if x == 0.0:
        raise ValueError("logarithmically divergent at x = 0")
    return -strip.theta_oo(x) + _log_sigma(x, 1.0, N) + theta_volume_rho1(x, N)


def _dPsi_dx(x: float, rho: float, N: int) -> float:
    """x-derivative of Psi by central differences with one refinement."""
    h = max(1e-4, 1e-4 * abs(x))

    def d(step: float) -> float:
        return (sigma.Psi(x + step, rho, N) - sigma.Psi(x - step, rho, N)) / (2.0 * step)

    return (4.0 * d(h / 2.0) - d(h)) / 3.0


def x_dtheta_sc(x: float, N: int = DEFAULT_ORDER) -> float:
    """The finite combination x * theta_sc'(x).

    From the square symmetry,
    x theta_sc'(x) = theta_oo(x) + vartheta_oo(x) - 2 psi(x,1)
                     - x dPsi/dx(x,1);
    unlike theta_sc itself this stays finite at x = 0, where it equals
    -1/8 (the corner log amplitude).
    """
    val = strip.theta_oo(x) + strip.vartheta_oo(x) - 2.0 * _psi1(x, N)
    if x != 0.0:
        val -= x * _dPsi_dx(x, 1.0, N)
    return val


def theta_total(x: float, rho: float, N: int = DEFAULT_ORDER) -> float:
    """Casimir potential scaling function theta(x, rho).

    Undefined at x = 0 for finite rho (logarithmic corner divergence); the
    finite critical quantity is casimir_amplitude.  For rho < 1 the
    exchange symmetry theta(x, rho) = rho^-2 theta(x rho, 1/rho) is used.
    """
    if x == 0.0:
        raise ValueError("divergent at x = 0; see casimir_amplitude")
    if rho <= 0.0:
        raise ValueError("rho must be positive")
    if rho < 1.0:
        return theta_total(x * rho, 1.0 / rho, N) / (rho * rho)
    return strip.theta_oo(x) + theta_sc(x, N) / rho + sigma.Psi(x, rho, N)


def vartheta_total(x: float, rho: float, N: int = DEFAULT_ORDER) -> float:
    """Casimir force scaling function vartheta(x, rho), finite at x = 0.

    For rho >= 1: -theta_oo(x) + psi(x, rho).  For rho < 1 the force is
    computed in the exchanged direction, where the series converges, and
    mapped back:

    vartheta(x, rho) = rho^-2 [ vartheta_oo(u) - rho * (u theta_sc'(u))
                                - u dPsi/dx(u, 1/rho) - psi(u, 1/rho) ],
    with u = x rho.  Both branches agree identically at rho = 1.
    """
    if rho <= 0.0:
        raise ValueError("rho must be positive")
    if rho >= 1.0:
        return -strip.theta_oo(x) + sigma.psi_strip(x, rho, N)
    u = x * rho
    w = 1.0 / rho
    val = strip.vartheta_oo(u) - rho * x_dtheta_sc(u, N) - sigma.psi_strip(u, w, N)
    if u != 0.0:
        val -= u * _dPsi_dx(u, w, N)
    return val / (rho * rho)


def casimir_amplitude(rho: float) -> float:
    """Finite critical Casimir amplitude, log(eta(i rho))/4.

    The equivalent route rho*theta_oo(0) - log Sigma(0, rho) is evaluated
    as a consistency check whenever the series is in its validity range.
    """
    if rho <= 0.0:
        raise ValueError("rho must be positive")
    value = 0.25 * log_dedekind_eta(rho)
    if rho >= 0.5:
        other = rho * strip.theta_oo(0.0) - _log_sigma(0.0, rho, DEFAULT_ORDER + 2)
        if abs(value - other) > 1e-11:
            raise RuntimeError(
                f"amplitude routes disagree at rho={rho}: {value} vs {other}")
    return value


def find_rho0(tol: float = 1e-14) -> float:
    """Aspect ratio where the critical Casimir force changes sign.

    Root of the weight-two Eisenstein series on the imaginary axis,
    bracketed in (0.4, 0.7) and polished by secant steps.
    """
    if tol < 1e-15:
        raise ValueError("tol below achievable precision")
    lo, hi = 0.4, 0.7
    flo = eisenstein_E2(lo)
    if not flo < 0.0 < eisenstein_E2(hi):
        raise RuntimeError("sign-change bracket invalid")
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        fm = eisenstein_E2(mid)
        if fm < 0.0:
            lo, flo = mid, fm
        else:
            hi = mid
        if hi - lo < 1e-12:
            break
    a, b = lo, hi
    fa, fb = eisenstein_E2(a), eisenstein_E2(b)
    for _ in range(8):
        if fb == fa:
            break
        c = b - fb * (b - a) / (fb - fa)
        a, fa, b, fb = b, fb, c, eisenstein_E2(c)
        if abs(b - a) < tol:
            break
    return b


def lattice_to_scaling(z: float, L: int, M: int) -> ScalingPoint:
    """Scaling point of a lattice instance with coupling parameter z.

    x = 2M(1 - z/z_c) with z_c = sqrt(2) - 1, and rho = L/M.
    """
    if not 0.0 < z < 1.0:
        raise ValueError("coupling parameter must satisfy 0 < z < 1")
    if L < 1 or M < 1:
        raise ValueError("lattice extents must be positive integers")
    return ScalingPoint(x=2.0 * M * (1.0 - z / Z_CRITICAL), rho=L / M)


def evaluate_sample(x: float, rho: float, N: int = DEFAULT_ORDER) -> CasimirSample:
    """All scaling functions at one point; theta_total is None at x = 0."""
    point = ScalingPoint(x=x, rho=rho)
    theta = None if x == 0.0 else theta_total(x, rho, N)
    sc = math.nan if x == 0.0 else theta_sc(x, N)
    if rho >= 1.0:
        psi_val = sigma.psi_strip(x, rho, N)
        psi_cap = sigma.Psi(x, rho, N)
    else:
        psi_val = sigma.psi_strip(x * rho, 1.0 / rho, N)
        psi_cap = sigma.Psi(x * rho, 1.0 / rho, N)
    return CasimirSample(point=point, theta_total=theta,
                         vartheta_total=vartheta_total(x, rho, N),
                         theta_sc=sc, psi_val=psi_val, Psi_val=psi_cap)
