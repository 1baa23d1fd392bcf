"""
Arc lengths on B_m: rounds about the origin and radial curves.

Both speeds are independent of theta, so the closed forms are

    C(r) = P * s * (r**(m-1) + r**(m+1))          P = theta period
    R(r) = s * [r**(m-1)/(m-1) + r**(m+1)/(m+1)]  (antiderivative)

The quadrature versions integrate the norm of the actual derivative
vectors and exist as an independent check of the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .surface import DomainError, SurfaceSpec, angular_speed, partial_r, partial_theta, radial_speed


class QuadratureError(RuntimeError):
    pass


class InversionError(RuntimeError):
    pass


@dataclass(frozen=True)
class RootConfig:
    abs_tol: float = 1e-10
    max_iter: int = 200

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")


@dataclass(frozen=True)
class RadialArc:
    r_a: float
    r_b: float
    length: float


def _antiderivative(m: float, r: float) -> float:
    return r ** (m - 1) / (m - 1) + r ** (m + 1) / (m + 1)


def radial_anchor(spec: SurfaceSpec) -> float:
    """Parameter radius where the intrinsic radius is measured from.

    The origin for m > 1; for m < 1 the radial integral diverges at 0, so
    the inner edge r_min is used instead.
    """
    return 0.0 if spec.m > 1 else spec.r_min


def circumference(spec: SurfaceSpec, r: float) -> float:
    """Length of the round at parameter radius ``r``."""
    spec.check(r)
    return spec.theta_period * angular_speed(spec, r)


def radial_arc_length(spec: SurfaceSpec, r_a: float, r_b: float) -> float:
    """Arc length along a radial curve from ``r_a`` to ``r_b``."""
    if r_a > r_b:
        raise DomainError(f"need r_a <= r_b, got {r_a} > {r_b}")
    spec.check(r_a)
    spec.check(r_b)
    if r_a == r_b:
        return 0.0
    m = spec.m
    return spec.s * (_antiderivative(m, r_b) - _antiderivative(m, r_a))


def radial_arc(spec: SurfaceSpec, r_a: float, r_b: float) -> RadialArc:
    return RadialArc(r_a, r_b, radial_arc_length(spec, r_a, r_b))


def intrinsic_radius(spec: SurfaceSpec, r: float) -> float:
    """Radial arc length from the anchor (see ``radial_anchor``) to ``r``."""
    return radial_arc_length(spec, radial_anchor(spec), r)


def _quad(f, a, b, what):
    out = integrate.quad(f, a, b, epsabs=1e-10, epsrel=1e-12, limit=400, full_output=True)
    # a fourth element is QUADPACK's warning message
    if len(out) > 3:
        raise QuadratureError(f"{what}: adaptive quadrature did not converge ({out[3].splitlines()[0]})")
    return out[0]


def circumference_quadrature(spec: SurfaceSpec, r: float) -> float:
    """Integrate |d/dtheta position| over one theta period."""
    spec.check(r)
    f = lambda t: float(np.linalg.norm(partial_theta(spec, (r, t))))
    # split the period so the integrand's oscillations stay resolved
    n = max(1, int(round(spec.theta_period / (math.pi / 2))))
    edges = np.linspace(0.0, spec.theta_period, n + 1)
    return sum(_quad(f, a, b, "circumference") for a, b in zip(edges[:-1], edges[1:]))


def radial_quadrature(spec: SurfaceSpec, r_a: float, r_b: float, theta: float = 0.0) -> float:
    """Integrate |d/dr position| from ``r_a`` to ``r_b`` along the ray ``theta``."""
    if r_a > r_b:
        raise DomainError(f"need r_a <= r_b, got {r_a} > {r_b}")
    spec.check(r_a)
    spec.check(r_b)
    if r_a == r_b:
        return 0.0
    f = lambda r: float(np.linalg.norm(partial_r(spec, (r, theta))))
    return _quad(f, r_a, r_b, "radial arc")


def invert_radial(spec: SurfaceSpec, R_target: float, cfg: RootConfig | None = None) -> float:
    """Parameter radius whose intrinsic radius equals ``R_target``.

    Safeguarded Newton on the monotone map r -> R(r): a Newton step is
    taken when it stays inside the current bracket, otherwise the bracket
    is bisected. The residual in R is driven below ``cfg.abs_tol``.
    """
    cfg = cfg or RootConfig()
    a = radial_anchor(spec)
    r_top = spec.r_max
    R_top = intrinsic_radius(spec, r_top)
    if R_target < 0 or R_target > R_top + cfg.abs_tol:
        raise InversionError(
            f"R={R_target!r} outside achievable range [0, {R_top:.6g}] for r in [{a}, {r_top}]")
    if R_target == 0:
        return a
    if R_target >= R_top:
        return r_top

    m, s = spec.m, spec.s
    F_a = _antiderivative(m, a)
    resid = lambda r: s * (_antiderivative(m, r) - F_a) - R_target

    lo, hi = a, r_top
    # start from the flat-disc guess clipped into the bracket
    r = min(max(a + R_target / s, lo), hi)
    if r in (lo, hi):
        r = 0.5 * (lo + hi)
    for _ in range(cfg.max_iter):
        g = resid(r)
        if abs(g) <= cfg.abs_tol:
            return r
        if g > 0:
            hi = r
        else:
            lo = r
        d = radial_speed(spec, r) if r > 0 else math.inf
        step = r - g / d if math.isfinite(d) and d > 0 else math.nan
        if lo < step < hi:
            r = step
        else:
            r = 0.5 * (lo + hi)
        if hi - lo <= 4 * np.spacing(hi):
            break
    g = resid(r)
    if abs(g) <= cfg.abs_tol:
        return r
    raise InversionError(f"radial inversion did not reach |residual| <= {cfg.abs_tol} "
                         f"in {cfg.max_iter} iterations (residual {g:.3e})")
