"""
Closed-form evaluation of Bour's minimal surfaces B_m.

The surface comes from the Weierstrass-Enneper data f = z**(m-2), g = z
written in polar coordinates z = r*exp(i*theta):

    x = r**(m-1)/(m-1) cos((m-1)t) - r**(m+1)/(m+1) cos((m+1)t)
    y = -r**(m-1)/(m-1) sin((m-1)t) - r**(m+1)/(m+1) sin((m+1)t)
    z = 2 r**m / m cos(m t)

All coordinates are multiplied by a global scale ``s``. The metric of B_m
does not depend on theta, which is what makes even-increase crochet
patterns possible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

EXCLUDED_M = (-1.0, 0.0, 1.0)


class DomainError(ValueError):
    """Raised when a parameter point lies outside the admissible domain."""


def _family_order(m: float) -> tuple[str, int] | None:
    """Detect the Enneper (m=(k+1)/k) or Richmond (m=k/(k+1)) families."""
    frac = Fraction(m).limit_denominator(1000)
    if abs(float(frac) - m) > 1e-12:
        return None
    p, q = frac.numerator, frac.denominator
    if p == q + 1:
        return ("enneper", q)
    if q == p + 1 and p >= 1:
        return ("richmond", p)
    return None


def default_theta_period(m: float) -> float:
    """Angular extent needed to close a round on B_m."""
    family = _family_order(m)
    if family is None:
        return 2.0 * math.pi
    name, k = family
    if name == "enneper":
        return 2.0 * k * math.pi
    return 2.0 * (k + 1) * math.pi


def enneper_order(m: float) -> int | None:
    """Return k when m = (k+1)/k, else None."""
    family = _family_order(m)
    return family[1] if family and family[0] == "enneper" else None


def richmond_order(m: float) -> int | None:
    """Return k when m = k/(k+1), else None."""
    family = _family_order(m)
    return family[1] if family and family[0] == "richmond" else None


@dataclass(frozen=True)
class SurfaceSpec:
    """A concrete B_m model: family exponent, scale and parameter domain.

    Parameters
    ----------
    m : float
        Family exponent; -1, 0 and 1 are poles of the parametrization.
    s : float
        Global scale multiplying every coordinate (cm per unit when the
        model is meant to be crocheted).
    r_min, r_max : float
        Parameter radius range. ``r_min`` must be positive when m < 1.
    theta_period : float, optional
        Angular extent of one full round. Defaults to 2*pi, 2k*pi for the
        Enneper family and 2(k+1)*pi for the Richmond family.
    """

    m: float
    s: float = 1.0
    r_min: float = 0.0
    r_max: float = 10.0
    theta_period: float | None = None

    def __post_init__(self):
        m = float(self.m)
        object.__setattr__(self, "m", m)
        if any(abs(m - bad) < 1e-12 for bad in EXCLUDED_M):
            raise DomainError(f"m={m:g} is excluded: the parametrization has a pole at m in {{-1, 0, 1}}")
        if not (self.s > 0 and math.isfinite(self.s)):
            raise DomainError(f"scale must be positive, got {self.s!r}")
        if self.r_min < 0:
            raise DomainError(f"r_min must be >= 0, got {self.r_min!r}")
        if not self.r_max > self.r_min:
            raise DomainError(f"need r_max > r_min, got [{self.r_min}, {self.r_max}]")
        if m < 1 and self.r_min <= 0:
            raise DomainError(f"m={m:g} < 1 needs r_min > 0 (radial integrand diverges at r=0)")
        if self.theta_period is None:
            object.__setattr__(self, "theta_period", default_theta_period(m))
        elif not self.theta_period > 0:
            raise DomainError("theta_period must be positive")

    def check(self, r: float) -> None:
        """Raise DomainError unless ``r`` lies in [r_min, r_max]."""
        if not (self.r_min <= r <= self.r_max):
            raise DomainError(f"r={r!r} outside [{self.r_min}, {self.r_max}]")
        if r == 0 and self.m < 1:
            raise DomainError(f"r=0 is singular for m={self.m:g}")

    def with_scale(self, s: float) -> "SurfaceSpec":
        return SurfaceSpec(self.m, s, self.r_min, self.r_max, self.theta_period)


class ParamPoint(NamedTuple):
    r: float
    theta: float


class SurfacePoint(NamedTuple):
    x: float
    y: float
    z: float


@dataclass(frozen=True)
class FundamentalForm:
    E: float
    F: float
    G: float


def _xyz(m, r, theta):
    # vectorised core, unscaled
    a, b = m - 1.0, m + 1.0
    ra, rb, rm = r**a, r**b, r**m
    x = ra / a * np.cos(a * theta) - rb / b * np.cos(b * theta)
    y = -ra / a * np.sin(a * theta) - rb / b * np.sin(b * theta)
    z = 2.0 * rm / m * np.cos(m * theta)
    return x, y, z


def position(spec: SurfaceSpec, p: ParamPoint | tuple[float, float]) -> SurfacePoint:
    r, theta = p
    spec.check(r)
    x, y, z = _xyz(spec.m, float(r), float(theta))
    s = spec.s
    return SurfacePoint(s * float(x), s * float(y), s * float(z))


def positions(spec: SurfaceSpec, r, theta) -> np.ndarray:
    """Vectorised ``position``; returns an array of shape broadcast(r, theta) + (3,)."""
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    if r.size and (r.min() < spec.r_min or r.max() > spec.r_max):
        raise DomainError(f"radii outside [{spec.r_min}, {spec.r_max}]")
    x, y, z = _xyz(spec.m, r, theta)
    return spec.s * np.stack(np.broadcast_arrays(x, y, z), axis=-1)


def partial_theta(spec: SurfaceSpec, p) -> np.ndarray:
    """Derivative of the position with respect to theta.

    The y component is -(r**(m-1) cos((m-1)t) + r**(m+1) cos((m+1)t)); the
    positive-signed variant has the same norm but is not orthogonal to the
    r-derivative.
    """
    r, t = p
    spec.check(r)
    m, s = spec.m, spec.s
    ra, rb, rm = r ** (m - 1), r ** (m + 1), r**m
    return s * np.array([
        -ra * math.sin((m - 1) * t) + rb * math.sin((m + 1) * t),
        -ra * math.cos((m - 1) * t) - rb * math.cos((m + 1) * t),
        -2.0 * rm * math.sin(m * t),
    ])


def partial_r(spec: SurfaceSpec, p) -> np.ndarray:
    """Derivative of the position with respect to r."""
    r, t = p
    spec.check(r)
    m, s = spec.m, spec.s
    if r == 0 and m < 2:
        raise DomainError(f"d/dr is unbounded at r=0 for m={m:g}")
    ra, rb, rm = r ** (m - 2), r**m, r ** (m - 1)
    return s * np.array([
        ra * math.cos((m - 1) * t) - rb * math.cos((m + 1) * t),
        -ra * math.sin((m - 1) * t) - rb * math.sin((m + 1) * t),
        2.0 * rm * math.cos(m * t),
    ])


def radial_speed(spec: SurfaceSpec, r: float) -> float:
    """Closed-form norm of the r-derivative, s*(r**(m-2) + r**m)."""
    m = spec.m
    return spec.s * (r ** (m - 2) + r**m)


def angular_speed(spec: SurfaceSpec, r: float) -> float:
    """Closed-form norm of the theta-derivative, s*(r**(m-1) + r**(m+1))."""
    m = spec.m
    return spec.s * (r ** (m - 1) + r ** (m + 1))


def fundamental_form(spec: SurfaceSpec, p) -> FundamentalForm:
    r, _ = p
    spec.check(r)
    if r == 0 and spec.m < 2:
        raise DomainError(f"E is unbounded at r=0 for m={spec.m:g}")
    return FundamentalForm(radial_speed(spec, r) ** 2, 0.0, angular_speed(spec, r) ** 2)


def gaussian_curvature(spec: SurfaceSpec, p) -> float:
    """K = -4 r**(4-2m) / (s**2 (1+r**2)**4); depends on r only.

    At the origin the value is -4/s**2 for m=2, 0 for 1<m<2 and -inf for
    m>2 (branch point).
    """
    r, _ = p
    spec.check(r)
    m, s = spec.m, spec.s
    if r == 0:
        if m == 2:
            return -4.0 / s**2
        return 0.0 if m < 2 else -math.inf
    return -4.0 * r ** (2.0 * (2.0 - m)) / (s**2 * (1.0 + r * r) ** 4)


def enneper_alt_position(n: int, tau: float, phi: float) -> SurfacePoint:
    """Enneper surface of symmetry order n from the data f=1, g=z**(n-1).

    n=1 gives a flat disc in the plane x=0. For n=k+1 the point equals
    ``position(m=(k+1)/k, r=tau**k, theta=-k*phi)`` divided by k.
    """
    if int(n) != n or n < 1:
        raise DomainError(f"symmetry order must be an integer >= 1, got {n!r}")
    if tau < 0:
        raise DomainError("tau must be >= 0")
    n = int(n)
    q = 2 * n - 1
    tq = tau**q / q
    return SurfacePoint(
        tau * math.cos(phi) - tq * math.cos(q * phi),
        tau * math.sin(phi) + tq * math.sin(q * phi),
        2.0 * tau**n / n * math.cos(n * phi),
    )


def richmond_alt_position(k: int, tau: float, phi: float) -> SurfacePoint:
    """Richmond surface from the data f=z**-2, g=z**(k+1).

    Equals ``position(m=k/(k+1), r=tau**(k+1), theta=(k+1)*phi)`` divided
    by k+1.
    """
    if int(k) != k or k < 1:
        raise DomainError(f"k must be an integer >= 1, got {k!r}")
    if not tau > 0:
        raise DomainError("tau must be > 0 (pole at the origin)")
    k = int(k)
    q = 2 * k + 1
    tq = tau**q / q
    return SurfacePoint(
        -math.cos(phi) / tau - tq * math.cos(q * phi),
        -math.sin(phi) / tau - tq * math.sin(q * phi),
        2.0 * tau**k / k * math.cos(k * phi),
    )
