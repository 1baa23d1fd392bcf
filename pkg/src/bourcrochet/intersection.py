"""
Self-intersection bookkeeping for the intersecting models.

Enneper (m=2) first meets itself at r = sqrt(3), on the z axis. Beyond
that radius each round is cut into four short 'inner' arcs and four long
'outer' arcs by the crossing angle theta_cr, the solution of
x(r, theta) = x(r, pi - theta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arclength import circumference
from .surface import DomainError, SurfacePoint, SurfaceSpec, angular_speed, position

SQRT3 = math.sqrt(3.0)
# inner and outer arcs are equally long here (theta_cr = pi/8)
BALANCE_RADIUS = math.sqrt(3.0 * (1.0 + math.sqrt(2.0)))


@dataclass(frozen=True)
class CrossingInfo:
    theta_cr: float
    inner_arc: float
    outer_arc: float
    sections: int = 4


@dataclass(frozen=True)
class Sector:
    start: float
    end: float
    above: bool

    @property
    def width(self) -> float:
        return self.end - self.start


@dataclass(frozen=True)
class SectorLayout:
    sectors: tuple[Sector, ...]
    # stitches stay in their part: the dividing curves are straight rays
    stitches_migrate: bool = False

    @property
    def count(self) -> int:
        return len(self.sectors)


def enneper_first_intersection_radius() -> float:
    return SQRT3


def _require_crossing(r: float) -> None:
    if not r >= SQRT3:
        raise DomainError(f"no self-intersection below r=sqrt(3), got r={r!r}")


def _crossing_cosine(r: float) -> float:
    # rounding can push the argument a hair above 1 right at r = sqrt(3)
    return min(1.0, 0.5 * SQRT3 * math.sqrt(1.0 + 1.0 / (r * r)))


def enneper_crossing_angle(r: float) -> float:
    _require_crossing(r)
    return math.acos(_crossing_cosine(r))


def enneper_section_arcs(spec: SurfaceSpec, r: float) -> CrossingInfo:
    """Lengths of one inner and one outer arc of the round at ``r``."""
    if spec.m != 2:
        raise DomainError(f"section arcs are defined for Enneper's surface (m=2), got m={spec.m:g}")
    theta = enneper_crossing_angle(r)
    speed = angular_speed(spec, r)
    return CrossingInfo(theta, 2.0 * theta * speed, (0.5 * math.pi - 2.0 * theta) * speed, 4)


def enneper_crossing_coincidence(spec: SurfaceSpec, r: float) -> tuple[SurfacePoint, SurfacePoint]:
    """The two parameter points (r, theta_cr) and (r, pi - theta_cr) in space.

    They map to the same point of R^3, which is what makes theta_cr the
    crossing angle.
    """
    if spec.m != 2:
        raise DomainError("crossing coincidence is defined for m=2")
    theta = enneper_crossing_angle(r)
    return position(spec, (r, theta)), position(spec, (r, math.pi - theta))


def richmond_crossing_angle(r: float) -> float:
    """Enneper-type crossing angle of Richmond's surface (k=1)."""
    _require_crossing(r)
    return 2.0 * math.asin(_crossing_cosine(r))


def richmond_crosses_plane(spec: SurfaceSpec, r: float, theta: float) -> bool:
    """Sign test for the straight-line intersection x = 0 of Richmond's surface.

    Detection only: True when the point lies on the x >= 0 side.
    """
    return position(spec, (r, theta)).x >= 0.0


def bour3_sectors() -> SectorLayout:
    """Six equal parts of B_3, bounded where z = 0 (cos 3t = 0)."""
    width = math.pi / 3.0
    sectors = []
    for k in range(6):
        start = math.pi / 6.0 + k * width
        mid = start + 0.5 * width
        sectors.append(Sector(start, start + width, math.cos(3.0 * mid) > 0))
    return SectorLayout(tuple(sectors))


def conservation_residual(spec: SurfaceSpec, r: float) -> float:
    """sections * (inner + outer) - C(r); zero up to rounding."""
    info = enneper_section_arcs(spec, r)
    return info.sections * (info.inner_arc + info.outer_arc) - circumference(spec, r)
