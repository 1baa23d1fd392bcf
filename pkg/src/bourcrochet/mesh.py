"""Sampling B_m surfaces into triangle meshes and polylines, and OBJ output."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .arclength import radial_anchor
from .surface import DomainError, SurfaceSpec, positions, richmond_order


@dataclass(frozen=True)
class GridSpec:
    r_steps: int
    theta_steps: int
    r_range: tuple[float, float] | None = None
    theta_range: tuple[float, float] | None = None

    def __post_init__(self):
        if self.r_steps < 1 or self.theta_steps < 3:
            raise ValueError("need r_steps >= 1 and theta_steps >= 3")
        for rng in (self.r_range, self.theta_range):
            if rng is not None and not rng[0] < rng[1]:
                raise ValueError(f"range {rng} is not increasing")


@dataclass(frozen=True)
class Mesh:
    vertices: np.ndarray  # (V, 3)
    faces: np.ndarray  # (F, 3), zero-based


@dataclass(frozen=True)
class Polyline:
    points: np.ndarray  # (n, 3)
    closed: bool = False

    @property
    def length(self) -> float:
        pts = self.points
        if self.closed:
            pts = np.vstack([pts, pts[:1]])
        return float(np.linalg.norm(np.diff(pts, axis=0), axis=1).sum())


def _sample(spec: SurfaceSpec, r, theta) -> np.ndarray:
    k = richmond_order(spec.m)
    if k is None:
        return positions(spec, r, theta)
    # Richmond: evaluate the f=z**-2, g=z**(k+1) form, which is better
    # conditioned; it is the same surface scaled by 1/(k+1)
    r = np.asarray(r, dtype=float)
    if r.size and (r.min() < spec.r_min or r.max() > spec.r_max):
        raise DomainError(f"radii outside [{spec.r_min}, {spec.r_max}]")
    tau = r ** (1.0 / (k + 1))
    phi = np.asarray(theta, dtype=float) / (k + 1)
    q = 2 * k + 1
    tq = tau**q / q
    x = -np.cos(phi) / tau - tq * np.cos(q * phi)
    y = -np.sin(phi) / tau - tq * np.sin(q * phi)
    z = 2.0 * tau**k / k * np.cos(k * phi)
    return (k + 1) * spec.s * np.stack(np.broadcast_arrays(x, y, z), axis=-1)


def sample_mesh(spec: SurfaceSpec, grid: GridSpec) -> Mesh:
    """Triangulate a regular (r, theta) grid.

    Vertices are laid out ring by ring (constant r). When the theta range
    covers a full period the last column is welded onto the first.
    """
    r0, r1 = grid.r_range or (spec.r_min, spec.r_max)
    t0, t1 = grid.theta_range or (0.0, spec.theta_period)
    if r0 < spec.r_min or r1 > spec.r_max:
        raise DomainError(f"r range [{r0}, {r1}] outside [{spec.r_min}, {spec.r_max}]")
    welded = math.isclose(t1 - t0, spec.theta_period, rel_tol=1e-12)
    cols = grid.theta_steps if welded else grid.theta_steps + 1
    rs = np.linspace(r0, r1, grid.r_steps + 1)
    ts = t0 + (t1 - t0) * np.arange(cols) / grid.theta_steps
    verts = _sample(spec, rs[:, None], ts[None, :]).reshape(-1, 3)

    faces = []
    for i in range(grid.r_steps):
        for j in range(grid.theta_steps):
            jn = (j + 1) % cols
            a, b = i * cols + j, i * cols + jn
            c, d = a + cols, b + cols
            faces.append((a, b, d))
            faces.append((a, d, c))
    return Mesh(verts, np.asarray(faces, dtype=np.int64))


def sample_round_polyline(spec: SurfaceSpec, r: float, steps: int) -> Polyline:
    """Closed polyline through ``steps`` equally spaced points of the round at r."""
    if steps < 3:
        raise ValueError("a closed round needs at least 3 points")
    spec.check(r)
    ts = spec.theta_period * np.arange(steps) / steps
    return Polyline(_sample(spec, np.full(steps, r), ts), closed=True)


def sample_radial_polyline(spec: SurfaceSpec, theta: float, steps: int,
                           r_a: float | None = None, r_b: float | None = None) -> Polyline:
    """Polyline with ``steps`` segments along the ray ``theta``."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    r_a = radial_anchor(spec) if r_a is None else r_a
    r_b = spec.r_max if r_b is None else r_b
    spec.check(r_a)
    spec.check(r_b)
    rs = np.linspace(r_a, r_b, steps + 1)
    return Polyline(_sample(spec, rs, np.full_like(rs, theta)))


def _fmt(v: float) -> str:
    return format(float(v) + 0.0, ".9g")


def obj_text(obj: Mesh | Polyline) -> str:
    pts = obj.vertices if isinstance(obj, Mesh) else obj.points
    lines = [f"v {_fmt(x)} {_fmt(y)} {_fmt(z)}" for x, y, z in pts]
    if isinstance(obj, Mesh):
        lines += [f"f {a + 1} {b + 1} {c + 1}" for a, b, c in obj.faces]
    else:
        idx = list(range(1, len(pts) + 1))
        if obj.closed:
            idx.append(1)
        lines.append("l " + " ".join(map(str, idx)))
    return "\n".join(lines) + "\n"


def write_obj(obj: Mesh | Polyline, destination=None) -> bytes:
    """Serialise to Wavefront OBJ; optionally write to a path or binary stream."""
    data = obj_text(obj).encode("utf-8")
    if destination is None:
        return data
    if isinstance(destination, (str, os.PathLike)):
        with open(destination, "wb") as fh:
            fh.write(data)
    else:
        destination.write(data)
    return data
