"""
Crochet pattern tables for B_m surfaces.

Round l of a model sits at intrinsic radius R = l*H. Inverting the radial
arc length gives the parameter radius r(l), and the round needs
C(r(l)) / W stitches, rounded to the nearest integer.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from .arclength import circumference, intrinsic_radius, invert_radial, radial_anchor, radial_arc_length
from .intersection import SQRT3, enneper_section_arcs
from .surface import DomainError, SurfaceSpec


class ScheduleError(ValueError):
    """The intersection schedule cannot be realised with non-negative moves."""


class ScaleError(ValueError):
    pass


def round_half_away(x: float) -> int:
    return int(math.floor(abs(x) + 0.5)) * (1 if x >= 0 else -1)


@dataclass(frozen=True)
class Gauge:
    """Stitch height ``H`` and width ``W`` in cm."""

    H: float
    W: float

    def __post_init__(self):
        if not (self.H > 0 and self.W > 0):
            raise ValueError(f"gauge must be positive, got H={self.H!r}, W={self.W!r}")


@dataclass(frozen=True)
class RoundRow:
    round: int
    stitches: int
    delta: int


@dataclass(frozen=True)
class PatternTable:
    spec: SurfaceSpec | None
    gauge: Gauge
    rows: tuple[RoundRow, ...]
    warnings: tuple[str, ...] = ()

    @property
    def total(self) -> int:
        return sum(row.stitches for row in self.rows)

    @property
    def counts(self) -> list[int]:
        return [row.stitches for row in self.rows]


@dataclass(frozen=True)
class IntersectionRow:
    """One intersecting round, counted per quarter of the model."""

    round: int
    n_inner: int
    move_in: int
    inc_inner: int
    n_outer: int
    inc_outer: int

    @property
    def quarter(self) -> int:
        return self.n_inner + self.n_outer


@dataclass(frozen=True)
class IntersectionSchedule:
    spec: SurfaceSpec
    gauge: Gauge
    lead: PatternTable
    rows: tuple[IntersectionRow, ...]
    quarter_sizes: tuple[int, int, int, int]
    warnings: tuple[str, ...] = ()

    @property
    def total(self) -> int:
        """Stitches in the intersecting rounds, all four quarters."""
        return 4 * sum(row.quarter for row in self.rows)

    @property
    def grand_total(self) -> int:
        return self.lead.total + self.total


@dataclass(frozen=True)
class ScalePolicy:
    """How to choose the global scale of a model.

    Use the constructors: ``explicit(s)``, ``fit_round(l, r)`` (round l
    lands on parameter radius r) or ``fit_count(l, n)`` (round l has n
    stitches).
    """

    kind: str
    value: float = 1.0
    round: int = 0
    target: float = 0.0

    @classmethod
    def explicit(cls, s: float) -> "ScalePolicy":
        return cls("explicit", value=s)

    @classmethod
    def fit_round(cls, round: int, r: float) -> "ScalePolicy":
        return cls("fit_round", round=round, target=r)

    @classmethod
    def fit_count(cls, round: int, stitches: int) -> "ScalePolicy":
        return cls("fit_count", round=round, target=stitches)


def flat_disc_pattern(gauge: Gauge, rounds: int, constant_increase: bool = True) -> PatternTable:
    """Reference pattern for a flat disc.

    With ``constant_increase`` every round adds round(2*pi*H/W) stitches,
    the usual "6 in a loop, add 6 per round" instruction. Otherwise each
    round is rounded on its own: N(l) = round(2*pi*l*H/W).
    """
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    step = 2.0 * math.pi * gauge.H / gauge.W
    if constant_increase:
        counts = [l * round_half_away(step) for l in range(1, rounds + 1)]
    else:
        counts = [round_half_away(l * step) for l in range(1, rounds + 1)]
    return _table(None, gauge, counts)


def _table(spec, gauge, counts) -> PatternTable:
    rows, warnings, prev = [], [], 0
    for l, n in enumerate(counts, start=1):
        delta = n - prev
        if prev and delta > prev:
            warnings.append(f"round {l}: {delta} increases on {prev} stitches needs multiple increases per stitch")
        rows.append(RoundRow(l, n, delta))
        prev = n
    return PatternTable(spec, gauge, tuple(rows), tuple(warnings))


def _raw_count(spec: SurfaceSpec, gauge: Gauge, l: int) -> float:
    r = invert_radial(spec, l * gauge.H)
    return circumference(spec, r) / gauge.W


def stitch_count(spec: SurfaceSpec, gauge: Gauge, l: int) -> int:
    """Stitches on round ``l``."""
    if l < 1:
        raise ValueError("round must be >= 1")
    return round_half_away(_raw_count(spec, gauge, l))


def generate_pattern(spec: SurfaceSpec, gauge: Gauge, rounds: int) -> PatternTable:
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    return _table(spec, gauge, [stitch_count(spec, gauge, l) for l in range(1, rounds + 1)])


def resolve_scale(spec: SurfaceSpec, gauge: Gauge, policy: ScalePolicy) -> float:
    if policy.kind == "explicit":
        if not policy.value > 0:
            raise ScaleError(f"scale must be positive, got {policy.value!r}")
        return float(policy.value)
    if policy.kind == "fit_round":
        return _fit_round(spec, gauge, policy.round, policy.target)
    if policy.kind == "fit_count":
        return _fit_count(spec, gauge, policy.round, int(policy.target))
    raise ScaleError(f"unknown scale policy {policy.kind!r}")


def _fit_round(spec, gauge, l, r):
    if l < 1:
        raise ScaleError("target round must be >= 1")
    unit = spec.with_scale(1.0)
    try:
        arc = radial_arc_length(unit, radial_anchor(unit), r)
    except DomainError as exc:
        raise ScaleError(str(exc)) from exc
    if arc <= 0:
        raise ScaleError(f"target radius {r} coincides with the anchor radius")
    return l * gauge.H / arc


# counts right at n - 0.5 would flip under the inversion tolerance
_COUNT_MARGIN = 1e-6


def _fit_count(spec, gauge, l, n):
    """Largest scale for which round ``l`` still rounds to ``n`` stitches.

    The stitch count at a fixed round is scanned on a log grid of scales
    for its last downward crossing of n - 0.5, which is then bisected.
    Taking the largest admissible scale picks the flattest model with the
    requested count.
    """
    if l < 1 or n < 1:
        raise ScaleError("target round and stitch count must be >= 1")
    unit = spec.with_scale(1.0)
    reach = intrinsic_radius(unit, spec.r_max)
    s_min = l * gauge.H / reach * (1.0 + 1e-9)
    s_max = max(1e4 * l * gauge.H, 1e3 * s_min)
    level = n - 0.5 + _COUNT_MARGIN

    def excess(s):
        return _raw_count(spec.with_scale(s), gauge, l) - level

    grid = [s_min * (s_max / s_min) ** (i / 600) for i in range(601)]
    values = [excess(s) for s in grid]
    bracket = None
    for i in range(len(grid) - 1, 0, -1):
        if values[i - 1] >= 0 > values[i]:
            bracket = (grid[i - 1], grid[i])
            break
    if bracket is None:
        raise ScaleError(f"no scale gives {n} stitches on round {l} (count spans "
                         f"{min(values) + level:.3f}..{max(values) + level:.3f})")
    lo, hi = bracket
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if excess(mid) >= 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-15 * hi:
            break
    if stitch_count(spec.with_scale(lo), gauge, l) != n:
        raise ScaleError(f"stitch count is not monotone near s={lo:.6g}; cannot fit {n} stitches")
    return lo


def first_intersection_round(spec: SurfaceSpec, gauge: Gauge) -> int:
    """First round at or beyond the intrinsic radius of the Enneper crossing."""
    R_first = intrinsic_radius(spec, SQRT3)
    l = math.ceil(R_first / gauge.H - 1e-12)
    return max(l, 1)


def _quarters(total: int) -> tuple[int, int, int, int]:
    base, extra = divmod(total, 4)
    return tuple(base + (1 if i < extra else 0) for i in range(4))


def enneper_intersection_schedule(spec: SurfaceSpec, gauge: Gauge, l_end: int,
                                  l_start: int | None = None, quarter: int = 0) -> IntersectionSchedule:
    """Per-quarter inner/outer stitch schedule for an intersecting Enneper model.

    Each round's section sizes come from the inner and outer arc lengths.
    The quarter's increases are shared between the sections in proportion
    to their size; whatever growth of the inner section is not covered by
    its own increases is stitches moved in from the outer section.
    """
    if spec.m != 2:
        raise DomainError(f"intersection schedule needs Enneper's surface (m=2), got m={spec.m:g}")
    first = first_intersection_round(spec, gauge)
    if l_start is None:
        l_start = first
    elif l_start < first:
        raise ScheduleError(f"round {l_start} is inside r < sqrt(3); first intersecting round is {first}")
    if l_end < l_start:
        raise ScheduleError(f"l_end={l_end} precedes l_start={l_start}")
    if quarter not in range(4):
        raise ValueError("quarter must be 0..3")

    lead = generate_pattern(spec, gauge, l_start - 1) if l_start > 1 else PatternTable(spec, gauge, ())
    sizes = _quarters(lead.rows[-1].stitches if lead.rows else 0)
    prev_in, prev_out = 0, sizes[quarter]
    rows, warnings = [], []
    for l in range(l_start, l_end + 1):
        r = invert_radial(spec, l * gauge.H)
        arcs = enneper_section_arcs(spec, r)
        n_in = round_half_away(arcs.inner_arc / gauge.W)
        n_out = round_half_away(arcs.outer_arc / gauge.W)
        q = n_in + n_out
        growth = q - (prev_in + prev_out)
        gained = n_in - prev_in
        inc_in = round_half_away(growth * n_in / q) if q else 0
        inc_in = min(max(inc_in, 0), max(gained, 0))
        move_in = gained - inc_in
        inc_out = growth - inc_in
        if gained < 0 or move_in < 0 or inc_out < 0:
            raise ScheduleError(f"round {l}: inner {prev_in}->{n_in}, quarter growth {growth} "
                                "cannot be met with non-negative moves and increases")
        if inc_out > prev_out - move_in:
            warnings.append(f"round {l}: {inc_out} outer increases on {prev_out - move_in} stitches")
        rows.append(IntersectionRow(l, n_in, move_in, inc_in, n_out, inc_out))
        prev_in, prev_out = n_in, n_out
    return IntersectionSchedule(spec, gauge, lead, tuple(rows), sizes, tuple(warnings))


def distribute_increases(n_prev: int, delta: int, offset: int = 0) -> list[str]:
    """Instruction per stitch of the previous round: ``"inc"`` or ``"sc"``.

    Increases are spaced as evenly as possible (gaps differ by at most one
    stitch); ``offset`` rotates them so consecutive rounds do not stack.
    """
    if delta < 0 or n_prev < 0:
        raise ValueError("n_prev and delta must be non-negative")
    if delta > n_prev:
        raise ValueError(f"{delta} increases do not fit on {n_prev} stitches")
    slots = ["sc"] * n_prev
    for i in range(delta):
        slots[(i * n_prev // delta + offset) % n_prev] = "inc"
    return slots


# --- rendering -----------------------------------------------------------

PATTERN_COLUMNS = ("round", "stitches", "delta")
SCHEDULE_COLUMNS = ("round", "n_inner", "move_in", "inc_inner", "n_outer", "inc_outer")


def _spec_dict(spec):
    if spec is None:
        return None
    return {"m": spec.m, "s": spec.s, "r_min": spec.r_min, "r_max": spec.r_max}


def to_dict(obj) -> dict:
    """Structured form of a pattern table or intersection schedule."""
    gauge = {"h_cm": obj.gauge.H, "w_cm": obj.gauge.W}
    if isinstance(obj, PatternTable):
        rows = [{c: getattr(row, c) for c in PATTERN_COLUMNS} for row in obj.rows]
        return {"spec": _spec_dict(obj.spec), "gauge": gauge, "rows": rows, "total": obj.total}
    rows = [{c: getattr(row, c) for c in SCHEDULE_COLUMNS} for row in obj.rows]
    return {"spec": _spec_dict(obj.spec), "gauge": gauge, "per_quarter": True,
            "quarter_sizes": list(obj.quarter_sizes), "rows": rows,
            "total": obj.total, "grand_total": obj.grand_total}


def _text(obj) -> str:
    lines = []
    if obj.spec is not None:
        lines.append(f"# B_m surface m={obj.spec.m:g} s={obj.spec.s:.6g}")
    lines.append(f"# gauge H={obj.gauge.H:g} cm W={obj.gauge.W:g} cm")
    if isinstance(obj, PatternTable):
        for row in obj.rows:
            if row.round == 1:
                lines.append(f"Round 1: {row.stitches} sts (magic loop)")
            else:
                lines.append(f"Round {row.round}: {row.stitches} sts (+{row.delta} evenly spaced)")
        lines.append(f"Total: {obj.total} sts")
    else:
        lines.append(f"# per quarter; quarters start with {', '.join(map(str, obj.quarter_sizes))} sts")
        for row in obj.rows:
            lines.append(f"Round {row.round}: inner {row.n_inner} sts (move in {row.move_in}, "
                         f"+{row.inc_inner}), outer {row.n_outer} sts (+{row.inc_outer})")
        lines.append(f"Total: {obj.grand_total} sts ({obj.lead.total} before the intersection)")
    for w in obj.warnings:
        lines.append(f"# warning: {w}")
    return "\n".join(lines) + "\n"


def render(obj: PatternTable | IntersectionSchedule, format: str = "text") -> str:
    """Render a table or schedule as ``text``, ``csv`` or ``json``."""
    if format == "text":
        return _text(obj)
    if format == "csv":
        cols = PATTERN_COLUMNS if isinstance(obj, PatternTable) else SCHEDULE_COLUMNS
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for row in obj.rows:
            writer.writerow([getattr(row, c) for c in cols])
        return buf.getvalue()
    if format == "json":
        return json.dumps(to_dict(obj), indent=2) + "\n"
    raise ValueError(f"unknown format {format!r}; expected text, csv or json")
