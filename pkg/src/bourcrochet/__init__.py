"""Geometry and crochet pattern tables for Bour's minimal surfaces B_m."""

from .surface import (
    FundamentalForm,
    ParamPoint,
    SurfacePoint,
    SurfaceSpec,
    enneper_alt_position,
    fundamental_form,
    gaussian_curvature,
    partial_r,
    partial_theta,
    position,
    richmond_alt_position,
)
from .arclength import (
    RootConfig,
    circumference,
    circumference_quadrature,
    invert_radial,
    radial_arc_length,
    radial_quadrature,
)
from .intersection import (
    CrossingInfo,
    bour3_sectors,
    enneper_crossing_angle,
    enneper_crossing_coincidence,
    enneper_first_intersection_radius,
    enneper_section_arcs,
    richmond_crossing_angle,
)
from .pattern import (
    Gauge,
    IntersectionRow,
    IntersectionSchedule,
    PatternTable,
    RoundRow,
    ScalePolicy,
    distribute_increases,
    enneper_intersection_schedule,
    flat_disc_pattern,
    generate_pattern,
    render,
    resolve_scale,
    stitch_count,
)
from .mesh import (
    GridSpec,
    Mesh,
    Polyline,
    sample_mesh,
    sample_radial_polyline,
    sample_round_polyline,
    write_obj,
)

__version__ = "0.1.0"
