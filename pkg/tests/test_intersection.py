import math

import numpy as np
import pytest
from scipy.optimize import brentq

from bourcrochet.arclength import circumference, radial_arc_length
from bourcrochet.intersection import (
    BALANCE_RADIUS,
    bour3_sectors,
    conservation_residual,
    enneper_crossing_angle,
    enneper_crossing_coincidence,
    enneper_first_intersection_radius,
    enneper_section_arcs,
    richmond_crossing_angle,
    richmond_crosses_plane,
)
from bourcrochet.surface import DomainError, SurfaceSpec, position

SQRT3 = math.sqrt(3)
ENNEPER = SurfaceSpec(2)


def test_first_intersection_radius():
    r = enneper_first_intersection_radius()
    assert r == pytest.approx(1.7320508075688772, rel=1e-15)
    x, y, _ = position(ENNEPER, (r, 0.0))
    assert abs(x) < 1e-14 and abs(y) < 1e-14
    assert radial_arc_length(ENNEPER, 0, r) == pytest.approx(2 * SQRT3)


def test_first_intersection_is_a_crossing():
    # below sqrt(3) the ray theta=0 and theta=pi stay apart; at sqrt(3) they meet
    for r in [1.0, 1.5, 1.7]:
        a, b = position(ENNEPER, (r, 0.0)), position(ENNEPER, (r, math.pi))
        assert np.linalg.norm(np.subtract(a, b)) > 1e-3
    a, b = position(ENNEPER, (SQRT3, 0.0)), position(ENNEPER, (SQRT3, math.pi))
    assert np.linalg.norm(np.subtract(a, b)) < 1e-14


class TestCrossingAngle:
    def test_examples(self):
        assert enneper_crossing_angle(SQRT3) == 0.0
        want = math.acos(SQRT3 / 2 * math.sqrt(1.25))
        assert enneper_crossing_angle(2.0) == pytest.approx(want, rel=1e-15)
        assert enneper_crossing_angle(2.0) == pytest.approx(0.2527, abs=1e-4)
        assert enneper_crossing_angle(BALANCE_RADIUS) == pytest.approx(math.pi / 8, rel=1e-14)

    def test_below_first_intersection(self):
        with pytest.raises(DomainError):
            enneper_crossing_angle(1.7)

    def test_monotone_with_limit(self):
        rs = np.linspace(SQRT3, 200, 2000)
        th = [enneper_crossing_angle(r) for r in rs]
        assert all(b > a for a, b in zip(th, th[1:]))
        assert max(th) < math.pi / 6
        assert enneper_crossing_angle(1e7) == pytest.approx(math.pi / 6, abs=1e-12)

    def test_solves_x_symmetry_by_bisection(self):
        # independent route: root of x(r, t) - x(r, pi - t) on (0, pi/4)
        for r in [1.8, 2.0, 3.0]:
            f = lambda t: position(ENNEPER, (r, t)).x - position(ENNEPER, (r, math.pi - t)).x
            t = brentq(f, 1e-9, math.pi / 4 - 1e-9, xtol=1e-14)
            assert enneper_crossing_angle(r) == pytest.approx(t, abs=1e-12)


class TestSectionArcs:
    def test_at_first_intersection(self):
        info = enneper_section_arcs(ENNEPER.with_scale(2.0), SQRT3)
        assert info.inner_arc == 0.0
        assert info.outer_arc == pytest.approx(2.0 * math.pi / 2 * 4 * SQRT3)
        assert info.sections == 4

    def test_balance(self):
        info = enneper_section_arcs(ENNEPER, BALANCE_RADIUS)
        assert info.inner_arc == pytest.approx(info.outer_arc, rel=1e-13)
        assert BALANCE_RADIUS == pytest.approx(2.6912, abs=1e-4)

    def test_balance_sign_change(self):
        gap = lambda r: (lambda i: i.inner_arc - i.outer_arc)(enneper_section_arcs(ENNEPER, r))
        assert gap(2.6) < 0 < gap(2.8)
        root = brentq(gap, 2.0, 4.0, xtol=1e-13)
        assert abs(root - math.sqrt(3 * (1 + math.sqrt(2)))) < 1e-9

    @pytest.mark.parametrize("r", [SQRT3, 1.8, 2.0, 2.5, 3.0, 4.0, 10.0])
    def test_conservation(self, r):
        spec = ENNEPER.with_scale(1.3)
        info = enneper_section_arcs(spec, r)
        c = circumference(spec, r)
        assert abs(4 * (info.inner_arc + info.outer_arc) - c) <= 1e-9 * c
        assert abs(conservation_residual(spec, r)) <= 1e-9 * c

    def test_example_r2(self):
        info = enneper_section_arcs(ENNEPER, 2.0)
        assert 4 * (info.inner_arc + info.outer_arc) == pytest.approx(2 * math.pi * 10)

    def test_requires_m2(self):
        with pytest.raises(DomainError):
            enneper_section_arcs(SurfaceSpec(3), 2.0)


class TestCoincidence:
    @pytest.mark.parametrize("r", [1.8, 2.0, 2.5, 3.0, 4.0])
    def test_points_coincide(self, r):
        p, q = enneper_crossing_coincidence(ENNEPER, r)
        assert np.linalg.norm(np.subtract(p, q)) < 1e-9

    def test_at_first_intersection(self):
        p, q = enneper_crossing_coincidence(ENNEPER, SQRT3)
        assert p == pytest.approx(q, abs=1e-14)
        assert abs(p.x) < 1e-14 and abs(p.y) < 1e-14


class TestRichmond:
    def test_examples(self):
        assert richmond_crossing_angle(SQRT3) == pytest.approx(math.pi, rel=1e-15)
        want = 2 * math.asin(SQRT3 / 2 * math.sqrt(10 / 9))
        assert richmond_crossing_angle(3.0) == pytest.approx(want, rel=1e-15)
        assert richmond_crossing_angle(3.0) == pytest.approx(2.3006, abs=1e-4)
        assert richmond_crossing_angle(2.0) == pytest.approx(2 * math.asin(SQRT3 / 2 * math.sqrt(1.25)))
        assert richmond_crossing_angle(2.0) == pytest.approx(2.638, abs=2e-3)

    def test_domain(self):
        with pytest.raises(DomainError):
            richmond_crossing_angle(1.0)

    def test_plane_detection_flips_sign(self):
        spec = SurfaceSpec(0.5, r_min=0.1)
        assert richmond_crosses_plane(spec, 1.0, 2 * math.pi) != richmond_crosses_plane(spec, 1.0, 0.0)


class TestBour3:
    def test_six_equal_sectors(self):
        layout = bour3_sectors()
        assert layout.count == 6
        for sec in layout.sectors:
            assert sec.width == pytest.approx(math.pi / 3)
        assert layout.stitches_migrate is False
        assert sum(sec.above for sec in layout.sectors) == 3

    def test_alternate_and_match_z_sign(self):
        spec = SurfaceSpec(3, r_max=1.0)
        layout = bour3_sectors()
        flags = [sec.above for sec in layout.sectors]
        assert all(a != b for a, b in zip(flags, flags[1:]))
        for sec in layout.sectors:
            mid = 0.5 * (sec.start + sec.end)
            assert (position(spec, (0.7, mid)).z > 0) == sec.above
            assert abs(position(spec, (0.7, sec.start)).z) < 1e-14
