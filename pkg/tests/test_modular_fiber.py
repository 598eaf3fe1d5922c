from fractions import Fraction

import pytest

from modular_fiber.fiber_decomposition import (
    build_fiber_decomposition, fiber_cylinder_index, lattice_class, lattice_class_counts, leaf_torsion_count,
    leaf_torsion_points, orbit_cylinder_intersections, width_inverse_square_sum,
)
from modular_fiber.spine import all_spine_segments, spine_point_at, spine_points, spine_segments
from modular_group.orbits import torsion_points
from number_theory.arithmetic_functions import divisors, jordan_totient2
from symmetric_surfaces.twist import TwistPoint
from utils.errors import DivisibilityError, DomainError

F = Fraction


def test_fiber_cylinders_of_d4():
    fiber = build_fiber_decomposition(4)
    assert fiber.area == 16
    assert [c.interior_widths for c in fiber.cylinders] == [
        [(4, 1), (1, 4)], [(1, 4), (2, 2)], [(2, 2), (1, 4)], [(1, 4), (4, 1)],
    ]
    assert fiber.cylinders[2].boundary_widths == [(2, 2)]


def test_fiber_weights():
    fiber = build_fiber_decomposition(2)
    assert fiber.cylinders[0].interior_weight == F(2) + F(1, 4)
    assert fiber.cylinders[0].boundary_weight == 2
    assert width_inverse_square_sum([(3, 3)]) == F(1, 3)


def test_fiber_rejects_bad_d():
    with pytest.raises(DomainError):
        build_fiber_decomposition(0)


@pytest.mark.parametrize("twist, expected", [
    ((F(3, 10), F(17, 10)), (1, False)),
    ((F(1, 2), F(2)), (2, True)),
    ((F(1, 2), F(0)), (0, True)),
])
def test_fiber_cylinder_index(twist, expected):
    assert fiber_cylinder_index(TwistPoint(t_h=twist[0], t_v=twist[1], modulus=4)) == expected


def test_fiber_cylinder_index_float_tolerance():
    twist = TwistPoint(t_h=0.3, t_v=2.9999999999, modulus=4)
    assert fiber_cylinder_index(twist, epsilon=1e-9) == (3, True)
    assert fiber_cylinder_index(twist) == (2, False)


def test_leaf_torsion_count_against_enumeration():
    for d in (1, 2, 3, 4):
        for n in (2, 3, 4, 6, 9):
            orbit = torsion_points(d, n)
            counts = [leaf_torsion_count(d, n, a) for a in range(1, n + 1)]
            assert counts == [leaf_torsion_points(orbit, a, n) for a in range(1, n + 1)]
            assert sum(counts) == len(orbit)


def test_leaf_torsion_count_domain():
    with pytest.raises(DomainError):
        leaf_torsion_count(2, 3, 0)


def test_orbit_intersections_of_the_order_two_orbit():
    (hits,) = orbit_cylinder_intersections(torsion_points(1, 2), 1)
    assert (hits.interior, hits.boundary, hits.lattice) == (2, 1, 0)


def test_orbit_intersections_add_up():
    orbit = torsion_points(3, 4)
    hits = orbit_cylinder_intersections(orbit, 3)
    assert sum(h.interior + h.boundary for h in hits) == len(orbit)


def test_orbit_intersections_reject_wrong_modulus():
    with pytest.raises(DomainError):
        orbit_cylinder_intersections(torsion_points(2, 3), 3)


def test_lattice_classes():
    assert lattice_class(0, 0, 6) == 6
    assert lattice_class(2, 4, 6) == 2
    for d in (1, 2, 6, 12):
        counts = lattice_class_counts(d)
        assert set(counts) == set(divisors(d))
        assert all(counts[m] == jordan_totient2(d // m) for m in counts)


def test_spine_segments():
    assert len(all_spine_segments(4)) == 16
    assert len(spine_segments(5, 1)) == 25
    touching_origin = spine_segments(5, 5)
    assert {s.start for s in touching_origin} == {(0, 0), (4, 0)}
    assert all(segment.length == 1 for segment in touching_origin)


def test_spine_segments_reject_non_divisor():
    with pytest.raises(DivisibilityError):
        spine_segments(6, 4)


def test_spine_points_on_the_torus():
    points = spine_points(torsion_points(1, 5))
    assert sorted(p.left_distance for p in points) == [F(1, 5), F(2, 5), F(3, 5), F(4, 5)]
    assert all(p.left_distance + p.right_distance == 1 for p in points)


def test_spine_points_filtered_by_class():
    orbit = torsion_points(2, 3)
    everything = spine_points(orbit)
    assert all(p.y.denominator == 1 and p.x.denominator != 1 for p in everything)
    by_class = spine_points(orbit, 2)
    assert by_class and all(p.segment.touches(2) for p in by_class)
    assert len(spine_points(orbit, 1)) + len(by_class) >= len(everything)


def test_spine_point_at():
    point = spine_point_at(F(7, 3), F(1), 4)
    assert point.segment.start == (2, 1)
    assert point.segment.end == (3, 1)
    assert point.left_distance == F(1, 3)
    with pytest.raises(ValueError):
        spine_point_at(F(1, 2), F(1, 2), 4)
