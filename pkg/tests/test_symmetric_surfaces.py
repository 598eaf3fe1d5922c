import math
from fractions import Fraction

import pytest

from modular_group.matrices import random_word, reduce_to_horizontal
from symmetric_surfaces.cylinder_decomposition import decompose_direction, simple_direction_data
from symmetric_surfaces.flow_tracer import trace_decompose, trace_leaf
from symmetric_surfaces.saddle_connections import saddle_connections_upto
from symmetric_surfaces.surface_model import build, components, cone_data, sheet_components
from symmetric_surfaces.twist import TwistPoint, parse_twist
from utils.errors import (
    ConePointHitError, DegenerateSurfaceError, DivisibilityError, NonDegenerateSurfaceError,
    NonPrimitiveDirectionError, TwistParseError,
)

F = Fraction


def _directions(bound):
    return [(p, q) for p in range(-bound, bound + 1) for q in range(-bound, bound + 1) if math.gcd(p, q) == 1]


def test_twist_normalisation():
    twist = TwistPoint(t_h=F(7, 2), t_v=F(-1, 3), modulus=2)
    assert (twist.t_h, twist.t_v) == (F(3, 2), F(5, 3))
    assert (twist.h, twist.v) == (1, 1)
    assert twist.fractional == (F(1, 2), F(2, 3))
    assert twist.base_order == 6


def test_mixed_coordinates_become_float():
    twist = TwistPoint(t_h=F(1, 2), t_v=0.25, modulus=1)
    assert not twist.exact
    assert twist.t_h == 0.5


def test_parse_twist_modes():
    assert parse_twist("1/3,1/2", 2).exact
    assert not parse_twist("0.3,1.7", 4).exact
    exact = parse_twist("0.3,1.7", 4, exact=True)
    assert (exact.t_h, exact.t_v) == (F(3, 10), F(17, 10))


@pytest.mark.parametrize("text", ["1/2", "1/2,1/3,1", "a,b", "1/0,1", "0.5,1/2", ","])
def test_parse_twist_errors(text):
    with pytest.raises(TwistParseError):
        parse_twist(text, 2)


def test_build_examples():
    marked_torus = build(1, (F(1, 2), 0))
    assert not marked_torus.degenerate
    assert not build(2, (F(3, 2), F(5, 2))).degenerate
    assert build(3, (3, 0)).degenerate
    assert build(3, (2.9999999999, 0.0)).degenerate


@pytest.mark.parametrize("d", [1, 2, 5])
def test_cone_data(d):
    cones = cone_data(build(d, (F(1, 3), F(1, 2))))
    assert cones.genus == d
    assert cones.cone_points == 2
    assert cones.cone_angles == pytest.approx([2 * math.pi * d] * 2)
    assert cones.zero_orders == [d - 1, d - 1]


def test_cone_data_with_integer_parts():
    cones = cone_data(build(4, (F(5, 2), F(7, 3))))
    assert cones.genus == 4
    assert cones.local_monodromy[0] != 0


def test_cone_data_rejects_degenerate():
    with pytest.raises(DegenerateSurfaceError):
        cone_data(build(2, (1, 1)))


@pytest.mark.parametrize("d, twist, count, area, width", [
    (6, (2, 4), 2, 3, 3),
    (5, (1, 0), 1, 5, 1),
    (4, (0, 0), 4, 1, 1),
])
def test_components(d, twist, count, area, width):
    structure = components(build(d, twist))
    assert structure.components == count
    assert structure.component_area == area
    assert structure.horizontal_width == width
    assert structure.horizontal_cylinders_per_component * structure.components * structure.horizontal_width == d
    assert sorted(sheet for group in structure.sheet_components for sheet in group) == list(range(d))


def test_components_rejects_non_degenerate():
    with pytest.raises(NonDegenerateSurfaceError):
        components(build(2, (F(1, 2), 0)))


def test_sheet_components():
    assert sheet_components(6, [2, -4]) == [[0, 2, 4], [1, 3, 5]]
    assert sheet_components(5, [0, 0]) == [[0], [1], [2], [3], [4]]


def test_horizontal_decomposition_inside_a_fiber_cylinder():
    decomposition = decompose_direction(build(5, (F(1, 3), F(1, 2))), 1, 0)
    assert decomposition.shape() == [(1, 5), (5, 1)]
    assert decomposition.total_area == 5


def test_decomposition_examples():
    inside = decompose_direction(build(4, parse_twist("0.3,1.7", 4)), 1, 0)
    assert inside.shape() == [(1, 4), (2, 2)]
    boundary = decompose_direction(build(4, parse_twist("0.3,2.0", 4)), 1, 0)
    assert boundary.shape() == [(2, 2)]
    assert [group.width for group in boundary.groups] == pytest.approx([2.0])


def test_marked_torus_horizontal_cylinders():
    decomposition = trace_decompose(build(1, (F(1, 5), F(1, 3))), 1, 0)
    assert decomposition.shape() == [(1, 1), (1, 1)]
    assert sorted(group.band for group in decomposition.groups) == [F(1, 3), F(2, 3)]


@pytest.mark.parametrize("d, twist, direction", [
    (2, (F(1, 3), F(1, 2)), (1, 0)),
    (3, (F(1, 2), F(1, 2)), (1, 1)),
    (4, (F(3, 10), F(17, 10)), (1, 0)),
    (6, (F(7, 5), F(11, 3)), (2, -3)),
])
def test_trace_matches_formula(d, twist, direction):
    surface = build(d, twist)
    formula = decompose_direction(surface, *direction)
    traced = trace_decompose(surface, *direction)
    assert formula.matches(traced)
    assert formula.total_area == d


def test_trace_matches_formula_on_many_directions():
    for d, twist in [(2, (F(2, 7), F(5, 11))), (3, (F(4, 3), F(1, 5))), (5, (F(9, 4), F(3, 7)))]:
        surface = build(d, twist)
        for p, q in _directions(4):
            assert decompose_direction(surface, p, q).matches(trace_decompose(surface, p, q)), (d, twist, p, q)


def test_trace_float_twist():
    surface = build(3, (0.4142135623730951, 1.7320508075688772))
    for p, q in _directions(3):
        assert decompose_direction(surface, p, q).matches(trace_decompose(surface, p, q), tolerance=1e-9)


def test_widths_scale_with_direction_length():
    decomposition = decompose_direction(build(3, (F(1, 2), F(1, 2))), 1, 1)
    for group in decomposition.groups:
        assert group.width == pytest.approx(group.circumference * math.sqrt(2))


def test_decompose_rejects_bad_input():
    surface = build(2, (F(1, 3), F(1, 2)))
    with pytest.raises(NonPrimitiveDirectionError):
        decompose_direction(surface, 2, 2)
    with pytest.raises(DegenerateSurfaceError):
        decompose_direction(build(2, (1, 0)), 1, 0)


def test_trace_leaf_rejects_singular_leaf():
    surface = build(2, (F(1, 3), F(1, 2)))
    with pytest.raises(ConePointHitError):
        trace_leaf(surface, 1, 0, (F(0), F(0)))
    with pytest.raises(ConePointHitError):
        trace_leaf(surface, 1, 0, (F(1, 7), F(1, 2)))


def test_decomposition_is_equivariant(rng):
    surface = build(4, (F(3, 7), F(9, 5)))
    for _ in range(20):
        A = random_word(rng, rng.randint(1, 12))
        p, q = A.inverse().apply(1, 0)
        moved = build(4, surface.twist.act(A))
        original = decompose_direction(surface, p, q)
        assert original.shape() == decompose_direction(moved, 1, 0).shape()
        bands = sorted(group.band for group in original.groups)
        assert bands == sorted(group.band for group in decompose_direction(moved, 1, 0).groups)


def test_simple_direction():
    surface = build(4, (F(1, 2), 2))
    data = simple_direction_data(surface, 1, 0)
    assert data.simple
    assert data.k == 2
    assert data.cylinders == 2
    assert not simple_direction_data(surface, 0, 1).simple


def test_reduction_used_by_decomposition():
    A = reduce_to_horizontal(3, 2)
    surface = build(2, (F(1, 3), F(1, 5)))
    t_v = A.apply(surface.twist.t_h, surface.twist.t_v)[1] % 2
    decomposition = decompose_direction(surface, 3, 2)
    total_band = sum(group.band for group in decomposition.groups)
    assert total_band == 1
    assert len(decomposition.groups) == (1 if t_v.denominator == 1 else 2)


def test_saddle_connections_of_the_marked_torus():
    surface = build(1, (F(1, 2), 0))
    short = saddle_connections_upto(surface, 0.6)
    assert {c.holonomy for c in short} == {(F(1, 2), 0), (F(-1, 2), 0)}
    longer = saddle_connections_upto(surface, 1.2)
    assert len(longer) == 6
    assert {c.holonomy for c in longer} >= {(F(1, 2), 1), (F(-1, 2), -1)}
    assert [c.length for c in longer] == sorted(c.length for c in longer)


def test_saddle_connection_visibility():
    # the segment to (5/3, 0) runs through (1, 0)
    surface = build(1, (F(2, 3), 0))
    holonomies = {c.holonomy for c in saddle_connections_upto(surface, 1.8)}
    assert (F(-1, 3), 0) in holonomies
    assert (F(2, 3), 0) in holonomies
    assert (F(5, 3), 0) not in holonomies


def test_saddle_connection_classes():
    surface = build(4, (F(5, 2), F(1, 3)))
    connections = saddle_connections_upto(surface, 3.0)
    for connection in connections:
        z1, z2 = connection.lattice_offset
        assert connection.m_class == math.gcd(math.gcd(surface.h - z1, surface.v - z2), 4)
        assert connection.base_multiplicity == 4
    only_two = saddle_connections_upto(surface, 3.0, m_filter=2)
    assert only_two and all(c.m_class == 2 for c in only_two)
    assert len(only_two) == sum(1 for c in connections if c.m_class == 2)


def test_saddle_connections_reject_bad_filter():
    with pytest.raises(DivisibilityError):
        saddle_connections_upto(build(4, (F(1, 2), 0)), 2.0, m_filter=3)


def _random_twist(rng, d):
    while True:
        denominators = rng.randint(2, 12), rng.randint(2, 12)
        twist = tuple(F(rng.randrange(d * n), n) for n in denominators)
        if not all(t.denominator == 1 for t in twist):
            return twist


def test_quarter_turn_symmetry(rng):
    for d in range(1, 7):
        for _ in range(5):
            twist = TwistPoint(t_h=F(rng.randrange(7 * d), 7), t_v=F(rng.randrange(5 * d), 5), modulus=d)
            if build(d, twist).degenerate:
                continue
            surface, turned = build(d, twist), build(d, twist.rotate_quarter())
            for p, q in _directions(4):
                assert decompose_direction(surface, p, q).signature() == \
                    decompose_direction(turned, -q, p).signature(), (d, twist, p, q)


def test_involution_symmetry(rng):
    for d in range(1, 7):
        for _ in range(5):
            twist = TwistPoint(t_h=F(rng.randrange(3 * d), 3), t_v=F(rng.randrange(8 * d), 8), modulus=d)
            if build(d, twist).degenerate:
                continue
            surface, flipped = build(d, twist), build(d, twist.negate())
            for p, q in _directions(4):
                signature = decompose_direction(surface, p, q).signature()
                assert decompose_direction(flipped, p, q).signature() == signature, (d, twist, p, q)
                assert decompose_direction(surface, -p, -q).signature() == signature, (d, twist, p, q)


@pytest.mark.slow
def test_trace_matches_formula_on_random_rational_twists(rng):
    directions = _directions(5)
    for d in range(1, 7):
        for _ in range(25):
            surface = build(d, _random_twist(rng, d))
            for p, q in directions:
                formula = decompose_direction(surface, p, q)
                assert formula.matches(trace_decompose(surface, p, q)), (d, surface.twist, p, q)
                assert formula.total_area == d


def test_degenerate_components_for_every_lattice_twist():
    for d in range(1, 9):
        for j in range(d):
            for k in range(d):
                structure = components(build(d, (j, k)))
                count = math.gcd(math.gcd(j, k), d)
                assert structure.components == count, (d, j, k)
                assert structure.component_area == d // count
                assert structure.horizontal_cylinders_per_component == math.gcd(k, d) // count
                assert structure.horizontal_width == d // math.gcd(k, d)
                assert structure.vertical_cylinders_per_component == math.gcd(j, d) // count
                assert structure.vertical_width == d // math.gcd(j, d)
                assert structure.horizontal_cylinders_per_component * structure.horizontal_width == d // count
                assert structure.vertical_cylinders_per_component * structure.vertical_width == d // count
                assert [len(group) for group in structure.sheet_components] == [d // count] * count
                assert sorted(sheet for group in structure.sheet_components for sheet in group) == list(range(d))
