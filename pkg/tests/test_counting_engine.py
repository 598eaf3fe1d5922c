import math
from fractions import Fraction

import numpy as np
import pytest

from counting_engine.cylinder_counter import count_cylinders, count_cylinders_many
from counting_engine.growth_report import REPORT_COLUMNS, CountKind, growth_report, predicted_constant
from counting_engine.saddle_counter import count_saddles, count_saddles_many, saddle_class_counts
from counting_engine.sweep import SweepPool, needs_wide_ints, threshold_histogram
from number_theory.lattice_vectors import primitive_vectors
from symmetric_surfaces.cylinder_decomposition import decompose_direction
from symmetric_surfaces.saddle_connections import saddle_connections_upto
from symmetric_surfaces.surface_model import build
from utils.errors import DegenerateSurfaceError, DivisibilityError, DomainError

F = Fraction
GENERIC_TWIST = (math.sqrt(2) - 1, math.sqrt(3) - 1)
# base orders near 10^9 and 10^36 push exact sweeps past int64
LARGE_ORDER_TWIST = (F(414213562, 1000000007), F(732050807, 1000000007))
HUGE_ORDER_TWIST = (F(123456789123456789, 10 ** 18 + 7), F(987654321987654321, 10 ** 18 + 9))


def _cylinders_by_hand(surface, T):
    total = 0
    for p, q in primitive_vectors(T):
        for group in decompose_direction(surface, p, q).groups:
            if group.width < T:
                total += group.count
    return total


def test_threshold_histogram():
    keys = np.array([1.0, 2.0, 2.0, 5.0])
    weights = np.array([1, 2, 3, 4])
    thresholds = np.array([2.0, 5.0, 6.0])
    assert threshold_histogram(keys, weights, thresholds, strict=True).tolist() == [1, 6, 10]
    assert threshold_histogram(keys, weights, thresholds, strict=False).tolist() == [6, 10, 10]


def test_sweep_pool_partition_is_independent_of_workers():
    rows = np.arange(-10, 11)
    one, four = SweepPool(1, 4), SweepPool(4, 4)
    assert [b.tolist() for b in one.partition(rows)] == [b.tolist() for b in four.partition(rows)]
    with pytest.raises(ValueError):
        SweepPool(0)


def test_marked_torus_cylinder_count():
    surface = build(1, (F(1, 2), 0))
    assert count_cylinders(surface, 1.01) == 6
    assert count_cylinders(surface, 1.0) == 0


@pytest.mark.parametrize("d, twist", [
    (1, (F(1, 2), 0)),
    (2, (F(1, 3), F(1, 2))),
    (4, (F(7, 5), F(5, 2))),
    (3, GENERIC_TWIST),
])
def test_cylinder_count_matches_direction_by_direction_sum(d, twist):
    surface = build(d, twist)
    for T in (2.5, 7.0, 12.3):
        assert count_cylinders(surface, T) == _cylinders_by_hand(surface, T)


def test_cylinder_counts_are_monotone():
    surface = build(2, (F(1, 3), F(1, 2)))
    counts = count_cylinders_many(surface, [5, 10, 20, 40])
    assert counts == sorted(counts)
    assert counts == [count_cylinders(surface, T) for T in (5, 10, 20, 40)]


def test_cylinder_counts_are_deterministic_across_workers():
    surface = build(3, (F(2, 7), F(4, 3)))
    reference = count_cylinders_many(surface, [20, 60], workers=1)
    for workers, rows_per_task in [(2, 64), (8, 16), (1, 7)]:
        assert count_cylinders_many(surface, [20, 60], workers, rows_per_task) == reference


def test_counts_reject_bad_input():
    surface = build(2, (F(1, 3), F(1, 2)))
    with pytest.raises(DomainError):
        count_cylinders_many(surface, [10, 5])
    with pytest.raises(DomainError):
        count_saddles_many(surface, [0, 5])
    with pytest.raises(DegenerateSurfaceError):
        count_cylinders(build(2, (1, 1)), 10)
    with pytest.raises(DivisibilityError):
        count_saddles(surface, 10, m_filter=3)


def test_marked_torus_saddle_counts():
    surface = build(1, (F(1, 2), 0))
    assert count_saddles(surface, 0.6) == 4
    assert count_saddles(surface, 1.2) == 12


@pytest.mark.parametrize("d, twist", [(1, (F(1, 2), 0)), (4, (F(5, 2), F(1, 3))), (2, GENERIC_TWIST)])
def test_saddle_count_matches_listing(d, twist):
    surface = build(d, twist)
    for T in (1.5, 4.0, 9.7):
        listed = saddle_connections_upto(surface, T)
        assert count_saddles(surface, T) == 2 * d * len(listed)
        by_class = saddle_class_counts(surface, [T])
        for m, counts in by_class.items():
            assert counts[0] == 2 * d * sum(1 for c in listed if c.m_class == m)


def test_saddle_counts_carry_the_cover_factor():
    base = build(1, (F(2, 5), F(2, 5)))
    T_list = [5, 15, 25]
    expected = count_saddles_many(base, T_list)
    for d in (2, 3, 4, 5, 6):
        cover = build(d, (F(2, 5) + d - 1, F(2, 5) + d // 2))
        assert count_saddles_many(cover, T_list) == [d * c for c in expected], d


def test_wide_int_threshold():
    assert not needs_wide_ints(2 ** 62 - 1)
    assert needs_wide_ints(2 ** 62)
    assert needs_wide_ints(2 * (1000000007 * 13) ** 2)


@pytest.mark.parametrize("d, offset", [(1, (0, 0)), (4, (2, 1))])
def test_saddle_counts_for_large_twist_orders(d, offset):
    surface = build(d, (LARGE_ORDER_TWIST[0] + offset[0], LARGE_ORDER_TWIST[1] + offset[1]))
    for T in (3.5, 10):
        listed = saddle_connections_upto(surface, T)
        assert count_saddles(surface, T) == 2 * d * len(listed)
        by_class = saddle_class_counts(surface, [T])
        for m, counts in by_class.items():
            assert counts[0] == 2 * d * sum(1 for c in listed if c.m_class == m)


def test_counts_for_huge_twist_orders():
    surface = build(3, HUGE_ORDER_TWIST)
    for T in (2.5, 6.0):
        assert count_cylinders(surface, T) == _cylinders_by_hand(surface, T)
        assert count_saddles(surface, T) == 6 * len(saddle_connections_upto(surface, T))


def test_class_counts_add_up():
    surface = build(6, (F(13, 4), F(7, 3)))
    T_list = [10, 30]
    by_class = saddle_class_counts(surface, T_list)
    assert sorted(by_class) == [1, 2, 3, 6]
    totals = [sum(column) for column in zip(*by_class.values())]
    assert totals == count_saddles_many(surface, T_list)
    assert count_saddles_many(surface, T_list, m_filter=2) == by_class[2]


def test_saddle_counts_are_deterministic_across_workers():
    surface = build(4, (F(1, 6), F(9, 4)))
    reference = saddle_class_counts(surface, [15, 40])
    assert saddle_class_counts(surface, [15, 40], workers=3, rows_per_task=5) == reference


def test_predicted_constants():
    assert predicted_constant(build(2, GENERIC_TWIST), CountKind.CYLINDERS).coefficient == F(9, 4)
    assert predicted_constant(build(2, (F(2, 3), 0)), CountKind.CYLINDERS).coefficient == F(35, 16)
    saddles = predicted_constant(build(1, (F(1, 5), 0)), CountKind.SADDLES_ALL)
    assert saddles.growth_rate == pytest.approx(5.664, abs=1e-3)
    assert predicted_constant(build(1, GENERIC_TWIST), CountKind.SADDLES_ALL).growth_rate == pytest.approx(2 * math.pi)
    with pytest.raises(DomainError):
        predicted_constant(build(2, GENERIC_TWIST), CountKind.SADDLES_M_CLASS)


def test_growth_report_frame():
    report = growth_report(build(1, (F(1, 2), 0)), [10, 20, 40], CountKind.CYLINDERS)
    frame = report.to_frame()
    assert list(frame.columns) == REPORT_COLUMNS
    assert frame["N"].tolist() == count_cylinders_many(build(1, (F(1, 2), 0)), [10, 20, 40])
    assert (frame["predicted"] == report.constant.growth_rate).all()
    assert report.final_error == pytest.approx(abs(frame["N_over_T2"].iloc[-1] - frame["predicted"].iloc[-1])
                                               / frame["predicted"].iloc[-1])


@pytest.mark.slow
def test_generic_d1_cylinder_growth():
    report = growth_report(build(1, GENERIC_TWIST), [2000], CountKind.CYLINDERS)
    assert report.constant.coefficient == 2
    assert report.final_error < 0.03


@pytest.mark.slow
def test_generic_d2_cylinder_growth():
    report = growth_report(build(2, GENERIC_TWIST), [1000, 3000], CountKind.CYLINDERS)
    assert report.constant.coefficient == F(9, 4)
    assert report.final_error < 0.03


@pytest.mark.slow
def test_generic_d6_cylinder_growth():
    report = growth_report(build(6, GENERIC_TWIST), [2000], CountKind.CYLINDERS)
    assert report.constant.coefficient == F(29, 12)
    assert report.final_error < 0.05


@pytest.mark.slow
@pytest.mark.parametrize("d, twist, expected", [(2, (F(2, 3), 0), F(35, 16)), (1, (F(1, 2), 0), F(5, 3))])
def test_torsion_cylinder_growth(d, twist, expected):
    report = growth_report(build(d, twist), [2000], CountKind.CYLINDERS)
    assert report.constant.coefficient == expected
    assert report.final_error < 0.03


@pytest.mark.slow
def test_generic_saddle_growth():
    report = growth_report(build(1, GENERIC_TWIST), [1000], CountKind.SADDLES_ALL)
    assert report.rows[-1].N_over_T2 == pytest.approx(2 * math.pi, rel=0.01)


@pytest.mark.slow
def test_torsion_saddle_growth():
    report = growth_report(build(1, (F(1, 5), 0)), [1000], CountKind.SADDLES_ALL)
    assert report.rows[-1].N_over_T2 == pytest.approx(5.664, rel=0.03)


@pytest.mark.slow
@pytest.mark.parametrize("d", [2, 4, 6])
def test_m_class_saddle_growth(d):
    surface = build(d, GENERIC_TWIST)
    for m in (1, d):
        report = growth_report(surface, [600], CountKind.SADDLES_M_CLASS, m)
        assert report.final_error < 0.03
