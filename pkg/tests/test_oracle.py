import os

import pytest

from polyprism.core import Cell, FamilyTag, Polycube, PrismDims, is_inscribed, min_volume
from polyprism.formulas import p2d_min, p3d_corner_rec, p3dmin_thickness2
from polyprism.oracle import (
    EnumerationConfig,
    _threads,
    classify,
    count_2d_min,
    count_by_family,
    count_connected,
    count_min_corner,
    count_min_inscribed,
    iter_min_inscribed,
    weighted_2d_count,
)


class TestEnumerationConfig:
    def test_rejects_bad_volume(self):
        with pytest.raises(ValueError):
            EnumerationConfig(dims=PrismDims(2, 2, 2), volume=0)

    def test_rejects_bad_corner_flags(self):
        with pytest.raises(ValueError):
            EnumerationConfig(
                dims=PrismDims(2, 2, 2), volume=4, corner_constraint=(0, 2, 0)
            )


class TestCountConnected:
    def test_all_dominoes_in_a_cube(self):
        cfg = EnumerationConfig(dims=PrismDims(2, 2, 2), volume=2)
        assert count_connected(cfg) == 12  # edges of the 2x2x2 cell graph

    def test_volume_above_box_is_zero(self):
        cfg = EnumerationConfig(dims=PrismDims(2, 2, 1), volume=5)
        assert count_connected(cfg) == 0

    def test_inscribed_below_min_volume_is_zero(self):
        cfg = EnumerationConfig(dims=PrismDims(3, 3, 3), volume=6, inscribed_only=True)
        assert count_connected(cfg) == 0


class TestMinimalCounts:
    @pytest.mark.parametrize("n,expected", [(1, 1), (2, 32), (3, 2401)])
    def test_small_cubes(self, n, expected):
        assert count_min_inscribed(PrismDims(n, n, n)) == expected

    def test_thickness_two_matches_formula(self):
        for b in range(2, 6):
            for k in range(2, 6):
                assert count_min_inscribed(PrismDims(2, b, k)) == p3dmin_thickness2(b, k)

    def test_degenerate_reduces_to_2d(self):
        for b in range(1, 7):
            for k in range(1, 7):
                assert count_2d_min(b, k) == p2d_min(b, k)

    def test_permutation_invariance(self):
        for dims in ((2, 3, 4), (1, 3, 4), (2, 2, 3)):
            b, k, h = dims
            reference = count_min_inscribed(PrismDims(b, k, h))
            assert count_min_inscribed(PrismDims(h, b, k)) == reference
            assert count_min_inscribed(PrismDims(k, h, b)) == reference


class TestCornerCounts:
    def test_matches_recurrence(self):
        for b in range(1, 5):
            for k in range(1, 5):
                for h in range(1, 5):
                    assert count_min_corner(PrismDims(b, k, h)) == p3d_corner_rec(b, k, h)

    def test_any_corner_gives_the_same_count(self):
        d = PrismDims(2, 3, 4)
        counts = {
            count_min_corner(d, corner=(fx, fy, fz))
            for fx in (0, 1)
            for fy in (0, 1)
            for fz in (0, 1)
        }
        assert counts == {p3d_corner_rec(2, 3, 4)}


class TestWeighted2D:
    def test_degenerate_single_cell(self):
        assert weighted_2d_count(1, 1) == 1

    def test_matches_thickness_two_formula(self):
        for b in range(2, 7):
            for k in range(2, 7):
                assert weighted_2d_count(b, k) == p3dmin_thickness2(b, k)


class TestIteration:
    def test_yields_each_exactly_once(self):
        d = PrismDims(2, 2, 3)
        shapes = list(iter_min_inscribed(d))
        assert len(shapes) == count_min_inscribed(d)
        assert len(set(shapes)) == len(shapes)
        for p in shapes:
            assert len(p) == min_volume(d)
            assert is_inscribed(p)


def _cube(cells):
    dims = PrismDims(
        1 + max(c[0] for c in cells),
        1 + max(c[1] for c in cells),
        1 + max(c[2] for c in cells),
    )
    return Polycube(dims, [Cell(*c) for c in cells])


class TestClassify:
    def test_stair_is_diagonal(self):
        p = _cube([(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)])
        assert classify(p) is FamilyTag.DIAGONAL

    def test_skew_lines_are_2dx2d(self):
        # two perpendicular full pilars joined by a unit bridge (2x3x3)
        p = _cube(
            [(0, 0, 1), (0, 1, 1), (0, 2, 1), (1, 1, 0), (1, 1, 1), (1, 1, 2)]
        )
        assert classify(p) is FamilyTag.TWO_D_X_TWO_D

    def test_skew_cross_type_b(self):
        # central cell (1,1,1) with three cyclically skewed planar arms
        p = _cube(
            [
                (1, 1, 1),
                (2, 1, 1), (2, 1, 0),
                (1, 0, 1), (0, 0, 1),
                (1, 1, 2), (1, 2, 2),
            ]
        )
        assert classify(p) is FamilyTag.SKEW_CROSS_B

    def test_skew_cross_type_a(self):
        # two arms share the y contact axis; the three arm planes stay
        # mutually perpendicular
        p = _cube(
            [
                (1, 1, 1),
                (1, 0, 1), (0, 0, 1),
                (1, 2, 1), (1, 2, 0),
                (2, 1, 1), (2, 1, 2),
            ]
        )
        assert classify(p) is FamilyTag.SKEW_CROSS_A

    def test_rejects_non_inscribed(self):
        p = Polycube(PrismDims(2, 1, 1), [Cell(0, 0, 0)])
        with pytest.raises(ValueError):
            classify(p)

    def test_rejects_non_minimal(self):
        p = Polycube(
            PrismDims(2, 2, 1),
            [Cell(0, 0, 0), Cell(1, 0, 0), Cell(0, 1, 0), Cell(1, 1, 0)],
        )
        with pytest.raises(ValueError):
            classify(p)

    def test_partition_is_exhaustive_and_disjoint(self):
        d = PrismDims(3, 3, 3)
        tally = {tag: 0 for tag in FamilyTag}
        for p in iter_min_inscribed(d):
            tally[classify(p)] += 1
        assert tally == {
            FamilyTag.DIAGONAL: 2271,
            FamilyTag.TWO_D_X_TWO_D: 66,
            FamilyTag.SKEW_CROSS_A: 48,
            FamilyTag.SKEW_CROSS_B: 16,
        }
        assert count_by_family(d) == tally


class TestThreads:
    def test_default_is_single(self, monkeypatch):
        monkeypatch.delenv("POLYCUBE_THREADS", raising=False)
        assert _threads() == 1

    def test_rejects_non_positive(self, monkeypatch):
        monkeypatch.setenv("POLYCUBE_THREADS", "0")
        with pytest.raises(ValueError):
            _threads()

    def test_parallel_count_matches_serial(self, monkeypatch):
        serial = count_min_inscribed(PrismDims(3, 3, 3))
        monkeypatch.setenv("POLYCUBE_THREADS", "2")
        assert count_min_inscribed(PrismDims(3, 3, 3)) == serial
