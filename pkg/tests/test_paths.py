from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lsplacto.errors import IndexOutOfRange
from lsplacto.exact import vadd, vec, vzero
from lsplacto.paths import (
    Path,
    canonical_from_segments,
    concat,
    equals,
    h_function,
    path_from_json,
    path_to_json,
    straight_path,
    trivial_path,
    weight_of,
)

from conftest import ALPHA2, EPS1, EPS2, EPS3

F = Fraction

small_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)
displacements_2d = st.lists(
    st.tuples(small_rationals, small_rationals), min_size=0, max_size=5
)


def path_2d(disps):
    return canonical_from_segments([vec(d) for d in disps], dim=2)


class TestCanonical:
    def test_empty_is_trivial(self):
        assert path_2d([]) == trivial_path(2)
        assert trivial_path(2).breakpoints == (vzero(2),)

    def test_collinear_merge(self):
        p = path_2d([(1, 0), (1, 0)])
        assert p.breakpoints == (vec((0, 0)), vec((2, 0)))

    def test_pi4_not_merged(self):
        # down half-alpha2 then back up: a genuine corner, never merged
        p = canonical_from_segments(
            [vec((F(1, 2), -1)), vec((F(-1, 2), 1))], dim=2
        )
        assert p.breakpoints == (vzero(2), vec((F(1, 2), -1)), vzero(2))

    def test_zero_segments_dropped(self):
        p = path_2d([(0, 0), (1, 0), (0, 0)])
        assert p == straight_path((1, 0))

    @given(displacements_2d)
    def test_idempotent(self, disps):
        p = path_2d(disps)
        assert canonical_from_segments(list(p.displacements), dim=2) == p


class TestConcat:
    def test_unit_law(self):
        p = straight_path(EPS1)
        assert concat(trivial_path(2), p) == p
        assert concat(p, trivial_path(2)) == p

    def test_eps1_then_eps2(self):
        p = concat(straight_path(EPS1), straight_path(EPS2))
        assert p.breakpoints == (vec((0, 0)), vec((1, 0)), vec((0, 1)))

    @given(displacements_2d, displacements_2d, displacements_2d)
    def test_associative(self, d1, d2, d3):
        a, b, c = path_2d(d1), path_2d(d2), path_2d(d3)
        assert concat(concat(a, b), c) == concat(a, concat(b, c))

    @given(displacements_2d, displacements_2d)
    def test_weight_additive(self, d1, d2):
        a, b = path_2d(d1), path_2d(d2)
        assert weight_of(concat(a, b)) == vadd(weight_of(a), weight_of(b))


class TestWeight:
    def test_straight(self):
        assert weight_of(straight_path((1, 1))) == vec((1, 1))

    def test_pi4(self):
        pi4 = canonical_from_segments(
            [vec((F(1, 2), -1)), vec((F(-1, 2), 1))], dim=2
        )
        assert weight_of(pi4) == vzero(2)

    def test_trivial(self):
        assert weight_of(trivial_path(2)) == vzero(2)


class TestHFunction:
    def test_straight_dominant(self):
        h = h_function(straight_path((1, 1)), 1)
        assert h.samples == (0, 1)
        assert h.min_value == 0

    def test_bent_path(self):
        p = concat(straight_path(EPS2), straight_path(EPS1))
        h = h_function(p, 1)
        assert h.samples == (0, -1, 0)
        assert h.min_value == -1

    def test_pi4(self):
        pi4 = canonical_from_segments(
            [vec((F(1, 2), -1)), vec((F(-1, 2), 1))], dim=2
        )
        assert h_function(pi4, 2).samples == (0, -1, 0)

    def test_index_error(self):
        with pytest.raises(IndexOutOfRange):
            h_function(straight_path((1, 1)), 3)

    def test_crossing_positions(self):
        p = concat(straight_path(EPS2), straight_path(EPS1))
        h = h_function(p, 1)
        assert h.first_attainment(F(-1)) == (0, 1)
        assert h.first_crossing_after(F(0), 1) == (1, 1)
        assert h.last_attainment_before(F(0), 1) == (0, 0)


class TestEquals:
    def test_trivial(self):
        assert equals(trivial_path(2), trivial_path(2))

    def test_reparametrized_halves(self):
        halves = canonical_from_segments(
            [vec((F(1, 2), 0)), vec((F(1, 2), 0))], dim=2
        )
        assert equals(halves, straight_path(EPS1))

    def test_distinct(self):
        assert not equals(straight_path(EPS1), straight_path(EPS2))


class TestSerialization:
    def test_roundtrip_examples(self):
        pi4 = canonical_from_segments(
            [vec((F(1, 2), -1)), vec((F(-1, 2), 1))], dim=2
        )
        data = path_to_json(pi4)
        assert data == [["0", "0"], ["1/2", "-1"], ["0", "0"]]
        assert path_from_json(data) == pi4

    @given(displacements_2d)
    def test_roundtrip(self, disps):
        p = path_2d(disps)
        assert path_from_json(path_to_json(p)) == p
