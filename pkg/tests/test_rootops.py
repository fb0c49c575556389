from fractions import Fraction

import pytest

from lsplacto.crystal import dominant_monomial, generate_crystal
from lsplacto.errors import FactorBoundaryViolation, IntegralityViolation
from lsplacto.exact import surd_sum, vec
from lsplacto.paths import canonical_from_segments, equals, straight_path, weight_of
from lsplacto.rootops import (
    LOWER,
    RAISE,
    apply_e,
    apply_f,
    apply_op_mono,
    is_highest,
    is_ls_path,
    lower_by_log,
    monomial,
    raise_to_highest,
)

from conftest import ALPHA2, EPS1, EPS2, EPS3

F = Fraction
W1 = (1, 0)
W2 = (0, 1)


def pi4_path():
    return canonical_from_segments([vec((F(1, 2), -1)), vec((F(-1, 2), 1))], dim=2)


def gram_length(rs, path):
    return surd_sum([(F(1), rs.norm_squared(d)) for d in path.displacements])


class TestBarePathOperators:
    def test_e_vanishes_on_dominant(self, a2):
        assert apply_e(a2, straight_path((1, 1)), 1) is None
        assert apply_e(a2, straight_path((1, 1)), 2) is None

    def test_e_pi8_gives_pi6(self, a2):
        pi8 = straight_path((-1, -1))
        pi6 = straight_path((1, -2))  # -alpha2
        result = apply_e(a2, pi8, 1)
        assert result is not None and equals(result, pi6)

    def test_e_whole_path_reflection(self, a2):
        assert equals(apply_e(a2, straight_path(EPS2), 1), straight_path(EPS1))

    def test_f_on_highest(self, a2):
        result = apply_f(a2, straight_path((1, 1)), 1)
        assert equals(result, straight_path(ALPHA2))

    def test_f_pi2_gives_pi4(self, a2):
        pi2 = straight_path(ALPHA2)
        result = apply_f(a2, pi2, 2)
        assert equals(result, pi4_path())

    def test_f_vanishes_at_bottom(self, a2):
        pi6 = straight_path((1, -2))
        assert apply_f(a2, pi6, 2) is None

    def test_integrality_violation(self, a2):
        bad = straight_path((F(-1, 2), 0))
        with pytest.raises(IntegralityViolation):
            apply_e(a2, bad, 1)

    def test_weight_laws(self, a2):
        for path in [straight_path((1, 1)), straight_path(ALPHA2), pi4_path()]:
            for i in (1, 2):
                alpha = vec(a2.simple_root(i))
                down = apply_f(a2, path, i)
                if down is not None:
                    assert weight_of(down) == tuple(
                        w - a for w, a in zip(weight_of(path), alpha)
                    )
                up = apply_e(a2, path, i)
                if up is not None:
                    assert weight_of(up) == tuple(
                        w + a for w, a in zip(weight_of(path), alpha)
                    )

    def test_is_ls_path(self, a2):
        assert is_ls_path(a2, (1, 1), pi4_path())
        assert is_ls_path(a2, (1, 0), straight_path(EPS3))
        assert not is_ls_path(a2, (0, 1), straight_path(EPS3))


class TestMonomialOperators:
    def test_lower_second_factor(self, a2):
        m = monomial(a2, [(W1, straight_path(EPS1)), (W2, straight_path((0, 1)))])
        result = apply_op_mono(a2, m, 2, LOWER)
        expected = monomial(
            a2, [(W1, straight_path(EPS1)), (W2, straight_path((1, -1)))]
        )
        assert result == expected

    def test_raise_on_dominant(self, a2):
        m = dominant_monomial(a2, (1, 1))
        assert apply_op_mono(a2, m, 1, RAISE) is None
        assert apply_op_mono(a2, m, 2, RAISE) is None

    def test_raise_first_factor(self, a2):
        m = monomial(a2, [(W2, straight_path((-1, 0))), (W1, straight_path(EPS1))])
        result = apply_op_mono(a2, m, 1, RAISE)
        expected = monomial(
            a2, [(W2, straight_path((1, -1))), (W1, straight_path(EPS1))]
        )
        assert result == expected

    def test_factor_boundary_violation(self, a2):
        # two half-eps1 factors force any cut to straddle the boundary
        half = straight_path((F(1, 2), 0))
        m = monomial(a2, [(W1, half), (W1, half)], validate=False)
        with pytest.raises(FactorBoundaryViolation):
            apply_op_mono(a2, m, 1, LOWER)


class TestRaiseLower:
    def test_dominant_fixed(self, a2):
        d = dominant_monomial(a2, (2, 1))
        highest, log = raise_to_highest(a2, d)
        assert highest == d and log == ()

    def test_two_boxes(self, a2):
        m = monomial(a2, [(W1, straight_path(EPS2)), (W1, straight_path(EPS3))])
        highest, log = raise_to_highest(a2, m)
        expected = monomial(
            a2, [(W1, straight_path(EPS1)), (W1, straight_path(EPS2))]
        )
        assert highest == expected and log == (1, 2)

    def test_column_box(self, a2):
        m = monomial(a2, [(W2, straight_path((-1, 0))), (W1, straight_path(EPS1))])
        highest, log = raise_to_highest(a2, m)
        expected = monomial(
            a2, [(W2, straight_path((0, 1))), (W1, straight_path(EPS1))]
        )
        assert highest == expected and log == (1, 2)

    def test_lower_by_log(self, a2):
        m = monomial(a2, [(W1, straight_path(EPS1)), (W2, straight_path((0, 1)))])
        result = lower_by_log(a2, m, (1, 2))
        expected = monomial(
            a2, [(W1, straight_path(EPS2)), (W2, straight_path((1, -1)))]
        )
        assert result == expected

    def test_lower_by_empty_log(self, a2):
        d = dominant_monomial(a2, (1, 1))
        assert lower_by_log(a2, d, ()) == d

    def test_roundtrip_over_crystal(self, a2):
        graph = generate_crystal(a2, dominant_monomial(a2, (1, 1)))
        for m in graph.vertices:
            highest, log = raise_to_highest(a2, m)
            assert is_highest(a2, highest)
            assert lower_by_log(a2, highest, log) == m


@pytest.mark.parametrize(
    "label,rank,shape",
    [("A", 2, (1, 1)), ("C", 2, (1, 1)), ("B", 2, (0, 1)), ("G", 2, (1, 0))],
)
class TestCrystalWideLaws:
    def _elements(self, rs, shape):
        return generate_crystal(rs, dominant_monomial(rs, shape)).vertices

    def test_inverse_laws(self, label, rank, shape):
        from lsplacto.rootsystem import build_root_system

        rs = build_root_system(label, rank)
        for m in self._elements(rs, shape):
            p = m.concatenation
            for i in range(1, rank + 1):
                down = apply_f(rs, p, i)
                if down is not None:
                    assert equals(apply_e(rs, down, i), p)
                up = apply_e(rs, p, i)
                if up is not None:
                    assert equals(apply_f(rs, up, i), p)

    def test_length_preservation(self, label, rank, shape):
        from lsplacto.rootsystem import build_root_system

        rs = build_root_system(label, rank)
        for m in self._elements(rs, shape):
            p = m.concatenation
            base = gram_length(rs, p)
            for i in range(1, rank + 1):
                for moved in (apply_f(rs, p, i), apply_e(rs, p, i)):
                    if moved is not None:
                        assert gram_length(rs, moved) == base

    def test_mono_agrees_with_bare_path(self, label, rank, shape):
        from lsplacto.rootsystem import build_root_system

        rs = build_root_system(label, rank)
        for m in self._elements(rs, shape):
            for i in range(1, rank + 1):
                for direction, bare_op in ((LOWER, apply_f), (RAISE, apply_e)):
                    moved = apply_op_mono(rs, m, i, direction)
                    bare = bare_op(rs, m.concatenation, i)
                    if moved is None:
                        assert bare is None
                    else:
                        assert equals(moved.concatenation, bare)

    def test_raising_strategy_independent(self, label, rank, shape):
        from lsplacto.rootsystem import build_root_system

        rs = build_root_system(label, rank)
        for m in self._elements(rs, shape):
            smallest, _ = raise_to_highest(rs, m)
            # dual strategy: largest index first
            current = m
            while True:
                for i in range(rank, 0, -1):
                    lifted = apply_op_mono(rs, current, i, RAISE)
                    if lifted is not None:
                        current = lifted
                        break
                else:
                    break
            assert current == smallest
