"""Raising and lowering root operators on paths and factor-tracked monomials.

Both operators cut a path into three pieces at exact rational positions,
reflect the middle piece across the wall of one simple root, and glue the
pieces back together.  The raising cut runs from the last visit to level
Q+1 down to the first attainment of the minimum Q; the lowering cut runs
from the last attainment of Q forward to the first return to level Q+1.
All positions are found by linear interpolation in exact rationals.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional

from .errors import FactorBoundaryViolation, IntegralityViolation
from .exact import Vec, vadd, vec, vscale, vzero
from .paths import (
    Path,
    ScalarPL,
    canonical_from_segments,
    equals,
    straight_path,
    trivial_path,
    weight_of,
)
from .rootsystem import RootSystem, is_dominant, reflect

Direction = Literal["raise", "lower"]

RAISE: Direction = "raise"
LOWER: Direction = "lower"


def _h_samples(disps: list[Vec], i: int) -> ScalarPL:
    acc = Fraction(0)
    samples = [acc]
    for d in disps:
        acc += d[i - 1]
        samples.append(acc)
    return ScalarPL(tuple(samples))


def _min_level(h: ScalarPL) -> Fraction:
    q = h.min_value
    if q.denominator != 1:
        raise IntegralityViolation(
            f"minimum {q} of the pairing function is not an integer; "
            "the path is outside the supported domain"
        )
    return q


def _raise_cut(h: ScalarPL) -> Optional[tuple[tuple[int, Fraction], int]]:
    """Cut region for the raising operator, or None if it vanishes.

    Returns ((segment, fraction) of the region start, breakpoint index of
    the region end).
    """
    q = _min_level(h)
    if q >= 0:
        return None
    t1 = h.samples.index(q)  # first attainment of the minimum
    t0 = h.last_attainment_before(q + 1, t1)
    assert t0 is not None, "level Q+1 must be visited before the minimum"
    return t0, t1


def _lower_cut(h: ScalarPL) -> Optional[tuple[int, tuple[int, Fraction]]]:
    """Cut region for the lowering operator, or None if it vanishes.

    Returns (breakpoint index of the region start, (segment, fraction) of
    the region end).
    """
    q = _min_level(h)
    if h.final_value - q < 1:
        return None
    p = len(h.samples) - 1 - h.samples[::-1].index(q)  # last attainment
    x = h.first_crossing_after(q + 1, p)
    assert x is not None, "level Q+1 must be reached after the last minimum"
    return p, x


def _split_raise(
    disps: list[Vec], t0: tuple[int, Fraction], t1: int
) -> tuple[list[Vec], list[Vec], list[Vec], list[int]]:
    """Prefix / middle / suffix displacement lists plus the indices of the
    displacements contributing to the middle."""
    j0, f0 = t0
    prefix = list(disps[:j0])
    middle: list[Vec] = []
    affected: list[int] = []
    if f0 > 0:
        prefix.append(vscale(f0, disps[j0]))
    if f0 < 1:
        middle.append(vscale(1 - f0, disps[j0]))
        affected.append(j0)
    middle.extend(disps[j0 + 1 : t1])
    affected.extend(range(j0 + 1, t1))
    suffix = list(disps[t1:])
    return prefix, middle, suffix, affected


def _split_lower(
    disps: list[Vec], p: int, x: tuple[int, Fraction]
) -> tuple[list[Vec], list[Vec], list[Vec], list[int]]:
    jx, fx = x
    prefix = list(disps[:p])
    middle = list(disps[p:jx])
    middle.append(vscale(fx, disps[jx]))
    affected = list(range(p, jx + 1))
    suffix: list[Vec] = []
    if fx < 1:
        suffix.append(vscale(1 - fx, disps[jx]))
    suffix.extend(disps[jx + 1 :])
    return prefix, middle, suffix, affected


def _cut(disps: list[Vec], i: int, direction: Direction):
    """Cut region for one operator on a displacement list, or None.

    Returns (start position, end position, affected displacement indices)
    with positions as (segment index, fraction); the end of a raising
    region and the start of a lowering region are always breakpoints.
    """
    h = _h_samples(disps, i)
    if direction == RAISE:
        cut = _raise_cut(h)
        if cut is None:
            return None
        t0, t1 = cut
        j0, f0 = t0
        affected = ([j0] if f0 < 1 else []) + list(range(j0 + 1, t1))
        return t0, (t1, Fraction(0)), affected
    cut = _lower_cut(h)
    if cut is None:
        return None
    p, x = cut
    jx, _ = x
    return (p, Fraction(0)), x, affected_range(p, jx)


def affected_range(p: int, jx: int) -> list[int]:
    return list(range(p, jx + 1))


def _apply_on_displacements(
    rs: RootSystem, disps: list[Vec], i: int, direction: Direction
) -> Optional[list[Vec]]:
    """Run one operator on a raw displacement list, or None if it vanishes."""
    region = _cut(disps, i, direction)
    if region is None:
        return None
    start, end, _ = region
    if direction == RAISE:
        prefix, middle, suffix, _ = _split_raise(disps, start, end[0])
    else:
        prefix, middle, suffix, _ = _split_lower(disps, start[0], end)
    reflected = [reflect(rs, i, d) for d in middle]
    return prefix + reflected + suffix


def apply_e(rs: RootSystem, path: Path, i: int) -> Optional[Path]:
    """Raising operator; adds alpha_i to the weight when defined."""
    rs._check_index(i)
    result = _apply_on_displacements(rs, list(path.displacements), i, RAISE)
    if result is None:
        return None
    return canonical_from_segments(result, dim=path.dim)


def apply_f(rs: RootSystem, path: Path, i: int) -> Optional[Path]:
    """Lowering operator; subtracts alpha_i from the weight when defined."""
    rs._check_index(i)
    result = _apply_on_displacements(rs, list(path.displacements), i, LOWER)
    if result is None:
        return None
    return canonical_from_segments(result, dim=path.dim)


def raise_path_to_highest(rs: RootSystem, path: Path) -> tuple[Path, tuple[int, ...]]:
    """Apply raising operators, smallest index first, until all vanish."""
    log: list[int] = []
    while True:
        for i in range(1, rs.rank + 1):
            lifted = apply_e(rs, path, i)
            if lifted is not None:
                path = lifted
                log.append(i)
                break
        else:
            return path, tuple(log)


def is_ls_path(rs: RootSystem, shape, path: Path) -> bool:
    """True iff path is reachable from the straight dominant path of shape."""
    shape = vec(shape)
    if not is_dominant(shape) or any(c.denominator != 1 for c in shape):
        return False
    try:
        highest, _ = raise_path_to_highest(rs, path)
    except IntegralityViolation:
        return False
    return equals(highest, straight_path(shape))


@dataclass(frozen=True)
class Monomial:
    """Ordered concatenation of factor paths tagged with dominant shapes.

    Factors of a tableau carry fundamental-weight shapes; crystal seeds may
    carry any dominant shape.  The concatenation of all factors is cached.
    """

    factors: tuple[tuple[Vec, Path], ...]
    rank: int
    concatenation: Path = None  # type: ignore[assignment]

    def __post_init__(self):
        disps = [d for _, p in self.factors for d in p.displacements]
        object.__setattr__(
            self, "concatenation", canonical_from_segments(disps, dim=self.rank)
        )

    @property
    def shapes(self) -> tuple[Vec, ...]:
        return tuple(s for s, _ in self.factors)

    @property
    def total_shape(self) -> Vec:
        total = vzero(self.rank)
        for s, _ in self.factors:
            total = vadd(total, s)
        return total

    def weight(self) -> Vec:
        return weight_of(self.concatenation)

    def key(self):
        """Identity: factor shape list plus canonical concatenated path."""
        return (self.shapes, self.concatenation.breakpoints)

    def is_empty(self) -> bool:
        return not self.factors


def monomial(rs: RootSystem, factors, validate: bool = True) -> Monomial:
    """Build a monomial from (shape, path) pairs, checking each factor.

    Each factor path must lie in the crystal of the straight path of its
    shape; pass validate=False only where provenance already guarantees it.
    """
    resolved = tuple((vec(s), p) for s, p in factors)
    if validate:
        for s, p in resolved:
            if not is_ls_path(rs, s, p):
                raise ValueError(f"factor {p} is not an LS path of shape {s}")
    return Monomial(resolved, rs.rank)


def empty_monomial(rs: RootSystem) -> Monomial:
    return Monomial((), rs.rank)


def _tagged_displacements(m: Monomial) -> tuple[list[Vec], list[tuple[int, int]]]:
    """Concatenated factor displacements plus each factor's index range."""
    disps: list[Vec] = []
    ranges: list[tuple[int, int]] = []
    for _, p in m.factors:
        start = len(disps)
        disps.extend(p.displacements)
        ranges.append((start, len(disps)))
    return disps, ranges


def apply_op_mono(
    rs: RootSystem, m: Monomial, i: int, direction: Direction
) -> Optional[Monomial]:
    """Apply one operator to a monomial, tracking the modified factor.

    The reflected portion must fall inside a single factor; anything else
    signals an upstream bug and raises FactorBoundaryViolation.
    """
    rs._check_index(i)
    disps, ranges = _tagged_displacements(m)
    region = _cut(disps, i, direction)
    if region is None:
        return None
    cut_start, cut_end, affected = region
    owner = None
    for fi, (start, end) in enumerate(ranges):
        if affected and all(start <= j < end for j in affected):
            owner = fi
            break
    if owner is None:
        raise FactorBoundaryViolation(
            f"operator {direction} {i} straddles a factor boundary "
            f"(affected displacements {affected}, ranges {ranges})"
        )
    start, end = ranges[owner]
    local = disps[start:end]
    # re-express the cut in factor-local displacement indices; a cut that
    # sits exactly on the factor's entry boundary becomes position (0, 0)
    if direction == RAISE:
        j0, f0 = cut_start
        local_start = (j0 - start, f0) if j0 >= start else (0, Fraction(0))
        prefix, middle, suffix, _ = _split_raise(local, local_start, cut_end[0] - start)
    else:
        jx, fx = cut_end
        prefix, middle, suffix, _ = _split_lower(
            local, cut_start[0] - start, (jx - start, fx)
        )
    reflected = [reflect(rs, i, d) for d in middle]
    shape, _ = m.factors[owner]
    new_factor = (shape, canonical_from_segments(prefix + reflected + suffix, dim=m.rank))
    factors = m.factors[:owner] + (new_factor,) + m.factors[owner + 1 :]
    return Monomial(factors, m.rank)


def raise_to_highest(rs: RootSystem, m: Monomial) -> tuple[Monomial, tuple[int, ...]]:
    """Raise at the smallest applicable index until every operator vanishes.

    Returns the highest monomial and the ordered log of indices used;
    replaying the log in reverse with lowering operators restores m.
    """
    log: list[int] = []
    while True:
        for i in range(1, rs.rank + 1):
            lifted = apply_op_mono(rs, m, i, RAISE)
            if lifted is not None:
                m = lifted
                log.append(i)
                break
        else:
            return m, tuple(log)


def lower_by_log(
    rs: RootSystem, m: Monomial, log: tuple[int, ...]
) -> Optional[Monomial]:
    """Replay a raising log downward: lowering operators in reverse order."""
    for i in reversed(log):
        lowered = apply_op_mono(rs, m, i, LOWER)
        if lowered is None:
            return None
        m = lowered
    return m


def is_highest(rs: RootSystem, m: Monomial) -> bool:
    return all(
        apply_op_mono(rs, m, i, RAISE) is None for i in range(1, rs.rank + 1)
    )
