"""Canonical piecewise-linear paths from the origin with rational breakpoints.

A path is stored as its minimal breakpoint sequence: consecutive
breakpoints are distinct and no corner is mergeable (a displacement is
never a positive multiple of the previous one).  Two paths that agree up
to reparametrization therefore have identical breakpoint tuples, and
structural equality implements path equality.  The trivial path is the
single breakpoint [origin].
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import IndexOutOfRange
from .exact import Vec, format_rational, is_zero, parse_rational, vadd, vec, vsub, vzero


def _positive_multiple(prev: Vec, cur: Vec) -> bool:
    """True iff cur = c * prev for some rational c > 0."""
    ratio = None
    for p, c in zip(prev, cur):
        if p == 0:
            if c != 0:
                return False
        else:
            r = c / p
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
    if ratio is None:  # prev is zero; callers never pass zero displacements
        return False
    return ratio > 0


def canonical_segments(displacements: Iterable[Vec]) -> list[Vec]:
    """Drop zero displacements and merge consecutive same-direction runs."""
    out: list[Vec] = []
    for d in displacements:
        if is_zero(d):
            continue
        if out and _positive_multiple(out[-1], d):
            out[-1] = vadd(out[-1], d)
        else:
            out.append(d)
    return out


@dataclass(frozen=True)
class Path:
    """Piecewise-linear path from the origin, in canonical form."""

    breakpoints: tuple[Vec, ...]

    @property
    def dim(self) -> int:
        return len(self.breakpoints[0])

    @property
    def displacements(self) -> tuple[Vec, ...]:
        return tuple(
            vsub(b, a) for a, b in zip(self.breakpoints, self.breakpoints[1:])
        )

    def is_trivial(self) -> bool:
        return len(self.breakpoints) == 1

    def __str__(self) -> str:
        return " -> ".join(
            "(" + ", ".join(format_rational(c) for c in b) + ")"
            for b in self.breakpoints
        )


def trivial_path(dim: int) -> Path:
    return Path((vzero(dim),))


def canonical_from_segments(displacements: Sequence, dim: int | None = None) -> Path:
    """Build the canonical path accumulating the given displacement vectors."""
    disps = [vec(d) for d in displacements]
    if dim is None:
        if not disps:
            raise ValueError("dimension required for an empty segment list")
        dim = len(disps[0])
    merged = canonical_segments(disps)
    points = [vzero(dim)]
    for d in merged:
        points.append(vadd(points[-1], d))
    return Path(tuple(points))


def straight_path(target) -> Path:
    """The straight path t -> t*target (trivial if target = 0)."""
    v = vec(target)
    if is_zero(v):
        return trivial_path(len(v))
    return Path((vzero(len(v)), v))


def concat(a: Path, b: Path) -> Path:
    """Concatenation: run a, then b translated by weight_of(a)."""
    return canonical_from_segments(
        list(a.displacements) + list(b.displacements), dim=a.dim
    )


def weight_of(path: Path) -> Vec:
    """Endpoint of the path."""
    return path.breakpoints[-1]


def equals(a: Path, b: Path) -> bool:
    """Exact equality of canonical forms (= path equality up to reparametrization)."""
    return a.breakpoints == b.breakpoints


@dataclass(frozen=True)
class ScalarPL:
    """A scalar piecewise-linear function sampled at a path's breakpoints.

    Values between consecutive samples are linear interpolants.  A
    position is (segment index, rational fraction within the segment);
    positions (j, 1) and (j+1, 0) denote the same point.
    """

    samples: tuple[Fraction, ...]

    @property
    def min_value(self) -> Fraction:
        # linear per segment, so the minimum is attained at a sample
        return min(self.samples)

    @property
    def final_value(self) -> Fraction:
        return self.samples[-1]

    def first_attainment(self, level: Fraction) -> tuple[int, Fraction] | None:
        """Earliest position where the function equals level, if any."""
        if self.samples[0] == level:
            return (0, Fraction(0))
        for j, (a, b) in enumerate(zip(self.samples, self.samples[1:])):
            if a == b:
                continue
            t = (level - a) / (b - a)
            if 0 <= t <= 1:
                return (j, t)
        return None

    def last_attainment_before(
        self, level: Fraction, stop: int
    ) -> tuple[int, Fraction] | None:
        """Latest position at value level strictly before breakpoint stop."""
        for j in range(stop - 1, -1, -1):
            a, b = self.samples[j], self.samples[j + 1]
            if a == b:
                if a == level:
                    return (j, Fraction(1))
                continue
            t = (level - a) / (b - a)
            if 0 <= t <= 1:
                if j + 1 == stop and t == 1:
                    # that position is breakpoint stop itself; look at the
                    # interior / earlier part of this segment instead
                    if a == level:
                        return (j, Fraction(0))
                    continue
                return (j, t)
        return None

    def first_crossing_after(
        self, level: Fraction, start: int
    ) -> tuple[int, Fraction] | None:
        """Earliest position after breakpoint start reaching level from below."""
        for j in range(start, len(self.samples) - 1):
            a, b = self.samples[j], self.samples[j + 1]
            if a < level <= b:
                return (j, (level - a) / (b - a))
        return None


def h_function(path: Path, i: int) -> ScalarPL:
    """The pairing <path(t), alpha_i^vee> as a function along the polyline."""
    if not 1 <= i <= path.dim:
        raise IndexOutOfRange(f"root index {i} outside 1..{path.dim}")
    return ScalarPL(tuple(b[i - 1] for b in path.breakpoints))


def path_to_json(path: Path) -> list[list[str]]:
    """JSON form: array of breakpoint coordinate arrays, rationals as strings."""
    return [[format_rational(c) for c in b] for b in path.breakpoints]


def path_from_json(data: Sequence[Sequence[str]]) -> Path:
    points = [tuple(parse_rational(c) for c in b) for b in data]
    if not points:
        raise ValueError("a path needs at least the origin breakpoint")
    disps = [vsub(b, a) for a, b in zip(points, points[1:])]
    return canonical_from_segments(disps, dim=len(points[0]))
