"""Small exact-arithmetic helpers: rational vectors, linear solves, surd sums.

Vectors are tuples of Fraction in fundamental-weight coordinates.  No
floating point anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vec = tuple[Fraction, ...]


def vec(coords: Sequence) -> Vec:
    return tuple(Fraction(c) for c in coords)


def vzero(n: int) -> Vec:
    return (Fraction(0),) * n


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vscale(c: Fraction, a: Vec) -> Vec:
    return tuple(c * x for x in a)


def is_zero(a: Vec) -> bool:
    return all(x == 0 for x in a)


def solve_linear(matrix: Sequence[Sequence[Fraction]], rhs: Vec) -> Vec:
    """Solve matrix . x = rhs exactly by Gaussian elimination.

    The matrix must be square and invertible (Cartan matrices are).
    """
    n = len(rhs)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(aug[r][n] for r in range(n))


def _squarefree_split(m: int) -> tuple[int, int]:
    """Write m = a^2 * s with s squarefree; return (a, s).  m >= 1."""
    a, s, d = 1, 1, 2
    while d * d <= m:
        while m % (d * d) == 0:
            a *= d
            m //= d * d
        if m % d == 0:
            s *= d
            m //= d
        d += 1
    return a, s * m


def surd_sum(terms: Sequence[tuple[Fraction, Fraction]]) -> dict[int, Fraction]:
    """Canonical form of sum c_i * sqrt(q_i) with c_i >= 0, q_i >= 0 rational.

    Returns a map squarefree integer -> rational coefficient; two sums are
    equal iff their maps are equal.
    """
    acc: dict[int, Fraction] = {}
    for c, q in terms:
        if c == 0 or q == 0:
            continue
        # sqrt(p/r) = sqrt(p*r)/r
        p, r = q.numerator, q.denominator
        a, s = _squarefree_split(p * r)
        coeff = c * Fraction(a, r)
        acc[s] = acc.get(s, Fraction(0)) + coeff
        if acc[s] == 0:
            del acc[s]
    return acc


def format_rational(x: Fraction) -> str:
    return str(x)


def parse_rational(s) -> Fraction:
    return Fraction(s)
