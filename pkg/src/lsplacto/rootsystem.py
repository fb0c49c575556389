"""Exact root-system arithmetic in fundamental-weight coordinates.

Everything lives in the basis of fundamental weights, so the pairing
<v, alpha_i^vee> is simply coordinate i of v.  The Cartan convention is
entry(i, j) = <alpha_j, alpha_i^vee>, which makes the coordinate vector
of the simple root alpha_j exactly column j of the Cartan matrix.  The
shipped tables (Cartan matrices, symmetrizers, positive coroots expanded
in simple coroots) are hard-coded in a JSON data file; the test suite
regenerates them independently by root-string closure.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .errors import IndexOutOfRange, NonDominantWeight, UnsupportedType
from .exact import Vec, is_zero, solve_linear, vec, vsub

DATA_ENV_VAR = "LSPLACTO_DATA"

SUPPORTED = {
    "A": range(1, 5),
    "B": range(2, 5),
    "C": range(2, 5),
    "D": range(3, 5),
    "G": range(2, 3),
}


@dataclass(frozen=True)
class RootSystem:
    """Cartan data for one supported semisimple type at fixed rank."""

    label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_coroots: tuple[tuple[int, ...], ...]
    _cartan_inverse: tuple[tuple[Fraction, ...], ...] = field(repr=False, default=())

    @property
    def rho(self) -> tuple[int, ...]:
        """The all-ones weight (half-sum of positive roots)."""
        return (1,) * self.rank

    def simple_root(self, i: int) -> Vec:
        """Fundamental-weight coordinates of alpha_i (column i of the Cartan)."""
        self._check_index(i)
        return tuple(Fraction(self.cartan[r][i - 1]) for r in range(self.rank))

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise IndexOutOfRange(f"root index {i} outside 1..{self.rank}")

    def simple_root_coordinates(self, v: Vec) -> Vec:
        """Expand v (fundamental-weight coords) in the simple-root basis."""
        return solve_linear(self.cartan, v)

    def norm_squared(self, v: Vec) -> Fraction:
        """Squared length of v under the symmetrized Cartan form.

        Normalized so short simple roots have squared length 2.
        """
        x = self.simple_root_coordinates(v)
        d = self.symmetrizer
        return sum(
            d[i] * self.cartan[i][j] * x[i] * x[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )


def _data_path() -> str | None:
    return os.environ.get(DATA_ENV_VAR)


@lru_cache(maxsize=None)
def _load_tables(override_path: str | None) -> dict[tuple[str, int], dict]:
    if override_path is not None:
        with open(override_path) as f:
            raw = json.load(f)
    else:
        raw = json.loads(
            resources.files("lsplacto.data").joinpath("root_systems.json").read_text()
        )
    return {(entry["label"], entry["rank"]): entry for entry in raw}


def build_root_system(label: str, rank: int) -> RootSystem:
    """Return the populated root system for a supported (label, rank)."""
    if label not in SUPPORTED or rank not in SUPPORTED[label]:
        raise UnsupportedType(f"unsupported root system {label!r} rank {rank}")
    entry = _load_tables(_data_path())[(label, rank)]
    cartan = tuple(tuple(row) for row in entry["cartan"])
    rs = RootSystem(
        label=label,
        rank=rank,
        cartan=cartan,
        symmetrizer=tuple(entry["symmetrizer"]),
        positive_coroots=tuple(tuple(c) for c in entry["positive_coroots"]),
    )
    return rs


def pairing(v: Vec, i: int) -> Fraction:
    """<v, alpha_i^vee>: coordinate i of v, by basis duality."""
    if not 1 <= i <= len(v):
        raise IndexOutOfRange(f"root index {i} outside 1..{len(v)}")
    return v[i - 1]


def reflect(rs: RootSystem, i: int, v: Vec) -> Vec:
    """Simple reflection s_i: v - <v, alpha_i^vee> alpha_i."""
    rs._check_index(i)
    c = pairing(v, i)
    alpha = rs.simple_root(i)
    return tuple(x - c * a for x, a in zip(v, alpha))


def is_dominant(v: Vec) -> bool:
    """True iff every fundamental-weight coordinate is >= 0."""
    return all(x >= 0 for x in v)


def precedes(rs: RootSystem, mu: Vec, lam: Vec) -> bool:
    """Strict dominance precedence: lam - mu a nonzero N-sum of simple roots."""
    diff = vsub(vec(lam), vec(mu))
    if is_zero(diff):
        return False
    x = rs.simple_root_coordinates(diff)
    return all(c >= 0 and c.denominator == 1 for c in x)


def weyl_dim(rs: RootSystem, lam) -> int:
    """Dimension of the module with dominant highest weight lam.

    Product over positive coroots of <lam+rho, c> / <rho, c>, evaluated
    exactly; serves as an independent cardinality oracle for crystals.
    """
    lam = vec(lam)
    if len(lam) != rs.rank:
        raise NonDominantWeight(f"weight length {len(lam)} != rank {rs.rank}")
    if not is_dominant(lam):
        raise NonDominantWeight(f"weight {lam} is not dominant")
    num = Fraction(1)
    den = Fraction(1)
    for coroot in rs.positive_coroots:
        num *= sum((l + 1) * c for l, c in zip(lam, coroot))
        den *= sum(coroot)
    result = num / den
    assert result.denominator == 1 and result > 0
    return int(result)
