"""Crystal generation, LS-path enumeration, standardness, and equivalence.

Crystals are generated breadth-first from a highest-weight seed, lowering
at indices 1..n in order; vertex numbering is discovery order, which makes
every derived artifact (generator tables, rule files, DOT output)
deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange, NonDominantWeight, NonHighestSeed
from .exact import format_rational, vec
from .paths import Path, equals, path_to_json, straight_path, weight_of
from .rootops import (
    LOWER,
    Monomial,
    apply_f,
    apply_op_mono,
    empty_monomial,
    is_highest,
    monomial,
    raise_to_highest,
)
from .rootsystem import RootSystem, is_dominant


@dataclass(frozen=True)
class CrystalGraph:
    """Connected crystal: vertices in BFS order, edges labeled by root index."""

    rs: RootSystem
    vertices: tuple[Monomial, ...]
    edges: tuple[tuple[int, int, int], ...]  # (source vertex, index, target vertex)

    @property
    def source(self) -> Monomial:
        return self.vertices[0]


def generate_crystal(rs: RootSystem, seed: Monomial) -> CrystalGraph:
    """Close the seed under lowering operators, breadth first."""
    if not is_highest(rs, seed):
        raise NonHighestSeed("crystal seed must have all raising operators vanish")
    vertices: list[Monomial] = [seed]
    index = {seed.key(): 0}
    edges: list[tuple[int, int, int]] = []
    frontier = 0
    while frontier < len(vertices):
        u = vertices[frontier]
        for i in range(1, rs.rank + 1):
            v = apply_op_mono(rs, u, i, LOWER)
            if v is None:
                continue
            k = v.key()
            if k not in index:
                index[k] = len(vertices)
                vertices.append(v)
            edges.append((frontier, i, index[k]))
        frontier += 1
    return CrystalGraph(rs, tuple(vertices), tuple(edges))


def fundamental_weight(rs: RootSystem, k: int) -> tuple[int, ...]:
    if not 1 <= k <= rs.rank:
        raise IndexOutOfRange(f"fundamental index {k} outside 1..{rs.rank}")
    return tuple(1 if j == k - 1 else 0 for j in range(rs.rank))


def ls_paths(rs: RootSystem, k: int) -> list[Path]:
    """All LS paths of shape omega_k, in BFS discovery order."""
    omega = fundamental_weight(rs, k)
    seed = monomial(rs, [(omega, straight_path(omega))], validate=False)
    graph = generate_crystal(rs, seed)
    return [v.factors[0][1] for v in graph.vertices]


def dominant_monomial(rs: RootSystem, shape) -> Monomial:
    """a_1 copies of the omega_1 straight path, then a_2 of omega_2, ..."""
    coords = vec(shape)
    if not is_dominant(coords) or any(c.denominator != 1 for c in coords):
        raise NonDominantWeight(f"{shape} is not a dominant integral weight")
    factors = []
    for k in range(1, rs.rank + 1):
        omega = fundamental_weight(rs, k)
        factors.extend([(omega, straight_path(omega))] * int(coords[k - 1]))
    if not factors:
        return empty_monomial(rs)
    return monomial(rs, factors, validate=False)


def _fundamental_index(rs: RootSystem, shape) -> int | None:
    if sum(shape) == 1 and all(c in (0, 1) for c in shape):
        return list(shape).index(1) + 1
    return None


def is_standard(rs: RootSystem, m: Monomial) -> bool:
    """Standard tableau test: column order plus reachability of the
    dominant concatenation by raising."""
    indices = []
    for shape, _ in m.factors:
        k = _fundamental_index(rs, shape)
        if k is None:
            return False
        indices.append(k)
    if any(a > b for a, b in zip(indices, indices[1:])):
        return False
    highest, _ = raise_to_highest(rs, m)
    return highest == dominant_monomial(rs, m.total_shape)


def equivalent(rs: RootSystem, m1: Monomial, m2: Monomial) -> bool:
    """Plactic equivalence via transport between highest-weight modules.

    Both monomials are raised to their highest paths; if the highest
    weights agree, m1's raising log is replayed downward from m2's highest
    path and the resulting bare paths are compared.
    """
    h1, log1 = raise_to_highest(rs, m1)
    h2, _ = raise_to_highest(rs, m2)
    if h1.weight() != h2.weight():
        return False
    transported = h2.concatenation
    for i in reversed(log1):
        transported = apply_f(rs, transported, i)
        if transported is None:
            return False
    return equals(transported, m2.concatenation)


def crystal_to_json(graph: CrystalGraph) -> dict:
    vertices = []
    for idx, v in enumerate(graph.vertices):
        vertices.append(
            {
                "id": idx,
                "shape": [[int(c) for c in s] for s in v.shapes],
                "breakpoints": path_to_json(v.concatenation),
                "weight": [format_rational(c) for c in v.weight()],
            }
        )
    return {
        "system": {"type": graph.rs.label, "rank": graph.rs.rank},
        "vertices": vertices,
        "edges": [[u, i, w] for u, i, w in graph.edges],
    }


def crystal_to_dot(graph: CrystalGraph) -> str:
    lines = ["digraph crystal {"]
    for idx, v in enumerate(graph.vertices):
        weight = ", ".join(format_rational(c) for c in v.weight())
        lines.append(f'  v{idx} [label="{idx}: ({weight})"];')
    for u, i, w in graph.edges:
        lines.append(f'  v{u} -> v{w} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
