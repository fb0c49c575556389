"""The column rewriting system: generators, rules, normalizer, and audits.

Generators are the LS paths of fundamental shapes, named "w<k>.<ordinal>"
in crystal BFS order.  Every ordered generator pair whose concatenation is
not a standard tableau gets one rule sending it to the equivalent standard
tableau word.  Termination is audited by strict shape decrease and local
confluence by exhaustive critical-triple joinability.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .crystal import (
    dominant_monomial,
    fundamental_weight,
    is_standard,
    ls_paths,
)
from .errors import BudgetExceeded, UnknownGenerator
from .exact import vadd, vec, vzero
from .paths import Path, path_to_json
from .rootops import Monomial, lower_by_log, monomial, raise_to_highest
from .rootsystem import RootSystem, precedes

Word = tuple[str, ...]

NORMALIZE_STEP_BUDGET = 10**6


@dataclass(frozen=True)
class GeneratorTable:
    """The alphabet: one entry per LS path of each fundamental shape."""

    rank: int
    entries: tuple[tuple[str, int, Path], ...]  # (id, fundamental index, path)
    by_id: dict = field(repr=False, default_factory=dict)
    by_path: dict = field(repr=False, default_factory=dict)

    def __post_init__(self):
        for gid, k, p in self.entries:
            self.by_id[gid] = (k, p)
            self.by_path[(k, p.breakpoints)] = gid

    def lookup_id(self, k: int, path: Path) -> str:
        try:
            return self.by_path[(k, path.breakpoints)]
        except KeyError:
            raise UnknownGenerator(
                f"no generator of shape omega_{k} with path {path}"
            ) from None

    def resolve(self, gid: str) -> tuple[int, Path]:
        try:
            return self.by_id[gid]
        except KeyError:
            raise UnknownGenerator(f"unknown generator id {gid!r}") from None


@dataclass(frozen=True)
class Rule:
    """One rewriting rule: a non-standard generator pair and its standard form.

    lhs_shape is the shape certificate used by the termination audit: the
    tableau shape of the pair when the column indices are in order, and the
    shape of the pair's expansion into unit columns (k1+k2 copies of
    omega_1) when they are out of order.
    """

    lhs: tuple[str, str]
    rhs: Word
    lhs_shape: tuple[int, ...]
    rhs_shape: tuple[int, ...]


@dataclass(frozen=True)
class RewriteSystem:
    rs: RootSystem
    table: GeneratorTable
    rules: dict  # (id, id) -> Rule, insertion-ordered by lhs id pair


def build_generators(rs: RootSystem) -> GeneratorTable:
    """Concatenate the fundamental-shape LS path lists, ids in BFS order."""
    entries = []
    for k in range(1, rs.rank + 1):
        for ordinal, p in enumerate(ls_paths(rs, k)):
            entries.append((f"w{k}.{ordinal}", k, p))
    return GeneratorTable(rs.rank, tuple(entries))


def word_to_monomial(rs: RootSystem, table: GeneratorTable, word: Word) -> Monomial:
    factors = []
    for gid in word:
        k, p = table.resolve(gid)
        factors.append((fundamental_weight(rs, k), p))
    return monomial(rs, factors, validate=False)


def standard_form(rs: RootSystem, table: GeneratorTable, m: Monomial) -> Word:
    """The standard tableau word equivalent to m.

    Raise m to its highest path, rebuild the dominant tableau of the
    highest weight, replay the raising log downward on it, and read the
    resulting factors off the generator table.
    """
    highest, log = raise_to_highest(rs, m)
    mu = highest.weight()
    lowered = lower_by_log(rs, dominant_monomial(rs, mu), log)
    assert lowered is not None, "transport from an isomorphic module cannot vanish"
    out = []
    for shape, p in lowered.factors:
        k = list(shape).index(1) + 1
        out.append(table.lookup_id(k, p))
    return tuple(out)


def _termination_bound(rs: RootSystem, k1: int, k2: int) -> tuple[int, ...]:
    if k1 <= k2:
        bound = vadd(vec(fundamental_weight(rs, k1)), vec(fundamental_weight(rs, k2)))
    else:
        bound = tuple((k1 + k2) * c for c in vec(fundamental_weight(rs, 1)))
    return tuple(int(c) for c in bound)


def build_rules(rs: RootSystem) -> RewriteSystem:
    """One rule per ordered generator pair that is not a standard tableau."""
    table = build_generators(rs)
    rules: dict[tuple[str, str], Rule] = {}
    for id1, k1, p1 in table.entries:
        for id2, k2, p2 in table.entries:
            m = monomial(
                rs,
                [
                    (fundamental_weight(rs, k1), p1),
                    (fundamental_weight(rs, k2), p2),
                ],
                validate=False,
            )
            if k1 <= k2 and is_standard(rs, m):
                continue
            rhs = standard_form(rs, table, m)
            highest, _ = raise_to_highest(rs, m)
            rules[(id1, id2)] = Rule(
                lhs=(id1, id2),
                rhs=rhs,
                lhs_shape=_termination_bound(rs, k1, k2),
                rhs_shape=tuple(int(c) for c in highest.weight()),
            )
    return RewriteSystem(rs, table, rules)


def normalize(system: RewriteSystem, word: Word, budget: int = NORMALIZE_STEP_BUDGET) -> Word:
    """Apply the leftmost applicable rule until none applies."""
    for gid in word:
        system.table.resolve(gid)
    out = list(word)
    steps = 0
    pos = 0
    while pos < len(out) - 1:
        rule = system.rules.get((out[pos], out[pos + 1]))
        if rule is None:
            pos += 1
            continue
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"normalize exceeded {budget} rewriting steps")
        out[pos : pos + 2] = rule.rhs
        # pairs left of pos-1 are unchanged and were already rule-free
        pos = max(0, pos - 1)
    return tuple(out)


def word_weight(system: RewriteSystem, word: Word):
    total = vzero(system.rs.rank)
    for gid in word:
        _, p = system.table.resolve(gid)
        total = vadd(total, p.breakpoints[-1])
    return total


def audit_termination(rs: RootSystem, system: RewriteSystem) -> dict:
    """Check strict shape decrease for every rule."""
    failures = []
    max_rhs_len = 0
    for (id1, id2), rule in system.rules.items():
        max_rhs_len = max(max_rhs_len, len(rule.rhs))
        if not precedes(rs, rule.rhs_shape, rule.lhs_shape):
            failures.append(
                {
                    "lhs": [id1, id2],
                    "lhs_shape": list(rule.lhs_shape),
                    "rhs_shape": list(rule.rhs_shape),
                }
            )
    return {
        "pass": not failures,
        "rules_checked": len(system.rules),
        "max_rhs_length": max_rhs_len,
        "failures": failures,
    }


def _check_triples(system: RewriteSystem, triples) -> list[dict]:
    failures = []
    for c1, c2, c3 in triples:
        left = normalize(system, system.rules[(c1, c2)].rhs + (c3,))
        right = normalize(system, (c1,) + system.rules[(c2, c3)].rhs)
        if left != right:
            failures.append(
                {"triple": [c1, c2, c3], "left": list(left), "right": list(right)}
            )
    return failures


def audit_local_confluence(
    rs: RootSystem, system: RewriteSystem, jobs: int = 1
) -> dict:
    """Join both one-step descendants of every overlapping rule pair.

    The triple list and the report order are fixed; with jobs > 1 the
    checks run on worker threads over contiguous chunks, which leaves the
    output byte-identical to the sequential run.
    """
    ids = [gid for gid, _, _ in system.table.entries]
    triples = [
        (c1, c2, c3)
        for c1 in ids
        for c2 in ids
        if (c1, c2) in system.rules
        for c3 in ids
        if (c2, c3) in system.rules
    ]
    if jobs <= 1 or len(triples) < 2:
        failures = _check_triples(system, triples)
    else:
        chunk = (len(triples) + jobs - 1) // jobs
        parts = [triples[i : i + chunk] for i in range(0, len(triples), chunk)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda part: _check_triples(system, part), parts))
        failures = [f for part in results for f in part]
    return {
        "pass": not failures,
        "triples_checked": len(triples),
        "failures": failures,
    }


def audit_report(rs: RootSystem, system: RewriteSystem, jobs: int = 1) -> dict:
    return {
        "system": {"type": rs.label, "rank": rs.rank},
        "termination": audit_termination(rs, system),
        "confluence": audit_local_confluence(rs, system, jobs=jobs),
    }


def rules_to_json(system: RewriteSystem) -> dict:
    generators = []
    for gid, k, p in system.table.entries:
        generators.append(
            {
                "id": gid,
                "shape": list(fundamental_weight(system.rs, k)),
                "breakpoints": path_to_json(p),
                "weight": [str(c) for c in p.breakpoints[-1]],
            }
        )
    rules = []
    for rule in system.rules.values():
        rules.append(
            {
                "lhs": list(rule.lhs),
                "rhs": list(rule.rhs),
                "lhs_shape": list(rule.lhs_shape),
                "rhs_shape": list(rule.rhs_shape),
            }
        )
    return {
        "system": {"type": system.rs.label, "rank": system.rs.rank},
        "generators": generators,
        "rules": rules,
    }
