"""Independent type-A ground truth: the Knuth congruence by brute force.

Words over the alphabet {1..n} (type A at rank n-1) are closed under the
two Knuth exchanges and bidirectional deletion/insertion of the full
contiguous factor 1.2...n.  The closure is convention-free and is used to
cross-validate the path-model equivalence on the same words.
"""
from __future__ import annotations

from collections import deque

from .errors import BudgetExceeded, LetterOutOfRange
from .paths import equals, straight_path
from .rootops import Monomial, apply_f, monomial, raise_to_highest
from .rootsystem import RootSystem

DEFAULT_LENGTH_BUDGET = 6

BoxWord = tuple[int, ...]


def _neighbors(w: BoxWord, n: int, cap: int):
    # Knuth exchanges (both are involutions, hence already bidirectional):
    #   x z y <-> z x y  for x < y <= z
    #   y x z <-> y z x  for x <= y < z
    for j in range(len(w) - 2):
        a, b, c = w[j : j + 3]
        # a b c = x z y -> z x y
        if b > a and a < c <= b:
            yield w[:j] + (b, a, c) + w[j + 3 :]
        # a b c = z x y -> x z y
        if b < a and b < c <= a:
            yield w[:j] + (b, a, c) + w[j + 3 :]
        # a b c = y x z -> y z x
        if b <= a and b < c and a < c:
            yield w[:j] + (a, c, b) + w[j + 3 :]
        # a b c = y z x -> y x z
        if c <= a and c < b and a < b:
            yield w[:j] + (a, c, b) + w[j + 3 :]
    unit = tuple(range(1, n + 1))
    for j in range(len(w) - n + 1):
        if w[j : j + n] == unit:
            yield w[:j] + w[j + n :]
    if len(w) + n <= cap:
        for j in range(len(w) + 1):
            yield w[:j] + unit + w[j:]


def _as_word(w) -> BoxWord:
    if isinstance(w, str):
        return tuple(int(ch) for ch in w)
    return tuple(int(x) for x in w)


def _closure(n: int, start: BoxWord, cap: int) -> frozenset:
    """All words reachable from start; insertions capped at length cap."""
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for nb in _neighbors(w, n, cap):
            if nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return frozenset(seen)


def knuth_equiv(n: int, w1, w2, budget: int = DEFAULT_LENGTH_BUDGET) -> bool:
    """Decide the Knuth congruence by breadth-first closure from w1."""
    a, b = _as_word(w1), _as_word(w2)
    for w in (a, b):
        if len(w) > budget:
            raise BudgetExceeded(f"word {w} longer than the budget {budget}")
        for letter in w:
            if not 1 <= letter <= n:
                raise LetterOutOfRange(f"letter {letter} outside 1..{n}")
    # the exchanges preserve length and insertions are capped, so the
    # closure is finite
    return b in _closure(n, a, max(len(a), len(b)) + n)


def box_to_monomial(rs: RootSystem, w) -> Monomial:
    """Letter x becomes the straight unit-column path with endpoint eps_x."""
    n = rs.rank + 1
    word = _as_word(w)
    factors = []
    omega1 = tuple(1 if j == 0 else 0 for j in range(rs.rank))
    for letter in word:
        if not 1 <= letter <= n:
            raise LetterOutOfRange(f"letter {letter} outside 1..{n}")
        # eps_x = omega_x - omega_{x-1} (omega_0 = omega_n = 0)
        coords = [0] * rs.rank
        if letter <= rs.rank:
            coords[letter - 1] += 1
        if letter >= 2:
            coords[letter - 2] -= 1
        factors.append((omega1, straight_path(coords)))
    return monomial(rs, factors, validate=False)


def _all_words(n: int, max_len: int) -> list[BoxWord]:
    words: list[BoxWord] = []
    frontier: list[BoxWord] = [()]
    for _ in range(max_len):
        frontier = [w + (x,) for w in frontier for x in range(1, n + 1)]
        words.extend(frontier)
    return words


def cross_check(rs: RootSystem, n: int, max_len: int) -> dict:
    """Compare Knuth-closure equivalence with path-model equivalence.

    Exhaustive over all nonempty words up to max_len; the two partitions
    must coincide pair by pair.
    """
    if rs.rank != n - 1:
        raise LetterOutOfRange(f"alphabet 1..{n} needs a rank {n - 1} type-A system")
    words = _all_words(n, max_len)
    monomials = [box_to_monomial(rs, w) for w in words]
    closures: dict[tuple[BoxWord, int], frozenset] = {}

    def k_equiv(i: int, j: int) -> bool:
        cap = max(len(words[i]), len(words[j])) + n
        key = (words[i], cap)
        if key not in closures:
            closures[key] = _closure(n, words[i], cap)
        return words[j] in closures[key]

    # raising each monomial once makes the pairwise transport checks cheap
    raised = [raise_to_highest(rs, m) for m in monomials]

    def p_equiv(i: int, j: int) -> bool:
        (hi, logi), (hj, _) = raised[i], raised[j]
        if hi.weight() != hj.weight():
            return False
        transported = hj.concatenation
        for idx in reversed(logi):
            transported = apply_f(rs, transported, idx)
            if transported is None:
                return False
        return equals(transported, monomials[j].concatenation)

    mismatches = []
    knuth_class = list(range(len(words)))
    path_class = list(range(len(words)))
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            k_eq = k_equiv(i, j)
            p_eq = p_equiv(i, j)
            if k_eq != p_eq:
                mismatches.append(
                    {
                        "pair": [
                            "".join(map(str, words[i])),
                            "".join(map(str, words[j])),
                        ],
                        "knuth": k_eq,
                        "path_model": p_eq,
                    }
                )
            if k_eq:
                knuth_class[j] = min(knuth_class[j], knuth_class[i])
            if p_eq:
                path_class[j] = min(path_class[j], path_class[i])

    def class_sizes(assignment):
        sizes: dict[int, int] = {}
        for c in assignment:
            sizes[c] = sizes.get(c, 0) + 1
        return sorted(sizes.values(), reverse=True)

    return {
        "n": n,
        "max_len": max_len,
        "words": len(words),
        "classes_knuth": len(set(knuth_class)),
        "classes_path_model": len(set(path_class)),
        "class_sizes_knuth": class_sizes(knuth_class),
        "class_sizes_path_model": class_sizes(path_class),
        "mismatches": mismatches,
    }
