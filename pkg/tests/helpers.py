"""Brute-force oracles used to cross-check the library's fast paths.

Everything here recomputes matroid quantities from first principles
(independence = contains no circuit), with no shortcuts shared with the
implementation under test.
"""

from itertools import combinations

from matlift.matroid import Matroid
from matlift.sets import GroundSet, SetFamily, default_ground


def mk(n_or_labels, *circuit_labels) -> Matroid:
    """Convenience constructor: mk(3, "ab", "ac") over single-char labels."""
    if isinstance(n_or_labels, int):
        ground = default_ground(n_or_labels)
    else:
        ground = GroundSet(n_or_labels)
    masks = [ground.mask_of(tuple(word)) for word in circuit_labels]
    return Matroid(ground, masks)


def brute_independent(circuits: SetFamily, mask: int) -> bool:
    return all(c & ~mask != 0 for c in circuits)


def brute_rank(m: Matroid, a: int = None) -> int:
    """Largest independent subset of a, by scanning every subset."""
    region = m.ground.full_mask if a is None else a
    best = 0
    sub = region
    while True:
        if brute_independent(m.circuits, sub):
            best = max(best, sub.bit_count())
        if sub == 0:
            break
        sub = (sub - 1) & region
    return best


def brute_bases(m: Matroid) -> list[int]:
    n = len(m.ground)
    r = brute_rank(m)
    out = []
    for combo in combinations(range(n), r):
        mask = 0
        for i in combo:
            mask |= 1 << i
        if brute_independent(m.circuits, mask):
            out.append(mask)
    return out


def brute_closure(m: Matroid, a: int) -> int:
    """Span of a: a plus every element not raising the rank."""
    r = brute_rank(m, a)
    out = a
    for i in range(len(m.ground)):
        bit = 1 << i
        if not a & bit and brute_rank(m, a | bit) == r:
            out |= bit
    return out


def brute_cyclic_sets(m: Matroid) -> set[int]:
    """All unions of circuits, empty union included."""
    found = {0}
    for c in m.circuits:
        found |= {prev | c for prev in found}
    return found
