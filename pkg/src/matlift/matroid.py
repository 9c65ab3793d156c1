"""The core matroid type, represented by its family of circuits.

A matroid here is a ground set plus the family of its circuits (the minimal
dependent sets), stored canonically. Construction always validates the
circuit axioms, so holding a ``Matroid`` is proof the family is sound.
Everything else (rank, bases, duals, cyclic sets) is derived on demand.

Equality is label-sensitive: two matroids are equal iff they have the same
ground labels in the same order and the same circuit family.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .axioms import check_basis_exchange, check_circuit_axioms
from .errors import (
    EliminationFailure,
    EmptyBasisFamily,
    EmptyCircuit,
    ExchangeFailure,
    GroundTooLarge,
    NotClutter,
    NotIndependent,
    PreconditionFailure,
    StillIndependent,
    UnequalBasisSizes,
)
from .sets import GroundSet, SetFamily, bit_indices

# All-subset scans (cyclic_sets without a filter) refuse to run above this
# many elements; callers must pass a nullity filter or test sets pointwise.
CYCLIC_ENUM_CAP = 16


@dataclass
class FundamentalFamily:
    """Fundamental circuits of a set of roots over one independent set.

    ``circuits`` maps each root element (index, not in ``base_independent``)
    to the unique circuit inside ``base_independent`` plus that root.
    """

    ground: GroundSet
    base_independent: int
    roots: int
    circuits: dict[int, int] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return self.roots.bit_count()

    @property
    def union_mask(self) -> int:
        out = 0
        for c in self.circuits.values():
            out |= c
        return out

    def describe(self) -> str:
        g = self.ground
        pairs = ", ".join(
            f"{g.labels[x]} -> {g.format_mask(c)}" for x, c in sorted(self.circuits.items())
        )
        return f"over {g.format_mask(self.base_independent)}: {pairs or 'empty'}"


class Matroid:
    """Matroid on a labelled ground set, given by its circuits."""

    __slots__ = ("ground", "circuits", "_rank_memo")

    def __init__(self, ground: GroundSet, circuits: SetFamily | Iterable[int]):
        fam = circuits if isinstance(circuits, SetFamily) else SetFamily(circuits)
        report = check_circuit_axioms(ground, fam, strong=False)
        if not report.passed:
            v = report.violations[0]
            if v.axiom == "AC0":
                raise EmptyCircuit("the empty set cannot be a circuit")
            if v.axiom == "AC1":
                raise NotClutter(*v.witness)
            raise EliminationFailure(*v.witness)
        self.ground = ground
        self.circuits = fam
        self._rank_memo: dict[int, int] = {}

    # --------------------------------------------------------- constructors

    @classmethod
    def from_circuits(cls, ground: GroundSet, circuits: Iterable[int]) -> "Matroid":
        """Build and validate a matroid from candidate circuits."""
        return cls(ground, circuits)

    @classmethod
    def from_bases(cls, ground: GroundSet, bases: SetFamily | Iterable[int]) -> "Matroid":
        """Build a matroid from its bases (checked for the exchange axiom).

        Circuits are recovered as the dependent sets all of whose proper
        subsets are independent, where independent means inside some basis.
        """
        fam = bases if isinstance(bases, SetFamily) else SetFamily(bases)
        report = check_basis_exchange(ground, fam)
        if not report.passed:
            v = report.violations[0]
            if v.axiom == "AB0":
                raise EmptyBasisFamily("need at least one basis")
            if v.axiom == "AB1":
                raise UnequalBasisSizes(
                    f"{ground.format_mask(v.witness[0])} and "
                    f"{ground.format_mask(v.witness[1])} differ in size"
                )
            raise ExchangeFailure(*v.witness)
        base_list = fam.members

        def indep(mask: int) -> bool:
            return any(mask & ~b == 0 for b in base_list)

        circuits = []
        for mask in range(1, ground.full_mask + 1):
            if indep(mask):
                continue
            if all(indep(mask & ~(1 << i)) for i in bit_indices(mask)):
                circuits.append(mask)
        return cls(ground, circuits)

    # ------------------------------------------------------------- equality

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Matroid)
            and self.ground == other.ground
            and self.circuits == other.circuits
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.circuits))

    def __repr__(self) -> str:
        return f"Matroid({self.ground!r}, {self.ground.format_family(self.circuits)})"

    # ----------------------------------------------------- dependence, rank

    def is_dependent(self, a: int) -> bool:
        self.ground.check_mask(a)
        return any(c & ~a == 0 for c in self.circuits)

    def is_independent(self, a: int) -> bool:
        return not self.is_dependent(a)

    def rank(self, a: Optional[int] = None) -> int:
        """Rank of ``a`` (default: the whole ground set).

        Greedy over ground order; memoized per subset. The result does not
        depend on the insertion order, which the test suite checks by
        permuting the scan.
        """
        if a is None:
            a = self.ground.full_mask
        else:
            self.ground.check_mask(a)
        memo = self._rank_memo
        got = memo.get(a)
        if got is None:
            got = self._rank_greedy(a, tuple(bit_indices(a)))
            memo[a] = got
        return got

    def _rank_greedy(self, a: int, order: tuple[int, ...]) -> int:
        circuits = self.circuits.members
        current = 0
        size = 0
        for i in order:
            cand = current | (1 << i)
            if not any(c & ~cand == 0 for c in circuits):
                current = cand
                size += 1
        return size

    def max_independent(self, a: int, order: Optional[tuple[int, ...]] = None) -> int:
        """A maximal independent subset of ``a``, greedy over ``order``.

        ``order`` defaults to ascending ground order; indices outside ``a``
        are skipped, so any permutation of the ground can be passed.
        """
        self.ground.check_mask(a)
        circuits = self.circuits.members
        current = 0
        for i in order if order is not None else bit_indices(a):
            if not a >> i & 1:
                continue
            cand = current | (1 << i)
            if not any(c & ~cand == 0 for c in circuits):
                current = cand
        return current

    def nullity(self, a: Optional[int] = None) -> int:
        if a is None:
            a = self.ground.full_mask
        return a.bit_count() - self.rank(a)

    # ------------------------------------------------------------ bases, dual

    def bases(self) -> SetFamily:
        """All bases, as the independent sets of full-rank cardinality."""
        r = self.rank()
        n = len(self.ground)
        out = []
        for combo in combinations(range(n), r):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if self.is_independent(mask):
                out.append(mask)
        return SetFamily(out)

    def dual(self) -> "Matroid":
        """Dual matroid: bases are the complements of this matroid's bases."""
        full = self.ground.full_mask
        return Matroid.from_bases(self.ground, [full & ~b for b in self.bases()])

    # ------------------------------------------------- fundamental circuits

    def fundamental_circuit(self, independent: int, x: int) -> int:
        """The unique circuit inside ``independent`` plus element ``x``.

        ``independent`` must be independent and ``independent + x`` dependent.
        """
        self.ground.check_mask(independent | (1 << x))
        if self.is_dependent(independent):
            raise NotIndependent(self.ground.format_mask(independent))
        if independent >> x & 1:
            raise PreconditionFailure(
                f"element {self.ground.labels[x]} is already in the set"
            )
        closed = independent | (1 << x)
        found = [c for c in self.circuits if c & ~closed == 0]
        if not found:
            raise StillIndependent(
                f"{self.ground.format_mask(independent)} stays independent with "
                f"{self.ground.labels[x]}"
            )
        if len(found) > 1:  # impossible for a validated matroid
            raise AssertionError(f"multiple circuits inside {closed:#x}: {found}")
        circuit = found[0]
        assert circuit >> x & 1
        return circuit

    def fundamental_family(self, independent: int, roots: int) -> FundamentalFamily:
        """Fundamental circuits of every root element over ``independent``."""
        self.ground.check_mask(independent | roots)
        if roots & independent:
            raise PreconditionFailure("roots must lie outside the independent set")
        circuits = {x: self.fundamental_circuit(independent, x) for x in bit_indices(roots)}
        return FundamentalFamily(self.ground, independent, roots, circuits)

    # ------------------------------------------------------------ cyclic sets

    def is_cyclic(self, a: int) -> bool:
        """True iff ``a`` is a union of circuits (the empty set counts)."""
        self.ground.check_mask(a)
        cover = 0
        for c in self.circuits:
            if c & ~a == 0:
                cover |= c
        return cover == a

    def cyclic_sets(self, nullity: Optional[int] = None) -> SetFamily:
        """All cyclic sets, optionally only those of one fixed nullity.

        Without a filter this scans every subset and refuses on ground sets
        larger than ``CYCLIC_ENUM_CAP``. With ``nullity=k`` it enumerates
        unions of exactly k circuits instead (every cyclic set of nullity k
        is such a union), which stays feasible on larger ground sets whenever
        the circuit family is modest.
        """
        n = len(self.ground)
        if nullity is None:
            if n > CYCLIC_ENUM_CAP:
                raise GroundTooLarge(
                    f"all-subset scan needs at most {CYCLIC_ENUM_CAP} elements; "
                    "pass a nullity filter or use is_cyclic pointwise"
                )
            return SetFamily(a for a in range(1 << n) if self.is_cyclic(a))
        if nullity < 0:
            return SetFamily()
        if nullity == 0:
            return SetFamily([0])
        if n <= CYCLIC_ENUM_CAP:
            return SetFamily(
                a for a in range(1 << n) if self.nullity(a) == nullity and self.is_cyclic(a)
            )
        out = set()
        for combo in combinations(self.circuits.members, nullity):
            u = 0
            for c in combo:
                u |= c
            if u not in out and self.nullity(u) == nullity:
                out.add(u)
        return SetFamily(out)

    # ---------------------------------------------------------- conveniences

    def loops(self) -> int:
        """Mask of loop elements (single-element circuits)."""
        out = 0
        for c in self.circuits:
            if c.bit_count() == 1:
                out |= c
        return out

    def restriction_circuits(self, a: int) -> SetFamily:
        """Circuits contained in ``a``."""
        self.ground.check_mask(a)
        return SetFamily(c for c in self.circuits if c & ~a == 0)


def free_matroid(ground: GroundSet) -> Matroid:
    """The matroid with no circuits (everything independent)."""
    return Matroid(ground, SetFamily())


def uniform_matroid(ground: GroundSet, rank: int) -> Matroid:
    """Uniform matroid: circuits are all subsets of size rank + 1."""
    n = len(ground)
    if rank < 0 or rank > n:
        raise ValueError(f"rank {rank} out of range for {n} elements")
    if rank == n:
        return free_matroid(ground)
    circuits = []
    for combo in combinations(range(n), rank + 1):
        mask = 0
        for i in combo:
            mask |= 1 << i
        circuits.append(mask)
    return Matroid(ground, circuits)


