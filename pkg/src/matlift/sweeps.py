"""Sweep harness: exhaustive and randomized verification runs.

Each sweep quantifies one guarantee over every instance in scope and returns
a structured outcome instead of printing. The acceptance suite and the
``sweep`` CLI command both run these, so there is exactly one definition of
what each guarantee means.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Optional

from . import quotient
from .enumeration import (
    MatroidCatalog,
    all_witnesses,
    enumerate_matroids,
    random_matroid,
    random_quotient_pair,
    witness_search,
)
from .errors import ConstructionFailure, LemmaCounterexample, MatliftError
from .matroid import Matroid
from .minors import contract, delete
from .sets import bit_indices, default_ground, fresh_labels
from .textio import parse_matroid_text, serialize_matroid_text


@dataclass
class SweepConfig:
    """Scope knobs for the randomized sweeps."""

    seed: int = 20260819
    random_matroids: int = 300
    random_pairs: int = 420
    random_triples: int = 160
    samples_per_matroid: int = 24


@dataclass
class SweepOutcome:
    name: str
    ok: bool
    details: str
    elapsed: float
    stats: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.details} ({self.elapsed:.1f}s)"


def _outcome(name: str, t0: float, ok: bool, details: str, **stats) -> SweepOutcome:
    return SweepOutcome(name, ok, details, time.perf_counter() - t0, dict(stats))


CatalogMap = dict[int, MatroidCatalog]


def build_catalogs(max_n: int, method: str = "basis") -> CatalogMap:
    return {n: enumerate_matroids(n, method) for n in range(1, max_n + 1)}


# ------------------------------------------------------------------ sweep 1


def catalog_cross_oracle_sweep(max_n: int = 4, catalogs: Optional[CatalogMap] = None) -> SweepOutcome:
    """Both enumeration routes agree; every entry is strongly sound and
    dual-involutive."""
    from .axioms import check_circuit_axioms

    t0 = time.perf_counter()
    catalogs = catalogs or build_catalogs(max_n)
    problems = []
    counts = {}
    for n in range(1, max_n + 1):
        basis_cat = catalogs[n]
        circuit_cat = enumerate_matroids(basis_cat.ground, "circuit")
        if [m.circuits for m in basis_cat.entries] != [m.circuits for m in circuit_cat.entries]:
            problems.append(f"n={n}: routes disagree")
        counts[n] = len(basis_cat)
        for m in basis_cat.entries:
            if not check_circuit_axioms(m.ground, m.circuits, strong=True).passed:
                problems.append(f"n={n}: strong axioms fail on {m!r}")
                break
            if m.dual().dual() != m:
                problems.append(f"n={n}: dual involution fails on {m!r}")
                break
    ok = not problems
    details = (
        f"route agreement and soundness for {sum(counts.values())} matroids, counts {counts}"
        if ok
        else "; ".join(problems)
    )
    return _outcome("catalog-cross-oracle", t0, ok, details, counts=counts)


# ------------------------------------------------------------------ sweep 2


def lift_property_sweep(max_n: int = 5, catalogs: Optional[CatalogMap] = None) -> SweepOutcome:
    """Every (contraction, deletion) pair of minors of every matroid certifies."""
    t0 = time.perf_counter()
    catalogs = catalogs or build_catalogs(max_n)
    checked = 0
    for n in range(2, max_n + 1):
        cat = catalogs[n]
        full = cat.ground.full_mask
        for big in cat.entries:
            for x in range(1, full):
                cert = quotient.certify_quotient(contract(big, x), delete(big, x))
                if not cert.holds:
                    return _outcome(
                        "lift-property",
                        t0,
                        False,
                        f"minor pair of {big!r} at x={x:#x} refused: {cert.describe()}",
                    )
                checked += 1
    return _outcome(
        "lift-property", t0, True, f"{checked} minor pairs all certify", checked=checked
    )


# ------------------------------------------------------------------ sweep 3


def lift_criterion_sweep(max_n: int = 4, catalogs: Optional[CatalogMap] = None) -> SweepOutcome:
    """Every certified pair with positive rank step admits a verified witness.

    Also tallies the observed bound on circuit nullities: whether every
    circuit of the upper matroid has nullity at most step+1 downstairs.
    """
    t0 = time.perf_counter()
    catalogs = catalogs or build_catalogs(max_n)
    pairs = certified = witnesses = 0
    nullity_within = nullity_beyond = 0
    for n in range(1, max_n + 1):
        cat = catalogs[n]
        for m in cat.entries:
            for l in cat.entries:
                pairs += 1
                cert = quotient.certify_quotient(m, l)
                if not cert.holds:
                    continue
                certified += 1
                s = cert.step_s
                for c in l.circuits:
                    if m.nullity(c) <= s + 1:
                        nullity_within += 1
                    else:
                        nullity_beyond += 1
                if s < 1:
                    continue
                try:
                    w = quotient.lift_witness(m, l, fresh_labels(m.ground, s))
                except ConstructionFailure as exc:
                    return _outcome(
                        "lift-criterion", t0, False, f"construction failed: {exc}"
                    )
                if not w.verified:
                    return _outcome(
                        "lift-criterion", t0, False, f"unverified witness for {m!r}, {l!r}"
                    )
                witnesses += 1
    details = (
        f"{pairs} pairs, {certified} certified, {witnesses} witnesses verified; "
        f"circuit nullity <= step+1 observed {nullity_within}/{nullity_within + nullity_beyond}"
    )
    return _outcome(
        "lift-criterion",
        t0,
        True,
        details,
        pairs=pairs,
        certified=certified,
        witnesses=witnesses,
        nullity_within=nullity_within,
        nullity_beyond=nullity_beyond,
    )


# ------------------------------------------------------------------ sweep 4


def witness_oracle_sweep(max_n: int = 3, catalogs: Optional[CatalogMap] = None) -> SweepOutcome:
    """Certification at step one is equivalent to brute-force witness search,
    and the constructed witness always appears among the found ones."""
    t0 = time.perf_counter()
    catalogs = catalogs or build_catalogs(max_n)
    agree = 0
    for n in range(1, max_n + 1):
        cat = catalogs[n]
        for m in cat.entries:
            for l in cat.entries:
                if l.rank() != m.rank() + 1:
                    continue
                cert = quotient.certify_quotient(m, l)
                cert_ok = cert.holds and cert.step_s == 1
                found = all_witnesses(m, l)
                if cert_ok != bool(found):
                    return _outcome(
                        "witness-oracle",
                        t0,
                        False,
                        f"disagreement on {m!r}, {l!r}: certify={cert_ok}, found={len(found)}",
                    )
                if found and witness_search(m, l) != found[0]:
                    return _outcome(
                        "witness-oracle", t0, False, f"search order unstable on {m!r}, {l!r}"
                    )
                if cert_ok:
                    w = quotient.lift_witness(m, l, ("x",))
                    if w.n not in found:
                        return _outcome(
                            "witness-oracle",
                            t0,
                            False,
                            f"constructed witness not found by scan for {m!r}, {l!r}",
                        )
                agree += 1
    return _outcome(
        "witness-oracle", t0, True, f"{agree} rank-step-one pairs agree with the scan",
        agree=agree,
    )


# ------------------------------------------------------- lemma sweep helpers


def matroid_lemma_checks(m: Matroid) -> dict[str, int]:
    """Run every per-matroid checked statement exhaustively on one matroid.

    Counts checked instances per statement; a counterexample propagates as
    LemmaCounterexample.
    """
    n = len(m.ground)
    counts = {"span": 0, "extension": 0, "elimination": 0, "base-family": 0}
    cyclic = list(m.cyclic_sets())
    for a in range(1 << n):
        if m.is_dependent(a):
            quotient.lemma_span_witness(m, a)
            counts["span"] += 1
    for a1 in cyclic:
        for a2 in cyclic:
            if a1 == a2 or a2 & ~a1 == 0:
                continue
            quotient.cyclic_extension(m, a1, a2)
            counts["extension"] += 1
            for a in bit_indices(a1 & a2):
                quotient.cyclic_elimination(m, a1, a2, a)
                counts["elimination"] += 1
    for a in cyclic:
        if a == 0:
            continue
        for circ in m.circuits:
            if circ & ~a == 0:
                for d in bit_indices(circ):
                    quotient.base_family_witness(m, a, circ, d)
                    counts["base-family"] += 1
    return counts


def _pair_rank_order_check(m: Matroid, l: Matroid, s: int) -> None:
    """Certified pairs weakly order ranks and independence families."""
    if s < 0 or (s == 0 and m != l):
        raise LemmaCounterexample(
            "rank order violated\n" + serialize_matroid_text(m, "M") + serialize_matroid_text(l, "L")
        )
    for mask in range(1 << len(m.ground)):
        if m.is_independent(mask) and not l.is_independent(mask):
            raise LemmaCounterexample(
                f"independent set {m.ground.format_mask(mask)} lost upstairs\n"
                + serialize_matroid_text(m, "M")
                + serialize_matroid_text(l, "L")
            )


# ------------------------------------------------------------------ sweep 5a


def lemma_exhaustive_sweep(max_n: int = 4, catalogs: Optional[CatalogMap] = None) -> SweepOutcome:
    """All checked statements over all matroids, pairs, and triples in scope."""
    t0 = time.perf_counter()
    catalogs = catalogs or build_catalogs(max_n)
    totals = {"span": 0, "extension": 0, "elimination": 0, "base-family": 0,
              "bigcyclo": 0, "rank-order": 0, "transitivity": 0}
    try:
        for n in range(1, max_n + 1):
            cat = catalogs[n]
            for m in cat.entries:
                for key, val in matroid_lemma_checks(m).items():
                    totals[key] += val
            entries = cat.entries
            certified: dict[tuple[int, int], int] = {}
            for i, m in enumerate(entries):
                for j, l in enumerate(entries):
                    cert = quotient.certify_quotient(m, l)
                    if not cert.holds:
                        continue
                    certified[(i, j)] = cert.step_s
                    _pair_rank_order_check(m, l, cert.step_s)
                    totals["rank-order"] += 1
                    quotient.bigcyclo_check(m, l)
                    totals["bigcyclo"] += 1
            down: dict[int, list[int]] = {}
            for (i, j) in certified:
                down.setdefault(i, []).append(j)
            for i, js in down.items():
                for j in js:
                    for k in down.get(j, ()):
                        if (i, k) not in certified:
                            raise LemmaCounterexample(
                                f"transitivity fails at catalog n={n} indices {i},{j},{k}"
                            )
                        totals["transitivity"] += 1
    except LemmaCounterexample as exc:
        return _outcome("lemma-exhaustive", t0, False, str(exc).splitlines()[0])
    details = "all statements hold: " + ", ".join(f"{k}={v}" for k, v in totals.items())
    return _outcome("lemma-exhaustive", t0, True, details, **totals)


# ------------------------------------------------------------------ sweep 5b


def lemma_randomized_sweep(config: Optional[SweepConfig] = None) -> SweepOutcome:
    """Checked statements on randomized instances with 5 and 6 elements.

    Matroid-level statements run on random column matroids; pair statements
    run on genuine certified pairs obtained as minors of random one- and
    two-element lifts; transitivity runs on chained minors of two-element
    lifts. Counts every checked instance.
    """
    cfg = config or SweepConfig()
    rng = random.Random(cfg.seed)
    t0 = time.perf_counter()
    instances = {"span": 0, "extension": 0, "elimination": 0, "base-family": 0,
                 "bigcyclo": 0, "rank-order": 0, "transitivity": 0}
    try:
        for _ in range(cfg.random_matroids):
            n = rng.choice((5, 6))
            m = random_matroid(rng, n)
            size = 1 << n
            for a in range(size):
                if m.is_dependent(a):
                    quotient.lemma_span_witness(m, a)
                    instances["span"] += 1
            cyclic = list(m.cyclic_sets())
            pool = [
                (a1, a2)
                for a1 in cyclic
                for a2 in cyclic
                if a1 != a2 and a2 & ~a1 != 0
            ]
            rng.shuffle(pool)
            for a1, a2 in pool[: cfg.samples_per_matroid]:
                quotient.cyclic_extension(m, a1, a2)
                instances["extension"] += 1
                for a in bit_indices(a1 & a2):
                    quotient.cyclic_elimination(m, a1, a2, a)
                    instances["elimination"] += 1
            triples = [
                (a, circ, d)
                for a in cyclic
                if a
                for circ in m.circuits
                if circ & ~a == 0
                for d in bit_indices(circ)
            ]
            rng.shuffle(triples)
            for a, circ, d in triples[: cfg.samples_per_matroid]:
                quotient.base_family_witness(m, a, circ, d)
                instances["base-family"] += 1

        for _ in range(cfg.random_pairs):
            n = rng.choice((5, 6))
            steps = rng.choice((1, 2))
            m, l = random_quotient_pair(rng, n, steps)
            cert = quotient.certify_quotient(m, l)
            if not cert.holds:
                raise LemmaCounterexample(
                    "random minor pair refused certification\n"
                    + serialize_matroid_text(m, "M")
                    + serialize_matroid_text(l, "L")
                )
            _pair_rank_order_check(m, l, cert.step_s)
            instances["rank-order"] += 1
            quotient.bigcyclo_check(m, l)
            instances["bigcyclo"] += 1

        for _ in range(cfg.random_triples):
            n = rng.choice((5, 6))
            g = default_ground(n)
            z1, z2 = fresh_labels(g, 2, stem="z")
            big = g.extend((z1, z2))
            lifted = random_matroid(rng, big)
            m2 = contract(lifted, big.mask_of((z1, z2)))
            stage = contract(lifted, big.mask_of((z2,)))
            mid = delete(stage, stage.ground.mask_of((z1,)))
            k2 = delete(lifted, big.mask_of((z1, z2)))
            lo = quotient.certify_quotient(m2, mid)
            hi = quotient.certify_quotient(mid, k2)
            outer = quotient.certify_quotient(m2, k2)
            if not (lo.holds and hi.holds and outer.holds):
                raise LemmaCounterexample(
                    "transitivity failed on random chained minors\n"
                    + serialize_matroid_text(lifted, "N")
                )
            instances["transitivity"] += 1
    except (LemmaCounterexample, MatliftError) as exc:
        return _outcome("lemma-randomized", t0, False, str(exc).splitlines()[0])
    total = sum(instances.values())
    details = f"{total} randomized instances hold: " + ", ".join(
        f"{k}={v}" for k, v in instances.items()
    )
    return _outcome("lemma-randomized", t0, True, details, total=total, **instances)


# ------------------------------------------------------------------ sweep 6


def homotopy_sweep(max_n: int = 4, catalogs: Optional[CatalogMap] = None) -> SweepOutcome:
    """Factorization validity for every certified pair with step >= 2 under
    every ordering of the new elements; records order (in)dependence."""
    t0 = time.perf_counter()
    catalogs = catalogs or build_catalogs(max_n)
    pairs = order_free = order_bound = 0
    for n in range(1, max_n + 1):
        cat = catalogs[n]
        for m in cat.entries:
            for l in cat.entries:
                cert = quotient.certify_quotient(m, l)
                if not cert.holds or cert.step_s < 2:
                    continue
                pairs += 1
                labels = fresh_labels(m.ground, cert.step_s)
                witness = quotient.lift_witness(m, l, labels)
                baseline = None
                same = True
                for perm in permutations(labels):
                    try:
                        chain = quotient.factor_homotopy(m, l, perm, witness=witness)
                    except MatliftError as exc:
                        return _outcome(
                            "homotopy",
                            t0,
                            False,
                            f"factorization failed for {m!r}, {l!r} order {perm}: {exc}",
                        )
                    key = tuple(st.circuits for st in chain.steps)
                    if baseline is None:
                        baseline = key
                    elif key != baseline:
                        same = False
                if same:
                    order_free += 1
                else:
                    order_bound += 1
    details = (
        f"{pairs} pairs with step >= 2 factor under every ordering; "
        f"stages order-independent for {order_free}, order-dependent for {order_bound}"
    )
    return _outcome(
        "homotopy", t0, True, details, pairs=pairs, order_free=order_free,
        order_bound=order_bound,
    )


# ------------------------------------------------------------------ sweep 8


def remark_comparison_sweep(max_n: int = 4, catalogs: Optional[CatalogMap] = None) -> SweepOutcome:
    """Stage-family comparison tally over every certified pair with step >= 1.

    Nothing is asserted about either index reading; the outcome carries the
    agree/disagree tally and a printable report.
    """
    t0 = time.perf_counter()
    catalogs = catalogs or build_catalogs(max_n)
    pairs = 0
    shifted_rows = shifted_agree = literal_rows = literal_agree = 0
    per_stage: dict[int, list[int]] = {}
    for n in range(1, max_n + 1):
        cat = catalogs[n]
        for m in cat.entries:
            for l in cat.entries:
                cert = quotient.certify_quotient(m, l)
                if not cert.holds or cert.step_s < 1:
                    continue
                pairs += 1
                rows = quotient.remark_comparison(m, l)
                for row in rows:
                    shifted_rows += 1
                    literal_rows += 1
                    bucket = per_stage.setdefault(row.i, [0, 0, 0])
                    bucket[0] += 1
                    if row.shifted_agrees:
                        shifted_agree += 1
                        bucket[1] += 1
                    if row.literal_agrees:
                        literal_agree += 1
                        bucket[2] += 1
    lines = [
        f"stage-family comparison over {pairs} certified pairs (step >= 1), n <= {max_n}",
        f"shifted reading (stage i vs closed form at i+1): {shifted_agree}/{shifted_rows} stages agree",
        f"literal reading (stage i vs closed form at i): {literal_agree}/{literal_rows} stages agree",
    ]
    for i in sorted(per_stage):
        total, sh, li = per_stage[i]
        lines.append(f"  stage {i}: {total} instances, shifted agree {sh}, literal agree {li}")
    report = "\n".join(lines)
    details = (
        f"{pairs} pairs; shifted {shifted_agree}/{shifted_rows}, "
        f"literal {literal_agree}/{literal_rows}"
    )
    return _outcome(
        "remark-comparison", t0, True, details,
        pairs=pairs, shifted=(shifted_agree, shifted_rows),
        literal=(literal_agree, literal_rows), report=report,
    )


# ------------------------------------------------------------------ sweep 9


def roundtrip_sweep(max_n: int = 5, catalogs: Optional[CatalogMap] = None) -> SweepOutcome:
    """Serialize/parse identity for every catalog entry."""
    t0 = time.perf_counter()
    catalogs = catalogs or build_catalogs(max_n)
    checked = 0
    for n in range(1, max_n + 1):
        for m in catalogs[n].entries:
            back = parse_matroid_text(serialize_matroid_text(m))
            if back != m:
                return _outcome(
                    "text-roundtrip", t0, False, f"round trip changed {m!r} into {back!r}"
                )
            checked += 1
    return _outcome(
        "text-roundtrip", t0, True, f"{checked} catalog entries round-trip", checked=checked
    )


# --------------------------------------------------------------- full runner


def run_all(max_n: int = 4, config: Optional[SweepConfig] = None,
            emit: Optional[Callable[[str], None]] = None) -> list[SweepOutcome]:
    """Run every sweep at sizes capped by ``max_n``; optionally print lines."""
    catalogs = build_catalogs(min(max_n, 6))
    outcomes = [
        catalog_cross_oracle_sweep(min(max_n, 4), catalogs),
        lift_property_sweep(min(max_n, 5), catalogs),
        lift_criterion_sweep(min(max_n, 4), catalogs),
        witness_oracle_sweep(min(max_n, 3), catalogs),
        lemma_exhaustive_sweep(min(max_n, 4), catalogs),
        homotopy_sweep(min(max_n, 4), catalogs),
        remark_comparison_sweep(min(max_n, 4), catalogs),
        roundtrip_sweep(min(max_n, 5), catalogs),
    ]
    if config is not None:
        outcomes.append(lemma_randomized_sweep(config))
    if emit:
        for out in outcomes:
            emit(out.line())
    return outcomes
