"""Deletion and contraction.

Both operations shrink the ground set; masks of the result are re-numbered to
the surviving elements, ground order preserved. Deletion keeps the circuits
that avoid the removed set. Contraction takes the traces of all circuits on
the surviving elements, discards empty traces, and keeps the minimal ones.

``CROSS_CHECK`` turns on an independent second route for contraction
(complement-dualize, delete, dualize back) and asserts both agree. The test
suite runs with it enabled; library callers get the direct route only.
"""

from __future__ import annotations

from .errors import DeletesEverything
from .matroid import Matroid
from .sets import compress, minimal_members

CROSS_CHECK = False


def _keep_mask(n: Matroid, z: int) -> int:
    n.ground.check_mask(z)
    keep = n.ground.full_mask & ~z
    if keep == 0:
        raise DeletesEverything("a minor must keep at least one element")
    return keep


def delete(n: Matroid, z: int) -> Matroid:
    """Matroid on E minus z whose circuits are the circuits avoiding z."""
    keep = _keep_mask(n, z)
    ground = n.ground.restrict(keep)
    circuits = [compress(c, keep) for c in n.circuits if c & z == 0]
    return Matroid(ground, circuits)


def contract(n: Matroid, z: int) -> Matroid:
    """Matroid on E minus z whose circuits are minimal non-empty traces."""
    keep = _keep_mask(n, z)
    ground = n.ground.restrict(keep)
    traces = {c & keep for c in n.circuits}
    traces.discard(0)
    result = Matroid(ground, minimal_members(compress(t, keep) for t in traces))
    if CROSS_CHECK:
        other = delete(n.dual(), z).dual()
        if result != other:
            raise AssertionError(
                f"contraction routes disagree on {n!r} by {n.ground.format_mask(z)}: "
                f"{result!r} vs {other!r}"
            )
    return result
