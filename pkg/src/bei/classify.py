"""Approximately Cohen-Macaulay classification for the settled families.

Trees are decided by the three-star-like criterion (max degree 3, and at
most one degree-3 vertex, or exactly two adjacent ones).  Cycles are
always approximately Cohen-Macaulay; paths and complete graphs are
Cohen-Macaulay outright.  Everything else is reported UNKNOWN with the
dimension-gap necessary condition attached as advisory evidence - the
general problem is not decided here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cutsets import PrimeComponent, minimal_primes
from .graphs import Graph, is_complete, is_cycle_graph, is_path, is_tree

COHEN_MACAULAY = "COHEN_MACAULAY"
APPROX_CM = "APPROX_CM"
NOT_APPROX_CM = "NOT_APPROX_CM"
UNKNOWN = "UNKNOWN"


class NotATreeError(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    """Classification outcome.

    `witness` is present exactly when the verdict is NOT_APPROX_CM: a
    minimal prime whose dimension sits at least two below the ring
    dimension, violating the necessary condition for approximate
    Cohen-Macaulayness.  `ring_dimension` accompanies it.  For UNKNOWN,
    `necessary_condition` carries the advisory result.
    """

    status: str
    reason: str
    witness: PrimeComponent | None = None
    ring_dimension: int | None = None
    necessary_condition: bool | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"status": self.status, "reason": self.reason,
                     "witness": self.witness.to_json_dict() if self.witness else None}
        if self.ring_dimension is not None:
            out["dim"] = self.ring_dimension
        if self.necessary_condition is not None:
            out["necessary_condition"] = self.necessary_condition
        return out


def is_three_star_like(g: Graph) -> bool:
    """Tree criterion: no degree >= 4, and the degree-3 vertices are
    either at most one, or exactly two and adjacent.

    Three or more degree-3 vertices always contain a non-adjacent pair in
    a tree, which is why the two-vertex case insists on adjacency.
    """
    if not is_tree(g):
        raise NotATreeError("three-star-like is defined for trees only")
    degrees = [g.degree(v) for v in g.vertices()]
    if max(degrees) > 3:
        return False
    deg3 = [v for v in g.vertices() if g.degree(v) == 3]
    if len(deg3) <= 1:
        return True
    if len(deg3) == 2:
        a, b = deg3
        return b in g.adjacency[a]
    return False


def necessary_condition(g: Graph) -> tuple[bool, PrimeComponent | None]:
    """Every minimal prime must reach within one of the ring dimension.

    Returns (True, None) when the condition holds, otherwise (False, w)
    with w a minimal prime of dimension <= dim - 2.
    """
    primes = minimal_primes(g)
    top = max(pc.dim for pc in primes)
    for pc in primes:
        if pc.dim < top - 1:
            return False, pc
    return True, None


def classify(g: Graph) -> Verdict:
    """Decide the classification for paths, trees, cycles and complete
    graphs; UNKNOWN otherwise."""
    if is_complete(g):
        # covers the triangle: determinantal quotients are Cohen-Macaulay
        return Verdict(COHEN_MACAULAY, "complete-graph")
    if is_tree(g):
        if is_path(g):
            return Verdict(COHEN_MACAULAY, "path-complete-intersection")
        if is_three_star_like(g):
            return Verdict(APPROX_CM, "three-star-like-tree")
        primes = minimal_primes(g)
        top = max(pc.dim for pc in primes)
        witness = next(pc for pc in primes if pc.dim < top - 1)
        return Verdict(NOT_APPROX_CM, "tree-not-three-star-like",
                       witness=witness, ring_dimension=top)
    if is_cycle_graph(g):
        return Verdict(APPROX_CM, "cycle")
    ok, witness = necessary_condition(g)
    primes = minimal_primes(g)
    return Verdict(UNKNOWN, "no-known-criterion",
                   witness=witness,
                   ring_dimension=max(pc.dim for pc in primes),
                   necessary_condition=ok)
