"""Combinatorial prime decomposition of a binomial edge ideal.

Every vertex subset T determines a prime: the variables indexed by T
together with all 2x2 minors over each connected component left after
deleting T.  Minimality is a purely combinatorial condition - removing
any single element of T must strictly drop the component count - so
minimal primes, Krull dimension, and the equidimensional part are all
computed here without any polynomial arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, delete_vertices
from .ideals import complete_minors, universe_for_graph
from .poly import Polynomial, VariableUniverse

ENUMERATION_CAP = 24


class EnumerationCapError(ValueError):
    """Subset enumeration is 2^n; refuse graphs past the desk-scale cap."""


@dataclass(frozen=True)
class PrimeComponent:
    """The prime attached to a cut set T of a graph on n vertices.

    height = n + |T| - c(T) and dim = n - |T| + c(T), so height + dim = 2n.
    """

    cut_set: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    height: int
    dim: int
    minimal: bool = True

    @classmethod
    def from_cut_set(cls, g: Graph, cut, minimal: bool = True) -> "PrimeComponent":
        cut = tuple(sorted(cut))
        comps = tuple(delete_vertices(g, frozenset(cut)))
        c = len(comps)
        return cls(cut_set=cut, components=comps,
                   height=g.n + len(cut) - c, dim=g.n - len(cut) + c,
                   minimal=minimal)

    def to_json_dict(self) -> dict:
        return {"T": list(self.cut_set),
                "components": [list(c) for c in self.components],
                "height": self.height,
                "dim": self.dim,
                "minimal": self.minimal}


def _check_cap(g: Graph) -> None:
    if g.n > ENUMERATION_CAP:
        raise EnumerationCapError(
            f"graph has {g.n} vertices; exhaustive cut-set enumeration is "
            f"capped at n <= {ENUMERATION_CAP}")


def component_count(g: Graph, cut) -> int:
    return len(delete_vertices(g, frozenset(cut)))


def is_minimal_cut_set(g: Graph, cut) -> bool:
    """T = {} always qualifies; otherwise every element must matter:
    c(T \\ {i}) < c(T) for each i in T."""
    cut = frozenset(cut)
    if not cut:
        return True
    c = component_count(g, cut)
    return all(component_count(g, cut - {i}) < c for i in cut)


def iter_cut_sets(n: int):
    """All subsets of 1..n by increasing size, then lexicographically."""
    vertices = range(1, n + 1)
    for size in range(n + 1):
        yield from combinations(vertices, size)


def minimal_primes(g: Graph) -> list[PrimeComponent]:
    """All minimal primes of the edge-binomial ideal of g, in enumeration
    order (by |T|, then lexicographic)."""
    _check_cap(g)
    out = []
    for cut in iter_cut_sets(g.n):
        if is_minimal_cut_set(g, cut):
            out.append(PrimeComponent.from_cut_set(g, cut))
    return out


def dimension(g: Graph) -> int:
    """Krull dimension of the quotient by the edge-binomial ideal."""
    return max(pc.dim for pc in minimal_primes(g))


def assh(g: Graph) -> list[PrimeComponent]:
    """Minimal primes of maximal dimension (the quotient is reduced, so
    associated primes and minimal primes coincide)."""
    primes = minimal_primes(g)
    top = max(pc.dim for pc in primes)
    return [pc for pc in primes if pc.dim == top]


def equidimensional_part(g: Graph) -> list[PrimeComponent]:
    """The top-dimensional components; for a cycle this is the single
    complete-graph prime."""
    return assh(g)


def prime_generators(g: Graph, pc: PrimeComponent,
                     universe: VariableUniverse | None = None) -> list[Polynomial]:
    """Generators of the prime: x_i, y_i for i in the cut set, plus all
    minors over each remaining component."""
    expected = tuple(delete_vertices(g, frozenset(pc.cut_set)))
    if expected != pc.components:
        raise ValueError("prime component does not belong to this graph")
    universe = universe or universe_for_graph(g)
    gens: list[Polynomial] = []
    for i in pc.cut_set:
        gens.append(Polynomial.variable(universe, f"x{i}"))
        gens.append(Polynomial.variable(universe, f"y{i}"))
    for comp in pc.components:
        gens.extend(complete_minors(universe, g.n, comp))
    return gens
