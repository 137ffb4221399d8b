"""Simple connected graphs on vertices 1..n, plus the builders for the
graph families the rest of the package works with.

A graph is immutable once built.  Builders guarantee connectivity, so
downstream code (cut-set enumeration, ideal construction) never has to
re-check it.  Vertex labels are always 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path


class GraphError(ValueError):
    """Malformed graph input: bad family parameter, bad file, disconnected."""


Edge = tuple[int, int]


def _norm_edge(i: int, j: int) -> Edge:
    if i == j:
        raise GraphError(f"loop at vertex {i} not allowed")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Simple undirected connected graph on {1, ..., n}.

    Edges are stored as (i, j) pairs with i < j.  Construction validates
    endpoint ranges and connectivity; loops and duplicate edges are
    rejected by the builders and the file loader before reaching here.
    """

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        for i, j in self.edges:
            if not (1 <= i < j <= self.n):
                raise GraphError(f"edge ({i},{j}) out of range for n={self.n}")
        if not self._is_connected():
            raise GraphError("graph is not connected")

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def _is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = {1}
        stack = [1]
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def degree(self, v: int) -> int:
        """Number of edges incident to v."""
        if not (1 <= v <= self.n):
            raise GraphError(f"vertex {v} out of range 1..{self.n}")
        return len(self.adjacency[v])

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def delete_vertices(g: Graph, cut: frozenset[int] | set[int]) -> list[tuple[int, ...]]:
    """Connected components of g restricted to the vertices outside `cut`.

    Components are returned as sorted vertex tuples, ordered by least
    element, so output is reproducible.  Deleting everything yields [].
    """
    cut = frozenset(cut)
    for v in cut:
        if not (1 <= v <= g.n):
            raise GraphError(f"vertex {v} out of range 1..{g.n}")
    remaining = [v for v in g.vertices() if v not in cut]
    seen: set[int] = set()
    comps: list[tuple[int, ...]] = []
    adj = g.adjacency
    for start in remaining:
        if start in seen:
            continue
        stack = [start]
        comp = {start}
        seen.add(start)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in cut and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: c[0])
    return comps


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


# ---------------------------------------------------------------------------
# Shape predicates (used by the classifier and the closed-form dispatcher)

def is_tree(g: Graph) -> bool:
    return len(g.edges) == g.n - 1


def is_path(g: Graph) -> bool:
    return is_tree(g) and all(g.degree(v) <= 2 for v in g.vertices())


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and len(g.edges) == g.n and all(g.degree(v) == 2 for v in g.vertices())


def is_complete(g: Graph) -> bool:
    return len(g.edges) == g.n * (g.n - 1) // 2


def leaves(g: Graph) -> list[int]:
    """Degree-1 vertices, ascending."""
    return [v for v in g.vertices() if g.degree(v) == 1]


# ---------------------------------------------------------------------------
# Family builders

FAMILIES = ("line", "cycle", "complete", "star", "tree1", "tree2", "file")


@dataclass(frozen=True)
class GraphSpec:
    """A graph family plus its parameter, e.g. cycle:5 or file:edges.txt."""

    family: str
    param: int | str

    @classmethod
    def parse(cls, text: str) -> "GraphSpec":
        family, sep, arg = text.partition(":")
        if not sep or family not in FAMILIES:
            raise GraphError(f"unknown graph spec {text!r}; expected family:param "
                             f"with family in {FAMILIES}")
        if family == "file":
            if not arg:
                raise GraphError("file: spec needs a path")
            return cls(family, arg)
        try:
            value = int(arg)
        except ValueError:
            raise GraphError(f"parameter of {family}: must be an integer, got {arg!r}") from None
        return cls(family, value)

    def __str__(self) -> str:
        return f"{self.family}:{self.param}"


def _edges(pairs) -> frozenset[Edge]:
    out = set()
    for i, j in pairs:
        e = _norm_edge(i, j)
        if e in out:
            raise GraphError(f"duplicate edge {e}")
        out.add(e)
    return frozenset(out)


def line_graph(n: int) -> Graph:
    if n < 2:
        raise GraphError("line:n requires n >= 2")
    return Graph(n, _edges((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle:n requires n >= 3")
    return Graph(n, _edges([(i, i + 1) for i in range(1, n)] + [(1, n)]))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete:n requires n >= 1")
    return Graph(n, _edges((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


def star_graph(k: int) -> Graph:
    """Star with k leaves on n = k+1 vertices; vertex 1 is the center."""
    if k < 1:
        raise GraphError("star:k requires k >= 1")
    return Graph(k + 1, _edges((1, j) for j in range(2, k + 2)))


def tree1_graph(n: int) -> Graph:
    """Spider with a single degree-3 center.

    Vertex 1 carries two pendant leaves (2 and 3) and one arm 1-4-5-...-n,
    so vertex n always has degree 1.  The n=4 base is the star with three
    leaves.
    """
    if n < 4:
        raise GraphError("tree1:n requires n >= 4")
    pairs = [(1, 2), (1, 3), (1, 4)]
    pairs += [(i, i + 1) for i in range(4, n)]
    return Graph(n, _edges(pairs))


def tree2_graph(n: int) -> Graph:
    """Two adjacent degree-3 vertices, each with two arms; one arm extended.

    Base n=6 is the H-shape: centers 1-2, leaves 3,4 on vertex 1 and 5,6 on
    vertex 2.  Larger n extend the arm at vertex 6 with the chain 6-7-...-n,
    keeping vertex n of degree 1.
    """
    if n < 6:
        raise GraphError("tree2:n requires n >= 6")
    pairs = [(1, 2), (1, 3), (1, 4), (2, 5), (2, 6)]
    pairs += [(i, i + 1) for i in range(6, n)]
    return Graph(n, _edges(pairs))


def load_edge_list(path: str | Path) -> Graph:
    """Read a graph from an edge-list file.

    One edge per line: two whitespace-separated 1-based vertex labels.
    Lines starting with '#' are ignored.  The vertex count is the maximum
    label seen.  Disconnected graphs, loops and repeated edges are rejected.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc
    pairs: list[Edge] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"{path}:{lineno}: expected two vertex labels, got {line!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"{path}:{lineno}: non-integer vertex label in {line!r}") from None
        if i < 1 or j < 1:
            raise GraphError(f"{path}:{lineno}: vertex labels must be >= 1")
        pairs.append((i, j))
    if not pairs:
        raise GraphError(f"{path}: no edges found")
    n = max(max(e) for e in pairs)
    return Graph(n, _edges(pairs))


def build_graph(spec: GraphSpec) -> Graph:
    """Construct the canonical graph of a family; deterministic labeling."""
    if spec.family == "file":
        return load_edge_list(str(spec.param))
    n = int(spec.param)
    builder = {
        "line": line_graph,
        "cycle": cycle_graph,
        "complete": complete_graph,
        "star": star_graph,
        "tree1": tree1_graph,
        "tree2": tree2_graph,
    }[spec.family]
    return builder(n)


def graph_from_spec(text: str) -> Graph:
    return build_graph(GraphSpec.parse(text))
