"""Immutable simple graphs on vertices 0..n-1 with bitset adjacency.

Adjacency is one Python int per vertex (bit v set on adj[u] iff uv is an
edge), which keeps connectivity checks and neighbourhood intersections
cheap even for graphs with a few thousand vertices. Graph values never
mutate, so they are safe to share across worker processes.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import InputError

__all__ = [
    "Graph",
    "Bipartition",
    "from_edges",
    "complete",
    "cycle",
    "path",
    "wedge",
    "is_connected",
    "induced_bipartite_subgraph",
]


def _build_adj(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def connected_masks(adj: Sequence[int], n: int) -> bool:
    """Connectivity of a graph given as bitset adjacency (n=1 is connected)."""
    if n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        f = frontier
        while f:
            b = f & -f
            reach |= adj[b.bit_length() - 1]
            f ^= b
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


class Graph:
    """Simple undirected graph, immutable after construction.

    `edges` is a sorted tuple of (u, v) pairs with u < v; `adj` is the
    bitset adjacency described in the module docstring.
    """

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if not isinstance(n, int) or n < 1:
            raise InputError(f"vertex count must be a positive integer, got {n!r}")
        seen: set[tuple[int, int]] = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {e!r} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u} is not allowed")
            seen.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "adj", tuple(_build_adj(n, seen)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        mask = self.adj[v]
        while mask:
            b = mask & -mask
            yield b.bit_length() - 1
            mask ^= b

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted non-increasing."""
        return tuple(sorted((a.bit_count() for a in self.adj), reverse=True))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __reduce__(self):
        return (Graph, (self.n, self.edges))


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates collapse, loops are errors."""
    return Graph(n, edges)


class Bipartition:
    """A vertex subset A of {0..n-1}, stored as a bitmask."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int):
        if n < 1:
            raise InputError("ambient vertex count must be positive")
        if mask < 0 or mask >> n:
            raise InputError("bitmask has bits outside 0..n-1")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("Bipartition is immutable")

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> "Bipartition":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise InputError(f"vertex {v} outside 0..{n - 1}")
            mask |= 1 << v
        return cls(n, mask)

    def members(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if (self.mask >> v) & 1)

    def complement(self) -> "Bipartition":
        return Bipartition(self.n, ((1 << self.n) - 1) ^ self.mask)

    def __contains__(self, v: int) -> bool:
        return bool((self.mask >> v) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Bipartition)
            and self.n == other.n
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __repr__(self) -> str:
        return f"Bipartition(n={self.n}, A={self.members()})"


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0."""
    return connected_masks(g.adj, g.n)


def induced_bipartite_subgraph(g: Graph, a: Bipartition) -> Graph:
    """Subgraph on all n vertices keeping exactly the edges crossing (A, V\\A)."""
    if a.n != g.n:
        raise InputError(f"bipartition is over {a.n} vertices, graph has {g.n}")
    amask = a.mask
    crossing = [
        (u, v) for (u, v) in g.edges if ((amask >> u) & 1) != ((amask >> v) & 1)
    ]
    return Graph(g.n, crossing)


def complete(n: int) -> Graph:
    if n < 1:
        raise InputError("complete graph needs at least one vertex")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(m: int) -> Graph:
    """Cycle with m edges (and m vertices)."""
    if m < 3:
        raise InputError("cycle needs at least 3 edges")
    return Graph(m, [(i, (i + 1) % m) for i in range(m)])


def path(m: int) -> Graph:
    """Path with m edges (and m+1 vertices); path(0) is a single vertex."""
    if m < 0:
        raise InputError("path length cannot be negative")
    return Graph(m + 1, [(i, i + 1) for i in range(m)])


def wedge(g: Graph, h: Graph, at: int = 0) -> Graph:
    """Identify vertex 0 of `h` with vertex `at` of `g`.

    The result has g.n + h.n - 1 vertices: g keeps its labels, the
    remaining vertices of h follow after g's.
    """
    if not 0 <= at < g.n:
        raise InputError(f"joint vertex {at} outside 0..{g.n - 1}")

    def relabel(v: int) -> int:
        if v == 0:
            return at
        return g.n + v - 1

    edges = list(g.edges) + [(relabel(u), relabel(v)) for (u, v) in h.edges]
    return Graph(g.n + h.n - 1, edges)
