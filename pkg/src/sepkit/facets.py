"""Facet enumeration for symmetric edge polytopes.

The polytope of a connected graph G is the convex hull of +-(e_u - e_v)
over edges uv. Its facets correspond to integer vertex labelings f with
f identified up to additive constants (canonical form: f[0] = 0) such that

  (i)  |f(u) - f(v)| <= 1 on every edge, and
  (ii) the tight edges E_f = {uv : |f(u) - f(v)| = 1} span V and are
       connected.

The enumerator assigns labels depth-first along a BFS vertex order rooted
at 0. A new vertex's label is confined to the intersection of
{f(u)-1, f(u), f(u)+1} over its already-assigned neighbours, and a branch
dies as soon as some vertex with a fully assigned neighbourhood has no
tight edge (tightness can only ever come from edges with an unassigned
endpoint). Surviving leaves get a final connectivity check on E_f.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

from .errors import BudgetExceededError, InputError
from .graphs import Bipartition, Graph, connected_masks, induced_bipartite_subgraph, is_connected

__all__ = [
    "FacetSubgraph",
    "is_facet_defining",
    "enumerate_facet_functions",
    "facet_count",
    "facet_count_complete",
    "facet_subgraph",
    "is_facet_subgraph",
    "group_by_facet_subgraph",
    "DEFAULT_NODE_BUDGET",
]

# ~50M search nodes is far beyond any desk-scale run; the env var
# SEP_NODE_BUDGET overrides it (0 or negative means unlimited).
DEFAULT_NODE_BUDGET = 50_000_000


def _node_budget(budget: int | None) -> int | None:
    if budget is not None:
        return budget if budget > 0 else None
    env = os.environ.get("SEP_NODE_BUDGET")
    if env is not None:
        value = int(env)
        return value if value > 0 else None
    return DEFAULT_NODE_BUDGET


def is_facet_defining(g: Graph, f: Sequence[int]) -> bool:
    """Check conditions (i) and (ii) directly; f need not be canonical."""
    if len(f) != g.n:
        raise InputError(f"labeling has length {len(f)}, graph has {g.n} vertices")
    tight_adj = [0] * g.n
    any_tight = False
    for u, v in g.edges:
        diff = f[u] - f[v]
        if diff > 1 or diff < -1:
            return False
        if diff:
            tight_adj[u] |= 1 << v
            tight_adj[v] |= 1 << u
            any_tight = True
    if not any_tight:
        return False
    if any(a == 0 for a in tight_adj):
        return False
    return connected_masks(tight_adj, g.n)


def _bfs_order(g: Graph) -> list[int]:
    order = [0]
    seen = 1
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        mask = g.adj[v] & ~seen
        seen |= mask
        while mask:
            b = mask & -mask
            order.append(b.bit_length() - 1)
            mask ^= b
    return order


def _search(g: Graph, collect: bool, budget: int | None):
    """Core DFS. Returns (count, functions); functions is None in count mode."""
    n = g.n
    order = _bfs_order(g)
    if len(order) != n:
        raise InputError("facet enumeration needs a connected graph")
    pos_of = [0] * n
    for i, v in enumerate(order):
        pos_of[v] = i

    earlier: list[list[int]] = [[] for _ in range(n)]
    for u, v in g.edges:
        pu, pv = pos_of[u], pos_of[v]
        if pu > pv:
            pu, pv = pv, pu
        earlier[pv].append(pu)
    pos_edges = [(pu, pv) for pv in range(n) for pu in earlier[pv]]

    # positions whose incident edges are all decided once position i is set
    finalize_at: list[list[int]] = [[] for _ in range(n)]
    for p in range(n):
        last = p
        for q in range(n):
            if (g.adj[order[p]] >> order[q]) & 1 and pos_of[order[q]] > last:
                last = pos_of[order[q]]
        finalize_at[max(last, p)].append(p)

    labels = [0] * n
    tight = [0] * n
    out: list[tuple[int, ...]] | None = [] if collect else None
    count = 0
    nodes = 0

    def leaf_connected() -> bool:
        tadj = [0] * n
        for a, b in pos_edges:
            if labels[a] - labels[b] in (1, -1):
                tadj[a] |= 1 << b
                tadj[b] |= 1 << a
        return connected_masks(tadj, n)

    def descend(i: int) -> None:
        nonlocal count, nodes
        if i == n:
            if leaf_connected():
                count += 1
                if out is not None:
                    f = [0] * n
                    for v in range(n):
                        f[v] = labels[pos_of[v]]
                    out.append(tuple(f))
            return
        nbrs = earlier[i]
        if i == 0:
            lo = hi = 0
        else:
            lo = max(labels[j] for j in nbrs) - 1
            hi = min(labels[j] for j in nbrs) + 1
        for c in range(lo, hi + 1):
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceededError(nodes, budget)
            assert -n <= c <= n
            labels[i] = c
            touched = []
            gained = 0
            for j in nbrs:
                if c - labels[j] in (1, -1):
                    tight[j] += 1
                    gained += 1
                    touched.append(j)
            tight[i] = gained
            if all(tight[p] for p in finalize_at[i]):
                descend(i + 1)
            for j in touched:
                tight[j] -= 1
            tight[i] = 0
        return

    descend(0)
    return count, out


def enumerate_facet_functions(
    g: Graph, node_budget: int | None = None
) -> list[tuple[int, ...]]:
    """All canonical facet-defining labelings, sorted lexicographically."""
    if g.n < 2:
        raise InputError("facet enumeration needs at least 2 vertices")
    if not is_connected(g):
        raise InputError("facet enumeration needs a connected graph")
    _, out = _search(g, collect=True, budget=_node_budget(node_budget))
    assert out is not None
    out.sort()
    return out


def facet_count(g: Graph, node_budget: int | None = None) -> int:
    """Number of facets N(G), without materializing the labelings."""
    if g.n < 2:
        raise InputError("facet counting needs at least 2 vertices")
    if not is_connected(g):
        raise InputError("facet counting needs a connected graph")
    count, _ = _search(g, collect=False, budget=_node_budget(node_budget))
    return count


def facet_count_complete(n: int) -> int:
    """N(K_n) = 2^n - 2."""
    if n < 2:
        raise InputError("complete-graph facet count needs n >= 2")
    return 2**n - 2


@dataclass(frozen=True)
class FacetSubgraph:
    """Tight-edge subgraph of a facet labeling with its two shores.

    The subgraph is connected, spanning, and bipartite; `shore_a` is the
    side containing vertex 0, so equal subgraphs compare equal.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    shore_a: frozenset[int]

    @property
    def shore_b(self) -> frozenset[int]:
        return frozenset(range(self.n)) - self.shore_a


def facet_subgraph(g: Graph, f: Sequence[int]) -> FacetSubgraph:
    """Tight-edge subgraph of a facet-defining labeling, with its 2-coloring."""
    if not is_facet_defining(g, f):
        raise InputError("labeling is not facet-defining")
    tight = frozenset(
        (u, v) for (u, v) in g.edges if f[u] - f[v] in (1, -1)
    )
    tadj = [0] * g.n
    for u, v in tight:
        tadj[u] |= 1 << v
        tadj[v] |= 1 << u
    color = [-1] * g.n
    color[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        mask = tadj[u]
        while mask:
            b = mask & -mask
            w = b.bit_length() - 1
            mask ^= b
            if color[w] < 0:
                color[w] = color[u] ^ 1
                stack.append(w)
    shore = frozenset(v for v in range(g.n) if color[v] == 0)
    return FacetSubgraph(g.n, tight, shore)


def is_facet_subgraph(g: Graph, a: Bipartition) -> bool:
    """Is the crossing subgraph of (A, V\\A) connected and spanning?

    A connected spanning bipartite subgraph has a unique 2-coloring, and
    maximality forces it to contain every crossing edge, so the facet
    subgraphs are exactly the connected spanning crossing subgraphs.
    """
    if a.mask == 0 or a.mask == (1 << g.n) - 1:
        raise InputError("bipartition must be a proper nonempty subset")
    b = induced_bipartite_subgraph(g, a)
    return is_connected(b)


def group_by_facet_subgraph(
    g: Graph, node_budget: int | None = None
) -> dict[FacetSubgraph, list[tuple[int, ...]]]:
    """Partition all facet labelings by their tight subgraph."""
    groups: dict[FacetSubgraph, list[tuple[int, ...]]] = {}
    for f in enumerate_facet_functions(g, node_budget=node_budget):
        key = facet_subgraph(g, f)
        groups.setdefault(key, []).append(f)
    return groups
