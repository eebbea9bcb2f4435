"""Degree-sequence algorithms: graphicality, realization, unicyclic builds.

Degree sequences are plain int sequences, required to be sorted
non-increasing; vertex i of any realization gets degree d[i].
"""

from __future__ import annotations

import random
from typing import Sequence

from .errors import InputError, NoConnectedRealizationError
from .graphs import Graph, connected_masks

__all__ = ["erdos_gallai_graphical", "havel_hakimi", "unicyclic_construct"]


def _check_sequence(d: Sequence[int]) -> list[int]:
    seq = list(d)
    if not seq:
        raise InputError("degree sequence is empty")
    for x in seq:
        if not isinstance(x, int) or x < 0:
            raise InputError(f"degrees must be non-negative integers, got {x!r}")
    if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
        raise InputError("degree sequence must be sorted non-increasing")
    return seq


def erdos_gallai_graphical(d: Sequence[int]) -> bool:
    """Erdős–Gallai test: is d realizable by a simple graph?"""
    seq = _check_sequence(d)
    n = len(seq)
    if seq[0] >= n:
        return False
    if sum(seq) % 2:
        return False
    # prefix[k] = d_1 + ... + d_k (1-indexed)
    prefix = [0]
    for x in seq:
        prefix.append(prefix[-1] + x)
    for k in range(1, n + 1):
        tail = sum(min(seq[i], k) for i in range(k, n))
        if prefix[k] > k * (k - 1) + tail:
            return False
    return True


def havel_hakimi(d: Sequence[int], rng: random.Random | None = None) -> Graph:
    """Realize a graphical sequence, then repair connectivity with edge swaps.

    The classic rule: repeatedly connect the highest-degree vertex to the
    next-highest remaining degrees. If the result is disconnected but a
    connected realization exists (all degrees >= 1 and sum(d) >= 2(n-1)),
    degree-preserving swaps join the components: a cycle edge (a, b) in one
    component and any edge (c, d) in another are rewired to (a, c), (b, d).

    `rng`, when given, shuffles the tie-breaking order among equal degrees
    so different sources yield different realizations.
    """
    seq = _check_sequence(d)
    if not erdos_gallai_graphical(seq):
        raise InputError(f"degree sequence {seq} is not graphical")
    n = len(seq)

    tiebreak = list(range(n))
    if rng is not None:
        rng.shuffle(tiebreak)

    remaining = list(seq)
    # (degree, tiebreak, vertex); kept nearly sorted so timsort stays cheap
    pool = sorted(
        ((remaining[v], tiebreak[v], v) for v in range(n)),
        key=lambda t: (-t[0], t[1]),
    )
    adj = [0] * n
    edges: list[tuple[int, int]] = []
    while pool:
        pool.sort(key=lambda t: (-t[0], t[1]))
        deg, _, v = pool[0]
        if deg == 0:
            break
        if deg > len(pool) - 1:
            raise InputError(f"degree sequence {seq} is not graphical")
        targets = pool[1 : 1 + deg]
        pool = pool[1 + deg :]
        refreshed = []
        for tdeg, tb, u in targets:
            if tdeg == 0:
                raise InputError(f"degree sequence {seq} is not graphical")
            adj[v] |= 1 << u
            adj[u] |= 1 << v
            edges.append((u, v) if u < v else (v, u))
            refreshed.append((tdeg - 1, tb, u))
        pool.extend(refreshed)

    if not connected_masks(adj, n):
        if n > 1 and (min(seq) < 1 or sum(seq) < 2 * (n - 1)):
            raise NoConnectedRealizationError(
                f"degree sequence {seq} has no connected realization"
            )
        _repair_connectivity(adj, edges, n)
    return Graph(n, edges)


def _component_masks(adj: list[int], n: int) -> list[int]:
    comps = []
    unseen = (1 << n) - 1
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            reach = 0
            f = frontier
            while f:
                b = f & -f
                reach |= adj[b.bit_length() - 1]
                f ^= b
            frontier = reach & ~seen
            seen |= frontier
        comps.append(seen)
        unseen &= ~seen
    return comps


def _repair_connectivity(adj: list[int], edges: list[tuple[int, int]], n: int) -> None:
    """Merge components with degree-preserving double-edge swaps, in place."""
    while True:
        comps = _component_masks(adj, n)
        if len(comps) == 1:
            return
        swap = None
        for u, v in edges:
            # cycle edge: removing it keeps its component connected
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            comp = next(c for c in comps if (c >> u) & 1)
            still = _reaches(adj, u, v)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            if still:
                other = next(
                    (c, d) for (c, d) in edges if not (comp >> c) & 1
                )
                swap = ((u, v), other)
                break
        if swap is None:
            # disconnected with every edge a bridge on a graph that passed
            # the feasibility tests: cannot happen
            raise NoConnectedRealizationError("connectivity repair found no cycle edge")
        (a, b), (c, dd) = swap
        for x, y in ((a, b), (c, dd)):
            adj[x] &= ~(1 << y)
            adj[y] &= ~(1 << x)
            edges.remove((x, y) if x < y else (y, x))
        for x, y in ((a, c), (b, dd)):
            adj[x] |= 1 << y
            adj[y] |= 1 << x
            edges.append((x, y) if x < y else (y, x))


def _reaches(adj: list[int], src: int, dst: int) -> bool:
    seen = 1 << src
    frontier = seen
    target = 1 << dst
    while frontier:
        reach = 0
        f = frontier
        while f:
            b = f & -f
            reach |= adj[b.bit_length() - 1]
            f ^= b
        if reach & target:
            return True
        frontier = reach & ~seen
        seen |= frontier
    return False


def unicyclic_construct(d: Sequence[int], m: int) -> Graph:
    """Connected graph with degree sequence d whose unique cycle has length m.

    Requires n vertices with sum(d) = 2n and d of the shape d_k >= 2,
    d_i = 1 for i > k (k < n); any m with 3 <= m <= k is achievable. The
    all-twos sequence only realizes the full cycle m = n. Construction:
    cycle on vertices 0..m-1, path on m..k-1, bridge (0, m), then leaves
    fill the open degree slots in ascending vertex order.
    """
    seq = _check_sequence(d)
    n = len(seq)
    if min(seq) < 1:
        raise InputError("unicyclic sequences need every degree >= 1")
    if sum(seq) != 2 * n:
        raise InputError(
            f"unicyclic sequence needs sum(d) = 2n, got sum {sum(seq)} for n={n}"
        )
    if all(x == 2 for x in seq):
        if m != n:
            raise InputError(f"the all-twos sequence only realizes the {n}-cycle")
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    k = max(i + 1 for i in range(n) if seq[i] >= 2)  # 1-indexed count
    if any(seq[i] != 1 for i in range(k, n)):
        raise InputError("degrees after the last >=2 entry must all equal 1")
    if not 3 <= m <= k:
        raise InputError(f"cycle length {m} outside the feasible range 3..{k}")

    edges = [(i, (i + 1) % m) for i in range(m)]
    if m < k:
        edges.extend((i, i + 1) for i in range(m, k - 1))
        edges.append((0, m))
    used = [0] * n
    for u, v in edges:
        used[u] += 1
        used[v] += 1
    stubs = [v for v in range(k) for _ in range(seq[v] - used[v])]
    leaves = list(range(k, n))
    if len(stubs) != len(leaves):
        raise InputError(f"degree sequence {seq} does not close up as unicyclic")
    edges.extend(zip(stubs, leaves))
    g = Graph(n, edges)
    assert g.m == n and list(g.degree_sequence()) == seq
    return g
