"""Seeded random-graph generation: G(n,p) and two connectivity-preserving
Markov chains.

`RandomSource` fixes the generator: the stdlib Mersenne Twister seeded
with a 64-bit integer. Identical seed and call sequence give identical
output on any build of this package (bit-equality across other
implementations is not promised). A chain owns its source; run several
chains concurrently only with separate sources.

The chains walk the "graph of graphs": states are connected graphs, a
move rewires edges, and any move that would leave the state space
(loop, duplicate edge, disconnection) is a rejected proposal that keeps
the chain in place. Fixed-(n,m) states move by single-edge swaps (delete
an edge, add a non-edge); fixed-degree-sequence states move by
double-edge swaps (uv, xy -> ux, vy with both pairings equally likely).
Both meta-graphs are regular, strongly connected and aperiodic, so the
chains converge to the uniform distribution on their state space.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Sequence

from .degrees import havel_hakimi
from .errors import InputError, SamplingError
from .graphs import Graph, connected_masks, is_connected

__all__ = [
    "RandomSource",
    "ChainConfig",
    "ChainRun",
    "sample_gnp",
    "sample_gnp_connected",
    "single_edge_swap_step",
    "single_edge_chain",
    "double_edge_swap_step",
    "double_edge_chain",
]

_MASK64 = (1 << 64) - 1


class RandomSource(random.Random):
    """Mersenne Twister stream under a 64-bit seed."""

    def __init__(self, seed: int):
        self.seed64 = seed & _MASK64
        super().__init__(self.seed64)

    def __repr__(self) -> str:
        return f"RandomSource(seed={self.seed64})"


@dataclass(frozen=True)
class ChainConfig:
    """Run parameters for one chain.

    burn_in/subsample of None pick the defaults: burn_in 10*n*m proposals,
    subsample 11 for fixed-(n,m) chains and for degree-sequence chains on
    15+ vertices, 5 for smaller degree-sequence chains. Proposal counts
    include rejected moves.
    """

    seed: int
    burn_in: int | None = None
    subsample: int | None = None
    samples: int = 1

    def __post_init__(self):
        if self.burn_in is not None and self.burn_in < 0:
            raise InputError("burn_in cannot be negative")
        if self.subsample is not None and self.subsample < 1:
            raise InputError("subsample interval must be >= 1")
        if self.samples < 1:
            raise InputError("sample count must be >= 1")


@dataclass
class ChainRun:
    """Emitted ensemble plus the run metadata that goes into CSV comments."""

    kind: str
    graphs: list[Graph]
    seed: int
    burn_in: int
    subsample: int
    proposals: int
    accepted: int

    @property
    def acceptance_rate(self) -> float:
        return self.accepted / self.proposals if self.proposals else 0.0

    def __iter__(self):
        return iter(self.graphs)

    def __len__(self) -> int:
        return len(self.graphs)

    def __getitem__(self, i):
        return self.graphs[i]


def sample_gnp(n: int, p: float, rng: random.Random) -> Graph:
    """One draw of G(n,p): each of the C(n,2) edges is an independent coin."""
    if not 0 <= p <= 1:
        raise InputError(f"edge probability must be in [0,1], got {p}")
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def sample_gnp_connected(
    n: int, p: float, rng: random.Random, max_rejects: int = 1000
) -> Graph:
    """Rejection-sample G(n,p) until connected."""
    for _ in range(max_rejects + 1):
        g = sample_gnp(n, p, rng)
        if is_connected(g):
            return g
    raise SamplingError(
        f"no connected G({n},{p}) draw within the rejection cap", max_rejects + 1
    )


def _rand_pair(n: int, rng: random.Random) -> tuple[int, int]:
    u = rng.randrange(n)
    v = rng.randrange(n - 1)
    if v >= u:
        v += 1
    return (u, v) if u < v else (v, u)


class _EdgeState:
    """Mutable edge list + position map + bitset adjacency for the chains.

    `pos` maps each edge to its slot in `edges` so removal is O(1)
    (swap-with-last); it also serves as the membership set.
    """

    __slots__ = ("n", "edges", "pos", "adj")

    def __init__(self, g: Graph):
        self.n = g.n
        self.edges = list(g.edges)
        self.pos = {e: i for i, e in enumerate(self.edges)}
        self.adj = list(g.adj)

    def remove(self, e: tuple[int, int]) -> None:
        i = self.pos.pop(e)
        last = self.edges.pop()
        if last != e:
            self.edges[i] = last
            self.pos[last] = i
        u, v = e
        self.adj[u] &= ~(1 << v)
        self.adj[v] &= ~(1 << u)

    def add(self, e: tuple[int, int]) -> None:
        self.pos[e] = len(self.edges)
        self.edges.append(e)
        u, v = e
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def connected(self) -> bool:
        return connected_masks(self.adj, self.n)

    def snapshot(self):
        return (list(self.edges), list(self.adj))

    def restore(self, snap) -> None:
        self.edges = list(snap[0])
        self.pos = {e: i for i, e in enumerate(self.edges)}
        self.adj = list(snap[1])

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)


def _propose_single(state: _EdgeState, rng: random.Random) -> bool:
    """One single-edge-swap proposal; True if the move was accepted."""
    n = state.n
    npairs = n * (n - 1) // 2
    if len(state.edges) >= npairs:
        return False  # complement empty: permanent fixed point
    e = state.edges[rng.randrange(len(state.edges))]
    while True:
        f = _rand_pair(n, rng)
        if f not in state.pos:
            break
    state.remove(e)
    state.add(f)
    if state.connected():
        return True
    state.remove(f)
    state.add(e)
    return False


def _propose_double(
    state: _EdgeState, rng: random.Random, check_connect: bool = True
) -> bool:
    """One double-edge-swap proposal; True if the move was accepted."""
    m = len(state.edges)
    if m < 2:
        return False
    i = rng.randrange(m)
    j = rng.randrange(m - 1)
    if j >= i:
        j += 1
    ea, eb = state.edges[i], state.edges[j]
    u, v = ea
    x, y = eb
    if rng.getrandbits(1):
        u, v = v, u
    if rng.getrandbits(1):
        x, y = y, x
    # rewire uv, xy -> ux, vy
    if u == x or v == y:
        return False  # loop
    e1 = (u, x) if u < x else (x, u)
    e2 = (v, y) if v < y else (y, v)
    if e1 == ea or e1 == eb or e2 == ea or e2 == eb:
        return False  # shared-vertex identity rewiring, nothing moves
    if e1 in state.pos or e2 in state.pos:
        return False  # duplicate edge
    state.remove(ea)
    state.remove(eb)
    state.add(e1)
    state.add(e2)
    if not check_connect or state.connected():
        return True
    state.remove(e1)
    state.remove(e2)
    state.add(ea)
    state.add(eb)
    return False


def single_edge_swap_step(g: Graph, rng: random.Random) -> Graph:
    """Delete a uniform edge, add a uniform non-edge; keep g if that disconnects."""
    if not is_connected(g):
        raise InputError("single-edge-swap chain state must be connected")
    state = _EdgeState(g)
    return state.graph() if _propose_single(state, rng) else g


def double_edge_swap_step(g: Graph, rng: random.Random) -> Graph:
    """Rewire a uniform ordered edge pair, both pairings equally likely.

    Proposals creating a loop, a duplicate edge, or a disconnected graph
    return g unchanged; the degree sequence is preserved always.
    """
    if not is_connected(g):
        raise InputError("double-edge-swap chain state must be connected")
    state = _EdgeState(g)
    return state.graph() if _propose_double(state, rng) else g


def _random_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Uniform labeled tree from a random Pruefer sequence."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v) if leaf < v else (v, leaf))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    a, b = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((a, b) if a < b else (b, a))
    return edges


def _pair_unrank(n: int, t: int) -> tuple[int, int]:
    # row-major rank over pairs i<j
    i = 0
    row = n - 1
    while t >= row:
        t -= row
        row -= 1
        i += 1
    return (i, i + 1 + t)


def _initial_nm_graph(n: int, m: int, rng: random.Random, tries: int = 1000) -> Graph:
    npairs = n * (n - 1) // 2
    for _ in range(tries):
        idxs = rng.sample(range(npairs), m)
        g = Graph(n, [_pair_unrank(n, t) for t in idxs])
        if is_connected(g):
            return g
    # fallback: random spanning tree plus random extra edges
    edges = set(_random_tree_edges(n, rng))
    while len(edges) < m:
        e = _rand_pair(n, rng)
        edges.add(e)
    return Graph(n, edges)


def _run_chain(
    kind: str,
    state: _EdgeState,
    rng: random.Random,
    burn_in: int,
    subsample: int,
    samples: int,
    propose,
    check_every: int,
) -> ChainRun:
    graphs: list[Graph] = []
    proposals = 0
    accepted = 0
    if check_every <= 1:
        target = burn_in
        while len(graphs) < samples:
            while proposals < target:
                accepted += propose(state, rng)
                proposals += 1
            graphs.append(state.graph())
            target += subsample
    else:
        # windowed connectivity: propose freely (loops/duplicates still
        # rejected per move), check every `check_every` proposals and at
        # emission points, and roll the window back if the state left the
        # connected part of the space. Rolled-back proposals still count,
        # exactly as a run of rejected moves would.
        snap = state.snapshot()
        next_check = check_every
        target = burn_in
        while len(graphs) < samples:
            boundary = min(next_check, target)
            while proposals < boundary:
                accepted += propose(state, rng, False)
                proposals += 1
            if state.connected():
                snap = state.snapshot()
            else:
                state.restore(snap)
            if boundary == next_check:
                next_check += check_every
            if proposals == target and len(graphs) < samples:
                graphs.append(state.graph())
                target += subsample
    seed = getattr(rng, "seed64", -1)
    return ChainRun(kind, graphs, seed, burn_in, subsample, proposals, accepted)


def single_edge_chain(
    n: int, m: int, config: ChainConfig, check_every: int = 1
) -> ChainRun:
    """Sample connected (n,m)-graphs by the single-edge-swap walk.

    The start state is a connected rejection draw over uniform m-subsets
    of pairs (tree-plus-random-edges after 1000 misses).
    """
    npairs = n * (n - 1) // 2
    if n < 1 or m < n - 1 or m > npairs:
        raise InputError(f"no connected graph has n={n}, m={m}")
    rng = RandomSource(config.seed)
    state = _EdgeState(_initial_nm_graph(n, m, rng))
    burn_in = config.burn_in if config.burn_in is not None else 10 * n * m
    subsample = config.subsample if config.subsample is not None else 11
    run = _run_chain(
        "edges", state, rng, burn_in, subsample, config.samples,
        lambda s, r, check=True: _propose_single(s, r),
        check_every,
    )
    return run


def double_edge_chain(
    d: Sequence[int], config: ChainConfig, check_every: int = 1
) -> ChainRun:
    """Sample connected graphs with per-vertex degrees d (sorted non-increasing).

    Starts from the Havel-Hakimi realization (connected by swap repair)
    and walks with double-edge swaps. check_every > 1 trades exact
    per-move connectivity for windowed checks with rollback; use it for
    burn-in-scale randomization of large graphs, not for uniformity
    studies.
    """
    rng = RandomSource(config.seed)
    start = havel_hakimi(d, rng)
    n, m = start.n, start.m
    state = _EdgeState(start)
    burn_in = config.burn_in if config.burn_in is not None else 10 * n * m
    if config.subsample is not None:
        subsample = config.subsample
    else:
        subsample = 5 if n < 15 else 11
    return _run_chain(
        "degseq", state, rng, burn_in, subsample, config.samples,
        _propose_double,
        check_every,
    )
