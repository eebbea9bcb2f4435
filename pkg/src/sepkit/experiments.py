"""Ensemble metrics, bipartition scans, threshold trials and the
cycle-length scans for unicyclic degree sequences.

Everything that feeds a CSV is computed exactly (Fractions for clustering
and scan fractions); rendering to decimal happens in the reporting layer.
"""

from __future__ import annotations

import random
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .clustering import average_local_clustering
from .degrees import unicyclic_construct
from .errors import InputError
from .facets import facet_count, group_by_facet_subgraph, is_facet_subgraph
from .graph6 import graph6_encode
from .graphs import Bipartition, Graph, induced_bipartite_subgraph, is_connected
from .samplers import sample_gnp, sample_gnp_connected

__all__ = [
    "EnsembleRecord",
    "ScanPoint",
    "ensemble_metrics",
    "bipartition_scan",
    "ThresholdSummary",
    "er_threshold_trial",
    "BipartitionLabelingResult",
    "bipartition_labeling_check",
    "CycleScanRow",
    "cycle_length_scan",
    "facet_count_invariance_check",
    "spearman_rank",
]


@dataclass(frozen=True)
class EnsembleRecord:
    """One sampled graph with its clustering and facet count."""

    index: int
    n: int
    m: int
    graph6: str
    cws: Fraction
    facets: int
    seed: int | None = None
    chain: str = ""


def _graph_ref(g: Graph) -> str:
    if g.n <= 62:
        return graph6_encode(g)
    return f"edges:{g.n}x{g.m}"


def ensemble_metrics(
    graphs: Sequence[Graph],
    seed: int | None = None,
    chain: str = "",
    jobs: int | None = None,
) -> list[EnsembleRecord]:
    """One record per graph, in order. `jobs` parallelizes the facet counts."""
    for i, g in enumerate(graphs):
        if not is_connected(g):
            raise InputError(f"ensemble member {i} is disconnected")
    if jobs is not None and jobs > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            counts = list(pool.map(facet_count, graphs, chunksize=8))
    else:
        counts = [facet_count(g) for g in graphs]
    return [
        EnsembleRecord(
            index=i,
            n=g.n,
            m=g.m,
            graph6=_graph_ref(g),
            cws=average_local_clustering(g),
            facets=counts[i],
            seed=seed,
            chain=chain,
        )
        for i, g in enumerate(graphs)
    ]


@dataclass(frozen=True)
class ScanPoint:
    """Running fraction of sampled subsets inducing a connected crossing graph."""

    step: int
    hits: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.hits, self.step)


def _cross_connected(adj: Sequence[int], n: int, amask: int, spanning: bool) -> bool:
    """Connectivity of the crossing subgraph of (A, V\\A).

    spanning=False asks for a single nontrivial component (vertices with
    no crossing edge are ignored); spanning=True additionally fails on
    any such isolated vertex.
    """
    full = (1 << n) - 1
    bmask = full ^ amask
    start = -1
    for v in range(n):
        side = bmask if (amask >> v) & 1 else amask
        if adj[v] & side:
            start = v
            break
    if start < 0:
        return False  # no crossing edges at all
    visited = 1 << start
    frontier = visited
    while frontier:
        fa = frontier & amask
        fb = frontier & bmask
        ua = 0
        while fa:
            b = fa & -fa
            ua |= adj[b.bit_length() - 1]
            fa ^= b
        ub = 0
        while fb:
            b = fb & -fb
            ub |= adj[b.bit_length() - 1]
            fb ^= b
        frontier = ((ua & bmask) | (ub & amask)) & ~visited
        visited |= frontier
    if spanning:
        return visited == full
    rest = full ^ visited
    while rest:
        b = rest & -rest
        v = b.bit_length() - 1
        rest ^= b
        side = bmask if (amask >> v) & 1 else amask
        if adj[v] & side:
            return False  # a second nontrivial component
    return True


def bipartition_scan(
    g: Graph,
    subsets: int,
    rng: random.Random,
    spanning: bool = False,
    every: int = 10,
) -> list[ScanPoint]:
    """Draw coin-flip vertex subsets and track how often the crossing
    subgraph comes out connected; one point per `every` subsets.

    Empty and full subsets are redrawn. With spanning=True a subset only
    counts when the crossing subgraph also spans every vertex (the exact
    facet-subgraph condition); the default ignores isolated vertices,
    which is the reading under which sparse regular graphs stabilize
    near 1.
    """
    if not is_connected(g):
        raise InputError("bipartition scan needs a connected graph")
    n = g.n
    full = (1 << n) - 1
    points = []
    hits = 0
    for i in range(1, subsets + 1):
        amask = 0
        while amask == 0 or amask == full:
            amask = rng.getrandbits(n)
        if _cross_connected(g.adj, n, amask, spanning):
            hits += 1
        if i % every == 0:
            points.append(ScanPoint(step=i, hits=hits))
    return points


@dataclass(frozen=True)
class ThresholdSummary:
    """Outcome of one supercritical or subcritical threshold trial."""

    n: int
    p: float
    kind: str  # "supercritical" | "subcritical"
    trials: int
    connected: int
    witness_found: bool | None = None
    witness_vertex: int | None = None
    witness_degree: int | None = None
    witness_disconnects: bool | None = None

    @property
    def connected_fraction(self) -> Fraction:
        return Fraction(self.connected, self.trials) if self.trials else Fraction(0)


def er_threshold_trial(
    n: int,
    p: float,
    trials: int,
    rng: random.Random,
    balance_width: int = 0,
    max_rejects: int = 1000,
) -> ThresholdSummary:
    """Probe the p = 1/2 connectivity threshold for crossing subgraphs.

    p > 1/2: draw one connected G(n,p) and report how many of `trials`
    random near-balanced subsets (|A| = floor(n/2), widened by at most
    balance_width) give a connected spanning crossing subgraph.

    p < 1/2: draw G(n,p) and build the disconnecting witness: a minimum
    degree vertex v with deg(v) < floor(n/2) is buried with its whole
    neighbourhood inside a floor(n/2)-subset, isolating v.
    """
    if not 0 < p < 1:
        raise InputError(f"edge probability must be in (0,1), got {p}")
    if p == 0.5:
        raise InputError("the threshold trial needs p strictly above or below 1/2")
    half = n // 2
    if p > 0.5:
        g = sample_gnp_connected(n, p, rng, max_rejects=max_rejects)
        good = 0
        for _ in range(trials):
            size = half
            if balance_width:
                size = half + rng.randint(-balance_width, balance_width)
                size = max(1, min(n - 1, size))
            amask = 0
            for v in rng.sample(range(n), size):
                amask |= 1 << v
            if _cross_connected(g.adj, n, amask, spanning=True):
                good += 1
        return ThresholdSummary(n, p, "supercritical", trials, good)
    g = sample_gnp(n, p, rng)
    v = min(range(n), key=lambda u: (g.degree(u), u))
    deg = g.degree(v)
    if deg >= half:
        return ThresholdSummary(
            n, p, "subcritical", 0, 0,
            witness_found=False, witness_vertex=v, witness_degree=deg,
        )
    members = {v} | set(g.neighbors(v))
    rest = [u for u in range(n) if u not in members]
    members |= set(rng.sample(rest, half - len(members)))
    amask = 0
    for u in members:
        amask |= 1 << u
    disconnects = not _cross_connected(g.adj, n, amask, spanning=True)
    return ThresholdSummary(
        n, p, "subcritical", 0, 0,
        witness_found=True, witness_vertex=v, witness_degree=deg,
        witness_disconnects=disconnects,
    )


@dataclass(frozen=True)
class BipartitionLabelingResult:
    """Facet labelings attached to one bipartition's crossing subgraph."""

    function_count: int
    all_01: bool
    hypothesis_met: bool  # both induced sides connected
    facet_subgraph: bool  # crossing subgraph connected and spanning


def _induced_connected(g: Graph, members: Sequence[int]) -> bool:
    if not members:
        return False
    idx = {v: i for i, v in enumerate(members)}
    sub = Graph(
        len(members),
        [
            (idx[u], idx[v])
            for (u, v) in g.edges
            if u in idx and v in idx
        ],
    )
    return is_connected(sub)


def _is_two_valued(f: Sequence[int]) -> bool:
    values = set(f)
    return len(values) == 2 and max(values) - min(values) == 1


def bipartition_labeling_check(
    g: Graph,
    a: Bipartition,
    groups: dict | None = None,
) -> BipartitionLabelingResult:
    """Count facet labelings whose tight subgraph is the crossing subgraph
    of (A, V\\A); when both induced sides are connected the count is two
    and both labelings are two-valued with step one ({0,1} up to the
    constant shift).

    `groups` takes a precomputed group_by_facet_subgraph(g) (or the same
    mapping keyed by edge frozensets) so many bipartitions of one graph
    can be checked cheaply.
    """
    if not is_connected(g):
        raise InputError("check needs a connected graph")
    if a.mask == 0 or a.mask == (1 << g.n) - 1:
        raise InputError("bipartition must be proper and nonempty")
    if groups is None:
        groups = group_by_facet_subgraph(g)
    if groups and not isinstance(next(iter(groups)), frozenset):
        groups = {sub.edges: fs for sub, fs in groups.items()}
    target = frozenset(induced_bipartite_subgraph(g, a).edges)
    functions = groups.get(target, [])
    hypothesis = _induced_connected(g, a.members()) and _induced_connected(
        g, a.complement().members()
    )
    return BipartitionLabelingResult(
        function_count=len(functions),
        all_01=bool(functions) and all(_is_two_valued(f) for f in functions),
        hypothesis_met=hypothesis,
        facet_subgraph=is_facet_subgraph(g, a),
    )


@dataclass(frozen=True)
class CycleScanRow:
    cycle_length: int
    facets: int
    is_max: bool


def cycle_length_scan(d: Sequence[int]) -> list[CycleScanRow]:
    """Facet count of the unicyclic realization for every feasible cycle
    length, with the maximizers flagged."""
    seq = list(d)
    if all(x == 2 for x in seq):
        ms = [len(seq)]
    else:
        k = max(i + 1 for i in range(len(seq)) if seq[i] >= 2)
        ms = list(range(3, k + 1))
        if not ms:
            raise InputError("degree sequence admits no cycle of length >= 3")
    counts = {m: facet_count(unicyclic_construct(seq, m)) for m in ms}
    best = max(counts.values())
    return [CycleScanRow(m, counts[m], counts[m] == best) for m in ms]


def _refinement_fingerprint(g: Graph) -> tuple:
    """Isomorphism-invariant fingerprint by iterated color refinement.

    Equal graphs always collide, so deduplicating on it only ever merges
    candidates, never fabricates distinctness.
    """
    colors = [g.degree(v) for v in range(g.n)]
    for _ in range(g.n):
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in g.neighbors(v))))
            for v in range(g.n)
        ]
        relabel = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        fresh = [relabel[s] for s in sigs]
        if fresh == colors:
            break
        colors = fresh
    edge_colors = sorted(
        tuple(sorted((colors[u], colors[v]))) for u, v in g.edges
    )
    return (tuple(sorted(colors)), tuple(edge_colors))


def _random_unicyclic(
    d: Sequence[int], m: int, rng: random.Random, tries: int = 60
) -> Graph | None:
    """One random realization of (d, m): a random cycle over degree->=2
    roles with the remaining vertices attached as random trees."""
    n = len(d)
    for _ in range(tries):
        degs = list(d)
        rng.shuffle(degs)
        big = [v for v in range(n) if degs[v] >= 2]
        if len(big) < m:
            continue
        cyc = rng.sample(big, m)
        edges = [
            (cyc[i], cyc[(i + 1) % m]) if cyc[i] < cyc[(i + 1) % m]
            else (cyc[(i + 1) % m], cyc[i])
            for i in range(m)
        ]
        on_cycle = set(cyc)
        free = [degs[v] - (2 if v in on_cycle else 0) for v in range(n)]
        hosts = [v for v in sorted(on_cycle) if free[v] > 0]
        pending = [v for v in range(n) if v not in on_cycle]
        rng.shuffle(pending)
        pending.sort(key=lambda v: -degs[v])  # stubs never strand this way
        ok = True
        for v in pending:
            if not hosts:
                ok = False
                break
            u = hosts[rng.randrange(len(hosts))]
            edges.append((u, v) if u < v else (v, u))
            free[u] -= 1
            if free[u] == 0:
                hosts.remove(u)
            free[v] = degs[v] - 1
            if free[v] > 0:
                hosts.append(v)
        if not ok or any(free):
            continue
        return Graph(n, edges)
    return None


def _unicyclic_variants(
    d: Sequence[int], m: int, variants: int, rng: random.Random, tries: int = 200
) -> list[Graph]:
    """Structurally distinct unicyclic realizations of (d, m).

    Candidates come from randomized role assignment; near-duplicates are
    merged by a refinement fingerprint, so survivors are pairwise
    non-isomorphic.
    """
    base = unicyclic_construct(d, m)
    seen: dict[tuple, Graph] = {_refinement_fingerprint(base): base}
    for _ in range(tries):
        if len(seen) >= variants:
            break
        g = _random_unicyclic(d, m, rng)
        if g is not None:
            seen.setdefault(_refinement_fingerprint(g), g)
    return list(seen.values())[:variants]


def facet_count_invariance_check(
    d: Sequence[int], m: int, variants: int, rng: random.Random
) -> bool:
    """Do `variants` distinct unicyclic realizations of (d, m) share one
    facet count? Vacuously true (with a warning) if fewer than two
    distinct realizations exist."""
    gs = _unicyclic_variants(d, m, variants, rng)
    if len(gs) < 2:
        warnings.warn(
            f"only {len(gs)} distinct realization(s) of d={list(d)}, m={m}; "
            "invariance check is vacuous",
            stacklevel=2,
        )
        return True
    counts = {facet_count(g) for g in gs}
    return len(counts) == 1


def spearman_rank(xs: Sequence, ys: Sequence) -> float:
    """Spearman correlation with average ranks for ties.

    Ranking happens on the exact values (Fractions sort exactly), so only
    the final correlation is a float.
    """
    if len(xs) != len(ys) or len(xs) < 2:
        raise InputError("rank correlation needs two equal-length samples")

    def ranks(vals):
        order = sorted(range(len(vals)), key=lambda i: vals[i])
        out = [0.0] * len(vals)
        i = 0
        while i < len(order):
            j = i
            while j + 1 < len(order) and vals[order[j + 1]] == vals[order[i]]:
                j += 1
            avg = (i + j) / 2 + 1
            for t in range(i, j + 1):
                out[order[t]] = avg
            i = j + 1
        return out

    rx, ry = ranks(xs), ranks(ys)
    nn = len(rx)
    mx = sum(rx) / nn
    my = sum(ry) / nn
    cov = sum((a - mx) * (b - my) for a, b in zip(rx, ry))
    vx = sum((a - mx) ** 2 for a in rx)
    vy = sum((b - my) ** 2 for b in ry)
    if vx == 0 or vy == 0:
        return 0.0
    return cov / (vx * vy) ** 0.5
