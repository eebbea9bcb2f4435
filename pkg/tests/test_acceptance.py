"""Acceptance suite: every release-gating criterion at its pinned
tolerance, one pass/fail line each (printed and echoed in the terminal
summary). Statistical tolerances live in TOLERANCES so they are auditable
in one place."""

import bisect
import statistics
import time
import warnings
from collections import Counter
from itertools import combinations, combinations_with_replacement, permutations, product

from conftest import record_criterion

from sepkit.cli import main as cli_main
from sepkit.degrees import unicyclic_construct
from sepkit.experiments import (
    bipartition_scan,
    cycle_length_scan,
    bipartition_labeling_check,
    ensemble_metrics,
    er_threshold_trial,
    facet_count_invariance_check,
    spearman_rank,
)
from sepkit.facets import facet_count, group_by_facet_subgraph
from sepkit.graphs import Bipartition, Graph, complete, is_connected
from sepkit.hull import facet_count_hull
from sepkit.samplers import (
    ChainConfig,
    RandomSource,
    double_edge_chain,
    double_edge_swap_step,
    sample_gnp_connected,
    single_edge_chain,
    single_edge_swap_step,
)

TOLERANCES = {
    "kn_runtime_s": 60,
    "oracle_runtime_s": 1800,
    "chain_steps": 100_000,
    "tv_bound": 0.05,
    "uniformity_samples": 100_000,
    "supercritical_fraction": 0.99,
    "subcritical_fraction": 0.95,
    "threshold_runtime_s": 300,
    "sparse_scan_low": 0.98,
    "sparse_scan_high": 1.0,
    "sparse_scan_runtime_s": 1800,
    "histogram_share": 0.60,
    "histogram_floor": 2046,
    "histogram_runtime_s": 7200,
    "spearman_min": 0.2,
}


def test_c01_complete_graph_exactness():
    t0 = time.time()
    counts = {n: facet_count(complete(n)) for n in range(2, 13)}
    elapsed = time.time() - t0
    ok = all(counts[n] == 2**n - 2 for n in range(2, 13))
    ok = ok and counts[11] == 2046 and counts[12] == 4094
    ok = ok and elapsed < TOLERANCES["kn_runtime_s"]
    record_criterion(1, ok, f"N(K_n)=2^n-2 for n=2..12 in {elapsed:.1f}s")
    assert ok


def _edge_perm_tables(n):
    pairs = list(combinations(range(n), 2))
    pair_idx = {p: i for i, p in enumerate(pairs)}
    tables = []
    for perm in permutations(range(n)):
        table = [0] * len(pairs)
        for i, (a, b) in enumerate(pairs):
            pa, pb = perm[a], perm[b]
            table[i] = pair_idx[(pa, pb) if pa < pb else (pb, pa)]
        tables.append(table)
    return pairs, tables


def _mask_graph(n, pairs, mask):
    return Graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


def test_c02_oracle_equivalence():
    t0 = time.time()
    mismatches = 0
    graphs_checked = 0
    for n in range(2, 7):
        pairs, tables = _edge_perm_tables(n)
        npairs = len(pairs)
        class_count: dict[int, int] = {}
        for mask in range(1 << npairs):
            g = _mask_graph(n, pairs, mask)
            if not is_connected(g):
                continue
            if mask not in class_count:
                hull = facet_count_hull(g)
                for table in tables:
                    image = 0
                    rest = mask
                    while rest:
                        b = rest & -rest
                        image |= 1 << table[b.bit_length() - 1]
                        rest ^= b
                    class_count[image] = hull
            graphs_checked += 1
            if facet_count(g) != class_count[mask]:
                mismatches += 1
    for seed in range(100):
        g = sample_gnp_connected(7, 0.5, RandomSource(seed))
        graphs_checked += 1
        if facet_count(g) != facet_count_hull(g):
            mismatches += 1
    elapsed = time.time() - t0
    ok = mismatches == 0 and elapsed < TOLERANCES["oracle_runtime_s"]
    record_criterion(
        2, ok,
        f"enumerator == hull oracle on {graphs_checked} graphs "
        f"(exhaustive n<=6 + 100 random n=7) in {elapsed:.0f}s",
    )
    assert ok


def test_c03_tree_cross_polytope():
    bad = 0
    trees = 0
    for n in range(2, 8):
        expected = 2 ** (n - 1)
        for seq in product(range(n), repeat=max(n - 2, 0)):
            g = _tree_from_pruefer(n, seq)
            trees += 1
            if facet_count(g) != expected:
                bad += 1
    ok = bad == 0
    record_criterion(3, ok, f"N(tree)=2^(n-1) on all {trees} labeled trees, n<=7")
    assert ok


def _tree_from_pruefer(n, seq):
    if n == 2:
        return Graph(2, [(0, 1)])
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    for v in seq:
        leaf = leaves.pop(0)
        edges.append((leaf, v) if leaf < v else (v, leaf))
        degree[v] -= 1
        if degree[v] == 1:
            bisect.insort(leaves, v)
    a, b = leaves[0], leaves[1]
    edges.append((a, b) if a < b else (b, a))
    return Graph(n, edges)


def test_c04_chain_invariants():
    steps = TOLERANCES["chain_steps"]
    rng = RandomSource(404)
    g = single_edge_chain(11, 25, ChainConfig(seed=404, samples=1)).graphs[0]
    violations = 0
    for _ in range(steps):
        g = single_edge_swap_step(g, rng)
        if g.n != 11 or g.m != 25 or not is_connected(g):
            violations += 1
    d = sorted([3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 5, 5, 16, 16],
               reverse=True)
    h = double_edge_chain(d, ChainConfig(seed=404, samples=1)).graphs[0]
    per_vertex = tuple(h.degree(v) for v in range(h.n))
    for _ in range(steps):
        h = double_edge_swap_step(h, rng)
        if (
            tuple(h.degree(v) for v in range(h.n)) != per_vertex
            or not is_connected(h)
        ):
            violations += 1
    ok = violations == 0
    record_criterion(4, ok, f"0 violations over 2x{steps} chain steps")
    assert ok


def test_c05_chain_uniformity():
    nsamp = TOLERANCES["uniformity_samples"]
    pairs = list(combinations(range(5), 2))
    nm_states = set()
    for es in combinations(pairs, 5):
        g = Graph(5, es)
        if is_connected(g):
            nm_states.add(g.edges)
    run = single_edge_chain(5, 5, ChainConfig(seed=55, samples=nsamp, subsample=11))
    counts = Counter(g.edges for g in run)
    assert set(counts) <= nm_states
    s = len(nm_states)
    tv_single = (
        sum(abs(counts.get(st, 0) / nsamp - 1 / s) for st in nm_states) / 2
    )

    deg_states = set()
    for es in combinations(pairs, 4):
        g = Graph(5, es)
        if tuple(g.degree(v) for v in range(5)) == (2, 2, 2, 1, 1) and is_connected(g):
            deg_states.add(g.edges)
    run = double_edge_chain(
        [2, 2, 2, 1, 1], ChainConfig(seed=55, samples=nsamp, subsample=5)
    )
    counts = Counter(g.edges for g in run)
    assert set(counts) <= deg_states
    s = len(deg_states)
    tv_double = (
        sum(abs(counts.get(st, 0) / nsamp - 1 / s) for st in deg_states) / 2
    )
    bound = TOLERANCES["tv_bound"]
    ok = tv_single < bound and tv_double < bound
    record_criterion(
        5, ok,
        f"TV from uniform: single {tv_single:.3f} ({len(nm_states)} states), "
        f"double {tv_double:.3f} ({len(deg_states)} states), bound {bound}",
    )
    assert ok


def test_c06_er_threshold():
    t0 = time.time()
    good = 0
    total = 0
    for i in range(10):
        s = er_threshold_trial(300, 0.6, 200, RandomSource(600 + i))
        good += s.connected
        total += s.trials
    super_frac = good / total
    wins = 0
    for i in range(100):
        s = er_threshold_trial(300, 0.4, 0, RandomSource(700 + i))
        wins += bool(s.witness_found and s.witness_disconnects)
    elapsed = time.time() - t0
    ok = (
        super_frac >= TOLERANCES["supercritical_fraction"]
        and wins / 100 >= TOLERANCES["subcritical_fraction"]
        and elapsed < TOLERANCES["threshold_runtime_s"]
    )
    record_criterion(
        6, ok,
        f"supercritical {good}/{total} connected spanning, "
        f"subcritical witness {wins}/100, {elapsed:.0f}s",
    )
    assert ok


def test_c07_two_labelings():
    n = 12
    half = n // 2
    failures = 0
    hypothesis_cases = 0
    for seed in range(50):
        g = sample_gnp_connected(n, 0.55, RandomSource(2700 + seed))
        groups = {
            sub.edges: fs for sub, fs in group_by_facet_subgraph(g).items()
        }
        for rest in combinations(range(1, n), half - 1):
            a = Bipartition.from_vertices(n, (0,) + rest)
            res = bipartition_labeling_check(g, a, groups=groups)
            if not res.hypothesis_met:
                continue
            hypothesis_cases += 1
            if res.facet_subgraph:
                if res.function_count != 2 or not res.all_01:
                    failures += 1
            elif res.function_count != 0:
                failures += 1
    ok = failures == 0 and hypothesis_cases > 0
    record_criterion(
        7, ok,
        f"{hypothesis_cases} balanced bipartitions with connected sides over "
        f"50 G(12,0.55) draws: facet subgraphs carry exactly the two "
        f"two-valued labelings, others none ({failures} failures)",
    )
    assert ok


def test_c08_sparse_regular_scan():
    t0 = time.time()
    run = double_edge_chain(
        [11] * 5000,
        ChainConfig(seed=808, burn_in=100_001, subsample=100_001, samples=10),
        check_every=500,
    )
    finals = []
    for i, g in enumerate(run):
        assert is_connected(g) and set(g.degree_sequence()) == {11}
        points = bipartition_scan(g, 5000, RandomSource(8080 + i))
        finals.append(float(points[-1].fraction))
    elapsed = time.time() - t0
    lo, hi = TOLERANCES["sparse_scan_low"], TOLERANCES["sparse_scan_high"]
    ok = all(lo <= f <= hi for f in finals) and elapsed < TOLERANCES["sparse_scan_runtime_s"]
    record_criterion(
        8, ok,
        f"b_5000 in [{lo},{hi}] for all 10 graphs "
        f"(min {min(finals):.4f}, max {max(finals):.4f}), {elapsed:.0f}s",
    )
    assert ok


def test_c09_gnp_histogram():
    t0 = time.time()
    rng = RandomSource(911)
    graphs = [sample_gnp_connected(11, 0.45, rng) for _ in range(1000)]
    records = ensemble_metrics(graphs, seed=911, chain="gnp", jobs=2)
    values = [r.facets for r in records]
    floor = TOLERANCES["histogram_floor"]
    share = sum(1 for v in values if v >= floor) / len(values)
    med = statistics.median(values)
    elapsed = time.time() - t0
    ok = (
        share >= TOLERANCES["histogram_share"]
        and med >= floor
        and elapsed < TOLERANCES["histogram_runtime_s"]
    )
    record_criterion(
        9, ok,
        f"G(11,0.45) x1000: {share:.1%} with N>=2046, median {med:.0f}, "
        f"{elapsed:.0f}s",
    )
    assert ok


def test_c10_clustering_facet_trend():
    run = single_edge_chain(11, 25, ChainConfig(seed=1010, samples=500, subsample=11))
    records = ensemble_metrics(run.graphs, seed=1010, chain="edges", jobs=2)
    rho = spearman_rank([r.cws for r in records], [r.facets for r in records])
    ok = rho > TOLERANCES["spearman_min"]
    record_criterion(
        10, ok,
        f"Spearman(cws, facets) = {rho:.3f} over 500 (11,25)-graphs, "
        f"threshold {TOLERANCES['spearman_min']}",
    )
    assert ok


def _unicyclic_sequences(n):
    for seq in combinations_with_replacement(range(n, 0, -1), n):
        d = sorted(seq, reverse=True)
        if sum(d) != 2 * n:
            continue
        if all(x == 2 for x in d):
            yield d
            continue
        k = max(i + 1 for i in range(n) if d[i] >= 2)
        if k < 3 or k >= n or any(d[i] != 1 for i in range(k, n)):
            continue
        yield d


def test_c11_cycle_length_scan():
    rng = RandomSource(1111)
    sequences = 0
    failures = 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for n in range(3, 9):
            for d in _unicyclic_sequences(n):
                sequences += 1
                rows = cycle_length_scan(d)
                if all(x == 2 for x in d):
                    if [r.cycle_length for r in rows if r.is_max] != [n]:
                        failures += 1
                    continue
                k = max(i + 1 for i in range(n) if d[i] >= 2)
                ell = k if k % 2 else k - 1
                if [r.cycle_length for r in rows if r.is_max] != [ell]:
                    failures += 1
                for row in rows:
                    if not facet_count_invariance_check(
                        d, row.cycle_length, 3, rng
                    ):
                        failures += 1
    ok = failures == 0 and sequences >= 30
    record_criterion(
        11, ok,
        f"{sequences} unicyclic degree sequences (n<=8): max at largest odd "
        f"cycle length, construction-invariant N ({failures} failures)",
    )
    assert ok


def test_c12_reproducibility(tmp_path):
    outputs = []
    for tag in ("a", "b"):
        e1 = tmp_path / f"edges_{tag}.csv"
        cli_main(["ensemble", "edges", "--n", "9", "--m", "14", "--samples", "20",
                  "--seed", "12", "--out", str(e1)])
        e2 = tmp_path / f"gnp_{tag}.csv"
        cli_main(["ensemble", "gnp", "--n", "9", "--p", "0.5", "--samples", "15",
                  "--seed", "12", "--out", str(e2)])
        e3 = tmp_path / f"deg_{tag}.csv"
        cli_main(["ensemble", "degseq", "--d", "3,3,2,2,1,1", "--samples", "15",
                  "--seed", "12", "--out", str(e3)])
        d4 = tmp_path / f"scan_{tag}"
        cli_main(["scan", "bipartition", "--complete", "7", "--subsets", "100",
                  "--seed", "12", "--out-dir", str(d4)])
        outputs.append(
            e1.read_bytes() + e2.read_bytes() + e3.read_bytes()
            + (d4 / "bipartition_00.csv").read_bytes()
        )
    ok = outputs[0] == outputs[1]
    record_criterion(12, ok, "seeded CLI runs emit byte-identical CSV")
    assert ok
