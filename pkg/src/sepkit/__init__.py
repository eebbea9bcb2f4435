"""sepkit: exact facet counts of symmetric edge polytopes of simple graphs,
seeded random-graph samplers, and an experiment harness that writes
reproducible CSV datasets and SVG figures."""

__version__ = "0.1.0"

from .clustering import average_local_clustering, local_clustering
from .degrees import erdos_gallai_graphical, havel_hakimi, unicyclic_construct
from .errors import (
    BudgetExceededError,
    InputError,
    NoConnectedRealizationError,
    OracleSizeError,
    RefusalError,
    SamplingError,
    VerificationError,
)
from .experiments import (
    CycleScanRow,
    EnsembleRecord,
    ScanPoint,
    ThresholdSummary,
    bipartition_scan,
    cycle_length_scan,
    bipartition_labeling_check,
    ensemble_metrics,
    er_threshold_trial,
    facet_count_invariance_check,
    spearman_rank,
)
from .facets import (
    FacetSubgraph,
    enumerate_facet_functions,
    facet_count,
    facet_count_complete,
    facet_subgraph,
    group_by_facet_subgraph,
    is_facet_defining,
    is_facet_subgraph,
)
from .graph6 import edge_list_dumps, edge_list_loads, graph6_decode, graph6_encode
from .graphs import (
    Bipartition,
    Graph,
    complete,
    cycle,
    from_edges,
    induced_bipartite_subgraph,
    is_connected,
    path,
    wedge,
)
from .hull import facet_count_hull, facet_count_hull_subsets, hull_vertices
from .samplers import (
    ChainConfig,
    ChainRun,
    RandomSource,
    double_edge_chain,
    double_edge_swap_step,
    sample_gnp,
    sample_gnp_connected,
    single_edge_chain,
    single_edge_swap_step,
)

__all__ = [
    "__version__",
    "Graph",
    "Bipartition",
    "from_edges",
    "complete",
    "cycle",
    "path",
    "wedge",
    "is_connected",
    "induced_bipartite_subgraph",
    "graph6_encode",
    "graph6_decode",
    "edge_list_dumps",
    "edge_list_loads",
    "erdos_gallai_graphical",
    "havel_hakimi",
    "unicyclic_construct",
    "local_clustering",
    "average_local_clustering",
    "FacetSubgraph",
    "is_facet_defining",
    "enumerate_facet_functions",
    "facet_count",
    "facet_count_complete",
    "facet_subgraph",
    "is_facet_subgraph",
    "group_by_facet_subgraph",
    "hull_vertices",
    "facet_count_hull",
    "facet_count_hull_subsets",
    "EnsembleRecord",
    "ScanPoint",
    "ThresholdSummary",
    "CycleScanRow",
    "ensemble_metrics",
    "bipartition_scan",
    "er_threshold_trial",
    "bipartition_labeling_check",
    "cycle_length_scan",
    "facet_count_invariance_check",
    "spearman_rank",
    "RandomSource",
    "ChainConfig",
    "ChainRun",
    "sample_gnp",
    "sample_gnp_connected",
    "single_edge_swap_step",
    "single_edge_chain",
    "double_edge_swap_step",
    "double_edge_chain",
    "InputError",
    "NoConnectedRealizationError",
    "RefusalError",
    "BudgetExceededError",
    "OracleSizeError",
    "SamplingError",
    "VerificationError",
]
