"""Verification toolkit for matching theory on small graphs.

Bitset-backed graphs, blossom matching with brute-force oracles,
factor-criticality and barrier decompositions, the fourteen-configuration
taxonomy of deficient 10-vertex graphs, isomorph-free enumeration, and a
CLI for minimum-degree conjecture sweeps.
"""

from .graphs import (
    Edge,
    Graph,
    Graph6Error,
    GraphError,
    VertexSet,
    add_edge,
    bits,
    closed_nonneighborhood,
    common_nonneighborhood,
    complete_graph,
    cycle_graph,
    delete_edge,
    delete_vertices,
    delete_vertices_with_map,
    graph_from_edges,
    is_connected,
    is_k_connected,
    is_k_edge_connected,
    mask_of,
    min_degree,
    parse_graph6,
    to_graph6,
)
from .matching import (
    Matching,
    all_perfect_matchings,
    brute_force_max_matching,
    deficiency,
    every_perfect_matching_contains,
    has_perfect_matching,
    max_matching,
    odd_components,
)
from .decomp import (
    BarrierWitness,
    ComponentInfo,
    GEDecomposition,
    find_barrier_witnesses,
    gallai_edmonds,
    is_factor_critical,
)
from .criticality import (
    CriticalityReport,
    MinimalityCertificate,
    SplitMix64,
    check_connectivity_properties,
    is_k_factor_critical,
    is_k_factor_critical_via_odd_components,
    is_minimal_kfc,
    minimality_certificate,
    minimalize,
)
from .configurations import (
    BuiltInstance,
    ClassificationError,
    ClassificationResult,
    ClassifiedWitness,
    ConfigLabel,
    ConfigSignature,
    DegreeHypothesisError,
    EdgePlacement,
    HostBuildError,
    IntersectionBounds,
    build_instance,
    check_intersection_bounds,
    classify,
    core_graph,
    intersection_bounds,
    signature_table,
)
from .enumeration import (
    CanonicalForm,
    all_graphs,
    canonical_form,
    canonical_graph,
    random_graph,
    read_graph6_stream,
)

__version__ = "0.1.0"
