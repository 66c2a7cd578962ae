"""Partition-function zeros of small complex-weighted graphs.

The library computes the multivariate partition-function polynomial of a
weighted graph exactly, locates its roots in q, evaluates zero-free disc
radii built from weighted-degree quantities, and ships brute-force
verification sweeps for every supporting identity and inequality.
"""

from .bounds import (
    BoundSet,
    f_closed,
    f_lambda_series,
    f_lambda_variational,
    g_ratio,
    graph_bounds,
    kstar_lambda,
    kstar_psi,
    lambert_w,
    sokal_K,
)
from .counting import (
    c_m,
    c_m_table,
    cmk,
    counting_bound_rooted,
    counting_bound_sokal,
    counting_record,
    counting_recursion_rhs,
    subset_weight_sum,
    tree_function,
    tree_function_u,
)
from .errors import (
    BadIndex,
    BadLambda,
    DegenerateLambda,
    DegenerateWeights,
    Disconnected,
    EmptySet,
    LoopEdge,
    MissingRoot,
    NoConvergence,
    NotATree,
    NotSimple,
    OutOfDomain,
    TooLarge,
    TutteZeroError,
    ZeroQ,
)
from .graph import (
    DegreeReport,
    EdgeWeightView,
    WeightedGraph,
    build_graph,
    degree_quantities,
    delta_prime_a,
    graph_from_json,
    graph_to_json,
    induced_subgraph,
    load_graph,
    parallel_reduce,
    parse_edge_lines,
    save_graph,
    transform_weights,
)
from .penrose import (
    PartitionReport,
    PenroseBounds,
    enumerate_spanning_trees,
    extended_penrose_bounds,
    penrose_identity_eval,
    penrose_map,
    verify_partition,
)
from .polymer import (
    PolymerWeights,
    gkfp_margin,
    gkfp_optimal,
    kp_margin,
    polymer_partition,
    polymer_profile,
    tutte_polymer_weights,
)
from .tutte import (
    QPolynomial,
    connected_by_support,
    connected_gen_poly,
    nonzero_component_count,
    spanning_tree_gen_poly,
    z_eval,
    z_polynomial,
)
from .verify import (
    examples_check,
    verify_constants,
    verify_counting,
    verify_f_properties,
    verify_f_routes,
    verify_gkfp_pair,
    verify_parallel_reduction,
    verify_penrose_chains,
    verify_penrose_partition,
    verify_polymer_identity,
    verify_zero_free,
)
from .zeros import ZeroFreeReport, analyze, example_suite, q_max, q_roots

__version__ = "0.1.0"

__all__ = [
    "BadIndex",
    "BadLambda",
    "BoundSet",
    "DegenerateLambda",
    "DegenerateWeights",
    "DegreeReport",
    "Disconnected",
    "EdgeWeightView",
    "EmptySet",
    "LoopEdge",
    "MissingRoot",
    "NoConvergence",
    "NotATree",
    "NotSimple",
    "OutOfDomain",
    "PartitionReport",
    "PenroseBounds",
    "PolymerWeights",
    "QPolynomial",
    "TooLarge",
    "TutteZeroError",
    "WeightedGraph",
    "ZeroFreeReport",
    "ZeroQ",
    "analyze",
    "build_graph",
    "c_m",
    "c_m_table",
    "cmk",
    "connected_by_support",
    "connected_gen_poly",
    "counting_bound_rooted",
    "counting_bound_sokal",
    "counting_record",
    "counting_recursion_rhs",
    "degree_quantities",
    "delta_prime_a",
    "enumerate_spanning_trees",
    "example_suite",
    "examples_check",
    "extended_penrose_bounds",
    "f_closed",
    "f_lambda_series",
    "f_lambda_variational",
    "g_ratio",
    "gkfp_margin",
    "gkfp_optimal",
    "graph_bounds",
    "graph_from_json",
    "graph_to_json",
    "induced_subgraph",
    "kp_margin",
    "kstar_lambda",
    "kstar_psi",
    "lambert_w",
    "load_graph",
    "nonzero_component_count",
    "parallel_reduce",
    "parse_edge_lines",
    "penrose_identity_eval",
    "penrose_map",
    "polymer_partition",
    "polymer_profile",
    "q_max",
    "q_roots",
    "save_graph",
    "sokal_K",
    "spanning_tree_gen_poly",
    "subset_weight_sum",
    "transform_weights",
    "tree_function",
    "tree_function_u",
    "tutte_polymer_weights",
    "verify_constants",
    "verify_counting",
    "verify_f_properties",
    "verify_f_routes",
    "verify_gkfp_pair",
    "verify_parallel_reduction",
    "verify_partition",
    "verify_penrose_chains",
    "verify_penrose_partition",
    "verify_polymer_identity",
    "verify_zero_free",
    "z_eval",
    "z_polynomial",
]
