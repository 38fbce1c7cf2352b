"""Certified small triangle covers of graphs via feedback sets of linear
3-uniform hypergraphs, with exact oracles and a random-graph experiment
harness."""

from .acyclic import DualPair, IncidenceForest, forest_decompose, solve_acyclic
from .cover import (
    ConditionReport,
    CoverCertificate,
    best_cover,
    condition_report,
    cover_is_valid,
    cover_via_bipartite,
    cover_via_fes,
    cover_via_fvs,
    hypergraph_cover,
)
from .cyclebreak import FesResult, FvsResult, feedback_vertex_set, fes_size_bound, minimal_fes
from .errors import (
    BudgetExceededError,
    CyclicInputError,
    EmptyHyperedgeError,
    GraphFormatError,
    IsolatedVertexError,
    NotLinearError,
    NotThreeUniformError,
    TricoverError,
)
from .experiment import ExperimentResult, ExperimentSpec, TrialRecord, run_experiment, write_csv
from .graph import (
    Graph,
    PackingWitness,
    Triangle,
    bipartite_cut_cover,
    complete_graph,
    disjoint_union,
    enumerate_triangles,
    extend_packing,
    gadget_augment,
    greedy_triangle_packing,
    irreducible_subgraph,
    random_gnp,
)
from .hypergraph import (
    Component,
    Cycle,
    Hypergraph,
    Path,
    components,
    delete_hyperedges,
    delete_vertices,
    find_cycle_through,
    is_acyclic,
    is_k_uniform,
    is_linear,
    on_cycle_elements,
    shortest_cycle,
    triangle_hypergraph,
    validate_cycle,
    validate_path,
)
from .io import format_graph, format_hypergraph, parse_graph, parse_hypergraph
from .oracles import (
    GRAPH_BUDGET,
    HYPERGRAPH_BUDGET,
    OracleBudget,
    fano_plane,
    max_matching,
    max_triangle_packing,
    min_feedback_edge_set,
    min_feedback_vertex_set,
    min_transversal,
    min_triangle_cover,
    steiner_triple_system,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "Component",
    "ConditionReport",
    "CoverCertificate",
    "Cycle",
    "CyclicInputError",
    "DualPair",
    "EmptyHyperedgeError",
    "ExperimentResult",
    "ExperimentSpec",
    "FesResult",
    "FvsResult",
    "GRAPH_BUDGET",
    "Graph",
    "GraphFormatError",
    "HYPERGRAPH_BUDGET",
    "Hypergraph",
    "IncidenceForest",
    "IsolatedVertexError",
    "NotLinearError",
    "NotThreeUniformError",
    "OracleBudget",
    "PackingWitness",
    "Path",
    "TrialRecord",
    "Triangle",
    "TricoverError",
    "best_cover",
    "bipartite_cut_cover",
    "complete_graph",
    "components",
    "condition_report",
    "cover_is_valid",
    "cover_via_bipartite",
    "cover_via_fes",
    "cover_via_fvs",
    "delete_hyperedges",
    "delete_vertices",
    "disjoint_union",
    "enumerate_triangles",
    "extend_packing",
    "fano_plane",
    "feedback_vertex_set",
    "fes_size_bound",
    "find_cycle_through",
    "forest_decompose",
    "format_graph",
    "format_hypergraph",
    "gadget_augment",
    "greedy_triangle_packing",
    "hypergraph_cover",
    "irreducible_subgraph",
    "is_acyclic",
    "is_k_uniform",
    "is_linear",
    "max_matching",
    "max_triangle_packing",
    "min_feedback_edge_set",
    "min_feedback_vertex_set",
    "min_transversal",
    "min_triangle_cover",
    "minimal_fes",
    "on_cycle_elements",
    "parse_graph",
    "parse_hypergraph",
    "random_gnp",
    "run_experiment",
    "shortest_cycle",
    "solve_acyclic",
    "steiner_triple_system",
    "triangle_hypergraph",
    "validate_cycle",
    "validate_path",
    "write_csv",
]
