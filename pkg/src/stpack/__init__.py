"""Spanning-tree packings, matroid base packings, and the recursive
decomposition of graphs and matroids whose connectivity equals their
packing number."""

from .connectivity import (
    MinCutReport,
    edge_connectivity,
    enumerate_min_cuts_bruteforce,
    enumerate_min_cuts_via_packing,
    min_cut_report,
)
from .decomposition import (
    DecompositionNode,
    MaxStpDecomposition,
    StpClass,
    StpClassTag,
    TTree,
    TTreeEdge,
    check_order_independence,
    check_reconstruction_validity,
    classify,
    decompose,
    higher_level_of_leaf,
    is_max_stp,
    k_join,
    verify_decomposition,
)
from .errors import BudgetExceededError, InvariantViolation
from .graphs import (
    EdgeCut,
    Multigraph,
    VertexPartition,
    build_graph,
    connected_components,
    contract_parts,
    cut_of_bipartition,
    is_connected,
    is_spanning_tree,
)
from .matroid_decomposition import (
    AssemblyHypergraph,
    Hyperedge,
    MatroidDecomposition,
    MatroidDecompositionNode,
    assembly_hypergraph,
    check_lemma_cocircuit_survival,
    crux,
    decompose_matroid,
    decompose_matroid_components,
    delta,
)
from .matroid_packing import (
    BasePacking,
    EdmondsCertificate,
    MaxBpReport,
    cogirth_bruteforce,
    is_max_bp,
    min_cocircuits,
    pack_bases,
    sigma,
    verify_edmonds_certificate,
)
from .matroids import (
    Gf2LinearMatroid,
    GraphicMatroid,
    MatroidOracle,
    TransversalMatroid,
    UniformMatroid,
)
from .protocol import (
    UBB,
    SimulationReport,
    check_k_tree_condition,
    simulate_failures,
    ubb_from_packing,
    verify_ubb,
)
from .tree_packing import (
    TreePacking,
    TutteCertificate,
    pack_trees,
    stp_number,
    verify_tutte_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "AssemblyHypergraph",
    "BasePacking",
    "BudgetExceededError",
    "DecompositionNode",
    "EdgeCut",
    "EdmondsCertificate",
    "Gf2LinearMatroid",
    "GraphicMatroid",
    "Hyperedge",
    "InvariantViolation",
    "MatroidDecomposition",
    "MatroidDecompositionNode",
    "MatroidOracle",
    "MaxBpReport",
    "MaxStpDecomposition",
    "MinCutReport",
    "Multigraph",
    "SimulationReport",
    "StpClass",
    "StpClassTag",
    "TTree",
    "TTreeEdge",
    "TransversalMatroid",
    "TreePacking",
    "TutteCertificate",
    "UBB",
    "UniformMatroid",
    "VertexPartition",
    "assembly_hypergraph",
    "build_graph",
    "check_k_tree_condition",
    "check_lemma_cocircuit_survival",
    "check_order_independence",
    "check_reconstruction_validity",
    "classify",
    "cogirth_bruteforce",
    "connected_components",
    "contract_parts",
    "crux",
    "cut_of_bipartition",
    "decompose",
    "decompose_matroid",
    "decompose_matroid_components",
    "delta",
    "edge_connectivity",
    "enumerate_min_cuts_bruteforce",
    "enumerate_min_cuts_via_packing",
    "higher_level_of_leaf",
    "is_connected",
    "is_max_bp",
    "is_max_stp",
    "is_spanning_tree",
    "k_join",
    "min_cocircuits",
    "min_cut_report",
    "pack_bases",
    "pack_trees",
    "sigma",
    "simulate_failures",
    "stp_number",
    "ubb_from_packing",
    "verify_decomposition",
    "verify_edmonds_certificate",
    "verify_tutte_certificate",
    "verify_ubb",
]
