"""Longest Induced Path, Induced Disjoint Paths and H-Induced Topological
Minor by dynamic programming over branch decompositions of bounded
mim-width, with brute-force reference solvers."""

from .covers import MinimalVertexCover, enumerate_minimal_vertex_covers, is_minimal_vertex_cover
from .decomposition import (
    BranchDecomposition,
    DecompositionError,
    WidthCertificate,
    enumerate_decompositions,
    interval_caterpillar_decomposition,
    interval_graph,
    linear_order_decomposition,
    mim_width,
    optimal_decomposition_bruteforce,
    root_decomposition,
)
from .fragments import (
    Pairing,
    PathFragment,
    contract_fragment,
    degree_one_vertices,
    enumerate_fragments,
    enumerate_labelings,
    enumerate_pairings,
    fragment_cap,
)
from .graph import (
    BipartiteGraph,
    Graph,
    boundary,
    crossing_graph,
    is_induced_disjoint_path_union,
    max_induced_matching_size,
)
from .hitm import (
    BranchAssignment,
    PatternGraph,
    PatternTooLarge,
    hitm_enumerate_assignments,
    hitm_preprocess,
    hitm_solve,
)
from .idp import IdpIndex, IdpTable, TerminalPairs, idp_join, idp_leaf_table, idp_solve
from .lip import LipIndex, LipTable, lip_join, lip_leaf_table, lip_solve, lip_validate_index
from .oracle import (
    BudgetExceeded,
    OracleBudget,
    hitm_bruteforce,
    idp_bruteforce,
    lip_bruteforce,
    mvc_bruteforce,
)

__version__ = "0.1.0"
