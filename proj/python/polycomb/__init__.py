"""Exact combinatorial geometry of integer point sets.

Thin Python face of the C++ core: structured point-set generators, exact
convex-hull combinatorics, moment-curve optimization, and the rectangle-cover
and decision-tree analyses. All integers are exact at any size.
"""

from ._core import (
    BoolMatrix,
    DirectTypeReport,
    Face,
    FaceLattice,
    Facet,
    Graph,
    GSpec,
    HullConfig,
    IncidenceStructure,
    IntMatrix,
    LinearDecisionTree,
    OptimizationResult,
    PerturbParams,
    PointSet,
    Rectangle,
    ResourceError,
    TreeLeaf,
    TreeNode,
    ValidationError,
    affine_rank,
    bit_length,
    brute_max,
    clique_number,
    clique_objective,
    cyclic_max,
    cyclic_perturb,
    det,
    det_sum_decomposition_check,
    encoding_size,
    extreme_points,
    face_lattice,
    facets,
    fooling_set_bound,
    gen_bqp,
    gen_cyclic,
    gen_simplex_extension,
    in_convex_hull,
    is_direct_type,
    is_in_cone,
    is_simplicial,
    ldt_evaluate,
    maximal_rectangles,
    minimal_valid_k_exponent,
    moment_vector,
    neighborliness,
    nonincidence_matrix,
    point_number,
    rank,
    rc_exact,
    rc_greedy,
    round_perturbed_value,
    skeleton_graph,
    solve_clique_via_bqp,
)

__version__ = "0.1.0"

__all__ = [
    "BoolMatrix",
    "DirectTypeReport",
    "Face",
    "FaceLattice",
    "Facet",
    "Graph",
    "GSpec",
    "HullConfig",
    "IncidenceStructure",
    "IntMatrix",
    "LinearDecisionTree",
    "OptimizationResult",
    "PerturbParams",
    "PointSet",
    "Rectangle",
    "ResourceError",
    "TreeLeaf",
    "TreeNode",
    "ValidationError",
    "affine_rank",
    "bit_length",
    "brute_max",
    "clique_number",
    "clique_objective",
    "cyclic_max",
    "cyclic_perturb",
    "det",
    "det_sum_decomposition_check",
    "encoding_size",
    "extreme_points",
    "face_lattice",
    "facets",
    "fooling_set_bound",
    "gen_bqp",
    "gen_cyclic",
    "gen_simplex_extension",
    "in_convex_hull",
    "is_direct_type",
    "is_in_cone",
    "is_simplicial",
    "ldt_evaluate",
    "maximal_rectangles",
    "minimal_valid_k_exponent",
    "moment_vector",
    "neighborliness",
    "nonincidence_matrix",
    "point_number",
    "rank",
    "rc_exact",
    "rc_greedy",
    "round_perturbed_value",
    "skeleton_graph",
    "solve_clique_via_bqp",
]
