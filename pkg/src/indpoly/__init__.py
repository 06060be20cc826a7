"""Exact counting toolkit for the independent set polynomial.

Parsimonious reductions from #3SAT through #X3SAT to independent-set
counting, S-clone graph transformations with their exact path-weight
calculus, and an interpolation pipeline that recovers every coefficient
of I(G; X) from evaluations of transformed graphs at one rational point.
All arithmetic is exact (rationals and a single quadratic extension).
"""

from .clonecalc import (
    PathWeights,
    TransformPlan,
    clone_correction_factor,
    clone_shifted_point,
    is_compatible,
    is_nondegenerate,
    normalize_point,
    path_weights,
    path_weights_closed_form,
    transfer_eigenvalues,
)
from .cnf import (
    CnfFormula,
    count_sat,
    count_sat_via_independent_sets,
    count_x3sat,
    parse_dimacs,
    reduce_to_x3sat,
    reduction_report,
    x3sat_to_graph,
)
from .errors import (
    CapacityError,
    DegeneratePointError,
    DomainError,
    FormulaError,
    GraphFormatError,
    IncompatibleCloneError,
    OracleError,
)
from .graphs import (
    CloneSpec,
    Graph,
    attach_path,
    comb,
    complete_graph,
    cycle_graph,
    delete_vertex,
    edgeless_graph,
    graph_from_json_dict,
    graph_to_json_dict,
    graph_to_text,
    k_clone,
    parse_graph,
    parse_graph_text,
    path_graph,
    s_clone,
    s_clone_origin,
)
from .interpolate import (
    CloneFamily,
    ExternalOracle,
    InternalOracle,
    build_clone_family,
    external_oracle,
    family_spacing,
    interpolate_coeffs,
    lagrange_interpolate,
    minimum_path_offset,
)
from .isp import (
    Polynomial,
    count_is_of_size,
    count_is_of_size_by_enumeration,
    isp_coeffs,
    isp_coeffs_by_enumeration,
    isp_eval,
    isp_multivariate,
)
from .quadfield import QuadExt, as_rational, format_rational, parse_rational, rational_sqrt

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "CloneFamily",
    "CloneSpec",
    "CnfFormula",
    "DegeneratePointError",
    "DomainError",
    "ExternalOracle",
    "FormulaError",
    "Graph",
    "GraphFormatError",
    "IncompatibleCloneError",
    "InternalOracle",
    "OracleError",
    "PathWeights",
    "Polynomial",
    "QuadExt",
    "TransformPlan",
    "as_rational",
    "attach_path",
    "build_clone_family",
    "clone_correction_factor",
    "clone_shifted_point",
    "comb",
    "complete_graph",
    "count_is_of_size",
    "count_is_of_size_by_enumeration",
    "count_sat",
    "count_sat_via_independent_sets",
    "count_x3sat",
    "cycle_graph",
    "delete_vertex",
    "edgeless_graph",
    "external_oracle",
    "family_spacing",
    "format_rational",
    "graph_from_json_dict",
    "graph_to_json_dict",
    "graph_to_text",
    "interpolate_coeffs",
    "is_compatible",
    "is_nondegenerate",
    "isp_coeffs",
    "isp_coeffs_by_enumeration",
    "isp_eval",
    "isp_multivariate",
    "k_clone",
    "lagrange_interpolate",
    "minimum_path_offset",
    "normalize_point",
    "parse_dimacs",
    "parse_graph",
    "parse_graph_text",
    "parse_rational",
    "path_graph",
    "path_weights",
    "path_weights_closed_form",
    "rational_sqrt",
    "reduce_to_x3sat",
    "reduction_report",
    "s_clone",
    "s_clone_origin",
    "transfer_eigenvalues",
    "x3sat_to_graph",
]
