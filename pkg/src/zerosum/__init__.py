"""Constructive zero-sum subsequences with bounded order-reciprocal sum.

For any finite abelian group G and any sequence of |G| elements, the engine
finds a nonempty subsequence summing to the identity whose orders satisfy
sum(1/|g_k|) <= 1, by pebbling the divisor lattice of the group exponent.
Brute-force oracles (subset DP, exact pebbling numbers, Davenport constants)
provide independent ground truth.
"""

from .errors import (
    EXIT_FAIL,
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL_ERROR,
    EXIT_PASS,
    InputError,
    InternalInvariantError,
)
from .groups import (
    GroupElement,
    GroupSpec,
    PrimaryDecomposition,
    add_elements,
    element_from_index,
    element_index,
    element_order,
    group_spec,
    identity,
    order_cost,
    parse_group_spec,
    primary_decomposition,
    to_primary_coordinates,
)
from .partitions import (
    dual_partition,
    edge_weight_exponent,
    residual_exponents,
    residual_exponents_by_recursion,
)
from .lattice import LatticeVertex, WeightedLattice, build_lattice, vertex_of_order
from .base_cases import cyclic_prime_zero_sum, elementary_zero_sum, projective_line_of
from .engine import (
    Certificate,
    Configuration,
    MoveRecord,
    Pebble,
    Verdict,
    extract_certificate,
    initial_configuration,
    merge_step,
    solve_to_root,
    verify_certificate,
    well_placed,
)
from .oracle import (
    OracleResult,
    PebblingResult,
    WeightedGraph,
    davenport_constant,
    dp_min_cost_zero_sum,
    lattice_graph,
    path_graph,
    pebbling_number,
    solvable,
    weighted_boolean_cube,
)

__version__ = "0.1.0"

__all__ = [
    "EXIT_FAIL",
    "EXIT_INPUT_ERROR",
    "EXIT_INTERNAL_ERROR",
    "EXIT_PASS",
    "InputError",
    "InternalInvariantError",
    "GroupElement",
    "GroupSpec",
    "PrimaryDecomposition",
    "add_elements",
    "element_from_index",
    "element_index",
    "element_order",
    "group_spec",
    "identity",
    "order_cost",
    "parse_group_spec",
    "primary_decomposition",
    "to_primary_coordinates",
    "dual_partition",
    "edge_weight_exponent",
    "residual_exponents",
    "residual_exponents_by_recursion",
    "LatticeVertex",
    "WeightedLattice",
    "build_lattice",
    "vertex_of_order",
    "cyclic_prime_zero_sum",
    "elementary_zero_sum",
    "projective_line_of",
    "Certificate",
    "Configuration",
    "MoveRecord",
    "Pebble",
    "Verdict",
    "extract_certificate",
    "initial_configuration",
    "merge_step",
    "solve_to_root",
    "verify_certificate",
    "well_placed",
    "OracleResult",
    "PebblingResult",
    "WeightedGraph",
    "davenport_constant",
    "dp_min_cost_zero_sum",
    "lattice_graph",
    "path_graph",
    "pebbling_number",
    "solvable",
    "weighted_boolean_cube",
]
