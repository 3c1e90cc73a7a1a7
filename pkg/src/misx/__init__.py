"""Exact maximal-independent-set counts, covering/matching numbers and bound checks."""

from .cameron_walker import (
    CWCertificate,
    classify_structure,
    is_cw_bipartite,
    is_cw_definitional,
)
from .generators import enumerate_labeled_graphs, generate
from .graph import (
    Bipartition,
    Graph,
    GraphInputError,
    connected_components,
    from_edge_list,
    induced_subgraph,
    is_bipartite,
    localization,
    remove_vertices,
)
from .graph6 import Graph6Error, parse_graph6, to_graph6
from .invariants import (
    InvariantBundle,
    covering_number,
    full_bundle,
    induced_matching_number,
    is_koenig_egervary,
    matching_number,
)
from .mis import BudgetExceeded, alpha, check_branch_inequality, count_mis, enumerate_mis
from .verify import (
    BoundVerdict,
    SweepReport,
    Theorem,
    check_cover_bound,
    check_induced_lower,
    check_ke_corollary,
    check_matching_bound,
    check_recurrences,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "BoundVerdict",
    "BudgetExceeded",
    "CWCertificate",
    "Graph",
    "Graph6Error",
    "GraphInputError",
    "InvariantBundle",
    "SweepReport",
    "Theorem",
    "alpha",
    "check_branch_inequality",
    "check_cover_bound",
    "check_induced_lower",
    "check_ke_corollary",
    "check_matching_bound",
    "check_recurrences",
    "classify_structure",
    "connected_components",
    "count_mis",
    "covering_number",
    "enumerate_labeled_graphs",
    "enumerate_mis",
    "from_edge_list",
    "full_bundle",
    "generate",
    "induced_matching_number",
    "induced_subgraph",
    "is_bipartite",
    "is_cw_bipartite",
    "is_cw_definitional",
    "is_koenig_egervary",
    "localization",
    "matching_number",
    "parse_graph6",
    "remove_vertices",
    "sweep",
    "to_graph6",
]
