"""Exact toolkit for list colourings of hypergraphs under hereditary properties."""

from .coloring import (
    CriticalityReport,
    chi_P,
    chi_list_P,
    critical_core,
    find_PL_coloring,
    is_P_coloring,
    is_PL_critical,
    low_vertex_hypergraph,
)
from .core import (
    Hypergraph,
    build,
    complete,
    cycle,
    degree,
    edgeless,
    empty,
    induced,
    merge,
    multiplicity,
    path,
    replicate,
    shrink,
)
from .degeneracy import classify_hard_pair, degree_feasible, find_f_partition, is_strictly_h_degenerate
from .enumeration import (
    EnumerationBounds,
    canonical_form,
    enum_hypergraphs,
    enum_list_assignments,
    search_critical,
)
from .errors import BudgetExceeded, ConstructionError, DomainError, HypercolorError, PreconditionError
from .property import Property, builtin, d_P_bounded, in_F, verify_smooth
from .structure import blocks, classify_brick, components, is_bridge, separating_vertices, trim_end_block
from .theorems import (
    a_bound,
    is_epsilon_delta,
    is_gallai_tree,
    sigma,
    verify_brooks,
    verify_gallai_bound,
    verify_sigma_lemmas,
    verify_theorem3,
    verify_theorem6,
)

__version__ = "0.1.0"

__all__ = [
    "a_bound",
    "blocks",
    "BudgetExceeded",
    "build",
    "builtin",
    "canonical_form",
    "chi_list_P",
    "chi_P",
    "classify_brick",
    "classify_hard_pair",
    "complete",
    "components",
    "ConstructionError",
    "critical_core",
    "CriticalityReport",
    "cycle",
    "d_P_bounded",
    "degree",
    "degree_feasible",
    "DomainError",
    "edgeless",
    "empty",
    "enum_hypergraphs",
    "enum_list_assignments",
    "EnumerationBounds",
    "find_f_partition",
    "find_PL_coloring",
    "HypercolorError",
    "Hypergraph",
    "in_F",
    "induced",
    "is_bridge",
    "is_epsilon_delta",
    "is_gallai_tree",
    "is_P_coloring",
    "is_PL_critical",
    "is_strictly_h_degenerate",
    "low_vertex_hypergraph",
    "merge",
    "multiplicity",
    "path",
    "PreconditionError",
    "Property",
    "replicate",
    "search_critical",
    "separating_vertices",
    "shrink",
    "sigma",
    "trim_end_block",
    "verify_brooks",
    "verify_gallai_bound",
    "verify_sigma_lemmas",
    "verify_smooth",
    "verify_theorem3",
    "verify_theorem6",
]
