"""First Hochschild cohomology of gentle algebras and their trivial extensions."""

from .bases import (
    CohomologyElement,
    alt_basis,
    center_basis,
    hh1_basis,
    hh1_dual_basis,
    special_case_report,
    summand_dims,
    trivial_extension_hh1_basis,
)
from .linalg import Field, SparseVector
from .lie import LieAlgebra, bracket_hh1, bracket_oracle, bracket_tga, classify, structure_constants
from .quiver import GentlePresentation, Path, presentation, validate_gentle
from .ribbon import admissible_cuts, brauer_algebra, find_alt_free_cut, ribbon_graph, trivial_extension_quiver

__version__ = "0.1.0"

__all__ = [
    "CohomologyElement",
    "Field",
    "GentlePresentation",
    "LieAlgebra",
    "Path",
    "SparseVector",
    "admissible_cuts",
    "alt_basis",
    "bracket_hh1",
    "bracket_oracle",
    "bracket_tga",
    "brauer_algebra",
    "center_basis",
    "classify",
    "find_alt_free_cut",
    "hh1_basis",
    "hh1_dual_basis",
    "presentation",
    "ribbon_graph",
    "special_case_report",
    "structure_constants",
    "summand_dims",
    "trivial_extension_hh1_basis",
    "trivial_extension_quiver",
    "validate_gentle",
]
