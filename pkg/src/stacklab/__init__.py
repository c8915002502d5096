"""Promotion permutations of stacked rectangular tableaux.

Relates promotion on stacked rectangular standard Young tableaux to the
Robinson–Schensted correspondence, Viennot's shadow lines, and crossing and
nesting numbers of perfect matchings, with exhaustive checkers over small
shapes.
"""

from .kernels import BACKEND
from .tableau import (
    StandardTableau,
    chain_of,
    enumerate_syt,
    hook_count,
    lattice_word,
    stack,
    tableau_from_chain,
    tableau_from_lattice_word,
    transpose,
)
from .jdt import ShiftedTableau, SlideRecord, evacuate, gromote, promote
from .growth import PromotionMatrix, pe_diagram, promotion_matrix_from_diagram, vertical_sum
from .promperms import prom_ne, prom_perms, promotion_matrix, verify_dihedral
from .viennot import Direction, rs_insert, rs_inverse, shadow_lines, skeleton, viennot
from .matchings import PerfectMatching, crossing_number, matching_from_involution, nesting_number

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Direction",
    "PerfectMatching",
    "PromotionMatrix",
    "ShiftedTableau",
    "SlideRecord",
    "StandardTableau",
    "chain_of",
    "crossing_number",
    "enumerate_syt",
    "evacuate",
    "gromote",
    "hook_count",
    "lattice_word",
    "matching_from_involution",
    "nesting_number",
    "pe_diagram",
    "prom_ne",
    "prom_perms",
    "promote",
    "promotion_matrix",
    "promotion_matrix_from_diagram",
    "rs_insert",
    "rs_inverse",
    "shadow_lines",
    "skeleton",
    "stack",
    "tableau_from_chain",
    "tableau_from_lattice_word",
    "transpose",
    "verify_dihedral",
    "vertical_sum",
    "viennot",
]
