"""Ordered 3-uniform Ramsey machinery: monotone paths with jumps.

Triple colorings of [N] are searched, lifted from pair colorings, and
certified against the two structures that matter here: red monotone paths
and blue members of the n-jump family.
"""

from .core import (
    Color,
    Embedding,
    FormatError,
    OrderedTripleSystem,
    PairColoring,
    TripleColoring,
    Witness,
)
from .family import JumpSpec, jump_min, monotone_path, power_path, required_edges
from .construct import lift, pentagon_coloring
from .detect import alpha_table, find_blue_embedding, find_blue_jump_member, longest_red_path
from .certify import (
    BetaChain,
    CertificationError,
    beta_table,
    count_downsets,
    extract_blue_jump_witness,
    gh_triangle_finder,
    profile_table,
    verify_profile_property,
)
from .search import AvoidanceProblem, JumpsFamily, bracket, decide

__all__ = [
    "AvoidanceProblem",
    "BetaChain",
    "CertificationError",
    "Color",
    "Embedding",
    "FormatError",
    "JumpSpec",
    "JumpsFamily",
    "OrderedTripleSystem",
    "PairColoring",
    "TripleColoring",
    "Witness",
    "alpha_table",
    "beta_table",
    "bracket",
    "count_downsets",
    "decide",
    "extract_blue_jump_witness",
    "find_blue_embedding",
    "find_blue_jump_member",
    "gh_triangle_finder",
    "jump_min",
    "lift",
    "longest_red_path",
    "monotone_path",
    "pentagon_coloring",
    "power_path",
    "profile_table",
    "required_edges",
    "verify_profile_property",
]
