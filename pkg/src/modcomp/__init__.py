"""Recognition of module-composed graphs and related class oracles."""

from .bdh import bfs_levels, check_bdh, independent_module_sequence, is_bipartite, lex_bfs
from .census import CensusConfig, run_census
from .errors import GraphFormatError, SizeGuardError
from .generators import random_bipartite_dh, random_module_composed
from .graph import (
    Graph,
    complement,
    delete_vertices,
    disjoint_union,
    format_edge_list,
    induced_subgraph,
    join,
    named_graph,
    parse_edge_list,
)
from .modular import MDNode, MDTree, is_module, modular_decomposition, quotient_graph, strong_modules_bruteforce
from .oracles import (
    ClassId,
    ClassReport,
    Membership,
    chromatic_number,
    class_membership,
    classify,
    clique_cover_number,
    clique_number,
    cograph_module_sequence,
    contains_induced,
    contains_sun,
    has_hole,
    independence_number,
)
from .recognize import (
    RecognitionResult,
    brute_force_recognize,
    recognize,
    verify_independent_module_sequence,
    verify_module_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "bfs_levels",
    "brute_force_recognize",
    "CensusConfig",
    "check_bdh",
    "chromatic_number",
    "class_membership",
    "ClassId",
    "classify",
    "ClassReport",
    "clique_cover_number",
    "clique_number",
    "cograph_module_sequence",
    "complement",
    "contains_induced",
    "contains_sun",
    "delete_vertices",
    "disjoint_union",
    "format_edge_list",
    "Graph",
    "GraphFormatError",
    "has_hole",
    "independence_number",
    "independent_module_sequence",
    "induced_subgraph",
    "is_bipartite",
    "is_module",
    "join",
    "lex_bfs",
    "MDNode",
    "MDTree",
    "Membership",
    "modular_decomposition",
    "named_graph",
    "parse_edge_list",
    "quotient_graph",
    "random_bipartite_dh",
    "random_module_composed",
    "RecognitionResult",
    "recognize",
    "run_census",
    "SizeGuardError",
    "strong_modules_bruteforce",
    "verify_independent_module_sequence",
    "verify_module_sequence",
]
