"""Random Apollonian networks: clique-trees, the C0..C8 class partition,
exact toughness and Hamiltonicity."""

from .classify import ClassLabel, NeatPath, NotRANError, classify, neat_paths, triple_intersection_report
from .cliquetree import (
    CliqueTree,
    build_clique_tree,
    is_uniquely_representable,
    maximal_cliques,
    minimal_separators,
    tree_canonical_form,
)
from .fixtures import FIXTURES, fixture
from .graph import Graph, GraphError, NotChordalError, NotConnectedError, SizeCapError, new_graph
from .hamilton import build_spanning_mop_c5, class_hamiltonicity, hamiltonian_cycle, verify_mop
from .ran import InsertionTrace, TreeShape, generate_an, generate_ran, is_ktree, is_ran, realize_ran_from_shape
from .toughness import class_toughness, toughness_exact, verify_class_toughness

__version__ = "0.1.0"

__all__ = [
    "FIXTURES",
    "ClassLabel",
    "CliqueTree",
    "Graph",
    "GraphError",
    "InsertionTrace",
    "NeatPath",
    "NotChordalError",
    "NotConnectedError",
    "NotRANError",
    "SizeCapError",
    "TreeShape",
    "build_clique_tree",
    "build_spanning_mop_c5",
    "class_hamiltonicity",
    "class_toughness",
    "classify",
    "fixture",
    "generate_an",
    "generate_ran",
    "hamiltonian_cycle",
    "is_ktree",
    "is_ran",
    "is_uniquely_representable",
    "maximal_cliques",
    "minimal_separators",
    "neat_paths",
    "new_graph",
    "realize_ran_from_shape",
    "toughness_exact",
    "tree_canonical_form",
    "triple_intersection_report",
    "verify_class_toughness",
    "verify_mop",
]
