"""Coloring algorithms, exact oracles and verification tools for (F, K4-e)-free graphs."""

from .colorers import (
    BoundTarget,
    bound_target,
    color_2p1_p3,
    color_3p1_p2,
    color_auto,
    color_in_class,
    color_p1_2p2,
    verify_bound,
)
from .certificate import Certificate, Step
from .decomposition import C5Decomposition, C7Partition, check_properties, decompose_c5, decompose_c7, structural_flags
from .generators import GenSpec, random_good_graph, random_in_class, tight_example
from .goodgraph import GoodPartition, color_good, color_good_base4, max_stable_set_good, validate_good
from .graph import Coloring, Graph
from .oracle import OracleBudget, chromatic_number, clique_number, is_perfect, max_clique, max_stable_set
from .patterns import ClassId, class_membership, find_induced, in_class, is_free

__all__ = [
    "BoundTarget",
    "C5Decomposition",
    "C7Partition",
    "Certificate",
    "ClassId",
    "Coloring",
    "GenSpec",
    "GoodPartition",
    "Graph",
    "OracleBudget",
    "Step",
    "bound_target",
    "check_properties",
    "chromatic_number",
    "class_membership",
    "clique_number",
    "color_2p1_p3",
    "color_3p1_p2",
    "color_auto",
    "color_good",
    "color_good_base4",
    "color_in_class",
    "color_p1_2p2",
    "decompose_c5",
    "decompose_c7",
    "find_induced",
    "in_class",
    "is_free",
    "is_perfect",
    "max_clique",
    "max_stable_set",
    "max_stable_set_good",
    "random_good_graph",
    "random_in_class",
    "structural_flags",
    "tight_example",
    "validate_good",
    "verify_bound",
]
