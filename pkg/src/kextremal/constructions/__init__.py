"""Base digraphs, Hajós-type joins, certificates and the random generator."""
from .bases import base, complete, directed_cycle, odd_wheel, symmetric_odd_cycle
from .certificate import JoinCertificate, base_certificate, build_node, replay, tree_params
from .generator import random_member
from .joins import bidirected_hajos_join, directed_hajos_join, hajos_bijoin, lobes, parallel_hajos_join
from .trees import (
    EmbeddedTree,
    Piece,
    TreeJoinSpec,
    b_edge_parity_ok,
    extended_hajos_tree_join,
    hajos_tree_join,
    path_tree,
    star,
    two_hajos_tree_join,
    validate_peripheral,
)

__all__ = [
    "EmbeddedTree",
    "JoinCertificate",
    "Piece",
    "TreeJoinSpec",
    "b_edge_parity_ok",
    "base",
    "base_certificate",
    "bidirected_hajos_join",
    "build_node",
    "complete",
    "directed_cycle",
    "directed_hajos_join",
    "extended_hajos_tree_join",
    "hajos_bijoin",
    "hajos_tree_join",
    "lobes",
    "odd_wheel",
    "parallel_hajos_join",
    "path_tree",
    "random_member",
    "replay",
    "star",
    "symmetric_odd_cycle",
    "tree_params",
    "two_hajos_tree_join",
    "validate_peripheral",
]
