"""Constructions, verification and recognition of k-extremal digraphs.

A strong, biconnected digraph is k-extremal when its dichromatic number is
one more than its maximum local arc-connectivity k.
"""
from .connectivity import Dicut, all_pairs_lambda, lambda_max, lambda_pair, min_dicut, symmetric_connectivity
from .constructions import (
    EmbeddedTree,
    JoinCertificate,
    Piece,
    TreeJoinSpec,
    complete,
    directed_cycle,
    directed_hajos_join,
    hajos_bijoin,
    hajos_tree_join,
    odd_wheel,
    random_member,
    replay,
    symmetric_odd_cycle,
)
from .dicolouring import (
    Dicolouring,
    brooks_membership,
    dichromatic_number,
    find_dicolouring,
    is_dicritical,
    merge_across_dicut,
)
from .digraph import Digraph, from_text, is_biconnected, is_eulerian, is_strong, symmetric, to_text
from .errors import BudgetExceeded, DigraphError, ParseError
from .hypergraph import Hypergraph, dicycle_hypergraph, hyper_lambda
from .recognition import chi_equals_lambda_plus_one, is_k_extremal_oracle, recognize_extremal

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Dicolouring",
    "Dicut",
    "Digraph",
    "DigraphError",
    "EmbeddedTree",
    "Hypergraph",
    "JoinCertificate",
    "ParseError",
    "Piece",
    "TreeJoinSpec",
    "all_pairs_lambda",
    "brooks_membership",
    "chi_equals_lambda_plus_one",
    "complete",
    "dichromatic_number",
    "dicycle_hypergraph",
    "directed_cycle",
    "directed_hajos_join",
    "find_dicolouring",
    "from_text",
    "hajos_bijoin",
    "hajos_tree_join",
    "hyper_lambda",
    "is_biconnected",
    "is_dicritical",
    "is_eulerian",
    "is_k_extremal_oracle",
    "is_strong",
    "lambda_max",
    "lambda_pair",
    "merge_across_dicut",
    "min_dicut",
    "odd_wheel",
    "random_member",
    "recognize_extremal",
    "replay",
    "symmetric",
    "symmetric_connectivity",
    "symmetric_odd_cycle",
    "to_text",
]
