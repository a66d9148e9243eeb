"""Registry of small reference instances with pinned expected values.

Each entry rebuilds a concrete digraph from a recorded construction and
recomputes the quantities of interest.  A claim passes when every computed
value equals the expected one.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import networkx as nx

from .connectivity import lambda_max, lambda_pair
from .constructions import (
    EmbeddedTree,
    Piece,
    TreeJoinSpec,
    complete,
    directed_hajos_join,
    extended_hajos_tree_join,
    hajos_bijoin,
    hajos_tree_join,
    path_tree,
)
from .dicolouring import dichromatic_number, find_dicolouring
from .digraph import Digraph, is_biconnected, is_strong
from .hypergraph import dicycle_hypergraph, hyper_lambda, pairwise_intersection_check
from .recognition import is_k_extremal_oracle, recognize_extremal


@dataclass
class Check:
    name: str
    expected: object
    computed: object

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


@dataclass
class ClaimResult:
    claim: str
    description: str
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "description": self.description,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "expected": c.expected, "computed": c.computed, "ok": c.ok}
                for c in self.checks
            ],
        }


# plane tree with seven vertices: hub e carries a, b, h, g; g carries i, d
FIG2_ROTATION = {
    "e": ["a", "b", "h", "g"],
    "g": ["e", "i", "d"],
    "a": ["e"],
    "b": ["e"],
    "h": ["e"],
    "i": ["g"],
    "d": ["g"],
}
FIG2_VALID = ("a", "b", "h", "i", "d")
FIG2_INVALID = ("a", "b", "i", "h", "d")


def fig2_digraph(valid: bool = True) -> Digraph:
    """Tree join of ↔K4 pieces (each losing one digon) on a six-edge plane tree."""
    tree = EmbeddedTree(FIG2_ROTATION)
    pieces = [Piece(e, complete(4), 0, 1) for e in tree.edges]
    spec = TreeJoinSpec(tree, pieces, FIG2_VALID if valid else FIG2_INVALID)
    d, _ = hajos_tree_join(spec, strict=valid)
    return d


def fig4_digraph() -> Digraph:
    k4 = complete(4)
    d, _ = hajos_bijoin(k4, 0, 1, 2, k4, 0, 1, 2)
    return d


def fig6_digraphs() -> tuple[Digraph, Digraph]:
    """Extended tree join on the path u-v-w with cycle u->v->w->u, and the
    matching directed join of two ↔K4."""
    k4 = complete(4)
    tree = path_tree(["u", "v", "w"])
    spec = TreeJoinSpec(tree, [Piece(("u", "v"), k4, 0, 1), Piece(("v", "w"), k4, 0, 1)], ["u", "v", "w"])
    tree_version, _ = extended_hajos_tree_join(spec)
    directed, _ = directed_hajos_join(k4, 0, 1, k4, 0, 1)
    return tree_version, directed


def fig10_digraph() -> Digraph:
    """Three directed joins of ↔K4 leaving two induced triangles on a common digon."""
    k4 = complete(4)
    g, _ = directed_hajos_join(k4, 0, 1, k4, 0, 1)
    g, _ = directed_hajos_join(g, 1, 2, k4, 0, 1)
    g, _ = directed_hajos_join(g, 2, 0, k4, 0, 1)
    return g


def _nx(d: Digraph) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(range(d.n))
    g.add_edges_from(d.arcs)
    return g


def _fig2_valid() -> list[Check]:
    d = fig2_digraph(True)
    return [
        Check("chi", 4, dichromatic_number(d)),
        Check("lambda", 3, lambda_max(d)),
        Check("strong", True, is_strong(d)),
        Check("biconnected", True, is_biconnected(d)),
    ]


def _fig2_invalid() -> list[Check]:
    d = fig2_digraph(False)
    return [Check("chi", 4, dichromatic_number(d)), Check("lambda", 4, lambda_max(d))]


def _fig4_bijoin() -> list[Check]:
    d = fig4_digraph()
    return [
        Check("3-dicolourable", True, find_dicolouring(d, 3) is not None),
        Check("lambda", 3, lambda_max(d)),
        Check("recognized", False, recognize_extremal(d, 3) is not None),
    ]


def _fig6_join() -> list[Check]:
    tree_version, directed = fig6_digraphs()
    return [
        Check("isomorphic", True, nx.is_isomorphic(_nx(tree_version), _nx(directed))),
        Check("3-extremal", True, is_k_extremal_oracle(tree_version, 3)),
    ]


def _fig10_hyper() -> list[Check]:
    d = fig10_digraph()
    h = dicycle_hypergraph(d)
    differ = any(
        lambda_pair(d, x, y) != hyper_lambda(h, x, y)
        for x in range(d.n)
        for y in range(d.n)
        if x != y
    )
    return [
        Check("3-extremal", True, is_k_extremal_oracle(d, 3)),
        Check("dicycles pairwise share <= 1 vertex", False, pairwise_intersection_check(h)),
        Check("hyper lambda differs somewhere", True, differ),
    ]


CLAIMS: dict[str, tuple[str, Callable[[], list[Check]]]] = {
    "fig2-valid": ("tree join under an embedding ordering: chi = lambda + 1 = 4", _fig2_valid),
    "fig2-invalid": ("same pieces, non-embedding ordering: chi = 4, lambda = 4", _fig2_invalid),
    "fig4-bijoin": ("bijoin of two ↔K4 is 3-dicolourable and not recognized", _fig4_bijoin),
    "fig6-join": ("path tree join with cycle u,v,w is a directed join", _fig6_join),
    "fig10-hyper": ("3-extremal digraph whose dicycle hypergraph has overlapping edges", _fig10_hyper),
}


def run_claim(claim: str) -> ClaimResult:
    if claim not in CLAIMS:
        raise KeyError(claim)
    description, fn = CLAIMS[claim]
    return ClaimResult(claim, description, fn())
