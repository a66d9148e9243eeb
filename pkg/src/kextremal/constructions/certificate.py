"""Join certificates: a recursive record of how a digraph was assembled.

Each node names a construction, the parameters it was called with (in the
labellings of its children's outputs) and, optionally, ``labels``: the final
label of every vertex the constructor produced.  Replaying a certificate
rebuilds every node bottom-up and applies the labels.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from ..digraph import Digraph
from ..errors import ParseError
from .bases import base
from .joins import bidirected_hajos_join, directed_hajos_join, hajos_bijoin, parallel_hajos_join
from .trees import (
    EmbeddedTree,
    Piece,
    TreeJoinSpec,
    extended_hajos_tree_join,
    hajos_tree_join,
    two_hajos_tree_join,
)

KINDS = (
    "base",
    "directed_join",
    "bidirected_join",
    "bijoin",
    "parallel_join",
    "tree_join",
    "extended_tree_join",
    "star_join",
    "two_hajos_tree_join",
)
TREE_KINDS = ("tree_join", "extended_tree_join", "star_join", "two_hajos_tree_join")


@dataclass
class JoinCertificate:
    kind: str
    params: dict = field(default_factory=dict)
    children: list = field(default_factory=list)
    labels: list | None = None

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"kind": self.kind, "params": self.params}
        if self.children:
            out["children"] = [c.to_dict() for c in self.children]
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "JoinCertificate":
        if not isinstance(data, dict) or data.get("kind") not in KINDS:
            raise ParseError(f"not a certificate node: {data!r:.80}")
        return cls(
            kind=data["kind"],
            params=dict(data.get("params", {})),
            children=[cls.from_dict(c) for c in data.get("children", [])],
            labels=data.get("labels"),
        )

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "JoinCertificate":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"certificate is not valid JSON: {exc}") from None
        return cls.from_dict(data)

    def leaves(self) -> list["JoinCertificate"]:
        if self.kind == "base":
            return [self]
        return [leaf for c in self.children for leaf in c.leaves()]

    def depth(self) -> int:
        return 1 + max((c.depth() for c in self.children), default=0)

    def count_joins(self) -> int:
        return (self.kind != "base") + sum(c.count_joins() for c in self.children)


def base_certificate(family: str, parameter: int, labels=None) -> JoinCertificate:
    return JoinCertificate("base", {"family": family, "parameter": parameter}, [], labels)


def tree_params(spec: TreeJoinSpec) -> dict:
    params = {
        "tree": spec.tree.to_json(),
        "pieces": [[p.edge[0], p.edge[1], p.u, p.v] for p in spec.pieces],
        "peripheral": list(spec.peripheral),
    }
    if spec.b_edges:
        params["b_edges"] = [list(e) for e in spec.b_edges]
    return params


def _key(x):
    return tuple(x) if isinstance(x, list) else x


def spec_from_params(params: dict, digraphs: list[Digraph]) -> TreeJoinSpec:
    tree = EmbeddedTree.from_json(params["tree"])
    pieces = [
        Piece((_key(x), _key(y)), d, u, v) for (x, y, u, v), d in zip(params["pieces"], digraphs)
    ]
    return TreeJoinSpec(
        tree,
        pieces,
        [_key(x) for x in params["peripheral"]],
        [tuple(_key(z) for z in e) for e in params.get("b_edges", [])],
    )


def build_node(kind: str, params: dict, parts: list[Digraph]) -> tuple[Digraph, list]:
    """Run the constructor of one node on already-built children."""
    p = params
    if kind == "base":
        d = base(p["family"], p["parameter"])
        return d, []
    if kind == "directed_join":
        return directed_hajos_join(parts[0], p["u"], p["v1"], parts[1], p["v2"], p["w"])
    if kind == "bidirected_join":
        return bidirected_hajos_join(parts[0], p["u"], p["v1"], parts[1], p["v2"], p["w"])
    if kind == "bijoin":
        return hajos_bijoin(parts[0], p["t"], p["a1"], p["w"], parts[1], p["v"], p["a2"], p["u"])
    if kind == "parallel_join":
        return parallel_hajos_join(
            parts[0], p["x"], p["t"], p["u"], p["v"], p["w"], parts[1], p["a"], p["b"]
        )
    if kind in TREE_KINDS:
        spec = spec_from_params(p, parts)
        if kind == "extended_tree_join":
            return extended_hajos_tree_join(spec)
        if kind == "two_hajos_tree_join":
            return two_hajos_tree_join(spec)
        return hajos_tree_join(spec, strict=p.get("strict", True))
    raise ParseError(f"unknown certificate kind {kind!r}")


def replay(cert: JoinCertificate) -> Digraph:
    """Rebuild the digraph a certificate describes."""
    parts = [replay(c) for c in cert.children]
    d, _ = build_node(cert.kind, cert.params, parts)
    if cert.labels is not None:
        d = d.relabel(cert.labels)
    return d
