"""Tree joins over plane trees given as rotation systems.

A plane embedding of a tree is determined by the cyclic order of neighbours
around each vertex.  Walking the boundary of the single face visits every
edge twice and lists each leaf once; that circular list is the Eulerian list
the peripheral cycle has to follow.

Output layout for every tree join: the tree vertices come first, in the
order of ``tree.vertices``, followed by the interior vertices of each piece
in piece order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

from ..digraph import Digraph
from ..errors import BadParameter, InteriorOverlap, InvalidPeripheral, MissingDigon, ParityViolation

Vertex = Hashable


class EmbeddedTree:
    """A tree with a cyclic order of neighbours at every vertex."""

    __slots__ = ("vertices", "rotation", "_index", "edges")

    def __init__(self, rotation: Mapping[Vertex, Sequence[Vertex]]):
        self.vertices: tuple = tuple(rotation)
        self._index = {x: i for i, x in enumerate(self.vertices)}
        if len(self._index) != len(self.vertices):
            raise BadParameter("repeated tree vertex")
        self.rotation = {x: tuple(rotation[x]) for x in self.vertices}
        edges = []
        for x, nbrs in self.rotation.items():
            if len(set(nbrs)) != len(nbrs):
                raise BadParameter(f"rotation at {x!r} repeats a neighbour")
            for y in nbrs:
                if y not in self._index or y == x:
                    raise BadParameter(f"rotation at {x!r} names a bad neighbour {y!r}")
                if x not in self.rotation[y]:
                    raise BadParameter(f"edge {x!r}-{y!r} is not listed at both ends")
                if self._index[x] < self._index[y]:
                    edges.append((x, y))
        self.edges: tuple = tuple(edges)
        if len(self.edges) != len(self.vertices) - 1 or not self._connected():
            raise BadParameter("rotation system does not describe a tree")

    def _connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for y in self.rotation[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self.vertices)

    def index(self, x: Vertex) -> int:
        return self._index[x]

    def degree(self, x: Vertex) -> int:
        return len(self.rotation[x])

    def leaves(self) -> tuple:
        return tuple(x for x in self.vertices if self.degree(x) == 1)

    def has_edge(self, x: Vertex, y: Vertex) -> bool:
        return x in self._index and y in self.rotation[x]

    def eulerian_list(self) -> tuple:
        """Circular vertex list of the boundary walk.

        The walk starts on the smallest dart leaving a leaf and moves from
        dart ``x -> y`` to ``y -> z`` where ``z`` follows ``x`` in the
        rotation at ``y``.
        """
        if len(self.vertices) == 1:
            return self.vertices
        start = min(
            (self._index[x], self._index[self.rotation[x][0]]) for x in self.leaves()
        )
        x, y = self.vertices[start[0]], self.vertices[start[1]]
        out = []
        for _ in range(2 * len(self.edges)):
            out.append(x)
            rot = self.rotation[y]
            x, y = y, rot[(rot.index(x) + 1) % len(rot)]
        return tuple(out)

    def path(self, x: Vertex, y: Vertex) -> list:
        parent = {x: None}
        stack = [x]
        while stack:
            z = stack.pop()
            for nb in self.rotation[z]:
                if nb not in parent:
                    parent[nb] = z
                    stack.append(nb)
        out = [y]
        while out[-1] != x:
            out.append(parent[out[-1]])
        return out[::-1]

    def to_json(self) -> list:
        return [[x, list(self.rotation[x])] for x in self.vertices]

    @classmethod
    def from_json(cls, data) -> "EmbeddedTree":
        return cls({_key(x): [_key(y) for y in nbrs] for x, nbrs in data})

    def __eq__(self, other):
        return isinstance(other, EmbeddedTree) and self.to_json() == other.to_json()

    def __repr__(self):
        return f"EmbeddedTree({dict(self.rotation)!r})"


def _key(x):
    return tuple(x) if isinstance(x, list) else x


def star(leaves: Sequence[Vertex], hub: Vertex = 0) -> EmbeddedTree:
    """Star whose rotation at the hub lists ``leaves`` in the given order."""
    rot = {hub: list(leaves)}
    rot.update({x: [hub] for x in leaves})
    return EmbeddedTree(rot)


def path_tree(vertices: Sequence[Vertex]) -> EmbeddedTree:
    rot = {}
    for i, x in enumerate(vertices):
        rot[x] = [vertices[j] for j in (i - 1, i + 1) if 0 <= j < len(vertices)]
    return EmbeddedTree(rot)


@dataclass(frozen=True)
class Piece:
    """Digraph glued onto tree edge ``edge``: its vertex ``u`` becomes
    ``edge[0]`` and its vertex ``v`` becomes ``edge[1]``."""

    edge: tuple
    digraph: Digraph
    u: int
    v: int


@dataclass(frozen=True)
class TreeJoinSpec:
    tree: EmbeddedTree
    pieces: Sequence[Piece]
    peripheral: Sequence[Vertex]
    b_edges: Sequence[tuple] = ()

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        object.__setattr__(self, "peripheral", tuple(self.peripheral))
        object.__setattr__(self, "b_edges", tuple(tuple(e) for e in self.b_edges))


def _is_subsequence(short: Sequence, long: Sequence) -> bool:
    it = iter(long)
    return all(any(x == y for y in it) for x in short)


def validate_peripheral(spec: TreeJoinSpec, mode: str = "leaves_only") -> bool:
    """Check the peripheral list against the embedding of the tree.

    ``leaves_only``: the list is the leaf order of the boundary walk, up to
    rotation.  ``partial_eulerian``: the list is a circular sublist of the
    boundary walk holding every leaf once and any other vertex at most once.
    """
    tree = spec.tree
    c = spec.peripheral
    walk = tree.eulerian_list()
    leaves = set(tree.leaves())
    if len(c) < 2 or len(set(c)) != len(c) or not set(c) <= set(tree.vertices):
        return False
    if mode == "leaves_only":
        order = [x for x in walk if x in leaves]
        if set(c) != leaves:
            return False
        return any(tuple(order[i:] + order[:i]) == c for i in range(len(order)))
    if mode == "partial_eulerian":
        if not leaves <= set(c):
            return False
        for i in range(len(walk)):
            rotated = walk[i:] + walk[:i]
            for j in range(len(c)):
                if _is_subsequence(c[j:] + c[:j], rotated):
                    return True
        return False
    raise BadParameter(f"unknown peripheral mode {mode!r}")


def _check_pieces(spec: TreeJoinSpec, pieces: Sequence[Piece], edges_needed) -> None:
    tree = spec.tree
    seen = set()
    for p in pieces:
        x, y = p.edge
        if not tree.has_edge(x, y):
            raise BadParameter(f"piece edge {x!r}-{y!r} is not a tree edge")
        key = frozenset((x, y))
        if key in seen:
            raise InteriorOverlap(f"two pieces are glued onto edge {x!r}-{y!r}")
        seen.add(key)
        if not (0 <= p.u < p.digraph.n and 0 <= p.v < p.digraph.n) or not p.digraph.has_digon(p.u, p.v):
            raise MissingDigon(f"piece on {x!r}-{y!r} lacks the digon [{p.u},{p.v}]")
    if seen != edges_needed:
        raise BadParameter("pieces must cover exactly the tree edges that carry them")


def _assemble(spec: TreeJoinSpec, pieces: Sequence[Piece], digon_edges=()) -> tuple[Digraph, list[list[int]]]:
    tree = spec.tree
    nxt = len(tree.vertices)
    arcs = set()
    maps = []
    for p in pieces:
        x, y = p.edge
        m = []
        for z in range(p.digraph.n):
            if z == p.u:
                m.append(tree.index(x))
            elif z == p.v:
                m.append(tree.index(y))
            else:
                m.append(nxt)
                nxt += 1
        maps.append(m)
        arcs |= {(m[a], m[b]) for a, b in p.digraph.arcs if {a, b} != {p.u, p.v}}
    for x, y in digon_edges:
        i, j = tree.index(x), tree.index(y)
        arcs |= {(i, j), (j, i)}
    c = [tree.index(x) for x in spec.peripheral]
    arcs |= {(c[i], c[(i + 1) % len(c)]) for i in range(len(c))}
    return Digraph(nxt, arcs), maps


def _all_edges(tree: EmbeddedTree) -> set:
    return {frozenset(e) for e in tree.edges}


def hajos_tree_join(spec: TreeJoinSpec, strict: bool = True) -> tuple[Digraph, list[list[int]]]:
    """Glue the pieces along the tree and close the peripheral cycle on the leaves.

    With ``strict=False`` the peripheral list only has to be some cyclic order
    of the leaves, which allows building orderings no embedding realises.
    """
    ok = validate_peripheral(spec, "leaves_only")
    if not ok and (strict or set(spec.peripheral) != set(spec.tree.leaves())
                   or len(set(spec.peripheral)) != len(spec.peripheral)):
        raise InvalidPeripheral("peripheral list does not follow the embedding of the tree")
    _check_pieces(spec, spec.pieces, _all_edges(spec.tree))
    return _assemble(spec, spec.pieces)


def extended_hajos_tree_join(spec: TreeJoinSpec) -> tuple[Digraph, list[list[int]]]:
    if not validate_peripheral(spec, "partial_eulerian"):
        raise InvalidPeripheral("peripheral list is not a partial Eulerian list of the tree")
    _check_pieces(spec, spec.pieces, _all_edges(spec.tree))
    return _assemble(spec, spec.pieces)


def b_edge_parity_ok(tree: EmbeddedTree, b_edges) -> bool:
    """Every leaf-to-leaf path crosses an even number of ``b_edges``."""
    marked = {frozenset(e) for e in b_edges}
    root = tree.vertices[0]
    parity = {root: 0}
    stack = [root]
    while stack:
        x = stack.pop()
        for y in tree.rotation[x]:
            if y not in parity:
                parity[y] = parity[x] ^ (frozenset((x, y)) in marked)
                stack.append(y)
    return len({parity[x] for x in tree.leaves()}) <= 1


def two_hajos_tree_join(spec: TreeJoinSpec, b_edges=None) -> tuple[Digraph, list[list[int]]]:
    """Pieces on the remaining edges, plain digons on ``b_edges``, peripheral cycle on the leaves."""
    b_edges = tuple(tuple(e) for e in (spec.b_edges if b_edges is None else b_edges))
    tree = spec.tree
    if len(tree.edges) < 2:
        raise BadParameter("the tree needs at least two edges")
    for x, y in b_edges:
        if not tree.has_edge(x, y):
            raise BadParameter(f"{x!r}-{y!r} is not a tree edge")
    if not b_edge_parity_ok(tree, b_edges):
        raise ParityViolation("some leaf-to-leaf path crosses an odd number of digon edges")
    if not validate_peripheral(spec, "leaves_only"):
        raise InvalidPeripheral("peripheral list does not follow the embedding of the tree")
    _check_pieces(spec, spec.pieces, _all_edges(tree) - {frozenset(e) for e in b_edges})
    return _assemble(spec, spec.pieces, b_edges)
