"""Immutable simple digraphs and their structural predicates.

Vertices are the integers ``0..n-1``.  Arcs are ordered pairs without loops or
repetitions; a digon ``[u, v]`` is simply the two arcs ``(u, v)`` and
``(v, u)``.  Most algorithms here work on Python integers used as bitsets,
which keeps the exhaustive searches elsewhere in the package fast enough at
desk scale.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DuplicateArc, EmptySide, LoopArc, OutOfRange, ParseError

Arc = tuple[int, int]


def iter_bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Digraph:
    """A loop-free digraph without parallel arcs on vertices ``0..n-1``.

    Instances are immutable and hashable; two digraphs are equal when they
    have the same order and the same arc set.
    """

    __slots__ = ("n", "arcs", "_arc_set", "out_mask", "in_mask", "und_mask")

    def __init__(self, n: int, arcs: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise OutOfRange(f"negative vertex count {n}")
        seen = set()
        for pair in arcs:
            u, v = int(pair[0]), int(pair[1])
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange(f"arc ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise LoopArc(f"loop at vertex {u}")
            if (u, v) in seen:
                raise DuplicateArc(f"arc ({u}, {v}) given twice")
            seen.add((u, v))
        out_mask = [0] * n
        in_mask = [0] * n
        for u, v in seen:
            out_mask[u] |= 1 << v
            in_mask[v] |= 1 << u
        self.n = n
        self.arcs: tuple[Arc, ...] = tuple(sorted(seen))
        self._arc_set = frozenset(seen)
        self.out_mask: tuple[int, ...] = tuple(out_mask)
        self.in_mask: tuple[int, ...] = tuple(in_mask)
        self.und_mask: tuple[int, ...] = tuple(o | i for o, i in zip(out_mask, in_mask))

    # -- basic queries -----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.arcs)

    @property
    def arc_set(self) -> frozenset:
        return self._arc_set

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arc_set

    def has_digon(self, u: int, v: int) -> bool:
        return (u, v) in self._arc_set and (v, u) in self._arc_set

    def out_neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.out_mask[v]))

    def in_neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.in_mask[v]))

    def neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.und_mask[v]))

    def out_degree(self, v: int) -> int:
        return self.out_mask[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_mask[v].bit_count()

    def is_symmetric(self) -> bool:
        return all((v, u) in self._arc_set for u, v in self.arcs)

    def digons(self) -> list[Arc]:
        """Digons as pairs ``(u, v)`` with ``u < v``."""
        return [(u, v) for u, v in self.arcs if u < v and (v, u) in self._arc_set]

    # -- derived digraphs --------------------------------------------------

    def add_arcs(self, arcs: Iterable[Arc]) -> "Digraph":
        return Digraph(self.n, self._arc_set | {tuple(a) for a in arcs})

    def remove_arcs(self, arcs: Iterable[Arc]) -> "Digraph":
        return Digraph(self.n, self._arc_set - {tuple(a) for a in arcs})

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        """Return the digraph whose arc ``(perm[u], perm[v])`` replaces ``(u, v)``."""
        if sorted(perm) != list(range(self.n)):
            raise OutOfRange("relabelling is not a permutation of the vertex set")
        return Digraph(self.n, [(perm[u], perm[v]) for u, v in self.arcs])

    def induced(self, vertices: Iterable[int]) -> tuple["Digraph", list[int]]:
        """Induced subdigraph on ``vertices``.

        Returns ``(sub, labels)`` where ``labels[i]`` is the vertex of ``self``
        that became vertex ``i`` of ``sub`` (labels keep their sorted order).
        """
        labels = sorted(set(vertices))
        index = {v: i for i, v in enumerate(labels)}
        arcs = [(index[u], index[v]) for u, v in self.arcs if u in index and v in index]
        return Digraph(len(labels), arcs), labels

    def delete_vertices(self, vertices: Iterable[int]) -> tuple["Digraph", list[int]]:
        gone = set(vertices)
        return self.induced(v for v in range(self.n) if v not in gone)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self._arc_set == other._arc_set

    def __hash__(self):
        return hash((self.n, self._arc_set))

    def __repr__(self):
        return f"Digraph(n={self.n}, m={self.m})"


def build(n: int, arcs: Iterable[Sequence[int]]) -> Digraph:
    return Digraph(n, arcs)


def symmetric(n: int, edges: Iterable[tuple[int, int]]) -> Digraph:
    """The symmetric digraph obtained by replacing each edge with a digon."""
    arcs = set()
    for u, v in edges:
        arcs.add((u, v))
        arcs.add((v, u))
    return Digraph(n, arcs)


# -- reachability and components -------------------------------------------


def reach(adj: Sequence[int], start: int, allowed: int) -> int:
    """Bitset of vertices reachable from the bitset ``start`` inside ``allowed``."""
    seen = start & allowed
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def components_of(adj: Sequence[int], alive: int) -> list[int]:
    """Connected components (as bitsets) of an undirected adjacency restricted to ``alive``.

    Components are ordered by their smallest vertex.
    """
    comps = []
    rest = alive
    while rest:
        low = rest & -rest
        comp = reach(adj, low, alive)
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(d: Digraph) -> list[list[int]]:
    """Connected components of the underlying graph."""
    return [list(iter_bits(c)) for c in components_of(d.und_mask, d.all_mask)]


def is_connected(d: Digraph) -> bool:
    return d.n == 0 or reach(d.und_mask, 1, d.all_mask) == d.all_mask


def strong_components(d: Digraph) -> list[list[int]]:
    """Strong components, each sorted, ordered by smallest vertex."""
    comps = []
    rest = d.all_mask
    while rest:
        low = rest & -rest
        fwd = reach(d.out_mask, low, rest)
        comp = fwd & reach(d.in_mask, low, fwd)
        comps.append(list(iter_bits(comp)))
        rest &= ~comp
    return comps


def is_strong(d: Digraph) -> bool:
    if d.n == 0:
        return True
    full = d.all_mask
    return reach(d.out_mask, 1, full) == full and reach(d.in_mask, 1, full) == full


def is_eulerian(d: Digraph) -> bool:
    return all(o.bit_count() == i.bit_count() for o, i in zip(d.out_mask, d.in_mask))


def delta_max(d: Digraph) -> int:
    return max((max(o.bit_count(), i.bit_count()) for o, i in zip(d.out_mask, d.in_mask)), default=0)


# -- blocks, cutvertices, bridges ------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cutvertices: frozenset


def _adjacency_lists(adj: Sequence[int], alive: int) -> dict[int, list[int]]:
    return {v: list(iter_bits(adj[v] & alive)) for v in iter_bits(alive)}


def _lowpoint_dfs(adj: Sequence[int], alive: int):
    """Iterative DFS over the undirected graph yielding tree/back-edge events.

    Returns ``(blocks, cutvertices, bridges)`` for the simple graph given by
    ``adj`` restricted to ``alive``.
    """
    nbrs = _adjacency_lists(adj, alive)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks = []
    cuts = set()
    bridges = []
    counter = 0
    for root in nbrs:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(nbrs[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(nbrs[w])))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] > disc[parent]:
                bridges.append((min(parent, v), max(parent, v)))
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                block = set()
                while edge_stack:
                    e = edge_stack.pop()
                    block.update(e)
                    if e == (parent, v):
                        break
                blocks.append(tuple(sorted(block)))
        if root_children > 1:
            cuts.add(root)
    return blocks, cuts, bridges


def block_decomposition(d: Digraph) -> BlockDecomposition:
    """Blocks and cutvertices of the underlying graph.

    Isolated vertices belong to no block.  Blocks are sorted tuples, ordered
    lexicographically.
    """
    blocks, cuts, _ = _lowpoint_dfs(d.und_mask, d.all_mask)
    return BlockDecomposition(tuple(sorted(blocks)), frozenset(cuts))


def is_biconnected(d: Digraph) -> bool:
    """Connected with no cutvertex (so ``K_1`` and ``K_2`` qualify)."""
    if not is_connected(d):
        return False
    _, cuts, _ = _lowpoint_dfs(d.und_mask, d.all_mask)
    return not cuts


def bridges_of(adj: Sequence[int], alive: int) -> list[tuple[int, int]]:
    """Bridges ``(u, v)`` with ``u < v`` of an undirected bitset adjacency."""
    return sorted(_lowpoint_dfs(adj, alive)[2])


def underlying_without(d: Digraph, arcs: Iterable[Arc]) -> list[int]:
    """Underlying adjacency masks of ``d`` after deleting ``arcs``.

    An underlying edge survives as long as one of its two arcs survives.
    """
    removed = set(arcs)
    adj = list(d.und_mask)
    for u, v in removed:
        if (v, u) not in d.arc_set or (v, u) in removed:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
    return adj


# -- contraction -----------------------------------------------------------


def contract(d: Digraph, subset: Iterable[int]) -> tuple[Digraph, dict[int, int]]:
    """Contract ``subset`` into a single vertex.

    The new vertex takes the position of ``min(subset)``; other vertices keep
    their relative order.  Parallel arcs are merged and loops dropped.
    Returns the contracted digraph and the map old vertex -> new vertex.
    """
    xs = set(subset)
    if not xs or len(xs) >= d.n and xs >= set(range(d.n)):
        raise EmptySide("contraction set must be nonempty and proper")
    if any(not 0 <= x < d.n for x in xs):
        raise OutOfRange("contraction set has a vertex outside the digraph")
    rep = min(xs)
    order = [v for v in range(d.n) if v not in xs or v == rep]
    index = {v: i for i, v in enumerate(order)}
    relabel = {v: index[rep] if v in xs else index[v] for v in range(d.n)}
    arcs = {(relabel[u], relabel[v]) for u, v in d.arcs if relabel[u] != relabel[v]}
    return Digraph(len(order), arcs), relabel


# -- text formats ----------------------------------------------------------


def to_text(d: Digraph) -> str:
    lines = [f"d {d.n} {d.m}"]
    lines.extend(f"a {u} {v}" for u, v in d.arcs)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Digraph:
    header = None
    arcs: list[Arc] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if parts[0] != "d" or len(parts) != 3:
                raise ParseError(f"line {lineno}: expected header 'd <n> <m>'")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer header") from None
            continue
        if parts[0] != "a" or len(parts) != 3:
            raise ParseError(f"line {lineno}: expected 'a <u> <v>'")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer endpoint") from None
        if u == v:
            raise ParseError(f"line {lineno}: loop at {u}")
        if (u, v) in seen:
            raise ParseError(f"line {lineno}: duplicate arc {u} {v}")
        if not (0 <= u < header[0] and 0 <= v < header[0]):
            raise ParseError(f"line {lineno}: endpoint out of range")
        seen.add((u, v))
        arcs.append((u, v))
    if header is None:
        raise ParseError("missing header line")
    if len(arcs) != header[1]:
        raise ParseError(f"header announces {header[1]} arcs, found {len(arcs)}")
    return Digraph(header[0], arcs)


def to_dot(d: Digraph, name: str = "D") -> str:
    """Graphviz rendering; a digon is drawn as one bidirectional edge."""
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {v};" for v in range(d.n))
    for u, v in d.arcs:
        if d.has_arc(v, u):
            if u < v:
                lines.append(f"  {u} -> {v} [dir=both];")
        else:
            lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
