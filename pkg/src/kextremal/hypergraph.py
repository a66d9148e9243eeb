"""Hypergraphs of induced dicycles and their colouring and connectivity."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .connectivity import lambda_pair
from .digraph import Digraph, is_strong
from .errors import BudgetExceeded, MissingEdge, OutOfRange, ParseError, SameVertex, VertexNotInEdge

SUBSET_LIMIT = 16
COLOUR_LIMIT = 24
EDGE_LIMIT = 5000
PACKING_LIMIT = 10


@dataclass(frozen=True)
class Hypergraph:
    n: int
    hyperedges: tuple

    def __init__(self, n: int, hyperedges: Iterable[Iterable[int]] = ()):
        edges = []
        seen = set()
        for e in hyperedges:
            fe = frozenset(e)
            if len(fe) < 2:
                raise OutOfRange("hyperedges need at least two vertices")
            if any(not 0 <= x < n for x in fe):
                raise OutOfRange(f"hyperedge {sorted(fe)} leaves 0..{n - 1}")
            if fe in seen:
                raise ParseError(f"duplicate hyperedge {sorted(fe)}")
            seen.add(fe)
            edges.append(fe)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "hyperedges", tuple(sorted(edges, key=lambda e: (len(e), sorted(e)))))

    @property
    def m(self) -> int:
        return len(self.hyperedges)

    def has_edge(self, e) -> bool:
        return frozenset(e) in self.hyperedges


def _induces_dicycle(d: Digraph, mask: int) -> bool:
    for v in range(d.n):
        if mask >> v & 1:
            if (d.out_mask[v] & mask).bit_count() != 1 or (d.in_mask[v] & mask).bit_count() != 1:
                return False
    sub, _ = d.induced(v for v in range(d.n) if mask >> v & 1)
    return is_strong(sub)


def dicycle_hypergraph(d: Digraph) -> Hypergraph:
    """Hyperedges are the vertex sets inducing a directed cycle."""
    if d.n > SUBSET_LIMIT:
        raise BudgetExceeded(f"subset enumeration is limited to {SUBSET_LIMIT} vertices")
    edges = []
    for mask in range(1, 1 << d.n):
        if mask & (mask - 1) and _induces_dicycle(d, mask):
            edges.append([v for v in range(d.n) if mask >> v & 1])
    return Hypergraph(d.n, edges)


def find_hyper_colouring(h: Hypergraph, k: int) -> dict[int, int] | None:
    """A colouring with ``k`` colours leaving no hyperedge monochromatic."""
    if h.n > COLOUR_LIMIT:
        raise BudgetExceeded(f"hypergraph colouring is limited to {COLOUR_LIMIT} vertices")
    # an edge is checked once its last vertex (in index order) is coloured
    closing: list[list[frozenset]] = [[] for _ in range(h.n)]
    for e in h.hyperedges:
        closing[max(e)].append(e)
    colour = [0] * h.n

    def extend(v: int, used: int) -> bool:
        if v == h.n:
            return True
        for c in range(1, min(used + 1, k) + 1):
            colour[v] = c
            if all(any(colour[x] != c for x in e) for e in closing[v]):
                if extend(v + 1, max(used, c)):
                    return True
        colour[v] = 0
        return False

    return {v: colour[v] for v in range(h.n)} if extend(0, 0) else None


def hyper_chromatic_number(h: Hypergraph) -> int:
    if h.n == 0:
        return 0
    k = 1
    while find_hyper_colouring(h, k) is None:
        k += 1
    return k


def incidence_digraph(h: Hypergraph) -> Digraph:
    """Vertices ``0..n-1``; hyperedge ``i`` becomes ``n + 2i -> n + 2i + 1``.

    Each vertex of the hyperedge points into its entry node and is pointed
    to by its exit node.  One unit through the entry-exit arc is one use of
    the hyperedge, so unit arc capacities model hyperedge-disjointness.
    """
    arcs = []
    for i, e in enumerate(h.hyperedges):
        ein, eout = h.n + 2 * i, h.n + 2 * i + 1
        arcs.append((ein, eout))
        for x in e:
            arcs.append((x, ein))
            arcs.append((eout, x))
    return Digraph(h.n + 2 * h.m, arcs)


def hyper_lambda(h: Hypergraph, u: int, v: int) -> int:
    """Maximum number of hyperedge-disjoint ``u``-``v`` hyperpaths (flow model)."""
    if u == v:
        raise SameVertex(f"source and sink are both {u}")
    if not (0 <= u < h.n and 0 <= v < h.n):
        raise OutOfRange("endpoint outside the hypergraph")
    if h.m > EDGE_LIMIT:
        raise BudgetExceeded(f"more than {EDGE_LIMIT} hyperedges")
    return lambda_pair(incidence_digraph(h), u, v)


def hyper_lambda_exhaustive(h: Hypergraph, u: int, v: int) -> int:
    """Same quantity by brute force: pack minimal connecting hyperedge sets."""
    if u == v:
        raise SameVertex(f"source and sink are both {u}")
    if h.m > PACKING_LIMIT:
        raise BudgetExceeded(f"exhaustive packing is limited to {PACKING_LIMIT} hyperedges")
    edges = h.hyperedges

    def connects(mask: int) -> bool:
        reached = {u}
        grew = True
        while grew:
            grew = False
            for i, e in enumerate(edges):
                if mask >> i & 1 and reached & e and not e <= reached:
                    reached |= e
                    grew = True
        return v in reached

    good = [m for m in range(1, 1 << len(edges)) if connects(m)]
    minimal = [m for m in good if not any(g != m and g & m == g for g in good)]

    def pack(free: int, start: int) -> int:
        best = 0
        for i in range(start, len(minimal)):
            m = minimal[i]
            if m & free == m:
                best = max(best, 1 + pack(free & ~m, i + 1))
        return best

    return pack((1 << len(edges)) - 1, 0)


def pairwise_intersection_check(h: Hypergraph) -> bool:
    """True iff distinct hyperedges share at most one vertex."""
    es = h.hyperedges
    return all(len(es[i] & es[j]) <= 1 for i in range(len(es)) for j in range(i + 1, len(es)))


def hajos_hyperjoin(
    h1: Hypergraph, e1: Sequence[int], v1: int, h2: Hypergraph, e2: Sequence[int], v2: int,
    include_v: bool = False,
) -> Hypergraph:
    """Identify ``v1`` with ``v2``, drop ``e1`` and ``e2`` and add their union.

    The merged vertex keeps the label ``v1``; other vertices of ``h2`` are
    appended after those of ``h1``.  The merged vertex belongs to the new
    hyperedge only when ``include_v`` is set.
    """
    f1, f2 = frozenset(e1), frozenset(e2)
    if not h1.has_edge(f1):
        raise MissingEdge(f"{sorted(f1)} is not a hyperedge of h1")
    if not h2.has_edge(f2):
        raise MissingEdge(f"{sorted(f2)} is not a hyperedge of h2")
    if v1 not in f1:
        raise VertexNotInEdge(f"{v1} is not in {sorted(f1)}")
    if v2 not in f2:
        raise VertexNotInEdge(f"{v2} is not in {sorted(f2)}")
    m2 = []
    nxt = h1.n
    for x in range(h2.n):
        if x == v2:
            m2.append(v1)
        else:
            m2.append(nxt)
            nxt += 1
    edges = [e for e in h1.hyperedges if e != f1]
    edges += [frozenset(m2[x] for x in e) for e in h2.hyperedges if e != f2]
    new = (f1 | {m2[x] for x in f2}) - {v1}
    if include_v:
        new |= {v1}
    edges.append(new)
    return Hypergraph(nxt, edges)


def to_text(h: Hypergraph) -> str:
    lines = [f"h {h.n} {h.m}"]
    lines += ["e " + " ".join(map(str, sorted(e))) for e in h.hyperedges]
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Hypergraph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts[1:]]
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer field") from None
        if header is None:
            if parts[0] != "h" or len(nums) != 2:
                raise ParseError(f"line {lineno}: expected header 'h <n> <m>'")
            header = nums
        elif parts[0] == "e":
            edges.append(nums)
        else:
            raise ParseError(f"line {lineno}: expected 'e <v1> <v2> ...'")
    if header is None:
        raise ParseError("missing header line")
    if len(edges) != header[1]:
        raise ParseError(f"header announces {header[1]} hyperedges, found {len(edges)}")
    try:
        return Hypergraph(header[0], edges)
    except OutOfRange as exc:
        raise ParseError(str(exc)) from None
