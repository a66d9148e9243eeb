"""Local arc-connectivity via unit-capacity augmenting paths.

Every arc has capacity one, so a maximum flow from ``u`` to ``v`` is a
maximum family of arc-disjoint dipaths and the vertices still reachable from
``u`` in the final residual network give a minimum dicut.
"""
from __future__ import annotations

from dataclasses import dataclass

from .digraph import Arc, Digraph, iter_bits
from .errors import EmptySide, SameVertex, TooSmall


@dataclass(frozen=True)
class Dicut:
    source_side: frozenset
    crossing_arcs: tuple[Arc, ...]

    @property
    def size(self) -> int:
        return len(self.crossing_arcs)

    @classmethod
    def of(cls, d: Digraph, side) -> "Dicut":
        xs = frozenset(side)
        if not xs or len(xs) >= d.n:
            raise EmptySide("a dicut needs a nonempty proper source side")
        return cls(xs, tuple(a for a in d.arcs if a[0] in xs and a[1] not in xs))


def _max_flow(d: Digraph, u: int, v: int, limit: int | None = None):
    """Augment until no path remains (or ``limit`` paths were found).

    Returns ``(value, residual_reach_mask)``.
    """
    if u == v:
        raise SameVertex(f"source and sink are both {u}")
    n = d.n
    sat_out = [0] * n
    sat_in = [0] * n
    out = d.out_mask
    target = 1 << v
    value = 0
    while True:
        if limit is not None and value >= limit:
            return value, None
        parent = {u: None}
        seen = 1 << u
        frontier = [u]
        found = False
        while frontier and not found:
            nxt = []
            for x in frontier:
                fwd = out[x] & ~sat_out[x] & ~seen
                bwd = sat_in[x] & ~seen
                for y in iter_bits(fwd):
                    parent[y] = (x, True)
                    seen |= 1 << y
                    nxt.append(y)
                for y in iter_bits(bwd):
                    parent[y] = (x, False)
                    seen |= 1 << y
                    nxt.append(y)
                if seen & target:
                    found = True
                    break
            frontier = nxt
        if not found:
            return value, seen
        y = v
        while y != u:
            x, forward = parent[y]
            if forward:
                sat_out[x] |= 1 << y
                sat_in[y] |= 1 << x
            else:
                sat_out[y] &= ~(1 << x)
                sat_in[x] &= ~(1 << y)
            y = x
        value += 1


def lambda_pair(d: Digraph, u: int, v: int) -> int:
    """Maximum number of pairwise arc-disjoint u->v dipaths."""
    return _max_flow(d, u, v)[0]


def min_dicut(d: Digraph, u: int, v: int) -> Dicut:
    """Minimum u-v dicut; the source side is everything reachable from ``u``
    in the final residual network."""
    _, reach = _max_flow(d, u, v)
    return Dicut.of(d, iter_bits(reach))


def all_pairs_lambda(d: Digraph) -> dict[tuple[int, int], int]:
    return {(x, y): lambda_pair(d, x, y) for x in range(d.n) for y in range(d.n) if x != y}


def lambda_max(d: Digraph) -> int:
    """Maximum local arc-connectivity over ordered pairs of distinct vertices."""
    if d.n < 2:
        raise TooSmall("lambda_max needs at least two vertices")
    best = 0
    outdeg = [m.bit_count() for m in d.out_mask]
    indeg = [m.bit_count() for m in d.in_mask]
    for x in range(d.n):
        if outdeg[x] <= best:
            continue
        for y in range(d.n):
            if x == y or indeg[y] <= best:
                continue
            best = max(best, lambda_pair(d, x, y))
    return best


def symmetric_connectivity(d: Digraph) -> bool:
    """True iff lambda(x, y) == lambda(y, x) for every pair of vertices."""
    return all(
        lambda_pair(d, x, y) == lambda_pair(d, y, x)
        for x in range(d.n)
        for y in range(x + 1, d.n)
    )
