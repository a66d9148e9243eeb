"""Independent reference implementations used to cross-check the package.

Nothing here imports the package's algorithms; only the Digraph container
is read, through its arc list.
"""
from __future__ import annotations

import itertools
import random

import networkx as nx
from hypothesis import strategies as st

from kextremal.digraph import Digraph


def to_nx(d: Digraph) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(range(d.n))
    g.add_edges_from(d.arcs)
    return g


def nx_acyclic(d: Digraph, vertices) -> bool:
    return nx.is_directed_acyclic_graph(to_nx(d).subgraph(vertices))


def _acyclic_by_arcs(arcs, vertices) -> bool:
    # repeated sink removal on a plain adjacency dict
    vs = set(vertices)
    out = {v: {b for a, b in arcs if a == v and b in vs} for v in vs}
    while vs:
        sinks = [v for v in vs if not (out[v] & vs)]
        if not sinks:
            return False
        vs.difference_update(sinks)
    return True


def brute_colourable(d: Digraph, k: int) -> bool:
    arcs = list(d.arcs)
    for assignment in itertools.product(range(k), repeat=d.n):
        if all(
            _acyclic_by_arcs(arcs, [v for v in range(d.n) if assignment[v] == c]) for c in range(k)
        ):
            return True
    return False


def brute_chi(d: Digraph) -> int:
    if d.n == 0:
        return 0
    k = 1
    while not brute_colourable(d, k):
        k += 1
    return k


def nx_lambda(d: Digraph, u: int, v: int) -> int:
    g = to_nx(d)
    nx.set_edge_attributes(g, 1, "capacity")
    return int(nx.maximum_flow_value(g, u, v))


def nx_lambda_max(d: Digraph) -> int:
    return max((nx_lambda(d, u, v) for u in range(d.n) for v in range(d.n) if u != v), default=0)


def nx_strong(d: Digraph) -> bool:
    return d.n > 0 and nx.is_strongly_connected(to_nx(d))


def nx_biconnected(d: Digraph) -> bool:
    g = to_nx(d).to_undirected()
    if d.n == 1:
        return True
    if d.n == 2:
        return nx.is_connected(g)
    return nx.is_biconnected(g)


def brute_induced_dicycles(d: Digraph) -> set[frozenset]:
    g = to_nx(d)
    found = set()
    for r in range(2, d.n + 1):
        for sub in itertools.combinations(range(d.n), r):
            h = g.subgraph(sub)
            if all(h.in_degree(x) == 1 and h.out_degree(x) == 1 for x in sub) and nx.is_strongly_connected(h):
                found.add(frozenset(sub))
    return found


def brute_hyper_chi(n: int, edges) -> int:
    if n == 0:
        return 0
    k = 1
    while True:
        for a in itertools.product(range(k), repeat=n):
            if all(len({a[x] for x in e}) > 1 for e in edges):
                return k
        k += 1


def brute_oracle_extremal(d: Digraph, k: int) -> bool:
    return (
        d.n >= 2
        and nx_strong(d)
        and nx_biconnected(d)
        and nx_lambda_max(d) == k
        and brute_chi(d) == k + 1
    )


def random_digraph(rng: random.Random, n: int, p: float) -> Digraph:
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p])


@st.composite
def digraphs(draw, min_n: int = 1, max_n: int = 7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph(n, [p for p, k in zip(pairs, keep) if k])
