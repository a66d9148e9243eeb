"""Seeded random members of the join-closed extremal classes."""
from __future__ import annotations

import random

from ..digraph import Digraph
from ..errors import BadParameter
from .bases import complete, odd_wheel
from .certificate import JoinCertificate, base_certificate, tree_params
from .joins import directed_hajos_join
from .trees import EmbeddedTree, Piece, TreeJoinSpec, extended_hajos_tree_join, hajos_tree_join

JOIN_KINDS = ("directed", "tree", "extended")


def _bases(k: int) -> list[tuple[str, int]]:
    if k == 3:
        return [("complete", 4), ("odd_wheel", 2), ("odd_wheel", 3)]
    return [("complete", k + 1)]


def _make(family: str, parameter: int) -> Digraph:
    return complete(parameter) if family == "complete" else odd_wheel(parameter)


def _random_tree(rng: random.Random, edges: int) -> EmbeddedTree:
    nbrs: dict[int, list[int]] = {0: []}
    for i in range(1, edges + 1):
        j = rng.randrange(i)
        nbrs[i] = [j]
        nbrs[j].append(i)
    for lst in nbrs.values():
        rng.shuffle(lst)
    return EmbeddedTree(nbrs)


def _partial_list(rng: random.Random, tree: EmbeddedTree, extended: bool) -> list[int]:
    walk = list(tree.eulerian_list())
    leaves = set(tree.leaves())
    keep = {}
    if extended:
        for x in tree.vertices:
            if x not in leaves and rng.random() < 0.5:
                spots = [i for i, y in enumerate(walk) if y == x]
                keep[x] = rng.choice(spots)
    return [y for i, y in enumerate(walk) if y in leaves or keep.get(y) == i]


class _Sampler:
    def __init__(self, k: int, rng: random.Random, cap: int | None):
        self.k = k
        self.rng = rng
        self.cap = cap
        self.kinds = _bases(k)

    def fits(self, n: int) -> bool:
        return self.cap is None or n <= self.cap

    def base(self, room: int | None = None):
        options = [fp for fp in self.kinds if room is None or _make(*fp).n <= room]
        if not options:
            return None
        family, parameter = self.rng.choice(options)
        return _make(family, parameter), base_certificate(family, parameter)

    def directed(self, d: Digraph, cert: JoinCertificate):
        room = None if self.cap is None else self.cap - d.n + 1
        picked = self.base(room)
        if picked is None:
            return None
        b, bcert = picked
        if self.rng.random() < 0.5:
            (d1, c1), (d2, c2) = (d, cert), (b, bcert)
        else:
            (d1, c1), (d2, c2) = (b, bcert), (d, cert)
        u, v1 = self.rng.choice(d1.arcs)
        v2, w = self.rng.choice(d2.arcs)
        out, _ = directed_hajos_join(d1, u, v1, d2, v2, w)
        node = JoinCertificate("directed_join", {"u": u, "v1": v1, "v2": v2, "w": w}, [c1, c2])
        return out, node

    def tree(self, d: Digraph, cert: JoinCertificate, extended: bool):
        digons = d.digons()
        if not digons:
            return None
        for edges in self.rng.sample(range(2, 5), 3):
            tree = _random_tree(self.rng, edges)
            n = len(tree.vertices) + d.n - 2
            chosen = []
            ok = True
            for _ in range(edges - 1):
                room = None if self.cap is None else self.cap - n + 2
                picked = self.base(room)
                if picked is None:
                    ok = False
                    break
                chosen.append(picked)
                n += picked[0].n - 2
            if not ok or not self.fits(n):
                continue
            slot = self.rng.randrange(edges)
            chosen.insert(slot, (d, cert))
            pieces, children = [], []
            for (x, y), (g, gcert) in zip(tree.edges, chosen):
                u, v = self.rng.choice(g.digons())
                if self.rng.random() < 0.5:
                    u, v = v, u
                pieces.append(Piece((x, y), g, u, v))
                children.append(gcert)
            spec = TreeJoinSpec(tree, pieces, _partial_list(self.rng, tree, extended))
            if extended:
                out, _ = extended_hajos_tree_join(spec)
                kind = "extended_tree_join"
            else:
                out, _ = hajos_tree_join(spec)
                kind = "tree_join"
            return out, JoinCertificate(kind, tree_params(spec), children)
        return None


def random_member(
    k: int, join_budget: int, seed: int, max_vertices: int | None = None
) -> tuple[Digraph, JoinCertificate]:
    """Compose base digraphs through up to ``join_budget`` random joins.

    Every step joins the current digraph with fresh bases, either by a
    directed join or by a (possibly extended) tree join on a random plane
    tree with two to four edges.  Steps that cannot respect ``max_vertices``
    are skipped, so the result may use fewer joins than budgeted.
    """
    if k < 3:
        raise BadParameter("random members are generated for k >= 3")
    if join_budget < 0:
        raise BadParameter("join budget must be nonnegative")
    rng = random.Random(seed)
    s = _Sampler(k, rng, max_vertices)
    first = s.base(max_vertices)
    if first is None:
        raise BadParameter("max_vertices is smaller than every base digraph")
    d, cert = first
    for _ in range(join_budget):
        kind = rng.choice(JOIN_KINDS)
        step = s.directed(d, cert) if kind == "directed" else s.tree(d, cert, kind == "extended")
        if step is None and kind != "directed":
            step = s.directed(d, cert)
        if step is not None:
            d, cert = step
    return d, cert
