"""Deciding k-extremality.

Two independent routes are provided.  The oracle checks the definition
directly with the exact dicolouring solver and is limited to small inputs.
The structural recogniser peels off a directed Hajós join, a parallel Hajós
join or a Hajós star join, recurses on the parts and bottoms out at
symmetric complete digraphs (and symmetric odd wheels when ``k = 3``).
Joins of this kind are extremal exactly when their parts are, so the first
split found is decisive, and a successful run returns a certificate that
replays to the input.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .connectivity import lambda_max
from .constructions.certificate import JoinCertificate, base_certificate, build_node, replay, tree_params
from .constructions.trees import Piece, TreeJoinSpec, star
from .dicolouring import find_dicolouring
from .digraph import (
    Digraph,
    block_decomposition,
    bridges_of,
    components_of,
    contract,
    is_biconnected,
    is_eulerian,
    is_strong,
    iter_bits,
    strong_components,
    underlying_without,
)
from .errors import BadK, BudgetExceeded, InvalidInput

ORACLE_LIMIT = 18


def is_k_extremal_oracle(d: Digraph, k: int) -> bool:
    """Strong, biconnected, ``lambda = k`` and dichromatic number ``k + 1``."""
    if d.n > ORACLE_LIMIT:
        raise BudgetExceeded(f"oracle is limited to {ORACLE_LIMIT} vertices, got {d.n}")
    if d.n < 2 or not is_strong(d) or not is_biconnected(d):
        return False
    if lambda_max(d) != k:
        return False
    return find_dicolouring(d, k) is None and find_dicolouring(d, k + 1) is not None


# -- splits ------------------------------------------------------------------


@dataclass(frozen=True)
class Split:
    """A decomposition of a digraph into smaller parts.

    ``params`` are the constructor parameters, expressed in the labellings of
    the parts.  ``labels[i][z]`` is the input vertex that vertex ``z`` of
    part ``i`` stands for (``None`` for a contracted vertex).
    """

    kind: str
    params: dict
    parts: tuple
    labels: tuple
    witness: tuple = field(default=())


def _part(d: Digraph, vertices, extra_arcs) -> tuple[Digraph, list]:
    sub, labels = d.induced(vertices)
    index = {v: i for i, v in enumerate(labels)}
    sub = sub.add_arcs((index[a], index[b]) for a, b in extra_arcs)
    return sub, labels


def find_directed_split(d: Digraph) -> Split | None:
    """Smallest ``(u, v, w)`` such that ``uw`` separates ``u`` from ``w`` in ``D - v``."""
    best = None
    full = d.all_mask
    for v in range(d.n):
        alive = full & ~(1 << v)
        for p, q in bridges_of(d.und_mask, alive):
            for u, w in ((p, q), (q, p)):
                if not d.has_arc(u, w) or d.has_arc(w, u):
                    continue
                if d.has_arc(u, v) or d.has_arc(v, w):
                    continue
                if best is None or (u, v, w) < best:
                    best = (u, v, w)
    if best is None:
        return None
    u, v, w = best
    rest = d.remove_arcs([(u, w)])
    comps = components_of(rest.und_mask, d.all_mask & ~(1 << v))
    r_u = next(c for c in comps if c >> u & 1)
    r_w = next(c for c in comps if c >> w & 1)
    if r_u | r_w | (1 << v) != d.all_mask:
        return None
    d1, l1 = _part(d, list(iter_bits(r_u)) + [v], [(u, v)])
    d2, l2 = _part(d, list(iter_bits(r_w)) + [v], [(v, w)])
    params = {"u": l1.index(u), "v1": l1.index(v), "v2": l2.index(v), "w": l2.index(w)}
    return Split("directed_join", params, (d1, d2), (l1, l2), best)


def _second_crossing_arcs(d: Digraph, k_mask: int, t: int, u: int):
    """Arcs ``vw`` that together with ``tu`` may disconnect the underlying graph of ``K``.

    Either ``vw`` is the reverse of ``tu`` (the crossing arcs form a digon),
    or ``tu`` is a single arc and ``vw`` a single-arc bridge of ``K - tu``.
    """
    if d.has_arc(u, t):
        yield u, t
        return
    adj = underlying_without(d, [(t, u)])
    for p, q in bridges_of(adj, k_mask):
        if d.has_arc(p, q) != d.has_arc(q, p):
            yield (p, q) if d.has_arc(p, q) else (q, p)


def find_parallel_split(d: Digraph) -> Split | None:
    """Smallest ``(t, u, v, w, a, b)`` exhibiting ``d`` as a parallel Hajós join.

    ``D - {a, b}`` must have a component ``K`` that falls apart into a lobe
    ``A`` holding ``t, w`` and a lobe ``C`` holding ``u, v`` once ``tu`` and
    ``vw`` are removed, with ``A`` attached to ``a`` only, ``C`` attached to
    ``b`` only, and at least one further component ``B``.  The parts are
    ``D`` with ``B + {a, b}`` contracted to one vertex ``x``, and
    ``D[B + {a, b}]`` with the digon ``[a, b]``.
    """
    n = d.n
    full = d.all_mask
    und = d.und_mask
    best = None
    for a in range(n):
        for b in range(n):
            if a == b or und[a] >> b & 1:
                continue
            alive = full & ~(1 << a) & ~(1 << b)
            comps = components_of(und, alive)
            if len(comps) < 2:
                continue
            for k_mask in comps:
                arcs_k = [
                    (p, q) for p in iter_bits(k_mask) for q in iter_bits(d.out_mask[p] & k_mask)
                ]
                for t, u in arcs_k:
                    for v, w in _second_crossing_arcs(d, k_mask, t, u):
                        cand = (t, u, v, w, a, b)
                        if best is not None and cand >= best:
                            continue
                        adj2 = underlying_without(d, [(t, u), (v, w)])
                        parts = components_of(adj2, k_mask)
                        if len(parts) != 2:
                            continue
                        side_a = next(c for c in parts if c >> t & 1)
                        side_c = next(c for c in parts if c >> u & 1)
                        if side_a == side_c or not side_a >> w & 1 or not side_c >> v & 1:
                            continue
                        if any(und[y] >> b & 1 for y in iter_bits(side_a)):
                            continue
                        if any(und[y] >> a & 1 for y in iter_bits(side_c)):
                            continue
                        best = cand
    if best is None:
        return None
    t, u, v, w, a, b = best
    rest = d.und_mask
    alive = full & ~(1 << a) & ~(1 << b)
    k_mask = next(c for c in components_of(rest, alive) if c >> t & 1)
    b_set = [y for y in range(n) if not k_mask >> y & 1]
    d_ac, relabel = contract(d, b_set)
    labels_ac: list = [None] * d_ac.n
    for old, new in relabel.items():
        if old not in b_set:
            labels_ac[new] = old
    x = relabel[a]
    d_b, labels_b = _part(d, b_set, [(a, b), (b, a)])
    params = {
        "x": x,
        "t": relabel[t],
        "u": relabel[u],
        "v": relabel[v],
        "w": relabel[w],
        "a": labels_b.index(a),
        "b": labels_b.index(b),
    }
    return Split("parallel_join", params, (d_ac, d_b), (labels_ac, labels_b), best)


def _forest_path(edges, src: int, dst: int):
    adj: dict[int, list[int]] = {}
    for p, q in edges:
        adj.setdefault(p, []).append(q)
        adj.setdefault(q, []).append(p)
    if src not in adj:
        return None
    parent = {src: None}
    stack = [src]
    while stack:
        z = stack.pop()
        for y in adj[z]:
            if y not in parent:
                parent[y] = z
                stack.append(y)
    if dst not in parent:
        return None
    path = [dst]
    while path[-1] != src:
        path.append(parent[path[-1]])
    return path[::-1]


def _star_split_at(d: Digraph, y: int, cycle: list[int]) -> Split | None:
    ell = len(cycle)
    if ell < 2 or y in cycle:
        return None
    if any(d.und_mask[y] >> p & 1 for p in cycle):
        return None
    arcs_c = [(cycle[i], cycle[(i + 1) % ell]) for i in range(ell)]
    if not all(d.has_arc(p, q) for p, q in arcs_c):
        return None
    rest = d.remove_arcs(arcs_c)
    comps = components_of(rest.und_mask, d.all_mask & ~(1 << y))
    if len(comps) != ell:
        return None
    owner = []
    for p in cycle:
        c = next(c for c in comps if c >> p & 1)
        if c in owner:
            return None
        owner.append(c)
    parts, labels, pieces = [], [], []
    for p, c in zip(cycle, owner):
        part, lab = _part(d, list(iter_bits(c)) + [y], [(y, p), (p, y)])
        parts.append(part)
        labels.append(lab)
        pieces.append(Piece((y, p), part, lab.index(y), lab.index(p)))
    spec = TreeJoinSpec(star(cycle, hub=y), pieces, cycle)
    return Split("star_join", tree_params(spec), tuple(parts), tuple(labels), (y, *cycle))


def find_star_split(d: Digraph) -> Split | None:
    """First good guess ``(y, p_l, p_1)``: hub ``y`` and peripheral cycle ``p_1 .. p_l``.

    The cycle is read off the bridges of ``D - y - p_l p_1``, which must
    contain a ``p_1 -> p_l`` dipath.
    """
    for y in range(d.n):
        alive = d.all_mask & ~(1 << y)
        for pl in range(d.n):
            if pl == y:
                continue
            for p1 in d.out_neighbours(pl):
                if p1 == y:
                    continue
                adj = underlying_without(d, [(pl, p1)])
                path = _forest_path(bridges_of(adj, alive), p1, pl)
                if path is None:
                    continue
                if not all(d.has_arc(path[i], path[i + 1]) for i in range(len(path) - 1)):
                    continue
                split = _star_split_at(d, y, path)
                if split is not None:
                    return split
    return None


# -- recogniser --------------------------------------------------------------


def _odd_wheel_labels(d: Digraph) -> list[int] | None:
    """Labels matching the ``odd_wheel`` layout (hub first, rim in order), if ``d`` is one."""
    n = d.n
    if n < 4 or n % 2 or not d.is_symmetric():
        return None
    hubs = [v for v in range(n) if d.out_degree(v) == n - 1]
    if not hubs:
        return None
    hub = hubs[0]
    rim = [v for v in range(n) if v != hub]
    if any(d.out_degree(v) != 3 for v in rim):
        return None
    order = [rim[0]]
    prev = None
    while True:
        cur = order[-1]
        nxt = [y for y in d.out_neighbours(cur) if y != hub and y != prev]
        prev = cur
        if nxt[0] == order[0]:
            break
        order.append(nxt[0])
    if len(order) != len(rim):
        return None
    return [hub] + order


def _screen(d: Digraph, k: int) -> bool:
    if d.n < k + 1:
        return False
    if any(d.out_degree(v) < k for v in range(d.n)):
        return False
    return is_eulerian(d) and is_strong(d) and is_biconnected(d)


def _certify(d: Digraph, split: Split, children: list[JoinCertificate]) -> JoinCertificate:
    built, maps = build_node(split.kind, split.params, list(split.parts))
    labels: list = [None] * built.n
    for m, lab in zip(maps, split.labels):
        for z, image in enumerate(m):
            if lab[z] is not None:
                labels[image] = lab[z]
    assert None not in labels and sorted(labels) == list(range(d.n))
    cert = JoinCertificate(split.kind, split.params, children, labels)
    assert built.relabel(labels) == d
    return cert


FINDERS = (find_directed_split, find_parallel_split, find_star_split)


def _recognize(d: Digraph, k: int) -> JoinCertificate | None:
    if not _screen(d, k):
        return None
    n = d.n
    if n == k + 1:
        return base_certificate("complete", n) if d.m == n * (n - 1) else None
    if k == 3:
        labels = _odd_wheel_labels(d)
        if labels is not None:
            return base_certificate("odd_wheel", (n - 2) // 2, labels)
    for finder in FINDERS:
        split = finder(d)
        if split is None:
            continue
        assert all(p.n < n for p in split.parts)
        children = []
        for part in split.parts:
            child = _recognize(part, k)
            if child is None:
                return None
            children.append(child)
        return _certify(d, split, children)
    return None


def recognize_extremal(d: Digraph, k: int) -> JoinCertificate | None:
    """Certificate that ``d`` is k-extremal, or ``None`` when it is not."""
    if k < 3:
        raise BadK("structural recognition needs k >= 3")
    cert = _recognize(d, k)
    assert cert is None or replay(cert) == d
    return cert


# -- top-level decision ------------------------------------------------------


@dataclass(frozen=True)
class ExtremalVerdict:
    satisfied: bool
    k: int
    witness_block: tuple | None = None
    certificate: JoinCertificate | None = None
    method: str = "structural"


def blocks_of_strong_components(d: Digraph):
    """Vertex sets of the blocks of every nontrivial strong component."""
    for comp in strong_components(d):
        if len(comp) < 2:
            continue
        sub, labels = d.induced(comp)
        for block in block_decomposition(sub).blocks:
            yield tuple(labels[i] for i in block)


def _is_dicycle(d: Digraph) -> bool:
    return d.n >= 2 and all(d.out_degree(v) == 1 and d.in_degree(v) == 1 for v in range(d.n)) and is_strong(d)


def chi_equals_lambda_plus_one(d: Digraph) -> ExtremalVerdict:
    """Decide whether the dichromatic number equals ``lambda(d) + 1``."""
    if d.n == 0:
        raise InvalidInput("the empty digraph has no vertices")
    k = 0 if d.n < 2 else lambda_max(d)
    if k == 0:
        return ExtremalVerdict(True, 0, (0,), None, "structural")
    for block in blocks_of_strong_components(d):
        sub, _ = d.induced(block)
        if k == 1:
            if _is_dicycle(sub):
                return ExtremalVerdict(True, 1, block, None, "structural")
        elif k == 2:
            if is_k_extremal_oracle(sub, 2):
                return ExtremalVerdict(True, 2, block, None, "oracle")
        else:
            cert = recognize_extremal(sub, k)
            if cert is not None:
                return ExtremalVerdict(True, k, block, cert, "structural")
    return ExtremalVerdict(False, k, None, None, "oracle" if k == 2 else "structural")
