"""Two-input Hajós-type joins.

All constructors share one vertex layout: the first input keeps its labels
``0..n1-1``, the remaining vertices of the second input follow in increasing
order, and a merged vertex keeps the first input's label.  Each returns the
new digraph together with one old->new map per input.
"""
from __future__ import annotations

from ..digraph import Digraph, components_of, iter_bits
from ..errors import BadPartition, ComponentViolation, MissingArc, MissingDigon

Maps = tuple[list[int], ...]


def _glue(n1: int, d2: Digraph, merge: dict[int, int]) -> list[int]:
    """Map of ``d2`` into the layout, sending ``merge`` keys onto labels of the first input."""
    out = []
    nxt = n1
    for v in range(d2.n):
        if v in merge:
            out.append(merge[v])
        else:
            out.append(nxt)
            nxt += 1
    return out


def _require_arc(d: Digraph, u: int, v: int, name: str) -> None:
    if not (0 <= u < d.n and 0 <= v < d.n) or not d.has_arc(u, v):
        raise MissingArc(f"arc {u}->{v} is not in {name}")


def _require_digon(d: Digraph, u: int, v: int, name: str) -> None:
    if not (0 <= u < d.n and 0 <= v < d.n) or not d.has_digon(u, v):
        raise MissingDigon(f"digon [{u},{v}] is not in {name}")


def directed_hajos_join(
    d1: Digraph, u: int, v1: int, d2: Digraph, v2: int, w: int
) -> tuple[Digraph, Maps]:
    """Delete ``u v1`` and ``v2 w``, identify ``v1`` with ``v2``, add ``u w``."""
    _require_arc(d1, u, v1, "d1")
    _require_arc(d2, v2, w, "d2")
    m1 = list(range(d1.n))
    m2 = _glue(d1.n, d2, {v2: v1})
    arcs = {a for a in d1.arcs if a != (u, v1)}
    arcs |= {(m2[a], m2[b]) for a, b in d2.arcs if (a, b) != (v2, w)}
    arcs.add((u, m2[w]))
    return Digraph(d1.n + d2.n - 1, arcs), (m1, m2)


def bidirected_hajos_join(
    d1: Digraph, u: int, v1: int, d2: Digraph, v2: int, w: int
) -> tuple[Digraph, Maps]:
    """Delete digons ``[u, v1]`` and ``[v2, w]``, identify ``v1`` with ``v2``, add ``[u, w]``."""
    _require_digon(d1, u, v1, "d1")
    _require_digon(d2, v2, w, "d2")
    m1 = list(range(d1.n))
    m2 = _glue(d1.n, d2, {v2: v1})
    arcs = {a for a in d1.arcs if set(a) != {u, v1}}
    arcs |= {(m2[a], m2[b]) for a, b in d2.arcs if {a, b} != {v2, w}}
    arcs |= {(u, m2[w]), (m2[w], u)}
    return Digraph(d1.n + d2.n - 1, arcs), (m1, m2)


def _same_component_without(d: Digraph, cut: int, x: int, y: int) -> bool:
    alive = d.all_mask & ~(1 << cut)
    for comp in components_of(d.und_mask, alive):
        if comp >> x & 1:
            return bool(comp >> y & 1)
    return False


def hajos_bijoin(
    d1: Digraph, t: int, a1: int, w: int, d2: Digraph, v: int, a2: int, u: int
) -> tuple[Digraph, Maps]:
    """Delete ``t a1``, ``a1 w``, ``v a2``, ``a2 u``; identify ``a1`` with ``a2``; add ``t u`` and ``v w``."""
    _require_arc(d1, t, a1, "d1")
    _require_arc(d1, a1, w, "d1")
    _require_arc(d2, v, a2, "d2")
    _require_arc(d2, a2, u, "d2")
    if t != w and not _same_component_without(d1, a1, t, w):
        raise ComponentViolation("t and w lie in different components of d1 minus a1")
    if u != v and not _same_component_without(d2, a2, u, v):
        raise ComponentViolation("u and v lie in different components of d2 minus a2")
    m1 = list(range(d1.n))
    m2 = _glue(d1.n, d2, {a2: a1})
    gone1 = {(t, a1), (a1, w)}
    gone2 = {(v, a2), (a2, u)}
    arcs = {a for a in d1.arcs if a not in gone1}
    arcs |= {(m2[a], m2[b]) for a, b in d2.arcs if (a, b) not in gone2}
    arcs |= {(t, m2[u]), (m2[v], w)}
    return Digraph(d1.n + d2.n - 1, arcs), (m1, m2)


def lobes(d_ac: Digraph, x: int, t: int, u: int, v: int, w: int) -> tuple[frozenset, frozenset]:
    """Split ``V(d_ac) - x`` into the side holding ``t, w`` and the side holding ``u, v``.

    The two sides are what remains connected after deleting ``x`` and the arcs
    ``t u`` and ``v w``; anything else is a :class:`BadPartition`.
    """
    n = d_ac.n
    for y in (t, u, v, w):
        if not 0 <= y < n or y == x:
            raise BadPartition("t, u, v, w must be vertices of d_ac other than x")
    _require_arc(d_ac, t, u, "d_ac")
    _require_arc(d_ac, v, w, "d_ac")
    rest = d_ac.remove_arcs([(t, u), (v, w)])
    alive = rest.all_mask & ~(1 << x)
    comps = components_of(rest.und_mask, alive)
    if len(comps) != 2:
        raise BadPartition("d_ac minus x and {tu, vw} must have exactly two components")
    side_a = next(c for c in comps if c >> t & 1)
    side_c = next(c for c in comps if c >> u & 1)
    if side_a == side_c or not side_a >> w & 1 or not side_c >> v & 1:
        raise BadPartition("t, w and u, v must lie on opposite lobes")
    return frozenset(iter_bits(side_a)), frozenset(iter_bits(side_c))


def parallel_hajos_join(
    d_ac: Digraph, x: int, t: int, u: int, v: int, w: int, d_b: Digraph, a: int, b: int
) -> tuple[Digraph, Maps]:
    """Splice ``d_b - [a, b]`` between the two lobes of ``d_ac``.

    Arcs of the ``t, w`` lobe at ``x`` move to ``a``, arcs of the ``u, v``
    lobe at ``x`` move to ``b``; the crossing arcs ``t u`` and ``v w`` stay.
    Layout: ``d_b`` first, then ``d_ac`` without ``x``.  In the returned map
    for ``d_ac``, ``x`` is sent to ``a``.
    """
    _require_digon(d_b, a, b, "d_b")
    if not 0 <= x < d_ac.n:
        raise BadPartition("x is not a vertex of d_ac")
    side_a, side_c = lobes(d_ac, x, t, u, v, w)
    crossing = {
        (p, q)
        for p, q in d_ac.arcs
        if x not in (p, q) and ((p in side_a) != (q in side_a))
    }
    if crossing != {(t, u), (v, w)}:
        raise BadPartition("the lobes of d_ac must be joined only by tu and vw")
    m_b = list(range(d_b.n))
    m_ac = []
    nxt = d_b.n
    for y in range(d_ac.n):
        if y == x:
            m_ac.append(a)
        else:
            m_ac.append(nxt)
            nxt += 1

    def image(y: int, other: int) -> int:
        if y != x:
            return m_ac[y]
        return a if other in side_a else b

    arcs = {e for e in d_b.arcs if set(e) != {a, b}}
    arcs |= {(image(p, q), image(q, p)) for p, q in d_ac.arcs}
    return Digraph(nxt, arcs), (m_ac, m_b)

