"""The base families every join construction starts from."""
from __future__ import annotations

from ..digraph import Digraph, symmetric
from ..errors import BadParameter


def complete(n: int) -> Digraph:
    """Symmetric complete digraph on ``n`` vertices."""
    if n < 1:
        raise BadParameter("complete digraph needs at least one vertex")
    return symmetric(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def odd_wheel(ell: int) -> Digraph:
    """Symmetric wheel with hub 0 and rim 1..2*ell+1 in cyclic order."""
    if ell < 1:
        raise BadParameter("odd wheel needs ell >= 1")
    r = 2 * ell + 1
    edges = [(0, i) for i in range(1, r + 1)]
    edges += [(i, i % r + 1) for i in range(1, r + 1)]
    return symmetric(r + 1, edges)


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise BadParameter("directed cycle needs at least two vertices")
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def symmetric_odd_cycle(ell: int) -> Digraph:
    if ell < 1:
        raise BadParameter("symmetric odd cycle needs ell >= 1")
    r = 2 * ell + 1
    return symmetric(r, [(i, (i + 1) % r) for i in range(r)])


BASES = {
    "complete": complete,
    "odd_wheel": odd_wheel,
    "directed_cycle": directed_cycle,
    "symmetric_odd_cycle": symmetric_odd_cycle,
}


def base(kind: str, parameter: int) -> Digraph:
    try:
        make = BASES[kind]
    except KeyError:
        raise BadParameter(f"unknown base kind {kind!r}") from None
    return make(parameter)
