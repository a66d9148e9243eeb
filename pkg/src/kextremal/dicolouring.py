"""Exact dicolouring: acyclic vertex partitions of digraphs.

The solver is a plain backtracking search.  Each colour class is kept as a
bitset and a vertex may join a class only when it does not close a directed
cycle inside it, which is tested by a forward reachability sweep restricted
to the class.
"""
from __future__ import annotations

import itertools
import sys
from dataclasses import dataclass, field
from typing import Iterator, Mapping

import networkx as nx

from .connectivity import Dicut
from .digraph import Digraph, connected_components, delta_max, iter_bits, mask_of, reach
from .errors import BudgetExceeded, CutTooBig, InvalidInput, ParseError

ENUMERATION_GUARD = 10**8


@dataclass(frozen=True)
class Dicolouring:
    colours: Mapping[int, int]
    k: int

    def __getitem__(self, v: int) -> int:
        return self.colours[v]

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v in sorted(self.colours):
            out.setdefault(self.colours[v], []).append(v)
        return out

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self.colours[v] for v in sorted(self.colours))


def is_acyclic_subset(d: Digraph, vertices) -> bool:
    """True iff the subdigraph induced by ``vertices`` has no directed cycle."""
    alive = vertices if isinstance(vertices, int) else mask_of(vertices)
    in_mask = d.in_mask
    while alive:
        sources = 0
        for v in iter_bits(alive):
            if not in_mask[v] & alive:
                sources |= 1 << v
        if not sources:
            return False
        alive &= ~sources
    return True


def is_valid_dicolouring(d: Digraph, colouring: Dicolouring | Mapping[int, int], k: int | None = None) -> bool:
    colours = colouring.colours if isinstance(colouring, Dicolouring) else colouring
    if k is None:
        k = colouring.k if isinstance(colouring, Dicolouring) else max(colours.values(), default=0)
    if set(colours) != set(range(d.n)):
        return False
    classes: dict[int, int] = {}
    for v, c in colours.items():
        if not 1 <= c <= k:
            return False
        classes[c] = classes.get(c, 0) | (1 << v)
    return all(is_acyclic_subset(d, m) for m in classes.values())


def _closes_cycle(d: Digraph, v: int, cls: int) -> bool:
    start = d.out_mask[v] & cls
    if not start or not d.in_mask[v] & cls:
        return False
    return bool(reach(d.out_mask, start, cls) & d.in_mask[v])


def search_order(d: Digraph) -> list[int]:
    """Vertices by descending total degree, ties broken by index."""
    return sorted(range(d.n), key=lambda v: (-(d.out_degree(v) + d.in_degree(v)), v))


def find_dicolouring(d: Digraph, k: int) -> Dicolouring | None:
    """First ``k``-dicolouring found by the backtracking search, or ``None``.

    The first vertex of the search order gets colour 1 and a fresh colour is
    always the smallest unused one, which removes colour permutations from
    the search without losing completeness.
    """
    if k < 1:
        raise ValueError("colour budget must be at least 1")
    n = d.n
    if n == 0:
        return Dicolouring({}, k)
    order = search_order(d)
    colour = [0] * n
    classes = [0] * (k + 1)

    def extend(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        bit = 1 << v
        for c in range(1, min(used + 1, k) + 1):
            if _closes_cycle(d, v, classes[c]):
                continue
            classes[c] |= bit
            colour[v] = c
            if extend(i + 1, max(used, c)):
                return True
            classes[c] &= ~bit
        colour[v] = 0
        return False

    limit = sys.getrecursionlimit()
    if limit < n + 100:
        sys.setrecursionlimit(n + 100)
    if not extend(0, 0):
        return None
    return Dicolouring({v: colour[v] for v in range(n)}, k)


def dichromatic_number(d: Digraph) -> int:
    if d.n == 0:
        return 0
    k = 1
    while find_dicolouring(d, k) is None:
        k += 1
    return k


def enumerate_dicolourings(d: Digraph, k: int) -> Iterator[Dicolouring]:
    """Every ``k``-dicolouring, in lexicographic order of ``(colour(0), ..., colour(n-1))``."""
    if k < 1:
        raise ValueError("colour budget must be at least 1")
    if k**d.n > ENUMERATION_GUARD:
        raise BudgetExceeded(f"{k}^{d.n} assignments exceed the enumeration guard")
    n = d.n
    colour = [0] * n
    classes = [0] * (k + 1)

    def walk(v: int):
        if v == n:
            yield Dicolouring(dict(enumerate(colour)), k)
            return
        bit = 1 << v
        for c in range(1, k + 1):
            if _closes_cycle(d, v, classes[c]):
                continue
            classes[c] |= bit
            colour[v] = c
            yield from walk(v + 1)
            classes[c] &= ~bit

    yield from walk(0)


def is_dicritical(d: Digraph, k: int) -> bool:
    """``d`` has dichromatic number ``k`` and losing any arc drops it below ``k``."""
    if find_dicolouring(d, k - 1) is not None or find_dicolouring(d, k) is None:
        return False
    found: list[Dicolouring] = []
    for arc in d.arcs:
        sub = d.remove_arcs([arc])
        if any(is_valid_dicolouring(sub, phi) for phi in found):
            continue
        phi = find_dicolouring(sub, k - 1)
        if phi is None:
            return False
        found.append(phi)
    return True


def is_vertex_dicritical(d: Digraph, k: int) -> bool:
    if find_dicolouring(d, k - 1) is not None or find_dicolouring(d, k) is None:
        return False
    for v in range(d.n):
        sub, _ = d.delete_vertices([v])
        if sub.n and find_dicolouring(sub, k - 1) is None:
            return False
    return True


# -- merging colourings across a small dicut ---------------------------------


@dataclass(frozen=True)
class CutStructureReport:
    """Why two side colourings cannot be merged across a dicut.

    ``side`` names the side whose single colour class ``colour`` carries every
    crossing arc.  ``per_colour_arcs`` maps each colour of the opposite side
    to ``(forward_arcs, backward_arcs)`` between that class and ``colour``,
    forward meaning from the source side to the sink side.
    """

    side: int
    colour: int
    per_colour_arcs: Mapping[int, tuple[tuple, tuple]] = field(default_factory=dict)

    def holds(self) -> bool:
        return all(len(f) == 1 and len(b) >= 1 for f, b in self.per_colour_arcs.values())


def _check_side(d: Digraph, side: frozenset, phi: Dicolouring, k: int, name: str) -> None:
    if set(phi.colours) != set(side):
        raise InvalidInput(f"{name} does not colour exactly its side of the cut")
    classes: dict[int, int] = {}
    for v, c in phi.colours.items():
        if not 1 <= c <= k:
            raise InvalidInput(f"{name} uses colour {c} outside 1..{k}")
        classes[c] = classes.get(c, 0) | (1 << v)
    if not all(is_acyclic_subset(d, m) for m in classes.values()):
        raise InvalidInput(f"{name} has a colour class containing a directed cycle")


def merge_across_dicut(
    d: Digraph, cut: Dicut, phi1: Dicolouring, phi2: Dicolouring, k: int
) -> Dicolouring | CutStructureReport:
    """Glue side colourings across a dicut of size at most ``k``.

    Colour ``i`` on the source side conflicts with colour ``j`` on the sink
    side when the cut has an arc in each direction between the two classes.
    A perfect matching of non-conflicting pairs gives a recolouring of the
    sink side that never closes a monochromatic cycle through the cut.  When
    no such matching exists, one class on one side is incident to every
    crossing arc, and that structure is returned instead.
    """
    x1 = frozenset(cut.source_side)
    x2 = frozenset(range(d.n)) - x1
    forward = [a for a in d.arcs if a[0] in x1 and a[1] in x2]
    backward = [a for a in d.arcs if a[0] in x2 and a[1] in x1]
    if len(forward) > k:
        raise CutTooBig(f"dicut has {len(forward)} arcs, more than k={k}")
    _check_side(d, x1, phi1, k, "phi1")
    _check_side(d, x2, phi2, k, "phi2")

    fwd_pairs = {(phi1[a], phi2[b]) for a, b in forward}
    bwd_pairs = {(phi1[b], phi2[a]) for a, b in backward}
    conflict = fwd_pairs & bwd_pairs

    if all((i, i) not in conflict for i in range(1, k + 1)):
        # keep the sink side's colours when that already works
        colours = dict(phi1.colours)
        colours.update(phi2.colours)
        return Dicolouring(colours, k)

    h = nx.Graph()
    left = [("s", i) for i in range(1, k + 1)]
    right = [("t", j) for j in range(1, k + 1)]
    h.add_nodes_from(left, bipartite=0)
    h.add_nodes_from(right, bipartite=1)
    h.add_edges_from(
        (("s", i), ("t", j))
        for i in range(1, k + 1)
        for j in range(1, k + 1)
        if (i, j) not in conflict
    )
    matching = nx.bipartite.hopcroft_karp_matching(h, top_nodes=left)
    if all(node in matching for node in left):
        recolour = {matching[("s", i)][1]: i for i in range(1, k + 1)}
        colours = dict(phi1.colours)
        colours.update({v: recolour[c] for v, c in phi2.colours.items()})
        return Dicolouring(colours, k)

    def arcs_between(i: int, j: int):
        f = tuple(a for a in forward if phi1[a[0]] == i and phi2[a[1]] == j)
        b = tuple(a for a in backward if phi2[a[0]] == j and phi1[a[1]] == i)
        return f, b

    for i in range(1, k + 1):
        if all((i, j) in conflict for j in range(1, k + 1)):
            return CutStructureReport(1, i, {j: arcs_between(i, j) for j in range(1, k + 1)})
    for j in range(1, k + 1):
        if all((i, j) in conflict for i in range(1, k + 1)):
            return CutStructureReport(2, j, {i: arcs_between(i, j) for i in range(1, k + 1)})
    raise AssertionError("no perfect matching but no saturated colour class")


# -- directed Brooks --------------------------------------------------------


@dataclass(frozen=True)
class BrooksVerdict:
    extremal_for_brooks: bool
    k: int
    witness_component: tuple[int, ...] | None


def _component_in_brooks_class(d: Digraph, comp: list[int], k: int) -> bool:
    sub, _ = d.induced(comp)
    n = sub.n
    if k == 0:
        return n == 1
    if k == 1:
        return n >= 2 and all(sub.out_degree(v) == 1 and sub.in_degree(v) == 1 for v in range(n))
    if k == 2:
        return (
            n >= 3
            and n % 2 == 1
            and sub.is_symmetric()
            and all(sub.out_degree(v) == 2 for v in range(n))
        )
    return n == k + 1 and sub.m == n * (n - 1)


def brooks_membership(d: Digraph) -> BrooksVerdict:
    """Decide whether the dichromatic number reaches ``delta_max + 1``.

    That happens exactly when some connected component is a directed cycle
    (``k = 1``), a symmetric odd cycle (``k = 2``), or a symmetric complete
    digraph on ``k + 1`` vertices (``k = 0`` or ``k >= 3``).
    """
    k = delta_max(d)
    for comp in connected_components(d):
        if _component_in_brooks_class(d, comp, k):
            return BrooksVerdict(True, k, tuple(comp))
    return BrooksVerdict(False, k, None)


# -- serialisation -----------------------------------------------------------


def colouring_to_text(phi: Dicolouring) -> str:
    return "".join(f"c {v} {phi.colours[v]}\n" for v in sorted(phi.colours))


def colouring_from_text(text: str, k: int | None = None) -> Dicolouring:
    colours = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] != "c" or len(parts) != 3:
            raise ParseError(f"line {lineno}: expected 'c <v> <colour>'")
        v, c = int(parts[1]), int(parts[2])
        if v in colours:
            raise ParseError(f"line {lineno}: vertex {v} coloured twice")
        colours[v] = c
    return Dicolouring(colours, k if k is not None else max(colours.values(), default=0))


def brute_force_dicolourable(d: Digraph, k: int) -> bool:
    """Try every assignment; kept small and independent for cross-checks."""
    for assignment in itertools.product(range(1, k + 1), repeat=d.n):
        if is_valid_dicolouring(d, dict(enumerate(assignment)), k):
            return True
    return d.n == 0
