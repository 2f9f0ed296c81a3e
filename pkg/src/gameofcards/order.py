"""Shot vectors and the lattice of configurations reachable from an origin."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from graphlib import TopologicalSorter
from typing import Mapping, Sequence

from .errors import DualTargetError, GameError, ParameterError, UnreachableError
from .kernel import Config, is_dual, pred, prefix_delta, succ
from .statespace import BOT, Node, ReducedGraph, node_sort_key

ShotVector = tuple[int, ...]


class Relation(enum.Enum):
    GREATER = "greater"
    LESS = "less"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def moved_position(a: Config, b: Config) -> int:
    """Position of the player whose single move turns ``a`` into ``b``."""
    p = len(a)
    for i in range(1, p + 1):
        j = succ(i, p)
        if b[i - 1] == a[i - 1] - 1 and b[j - 1] == a[j - 1] + 1:
            if all(b[t - 1] == a[t - 1] for t in range(1, p + 1) if t not in (i, j)):
                return i
    raise ParameterError(f"{b} is not one move away from {a}")


def shot_labels(origin: Config, rg: ReducedGraph) -> dict[Config, ShotVector]:
    """Label every non-dual configuration reachable from ``origin``.

    Breadth-first: each newly reached node gets its parent's label plus one
    at the moved position. Path independence between non-dual endpoints
    makes the first label the only one.
    """
    p = rg.params.p
    labels = {origin: (0,) * p}
    queue = deque([origin])
    while queue:
        a = queue.popleft()
        for b in rg.succ[a]:
            if b is BOT or b in labels:
                continue
            i = moved_position(a, b)
            s = list(labels[a])
            s[i - 1] += 1
            labels[b] = tuple(s)
            queue.append(b)
    return labels


def shot_vector(origin: Config, a: Config, rg: ReducedGraph) -> ShotVector:
    params = rg.params
    origin, a = params.check(origin), params.check(a)
    if is_dual(a, params):
        raise DualTargetError(f"shot vector to dual {a} depends on the path")
    if is_dual(origin, params):
        raise UnreachableError(f"{a} is not reachable from dual {origin}")
    labels = shot_labels(origin, rg)
    if a not in labels:
        raise UnreachableError(f"{a} is not reachable from {origin}")
    return labels[a]


def shot_identity_check(origin: Sequence[int], a: Sequence[int], s: Sequence[int]) -> bool:
    """Does ``s`` equal ``s_p * (1, ..., 1) + prefix_delta(origin, a)``?"""
    d = prefix_delta(origin, a)
    if len(s) != len(d):
        return False
    return all(si == s[-1] + di for si, di in zip(s, d))


def reconstruct(origin: Config, s: Sequence[int]) -> Config:
    """The configuration reached from ``origin`` after firing ``s``."""
    p = len(origin)
    return tuple(origin[i - 1] - s[i - 1] + s[pred(i, p) - 1] for i in range(1, p + 1))


def product_compare(s: Sequence[int], t: Sequence[int]) -> Relation:
    """Componentwise order; LESS means ``s <= t`` everywhere and ``s != t``."""
    le = all(x <= y for x, y in zip(s, t))
    ge = all(x >= y for x, y in zip(s, t))
    if le and ge:
        return Relation.EQUAL
    if le:
        return Relation.LESS
    if ge:
        return Relation.GREATER
    return Relation.INCOMPARABLE


@dataclass(frozen=True)
class PosetView:
    origin: Config
    rg: ReducedGraph
    elements: tuple[Node, ...]
    labels: Mapping[Config, ShotVector]
    # (upper, lower) pairs of the Hasse diagram
    covers: frozenset[tuple[Node, Node]]
    # element -> elements reachable from it, itself included
    below: Mapping[Node, frozenset[Node]]

    def __contains__(self, x: object) -> bool:
        return x in self.below

    def leq(self, x: Node, y: Node) -> bool:
        """``x <=_gc y``: ``x`` is reachable from ``y``."""
        return x in self.below[y]

    def upper_bounds(self, a: Node, b: Node) -> list[Node]:
        return [x for x in self.elements if a in self.below[x] and b in self.below[x]]

    def lower_bounds(self, a: Node, b: Node) -> list[Node]:
        return [x for x in self.elements if x in self.below[a] and x in self.below[b]]

    @property
    def maximal(self) -> list[Node]:
        return [x for x in self.elements if not any(x in self.below[y] and x != y for y in self.elements)]

    @property
    def minimal(self) -> list[Node]:
        return [x for x in self.elements if len(self.below[x]) == 1]

    def _require(self, *xs: Node) -> None:
        for x in xs:
            if x not in self.below:
                raise UnreachableError(f"{x} is not an element of GC({self.origin})")


def build_poset(origin: Config, rg: ReducedGraph, budget: int | None = None) -> PosetView:
    params = rg.params
    origin = params.check(origin)
    if is_dual(origin, params):
        raise DualTargetError(f"origin {origin} is dual; GC(origin) would be just BOT")
    labels = shot_labels(origin, rg)
    elements: list[Node] = list(labels)
    reaches_bot = any(BOT in rg.succ[a] for a in labels)
    if reaches_bot:
        elements.append(BOT)
    if budget is not None and len(elements) > budget:
        raise GameError(f"poset has {len(elements)} elements, budget is {budget}")
    elements.sort(key=node_sort_key)

    succ_map = {x: rg.succ[x] for x in elements}
    below: dict[Node, frozenset[Node]] = {}
    for x in TopologicalSorter(succ_map).static_order():
        acc = {x}
        for y in succ_map[x]:
            acc |= below[y]
        below[x] = frozenset(acc)

    covers = set()
    for x in elements:
        direct = succ_map[x]
        for y in direct:
            if not any(z != y and y in below[z] for z in direct):
                covers.add((x, y))
    return PosetView(origin, rg, tuple(elements), labels, frozenset(covers), below)


def compare_gc(pv: PosetView, a: Node, b: Node) -> Relation:
    """Order of ``a`` and ``b`` in GC(origin), read off their shot vectors.

    ``a`` is GREATER than ``b`` when ``b`` is reachable from ``a``, i.e. when
    ``s(O, a)`` is strictly below ``s(O, b)`` componentwise.
    """
    pv._require(a, b)
    if a is BOT or b is BOT:
        if a is b:
            return Relation.EQUAL
        return Relation.LESS if a is BOT else Relation.GREATER
    rel = product_compare(pv.labels[a], pv.labels[b])
    # smaller shot vector means higher in the order
    return {Relation.LESS: Relation.GREATER, Relation.GREATER: Relation.LESS}.get(rel, rel)


def inf_gc(pv: PosetView, a: Node, b: Node) -> Node:
    """Greatest lower bound via the componentwise max of shot vectors."""
    pv._require(a, b)
    if a is BOT or b is BOT:
        return BOT
    m = tuple(max(x, y) for x, y in zip(pv.labels[a], pv.labels[b]))
    c = reconstruct(pv.origin, m)
    return BOT if is_dual(c, pv.rg.params) else c


def sup_gc(pv: PosetView, a: Node, b: Node) -> Node:
    """Least common upper bound, found by scanning the order."""
    pv._require(a, b)
    ub = pv.upper_bounds(a, b)
    least = [u for u in ub if all(u in pv.below[x] for x in ub)]
    if len(least) != 1:
        raise GameError(f"no unique least upper bound for {a} and {b}")
    return least[0]
