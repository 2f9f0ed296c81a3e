"""The transition graph over all configurations and its dual-collapsed quotient."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping, Union

from .errors import BudgetExceededError, ParameterError
from .kernel import Config, GameParams, is_dual, successors, weak_compositions

DEFAULT_NODE_BUDGET = 10**6


class _Bottom:
    """The single vertex standing in for every dual configuration."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "BOT"

    def __reduce__(self):
        return (_Bottom, ())


BOT = _Bottom()

Node = Union[Config, _Bottom]


def node_sort_key(v: Node) -> tuple:
    # BOT sorts after every configuration
    return (1, ()) if v is BOT else (0, v)


def state_count(params: GameParams) -> int:
    return comb(params.n + params.p - 1, params.p - 1)


@dataclass(frozen=True)
class TransitionGraph:
    params: GameParams
    nodes: tuple[Config, ...]
    # node -> ((position, successor), ...) in position order
    moves: Mapping[Config, tuple[tuple[int, Config], ...]]

    def successors(self, a: Config) -> tuple[Config, ...]:
        return tuple(b for _, b in self.moves[a])

    @property
    def arcs(self) -> frozenset[tuple[Config, Config]]:
        return frozenset((a, b) for a in self.nodes for _, b in self.moves[a])

    def __contains__(self, a: object) -> bool:
        return a in self.moves


@dataclass(frozen=True)
class ReducedGraph:
    params: GameParams
    nodes: tuple[Node, ...]
    succ: Mapping[Node, tuple[Node, ...]]

    @property
    def arcs(self) -> frozenset[tuple[Node, Node]]:
        return frozenset((a, b) for a in self.nodes for b in self.succ[a])

    def __contains__(self, a: object) -> bool:
        return a in self.succ


@dataclass(frozen=True)
class ReachableSet:
    origin: Config
    members: frozenset


def build_graph(params: GameParams, budget: int = DEFAULT_NODE_BUDGET) -> TransitionGraph:
    required = state_count(params)
    if required > budget:
        raise BudgetExceededError(required, budget)
    nodes = tuple(weak_compositions(params.n, params.p))
    moves = {a: tuple(successors(a)) for a in nodes}
    return TransitionGraph(params, nodes, moves)


def strongly_connected_components(g: TransitionGraph) -> list[tuple[Config, ...]]:
    """Tarjan's algorithm, iterative.

    Each component is sorted, and components are ordered by their smallest
    member.
    """
    index: dict[Config, int] = {}
    low: dict[Config, int] = {}
    on_stack: set[Config] = set()
    stack: list[Config] = []
    comps: list[tuple[Config, ...]] = []
    counter = 0

    for root in g.nodes:
        if root in index:
            continue
        work = [(root, iter(g.successors(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(g.successors(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: c[0])
    return comps


def reduce(g: TransitionGraph, params: GameParams | None = None) -> ReducedGraph:
    """Collapse the dual configurations into ``BOT``.

    With ``q == 0`` there is nothing to collapse and the result has the same
    nodes and arcs as ``g``.
    """
    params = params or g.params
    if params.q == 0:
        return ReducedGraph(params, g.nodes, {a: g.successors(a) for a in g.nodes})
    nodes: list[Node] = []
    succ: dict[Node, tuple[Node, ...]] = {}
    for a in g.nodes:
        if is_dual(a, params):
            continue
        out: list[Node] = []
        hits_dual = False
        for b in g.successors(a):
            if is_dual(b, params):
                hits_dual = True
            else:
                out.append(b)
        if hits_dual:
            out.append(BOT)
        nodes.append(a)
        succ[a] = tuple(out)
    nodes.append(BOT)
    succ[BOT] = ()
    return ReducedGraph(params, tuple(nodes), succ)


def _forward_closure(start: Node, succ: Mapping[Node, Iterable[Node]]) -> set[Node]:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in succ[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def reachable_set(rg: ReducedGraph, origin: Config) -> ReachableSet:
    """Non-dual configurations reachable from ``origin``, plus ``BOT`` if a dual is.

    A dual origin yields ``{BOT}``.
    """
    params = rg.params
    origin = params.check(origin)
    if is_dual(origin, params):
        return ReachableSet(origin, frozenset([BOT]))
    return ReachableSet(origin, frozenset(_forward_closure(origin, rg.succ)))


def path_exists(g: TransitionGraph, a: Config, b: Config) -> bool:
    for v in (a, b):
        if v not in g:
            raise ParameterError(f"{v} is not a node of the graph")
    seen = {a}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        if v == b:
            return True
        for w in g.successors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return False
