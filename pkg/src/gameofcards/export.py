"""Graphviz DOT and line-record renderings of graphs and Hasse diagrams.

Node order is always lexicographic by card sequence, with BOT last, so the
output for a given input is byte-for-byte stable.
"""

from __future__ import annotations

from typing import Iterator

from .kernel import format_config, is_dual, is_fixed_point
from .order import PosetView, moved_position
from .statespace import BOT, Node, ReducedGraph, TransitionGraph, node_sort_key

DUAL_STYLE = 'style=filled, fillcolor="lightgrey"'


def _name(v: Node) -> str:
    return "BOT" if v is BOT else format_config(v)


def _quote(s: str) -> str:
    return '"{}"'.format(s.replace('"', r"\""))


def graph_dot(g: TransitionGraph) -> Iterator[str]:
    """The full transition graph; moves by player ``p`` are dashed."""
    params = g.params
    yield "digraph G {\n"
    for a in g.nodes:
        attrs = f"label={_quote(_name(a))}"
        if is_dual(a, params):
            attrs += ", " + DUAL_STYLE
        elif is_fixed_point(a):
            attrs += ", shape=doublecircle"
        yield f"  {_quote(_name(a))} [{attrs}];\n"
    for a in g.nodes:
        for i, b in g.moves[a]:
            style = " [style=dashed]" if i == params.p else ""
            yield f"  {_quote(_name(a))} -> {_quote(_name(b))}{style};\n"
    yield "}\n"


def reduced_dot(rg: ReducedGraph) -> Iterator[str]:
    yield "digraph R {\n"
    nodes = sorted(rg.nodes, key=node_sort_key)
    for v in nodes:
        if v is BOT:
            yield f'  BOT [label="BOT", {DUAL_STYLE}];\n'
        else:
            yield f"  {_quote(_name(v))} [label={_quote(_name(v))}];\n"
    for v in nodes:
        for w in sorted(rg.succ[v], key=node_sort_key):
            target = "BOT" if w is BOT else _quote(_name(w))
            wraps = w is not BOT and moved_position(v, w) == rg.params.p
            style = " [style=dashed]" if wraps else ""
            yield f"  {_quote(_name(v))} -> {target}{style};\n"
    yield "}\n"


def graph_records(g: TransitionGraph) -> Iterator[str]:
    params = g.params
    for a in g.nodes:
        yield f"node cfg={_name(a)} dual={int(is_dual(a, params))} fixed={int(is_fixed_point(a))}\n"
    for a in g.nodes:
        for i, b in g.moves[a]:
            yield f"arc from={_name(a)} to={_name(b)} position={i}\n"


def reduced_records(rg: ReducedGraph) -> Iterator[str]:
    nodes = sorted(rg.nodes, key=node_sort_key)
    for v in nodes:
        yield f"node cfg={_name(v)}\n"
    for v in nodes:
        for w in sorted(rg.succ[v], key=node_sort_key):
            yield f"arc from={_name(v)} to={_name(w)}\n"


def _label(pv: PosetView, v: Node) -> str:
    if v is BOT:
        return "BOT"
    return f"{_name(v)} | {format_config(pv.labels[v])}"


def _sorted_covers(pv: PosetView):
    return sorted(pv.covers, key=lambda c: (node_sort_key(c[0]), node_sort_key(c[1])))


def hasse_dot(pv: PosetView) -> Iterator[str]:
    yield "digraph Hasse {\n"
    yield "  rankdir=TB;\n"
    for v in pv.elements:
        node = "BOT" if v is BOT else _quote(_name(v))
        yield f"  {node} [label={_quote(_label(pv, v))}];\n"
    for upper, lower in _sorted_covers(pv):
        u = "BOT" if upper is BOT else _quote(_name(upper))
        w = "BOT" if lower is BOT else _quote(_name(lower))
        yield f"  {u} -> {w};\n"
    yield "}\n"


def hasse_records(pv: PosetView) -> Iterator[str]:
    for v in pv.elements:
        shot = "-" if v is BOT else format_config(pv.labels[v])
        yield f"element cfg={_name(v)} shot={shot}\n"
    for upper, lower in _sorted_covers(pv):
        yield f"cover upper={_name(upper)} lower={_name(lower)}\n"
