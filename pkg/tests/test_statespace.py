from math import comb

import networkx as nx
import pytest

from gameofcards import (
    BOT,
    BudgetExceededError,
    GameParams,
    build_graph,
    is_dual,
    path_exists,
    reachable_set,
    reduce,
    strongly_connected_components,
)
from gameofcards.kernel import weak_compositions

from .conftest import graph, reduced

SWEEP = [(n, p) for p in range(2, 6) for n in range(0, 11)]


def to_nx(g):
    h = nx.DiGraph()
    h.add_nodes_from(g.nodes)
    h.add_edges_from(g.arcs)
    return h


@pytest.mark.parametrize("n, p, count", [(6, 3, 28), (0, 2, 1), (6, 4, 84)])
def test_build_graph_sizes(n, p, count):
    g = build_graph(GameParams(n, p))
    assert len(g.nodes) == count == comb(n + p - 1, p - 1)
    assert set(g.nodes) == set(weak_compositions(n, p))


def test_single_node_graph():
    g = build_graph(GameParams(0, 2))
    assert g.arcs == frozenset()
    assert strongly_connected_components(g) == [((0, 0),)]


def test_budget_guard():
    with pytest.raises(BudgetExceededError) as info:
        build_graph(GameParams(10, 5), budget=1000)
    assert info.value.required == 1001


@pytest.mark.parametrize("n, p", SWEEP)
def test_arcs_match_enabled_moves(n, p):
    g = graph(n, p)
    for a in g.nodes:
        targets = [b for _, b in g.moves[a]]
        # distinct positions never produce the same successor
        assert len(targets) == len(set(targets))
        assert all(b in g for b in targets)


@pytest.mark.parametrize("n, p", SWEEP)
def test_scc_partition_matches_networkx(n, p):
    g = graph(n, p)
    ours = strongly_connected_components(g)
    theirs = sorted((tuple(sorted(c)) for c in nx.strongly_connected_components(to_nx(g))), key=lambda c: c[0])
    assert ours == theirs


def test_scc_examples(g63, g64):
    comps = strongly_connected_components(g63)
    assert len(comps) == 28 and all(len(c) == 1 for c in comps)
    comps = strongly_connected_components(g64)
    big = [c for c in comps if len(c) > 1]
    assert big == [((1, 1, 2, 2), (1, 2, 1, 2), (1, 2, 2, 1), (2, 1, 1, 2), (2, 1, 2, 1), (2, 2, 1, 1))]
    assert len(comps) - 1 == 78


def test_reduce_q0_is_identity(g63):
    rg = reduce(g63)
    assert rg.nodes == g63.nodes
    assert rg.arcs == g63.arcs
    assert BOT not in rg


def test_reduce_collapses_duals(g64):
    params = g64.params
    rg = reduce(g64)
    assert len(rg.nodes) == 79
    assert rg.succ[BOT] == ()
    for a in g64.nodes:
        if is_dual(a, params):
            assert a not in rg
            continue
        hits = any(is_dual(b, params) for b in g64.successors(a))
        assert (BOT in rg.succ[a]) == hits


@pytest.mark.parametrize("n, p", SWEEP)
def test_reduced_graph_is_acyclic(n, p):
    assert nx.is_directed_acyclic_graph(nx.DiGraph(list(reduced(n, p).arcs)))


def test_reachable_set_examples():
    rg = reduced(6, 3)
    assert reachable_set(rg, (4, 1, 1)).members == {(4, 1, 1), (3, 2, 1), (2, 3, 1), (3, 1, 2), (2, 2, 2)}
    assert reachable_set(rg, (2, 2, 2)).members == {(2, 2, 2)}
    rg = reduced(6, 4)
    rs = reachable_set(rg, (3, 2, 1, 0))
    assert BOT in rs.members and (3, 2, 1, 0) in rs.members
    assert reachable_set(rg, (2, 2, 1, 1)).members == {BOT}


def test_reachable_set_is_closed(g64):
    rg = reduce(g64)
    for origin in rg.nodes:
        if origin is BOT:
            continue
        members = reachable_set(rg, origin).members
        assert all(w in members for v in members for w in rg.succ[v])


def test_path_exists(g63, g64):
    assert not path_exists(g63, (2, 2, 2), (4, 1, 1))
    assert path_exists(g63, (4, 1, 1), (4, 1, 1))
    assert path_exists(g63, (0, 0, 6), (2, 2, 2))
    duals = [a for a in g64.nodes if is_dual(a, g64.params)]
    for a in g64.nodes:
        for b in duals:
            assert path_exists(g64, a, b)
