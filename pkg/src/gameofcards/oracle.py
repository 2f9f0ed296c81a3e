"""Brute-force ground truth for the theorem-backed operations.

Everything here is computed by literal replay of the card-passing rule and
plain graph search. The checks compare that ground truth against the fast
paths in ``statespace``, ``order`` and ``convergence``; no check derives its
expected value from the formula it is checking.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import accumulate
from math import ceil, comb
from typing import Iterator, Optional, Sequence

from . import convergence, order
from .errors import CapExceededError, GameError
from .kernel import (
    Config,
    GameParams,
    apply_move,
    canonical_dual,
    enabled_positions,
    format_config,
    is_dual,
    successors,
)
from .statespace import (
    BOT,
    DEFAULT_NODE_BUDGET,
    TransitionGraph,
    build_graph,
    reduce,
    state_count,
    strongly_connected_components,
)

DEFAULT_PATH_CAP = 10**5
DEFAULT_MAX_LENGTH = 10**3


# -- enumeration primitives -------------------------------------------------


@dataclass(frozen=True)
class PathEnumeration:
    source: Config
    target: Config
    paths: tuple[tuple[int, ...], ...]
    circuit_free_only: bool
    cap: int
    # False when some path was cut at the length limit
    complete: bool = True

    @property
    def reachable(self) -> bool:
        return bool(self.paths)


def replay(a: Config, positions: Sequence[int]) -> list[Config]:
    """Configurations visited when the given players move in turn."""
    seq = [a]
    for i in positions:
        seq.append(apply_move(seq[-1], i))
    return seq


def shot_of(positions: Sequence[int], p: int) -> tuple[int, ...]:
    s = [0] * p
    for i in positions:
        s[i - 1] += 1
    return tuple(s)


def enumerate_paths(
    a: Config,
    b: Config,
    g: TransitionGraph,
    circuit_free_only: bool = True,
    cap: int = DEFAULT_PATH_CAP,
    max_length: int = DEFAULT_MAX_LENGTH,
) -> PathEnumeration:
    """All paths from ``a`` to ``b`` as sequences of moved positions.

    Raises ``CapExceededError`` once more than ``cap`` paths are found.
    """
    if cap <= 0:
        raise ValueError("cap must be positive")
    found: list[tuple[int, ...]] = []
    complete = True
    positions: list[int] = []
    on_path = {a}

    def visit(v: Config) -> None:
        nonlocal complete
        if v == b:
            found.append(tuple(positions))
            if len(found) > cap:
                raise CapExceededError(f"more than {cap} paths from {a} to {b}")
            if circuit_free_only:
                return
        if len(positions) >= max_length:
            if g.moves[v]:
                complete = False
            return
        for i, w in g.moves[v]:
            if circuit_free_only and w in on_path:
                continue
            positions.append(i)
            on_path.add(w)
            visit(w)
            on_path.discard(w)
            positions.pop()

    visit(a)
    return PathEnumeration(a, b, tuple(found), circuit_free_only, cap, complete)


def enumerate_plays(a: Config, length: int, cap: int = DEFAULT_PATH_CAP) -> Iterator[list[Config]]:
    """Every play of exactly ``length`` moves from ``a``, as visited configurations.

    Plays that reach a fixed point earlier are not reported.
    """
    count = 0
    stack: list[list[Config]] = [[a]]
    while stack:
        seq = stack.pop()
        if len(seq) == length + 1:
            count += 1
            if count > cap:
                raise CapExceededError(f"more than {cap} plays of length {length} from {a}")
            yield seq
            continue
        for _, w in reversed(successors(seq[-1])):
            stack.append(seq + [w])


def random_maximal_play(a: Config, rng: random.Random, max_steps: int = DEFAULT_MAX_LENGTH) -> list[int]:
    """Moves chosen uniformly among enabled players until none is enabled."""
    moves = []
    while True:
        enabled = sorted(enabled_positions(a))
        if not enabled:
            return moves
        if len(moves) >= max_steps:
            raise CapExceededError(f"play from {a} exceeded {max_steps} steps")
        i = rng.choice(enabled)
        a = apply_move(a, i)
        moves.append(i)


def closures(g: TransitionGraph) -> dict[Config, frozenset[Config]]:
    """Forward reachability (itself included) of every node, by BFS."""
    out = {}
    for a in g.nodes:
        seen = {a}
        queue = deque([a])
        while queue:
            v = queue.popleft()
            for w in g.successors(v):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        out[a] = frozenset(seen)
    return out


def maximal_play_lengths(g: TransitionGraph) -> dict[Config, frozenset[int]]:
    """Lengths of all maximal plays from each node of an acyclic graph.

    Kahn's algorithm gives the processing order; a leftover node means a
    cycle, and then plays need not end.
    """
    preds: dict[Config, list[Config]] = {a: [] for a in g.nodes}
    for a in g.nodes:
        for b in g.successors(a):
            preds[b].append(a)
    outdeg = {a: len(g.moves[a]) for a in g.nodes}
    ready = deque(a for a in g.nodes if outdeg[a] == 0)
    lengths: dict[Config, frozenset[int]] = {}
    while ready:
        v = ready.popleft()
        succ_lengths = [lengths[w] for w in g.successors(v)]
        lengths[v] = frozenset({0}) if not succ_lengths else frozenset(
            1 + x for ls in succ_lengths for x in ls
        )
        for u in preds[v]:
            outdeg[u] -= 1
            if outdeg[u] == 0:
                ready.append(u)
    if len(lengths) != len(g.nodes):
        raise GameError("graph has a cycle; maximal plays are unbounded")
    return lengths


def brute_force_sccs(g: TransitionGraph, reach: Optional[dict] = None) -> list[tuple[Config, ...]]:
    """SCCs as classes of mutual reachability."""
    reach = reach or closures(g)
    seen: set[Config] = set()
    comps = []
    for a in g.nodes:
        if a in seen:
            continue
        comp = tuple(sorted(b for b in reach[a] if a in reach[b]))
        seen.update(comp)
        comps.append(comp)
    comps.sort(key=lambda c: c[0])
    return comps


# -- outcomes ----------------------------------------------------------------


@dataclass(frozen=True)
class VerificationOutcome:
    check_name: str
    params: GameParams
    instances_checked: int
    failures: tuple[dict, ...] = ()
    origin: Optional[Config] = None
    inconclusive: bool = False
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures and not self.inconclusive

    @property
    def status(self) -> str:
        if self.failures:
            return "fail"
        if self.inconclusive:
            return "inconclusive"
        return "pass"

    def to_record(self) -> str:
        origin = "-" if self.origin is None else format_config(self.origin)
        line = (
            f"check={self.check_name} n={self.params.n} p={self.params.p} origin={origin} "
            f"instances={self.instances_checked} failures={len(self.failures)} status={self.status}"
        )
        if self.failures:
            line += f" first_failure={_fmt_failure(self.failures[0])}"
        if self.note:
            line += f" note={self.note.replace(' ', '_')}"
        return line


def _fmt_failure(f: dict) -> str:
    def fmt(v):
        if v is BOT:
            return "BOT"
        if isinstance(v, tuple) and all(isinstance(x, int) for x in v):
            return "(" + format_config(v) + ")"
        if isinstance(v, (set, frozenset)):
            return "{" + ";".join(sorted(fmt(x) for x in v)) + "}"
        if isinstance(v, (list, tuple)):
            return "[" + ";".join(fmt(x) for x in v) + "]"
        return str(v)

    return ",".join(f"{k}:{fmt(v)}" for k, v in f.items())


def _inconclusive(name: str, params: GameParams, origin, err: Exception) -> VerificationOutcome:
    return VerificationOutcome(name, params, 0, origin=origin, inconclusive=True, note=str(err))


# -- theorem checks ----------------------------------------------------------


def verify_termination(params: GameParams, budget: int = DEFAULT_NODE_BUDGET) -> VerificationOutcome:
    """q = 0: the graph is acyclic and its only sink is ``(k, ..., k)``."""
    name = "termination"
    g = build_graph(params, budget)
    failures = []
    if params.q != 0:
        return VerificationOutcome(name, params, 0, note="q>0, not applicable")
    try:
        maximal_play_lengths(g)
    except GameError:
        failures.append({"reason": "cycle"})
    sinks = [a for a in g.nodes if not g.moves[a]]
    if sinks != [(params.k,) * params.p]:
        failures.append({"reason": "sinks", "sinks": sinks})
    return VerificationOutcome(name, params, len(g.nodes), tuple(failures))


def verify_dual_characterization(params: GameParams, budget: int = DEFAULT_NODE_BUDGET) -> VerificationOutcome:
    """Configurations on a non-trivial circuit are exactly the ``is_dual`` ones.

    For q > 0 there are ``comb(p, q)`` of them; for q = 0 none.
    """
    name = "dual_characterization"
    g = build_graph(params, budget)
    reach = closures(g)
    on_circuit = {a for a in g.nodes if any(a in reach[b] for b in g.successors(a))}
    predicted = {a for a in g.nodes if is_dual(a, params)}
    in_range = {a for a in g.nodes if all(x in (params.k, params.k + 1) for x in a)} if params.q else set()
    failures = []
    for a in sorted(on_circuit ^ predicted):
        failures.append({"config": a, "on_circuit": a in on_circuit, "is_dual": a in predicted})
    if predicted != in_range:
        failures.append({"reason": "is_dual differs from k/k+1 membership"})
    expected = comb(params.p, params.q) if params.q else 0
    if len(on_circuit) != expected:
        failures.append({"reason": "count", "found": len(on_circuit), "expected": expected})
    return VerificationOutcome(name, params, len(g.nodes), tuple(failures))


def verify_scc_theorem(params: GameParams, budget: int = DEFAULT_NODE_BUDGET) -> VerificationOutcome:
    name = "scc_theorem"
    g = build_graph(params, budget)
    brute = brute_force_sccs(g)
    fast = strongly_connected_components(g)
    failures = []
    if brute != fast:
        failures.append({"reason": "partition differs from brute force"})
    nontrivial = [c for c in brute if len(c) > 1]
    duals = tuple(sorted(a for a in g.nodes if is_dual(a, params)))
    expected = [duals] if params.q else []
    if nontrivial != expected:
        failures.append({"reason": "non-trivial SCCs", "found": [len(c) for c in nontrivial]})
    return VerificationOutcome(
        name, params, len(g.nodes), tuple(failures), note=f"nontrivial={len(nontrivial)}"
    )


def _nondual_path_shots(
    g: TransitionGraph, params: GameParams, origin: Config, cap: int
) -> dict[Config, set[tuple[tuple[int, ...], int]]]:
    """(shot vector, length) of every path from ``origin`` to each non-dual node."""
    p = params.p
    out: dict[Config, set] = {}
    count = 0
    stack = [(origin, (0,) * p, 0)]
    while stack:
        v, s, length = stack.pop()
        count += 1
        if count > cap:
            raise CapExceededError(f"more than {cap} paths from {origin}")
        out.setdefault(v, set()).add((s, length))
        for i, w in g.moves[v]:
            if is_dual(w, params):
                continue
            t = list(s)
            t[i - 1] += 1
            stack.append((w, tuple(t), length + 1))
    return out


def verify_shot_uniqueness(
    params: GameParams,
    origin: Config,
    g: Optional[TransitionGraph] = None,
    cap: int = DEFAULT_PATH_CAP,
) -> VerificationOutcome:
    """Every path between non-dual endpoints carries the same shot vector."""
    name = "shot_uniqueness"
    g = g or build_graph(params)
    origin = params.check(origin)
    if is_dual(origin, params):
        return VerificationOutcome(name, params, 0, origin=origin, note="dual origin")
    try:
        shots = _nondual_path_shots(g, params, origin, cap)
    except CapExceededError as err:
        return _inconclusive(name, params, origin, err)
    labels = order.shot_labels(origin, reduce(g, params))
    failures = []
    for b, found in sorted(shots.items()):
        if len(found) != 1:
            failures.append({"target": b, "variants": sorted(found)})
            continue
        (s, length), = found
        if labels.get(b) != s or sum(s) != length:
            failures.append({"target": b, "enumerated": s, "labelled": labels.get(b)})
    if set(labels) != set(shots):
        failures.append({"reason": "labelled set differs from enumerated set"})
    return VerificationOutcome(name, params, len(shots), tuple(failures), origin=origin)


def _oracle_poset(g: TransitionGraph, params: GameParams, origin: Config, reach=None):
    """Elements of GC(origin) and the reachability order among them, from BFS."""
    reach = reach or closures(g)
    collapse = lambda v: BOT if is_dual(v, params) else v
    elements = {collapse(v) for v in reach[origin]}
    below = {x: frozenset(collapse(v) for v in reach[x]) for x in elements if x is not BOT}
    if BOT in elements:
        below[BOT] = frozenset([BOT])
    return elements, below


def verify_order_characterization(
    params: GameParams, origin: Config, g: Optional[TransitionGraph] = None, reach=None
) -> VerificationOutcome:
    """Reachability between non-dual elements matches strict shot-vector dominance."""
    name = "order_characterization"
    g = g or build_graph(params)
    origin = params.check(origin)
    if is_dual(origin, params):
        return VerificationOutcome(name, params, 0, origin=origin, note="dual origin")
    elements, below = _oracle_poset(g, params, origin, reach)
    pv = order.build_poset(origin, reduce(g, params))
    nondual = sorted(x for x in elements if x is not BOT)
    failures = []
    pairs = 0
    for a in nondual:
        for b in nondual:
            pairs += 1
            reach_ab = b in below[a] and a != b
            dominated = order.product_compare(pv.labels[a], pv.labels[b]) is order.Relation.LESS
            if reach_ab != dominated:
                failures.append({"a": a, "b": b, "reachable": reach_ab, "shot_dominance": dominated})
                continue
            rel = order.compare_gc(pv, a, b)
            expected = (
                order.Relation.EQUAL if a == b
                else order.Relation.GREATER if b in below[a]
                else order.Relation.LESS if a in below[b]
                else order.Relation.INCOMPARABLE
            )
            if rel is not expected:
                failures.append({"a": a, "b": b, "compare_gc": rel.value, "expected": expected.value})
    return VerificationOutcome(name, params, pairs, tuple(failures), origin=origin)


def verify_lattice(
    params: GameParams, origin: Config, g: Optional[TransitionGraph] = None, reach=None
) -> VerificationOutcome:
    """Unique glb and lub for every pair; glb agrees with the shot-vector max."""
    name = "lattice"
    g = g or build_graph(params)
    origin = params.check(origin)
    if is_dual(origin, params):
        return VerificationOutcome(name, params, 0, origin=origin, note="dual origin")
    elements, below = _oracle_poset(g, params, origin, reach)
    pv = order.build_poset(origin, reduce(g, params))
    failures = []
    if set(pv.elements) != elements:
        failures.append({"reason": "poset elements differ from BFS"})
    # Hasse diagram check: covers are exactly the non-transitive pairs
    covers = {
        (x, y)
        for x in elements
        for y in below[x]
        if y != x and not any(z not in (x, y) and y in below[z] for z in below[x])
    }
    if covers != set(pv.covers):
        failures.append({"reason": "covering relation differs"})
    ordered = sorted(elements, key=lambda v: (v is BOT, () if v is BOT else v))
    pairs = 0
    for ia, a in enumerate(ordered):
        for b in ordered[ia:]:
            pairs += 1
            lower = [x for x in elements if x in below[a] and x in below[b]]
            upper = [x for x in elements if a in below[x] and b in below[x]]
            glb = [x for x in lower if all(y in below[x] for y in lower)]
            lub = [x for x in upper if all(x in below[y] for y in upper)]
            if len(glb) != 1 or len(lub) != 1:
                failures.append({"a": a, "b": b, "glb_count": len(glb), "lub_count": len(lub)})
                continue
            inf, sup = order.inf_gc(pv, a, b), order.sup_gc(pv, a, b)
            if inf != glb[0] or sup != lub[0]:
                failures.append({"a": a, "b": b, "inf_gc": inf, "glb": glb[0], "sup_gc": sup, "lub": lub[0]})
    return VerificationOutcome(name, params, pairs, tuple(failures), origin=origin)


def verify_termination_time(
    params: GameParams,
    g: Optional[TransitionGraph] = None,
    random_plays: int = 0,
    seed: int = 0,
) -> VerificationOutcome:
    """q = 0: every maximal play from every origin has the closed-form length.

    All maximal play lengths are collected exactly by dynamic programming
    over the acyclic graph; ``random_plays`` extra plays are also simulated
    move by move.
    """
    name = "termination_time"
    if params.q != 0:
        return VerificationOutcome(name, params, 0, note="q>0, not applicable")
    g = g or build_graph(params)
    failures = []
    try:
        lengths = maximal_play_lengths(g)
    except GameError as err:
        return VerificationOutcome(name, params, 0, ({"reason": str(err)},))
    for a in g.nodes:
        t = convergence.convergence_time_q0(a)
        if lengths[a] != {t}:
            failures.append({"origin": a, "play_lengths": sorted(lengths[a]), "formula": t})
    rng = random.Random(seed)
    simulated = 0
    per_origin = ceil(random_plays / len(g.nodes)) if random_plays else 0
    for a in g.nodes:
        t = convergence.convergence_time_q0(a)
        for _ in range(per_origin):
            moves = random_maximal_play(a, rng)
            simulated += 1
            if len(moves) != t:
                failures.append({"origin": a, "random_play": len(moves), "formula": t})
    return VerificationOutcome(
        name, params, len(g.nodes), tuple(failures), note=f"random_plays={simulated}"
    )


def verify_time_to_P(
    params: GameParams,
    g: Optional[TransitionGraph] = None,
    cap: int = DEFAULT_PATH_CAP,
    dual_entry_only: bool = False,
) -> VerificationOutcome:
    """q > 0: circuit-free paths to the canonical dual match the closed form.

    With ``dual_entry_only`` only paths whose single dual configuration is
    the target are considered.
    """
    name = "time_to_P_entry" if dual_entry_only else "time_to_P"
    if params.q == 0:
        return VerificationOutcome(name, params, 0, note="q=0, not applicable")
    g = g or build_graph(params)
    target = canonical_dual(params)
    if dual_entry_only:
        keep = {a: tuple((i, b) for i, b in g.moves[a] if b == target or not is_dual(b, params)) for a in g.nodes}
        search = TransitionGraph(params, g.nodes, keep)
    else:
        search = g
    failures = []
    paths_seen = 0
    for a in g.nodes:
        if dual_entry_only and is_dual(a, params) and a != target:
            continue
        expected_s = convergence.shot_vector_to_P(a)
        expected_t = convergence.time_to_P(a)
        idle = convergence.inactive_player(a, target)
        if expected_s[idle - 1] != 0 or sum(expected_s) != expected_t:
            failures.append({"origin": a, "reason": "formula inconsistent", "s": expected_s})
        try:
            enum = enumerate_paths(a, target, search, circuit_free_only=True, cap=cap)
        except CapExceededError as err:
            return _inconclusive(name, params, a, err)
        paths_seen += len(enum.paths)
        shots = {(shot_of(path, params.p), len(path)) for path in enum.paths}
        bad = sorted(x for x in shots if x != (expected_s, expected_t))
        if bad:
            failures.append({"origin": a, "formula": expected_s, "time": expected_t, "found": bad})
    return VerificationOutcome(
        name, params, len(g.nodes), tuple(failures), note=f"paths={paths_seen}"
    )


def verify_recurrence_bound(
    params: GameParams, g: Optional[TransitionGraph] = None, cap: int = DEFAULT_PATH_CAP
) -> VerificationOutcome:
    """q > 0: after the bound's number of moves, the current configuration is a repeat."""
    name = "recurrence_bound"
    if params.q == 0:
        return VerificationOutcome(name, params, 0, note="q=0, not applicable")
    g = g or build_graph(params)
    failures = []
    plays = 0
    for a in g.nodes:
        length = convergence.recurrence_bound(a)
        try:
            for seq in enumerate_plays(a, length, cap):
                plays += 1
                if seq[-1] not in seq[:-1]:
                    failures.append({"origin": a, "play": seq})
        except CapExceededError as err:
            return _inconclusive(name, params, a, err)
    return VerificationOutcome(name, params, len(g.nodes), tuple(failures), note=f"plays={plays}")


def verify_dominance(params: GameParams, g: Optional[TransitionGraph] = None) -> VerificationOutcome:
    """Longest dual chain is q(p - q), P is greatest, covers are game moves."""
    name = "dominance"
    if params.q == 0:
        return VerificationOutcome(name, params, 0, note="q=0, not applicable")
    g = g or build_graph(params)
    duals = [a for a in g.nodes if is_dual(a, params)]
    prefix = {a: tuple(accumulate(a)) for a in duals}
    strictly_above = {
        a: {b for b in duals if b != a and all(x >= y for x, y in zip(prefix[a], prefix[b]))}
        for a in duals
    }

    longest: dict[Config, int] = {}

    def chain(a: Config) -> int:
        if a not in longest:
            longest[a] = max((1 + chain(b) for b in strictly_above[a]), default=0)
        return longest[a]

    brute_longest = max(chain(a) for a in duals)
    failures = []
    expected = params.q * (params.p - params.q)
    if brute_longest != expected:
        failures.append({"reason": "longest chain", "found": brute_longest, "expected": expected})
    if convergence.dominance_longest_chain(params) != brute_longest:
        failures.append({"reason": "dominance_longest_chain disagrees with brute force"})
    target = canonical_dual(params)
    if strictly_above[target] != set(duals) - {target}:
        failures.append({"reason": "P is not the greatest element"})
    brute_covers = {
        (a, b)
        for a in duals
        for b in strictly_above[a]
        if not any(b in strictly_above[c] for c in strictly_above[a])
    }
    if brute_covers != set(convergence.dominance_covers(params)):
        failures.append({"reason": "cover sets differ"})
    for a, b in sorted(brute_covers):
        if b not in g.successors(a):
            failures.append({"cover_upper": a, "cover_lower": b, "reason": "not a game move"})
    return VerificationOutcome(name, params, len(duals), tuple(failures), note=f"longest={brute_longest}")


def verify_convergence_formulas(
    params: GameParams, random_plays: int = 0, seed: int = 0, cap: int = DEFAULT_PATH_CAP
) -> VerificationOutcome:
    """The time formula (q = 0) or the time-to-P and recurrence checks (q > 0), merged."""
    g = build_graph(params)
    if params.q == 0:
        parts = [verify_termination_time(params, g, random_plays, seed)]
    else:
        parts = [verify_time_to_P(params, g, cap), verify_recurrence_bound(params, g, cap)]
    return VerificationOutcome(
        "convergence_formulas",
        params,
        sum(o.instances_checked for o in parts),
        tuple(f for o in parts for f in o.failures),
        inconclusive=any(o.inconclusive for o in parts),
        note=";".join(f"{o.check_name}:{o.status}" for o in parts),
    )


# -- sweeps ------------------------------------------------------------------


@dataclass
class SweepConfig:
    max_n: int = 10
    max_p: int = 5
    # per-origin path checks only where the state space is this small
    origin_max_states: int = 84
    random_plays: int = 1000
    seed: int = 0
    cap: int = DEFAULT_PATH_CAP


def sweep_instances(cfg: SweepConfig) -> list[GameParams]:
    return [GameParams(n, p) for p in range(2, cfg.max_p + 1) for n in range(cfg.max_n + 1)]


def run_sweep(cfg: SweepConfig) -> Iterator[VerificationOutcome]:
    """Every check on every instance, in a fixed order."""
    for params in sweep_instances(cfg):
        g = build_graph(params)
        yield verify_termination(params)
        yield verify_dual_characterization(params)
        yield verify_scc_theorem(params)
        if params.q == 0:
            yield verify_termination_time(params, g, cfg.random_plays, cfg.seed)
        else:
            yield verify_dominance(params, g)
        if state_count(params) > cfg.origin_max_states:
            continue
        if params.q:
            yield verify_time_to_P(params, g, cfg.cap)
            yield verify_time_to_P(params, g, cfg.cap, dual_entry_only=True)
            yield verify_recurrence_bound(params, g, cfg.cap)
        reach = closures(g)
        for origin in g.nodes:
            if is_dual(origin, params):
                continue
            yield verify_shot_uniqueness(params, origin, g, cfg.cap)
            yield verify_order_characterization(params, origin, g, reach)
            yield verify_lattice(params, origin, g, reach)
