"""Closed-form convergence results and the dominance order on dual configurations."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from graphlib import TopologicalSorter
from itertools import accumulate
from typing import Optional

from .errors import ParameterError
from .kernel import (
    Config,
    GameParams,
    canonical_dual,
    format_config,
    is_dual,
    params_of,
    prefix_delta,
    weak_compositions,
)
from .order import Relation, ShotVector, product_compare


def inactive_player(origin: Config, target: Config) -> int:
    """First index minimising ``prefix_delta(origin, target)``."""
    d = prefix_delta(origin, target)
    return d.index(min(d)) + 1


def shot_vector_to_P(origin: Config) -> ShotVector:
    """Shot vector of the moves taking ``origin`` to the canonical dual (or fixed point)."""
    target = canonical_dual(params_of(origin))
    d = prefix_delta(origin, target)
    low = min(d)
    return tuple(x - low for x in d)


def _time_formula(origin: Config) -> int:
    p = len(origin)
    d = prefix_delta(origin, canonical_dual(params_of(origin)))
    return p * -min(d) + sum(d)


def time_to_P(origin: Config) -> int:
    return _time_formula(origin)


def convergence_time_q0(origin: Config) -> int:
    """Number of moves before the game stops; only defined when ``p`` divides ``n``."""
    params = params_of(origin)
    if params.q != 0:
        raise ParameterError(f"the game does not terminate for n={params.n}, p={params.p}")
    return _time_formula(origin)


def recurrence_bound(origin: Config) -> int:
    """Step count after which every play has revisited a configuration."""
    params = params_of(origin)
    if params.q == 0:
        raise ParameterError("recurrence bound needs q > 0")
    return time_to_P(origin) + params.q * (params.p - params.q) + 1


def _require_duals(*configs: Config) -> GameParams:
    params = params_of(configs[0])
    for a in configs:
        if len(a) != params.p or sum(a) != params.n or not is_dual(a, params):
            raise ParameterError(f"{a} is not a dual configuration of n={params.n}, p={params.p}")
    return params


def dominance_compare(a: Config, b: Config) -> Relation:
    """Prefix-sum dominance between two dual configurations."""
    _require_duals(a, b)
    return product_compare(tuple(accumulate(a)), tuple(accumulate(b)))


def dual_configurations(params: GameParams) -> list[Config]:
    return [a for a in weak_compositions(params.n, params.p) if is_dual(a, params)]


def dominance_covers(params: GameParams) -> list[tuple[Config, Config]]:
    """``(a, b)`` pairs where ``a`` covers ``b`` in the dominance order."""
    duals = dual_configurations(params)
    greater = {
        a: [b for b in duals if dominance_compare(a, b) is Relation.GREATER] for a in duals
    }
    covers = []
    for a in duals:
        for b in greater[a]:
            if not any(b in greater[c] for c in greater[a]):
                covers.append((a, b))
    return covers


def dominance_longest_chain(params: GameParams) -> int:
    """Length (in cover steps) of the longest chain among dual configurations."""
    if params.q == 0:
        raise ParameterError("there are no dual configurations when q = 0")
    down: dict[Config, list[Config]] = {a: [] for a in dual_configurations(params)}
    for a, b in dominance_covers(params):
        down[a].append(b)
    longest: dict[Config, int] = {}
    for a in TopologicalSorter(down).static_order():
        longest[a] = max((longest[b] + 1 for b in down[a]), default=0)
    return max(longest.values())


@dataclass(frozen=True)
class ConvergenceReport:
    origin: Config
    target: Config
    inactive_player: int
    shot_to_target: ShotVector
    steps: int
    recurrence_bound: Optional[int]

    def to_record(self) -> dict[str, str]:
        """Flat string fields in a fixed order."""
        return {
            "origin": format_config(self.origin),
            "target": format_config(self.target),
            "inactive_player": str(self.inactive_player),
            "shot_to_target": format_config(self.shot_to_target),
            "steps": str(self.steps),
            "recurrence_bound": "none" if self.recurrence_bound is None else str(self.recurrence_bound),
        }

    def to_lines(self) -> str:
        return "".join(f"{k}={v}\n" for k, v in self.to_record().items())

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def convergence_report(origin: Config) -> ConvergenceReport:
    params = params_of(origin)
    target = canonical_dual(params)
    return ConvergenceReport(
        origin=tuple(origin),
        target=target,
        inactive_player=inactive_player(origin, target),
        shot_to_target=shot_vector_to_P(origin),
        steps=time_to_P(origin),
        recurrence_bound=recurrence_bound(origin) if params.q else None,
    )
