"""Game parameters, configurations and the card-passing rule.

A configuration is a plain tuple of non-negative ints, one entry per player.
Positions are 1-based on every public surface; player ``p`` passes to
player ``1``.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import MoveNotEnabledError, ParameterError

Config = tuple[int, ...]

# (giver, receiver) -> may the giver pass a card?
_enabling: Callable[[int, int], bool] = lambda giver, receiver: giver > receiver


@contextlib.contextmanager
def override_rule(rule: Callable[[int, int], bool]) -> Iterator[None]:
    """Temporarily replace the enabling condition.

    Only meant as a negative control for the verification harness: a broken
    rule must make the theorem checks fail.
    """
    global _enabling
    saved = _enabling
    _enabling = rule
    try:
        yield
    finally:
        _enabling = saved


@dataclass(frozen=True)
class GameParams:
    n: int
    p: int

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise ParameterError(f"number of cards must be a non-negative integer, got {self.n!r}")
        if isinstance(self.p, bool) or not isinstance(self.p, int) or self.p < 2:
            raise ParameterError(f"number of players must be an integer >= 2, got {self.p!r}")

    @property
    def k(self) -> int:
        return self.n // self.p

    @property
    def q(self) -> int:
        return self.n % self.p

    def check(self, a: Sequence[int]) -> Config:
        """Return ``a`` as a configuration of these parameters or raise."""
        a = tuple(a)
        if len(a) != self.p:
            raise ParameterError(f"configuration {a} has {len(a)} entries, expected {self.p}")
        if any(x < 0 for x in a):
            raise ParameterError(f"configuration {a} has a negative entry")
        if sum(a) != self.n:
            raise ParameterError(f"configuration {a} holds {sum(a)} cards, expected {self.n}")
        return a


def make_params(n: int, p: int) -> GameParams:
    return GameParams(n, p)


def params_of(a: Sequence[int]) -> GameParams:
    """Parameters implied by a configuration (its total and its length)."""
    if any(x < 0 for x in a):
        raise ParameterError(f"configuration {tuple(a)} has a negative entry")
    return GameParams(sum(a), len(a))


def parse_config(text: str) -> Config:
    """Parse the comma-separated form, e.g. ``"4,1,1"``."""
    try:
        a = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ParameterError(f"cannot parse configuration {text!r}") from None
    if any(x < 0 for x in a):
        raise ParameterError(f"configuration {text!r} has a negative entry")
    return a


def format_config(a: Sequence[int]) -> str:
    return ",".join(str(x) for x in a)


def succ(i: int, p: int) -> int:
    return 1 if i == p else i + 1


def pred(i: int, p: int) -> int:
    return p if i == 1 else i - 1


def enabled_positions(a: Config) -> frozenset[int]:
    """Players allowed to pass a card to their right neighbour."""
    p = len(a)
    return frozenset(
        i for i in range(1, p + 1) if _enabling(a[i - 1], a[succ(i, p) - 1])
    )


def apply_move(a: Config, i: int) -> Config:
    if i not in enabled_positions(a):
        raise MoveNotEnabledError(f"player {i} cannot pass a card in {format_config(a)}")
    j = succ(i, len(a))
    b = list(a)
    b[i - 1] -= 1
    b[j - 1] += 1
    return tuple(b)


def successors(a: Config) -> list[tuple[int, Config]]:
    """``(position, successor)`` pairs in increasing position order."""
    return [(i, apply_move(a, i)) for i in sorted(enabled_positions(a))]


def is_fixed_point(a: Config) -> bool:
    return not enabled_positions(a)


def is_dual(a: Config, params: GameParams | None = None) -> bool:
    """Every player holds ``k`` or ``k + 1`` cards (never true when ``q == 0``)."""
    params = params or params_of(a)
    if params.q == 0:
        return False
    k = params.k
    return all(x == k or x == k + 1 for x in a)


def canonical_dual(params: GameParams) -> Config:
    """``q`` players with ``k + 1`` cards followed by ``p - q`` with ``k``.

    For ``q == 0`` this is the fixed point ``(k, ..., k)``.
    """
    k, q = params.k, params.q
    return (k + 1,) * q + (k,) * (params.p - q)


def prefix_delta(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Prefix sums of ``a - b``; the last entry is 0 for configurations of one game."""
    if len(a) != len(b):
        raise ParameterError(f"length mismatch: {len(a)} vs {len(b)}")
    if sum(a) != sum(b):
        raise ParameterError(f"card totals differ: {sum(a)} vs {sum(b)}")
    out = []
    acc = 0
    for x, y in zip(a, b):
        acc += x - y
        out.append(acc)
    return tuple(out)


def weak_compositions(n: int, p: int) -> Iterator[Config]:
    """All ways to deal ``n`` cards to ``p`` players, in lexicographic order."""
    if p == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in weak_compositions(n - first, p - 1):
            yield (first,) + rest
