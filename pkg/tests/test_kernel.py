from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gameofcards import (
    GameParams,
    MoveNotEnabledError,
    ParameterError,
    apply_move,
    canonical_dual,
    enabled_positions,
    format_config,
    is_dual,
    is_fixed_point,
    make_params,
    parse_config,
    prefix_delta,
)
from gameofcards.kernel import weak_compositions

from .conftest import configurations


def brute_enabled(a):
    p = len(a)
    return {i + 1 for i in range(p) if a[i] - a[(i + 1) % p] >= 1}


@pytest.mark.parametrize(
    "n, p, k, q", [(6, 3, 2, 0), (6, 4, 1, 2), (0, 2, 0, 0), (7, 3, 2, 1)]
)
def test_make_params(n, p, k, q):
    params = make_params(n, p)
    assert (params.k, params.q) == (k, q)
    assert params.n == params.k * params.p + params.q


@pytest.mark.parametrize("n, p", [(5, 1), (5, 0), (-1, 3), (2.0, 3), (True, 3)])
def test_make_params_rejects(n, p):
    with pytest.raises(ParameterError):
        make_params(n, p)


@pytest.mark.parametrize(
    "a, expected", [((2, 2, 2), set()), ((4, 1, 1), {1}), ((3, 1, 2), {1}), ((1, 2, 3), {3})]
)
def test_enabled_positions(a, expected):
    assert enabled_positions(a) == expected == brute_enabled(a)


def test_apply_move():
    assert apply_move((4, 1, 1), 1) == (3, 2, 1)
    assert apply_move((3, 1, 2), 1) == (2, 2, 2)
    # player p hands its card to player 1
    assert apply_move((1, 2, 3), 3) == (2, 2, 2)
    with pytest.raises(MoveNotEnabledError):
        apply_move((2, 2, 2), 1)
    with pytest.raises(MoveNotEnabledError):
        apply_move((3, 1, 2), 3)


def test_fixed_point():
    assert is_fixed_point((2, 2, 2))
    assert not is_fixed_point((3, 2, 1))
    assert not is_fixed_point((2, 2, 1, 1))


def test_is_dual():
    p64 = GameParams(6, 4)
    assert is_dual((2, 2, 1, 1), p64)
    assert not is_dual((3, 1, 1, 1), p64)
    assert not is_dual((2, 2, 2), GameParams(6, 3))
    assert is_dual((2, 1, 2, 1))


def test_canonical_dual():
    assert canonical_dual(GameParams(6, 4)) == (2, 2, 1, 1)
    assert canonical_dual(GameParams(6, 3)) == (2, 2, 2)
    assert canonical_dual(GameParams(7, 3)) == (3, 2, 2)


def test_prefix_delta():
    assert prefix_delta((0, 0, 6), (2, 2, 2)) == (-2, -4, 0)
    assert prefix_delta((1, 2, 3), (1, 2, 3)) == (0, 0, 0)
    assert prefix_delta((3, 2, 1, 0), (2, 2, 1, 1)) == (1, 1, 1, 0)
    with pytest.raises(ParameterError):
        prefix_delta((1, 2), (1, 2, 0))
    with pytest.raises(ParameterError):
        prefix_delta((1, 2), (1, 1))


def test_config_text_round_trip():
    assert parse_config("4,1,1") == (4, 1, 1)
    assert format_config((4, 1, 1)) == "4,1,1"
    for bad in ["", "1,,2", "a,b", "1,-1"]:
        with pytest.raises(ParameterError):
            parse_config(bad)


def test_params_check():
    params = GameParams(6, 3)
    assert params.check([4, 1, 1]) == (4, 1, 1)
    for bad in [(4, 1), (4, 1, 2), (7, -1, 0)]:
        with pytest.raises(ParameterError):
            params.check(bad)


def test_weak_compositions_count_and_order():
    for n in range(7):
        for p in range(2, 5):
            comps = list(weak_compositions(n, p))
            assert len(comps) == comb(n + p - 1, p - 1) == len(set(comps))
            assert comps == sorted(comps)
            assert all(sum(c) == n and len(c) == p for c in comps)


@given(configurations())
def test_move_conserves_cards_and_is_local(a):
    for i in enabled_positions(a):
        b = apply_move(a, i)
        assert sum(b) == sum(a)
        diff = [y - x for x, y in zip(a, b)]
        assert sorted(diff) == [-1] + [0] * (len(a) - 2) + [1]
        assert min(b) >= 0


@given(configurations())
def test_enabled_matches_brute_force(a):
    assert enabled_positions(a) == brute_enabled(a)


@given(st.data())
def test_prefix_delta_antisymmetric(data):
    a = data.draw(configurations())
    b = data.draw(st.permutations(a))
    d_ab, d_ba = prefix_delta(a, b), prefix_delta(tuple(b), a)
    assert d_ab == tuple(-x for x in d_ba)
    assert d_ab[-1] == 0


@pytest.mark.parametrize("p", range(2, 6))
@pytest.mark.parametrize("n", range(0, 11))
def test_dual_count_is_binomial_p_q(n, p):
    params = GameParams(n, p)
    duals = [a for a in weak_compositions(n, p) if is_dual(a, params)]
    assert len(duals) == (comb(p, params.q) if params.q else 0)


@pytest.mark.parametrize("n, p", [(0, 2), (4, 2), (6, 3), (8, 4), (10, 5)])
def test_fixed_points_when_p_divides_n(n, p):
    fixed = [a for a in weak_compositions(n, p) if is_fixed_point(a)]
    assert fixed == [(n // p,) * p]


@pytest.mark.parametrize("n, p", [(1, 2), (6, 4), (7, 3)])
def test_no_fixed_point_when_q_positive(n, p):
    assert not any(is_fixed_point(a) for a in weak_compositions(n, p))
