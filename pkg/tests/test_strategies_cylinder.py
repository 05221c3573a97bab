"""Column-wrapping boards: the spread team and its two-cop special case."""

import pytest

from gridpursuit.boards import Board
from gridpursuit.engine import run_game
from gridpursuit.strategies import make_strategy
from gridpursuit.strategies.sgrid import SemiTorusSpreadStrategy, spread_columns
from gridpursuit.strategies.robbers import make_robber
from gridpursuit.analysis import cylinder_time
from gridpursuit.verify import verify_strategy


def test_spread_columns_partition():
    assert spread_columns(9, 3) == [0, 3, 6]
    assert spread_columns(10, 3) == [0, 4, 7]   # wider gaps come first
    assert spread_columns(6, 2) == [0, 3]
    cols = spread_columns(17, 5)
    gaps = [(b - a) % 17 for a, b in zip(cols, cols[1:] + [cols[0] + 17])]
    assert sum(gaps) == 17
    assert max(gaps) - min(gaps) <= 1


def test_two_cop_algorithm_is_the_k2_spread():
    board = Board.semitorus(5, 8)
    pair = make_strategy("sgrid", board, k=2)
    spread = make_strategy("sgrid-k", board, k=2)
    assert isinstance(pair, SemiTorusSpreadStrategy)
    assert pair.placement() == spread.placement()


def test_placement_row_is_central():
    board = Board.semitorus(6, 9)
    strat = make_strategy("sgrid-k", board, k=3)
    assert [c[0] for c in strat.placement()] == [2, 2, 2]
    assert [c[1] for c in strat.placement()] == [0, 3, 6]


@pytest.mark.parametrize("m, n, k, t", [(6, 9, 2, 8), (6, 9, 3, 5), (5, 6, 2, 4)])
def test_scripted_capture_times(m, n, k, t):
    board = Board.semitorus(m, n)
    strat = make_strategy("sgrid" if k == 2 else "sgrid-k", board, k=k)
    res = run_game(board, strat, make_robber("scripted", board, strategy=strat))
    assert res.outcome == "capture"
    assert res.t == t == cylinder_time(m, n, k)


@pytest.mark.parametrize("m, n", [(4, 6), (5, 6), (3, 5), (2, 4)])
def test_exhaustive_matches_formula(m, n):
    board = Board.semitorus(m, n)
    res = verify_strategy(board, make_strategy("sgrid", board, k=2))
    assert res.captures
    assert res.t <= cylinder_time(m, n, 2)


def test_exhaustive_three_cops():
    board = Board.semitorus(5, 6)
    res = verify_strategy(board, make_strategy("sgrid-k", board, k=3))
    assert res.captures
    assert res.t <= cylinder_time(5, 6, 3)


def test_orientation_reconsidered_every_round():
    """A robber that slips level with the cop row must not pin the team
    to a stale vertical commitment."""
    board = Board.semitorus(6, 7)
    strat = make_strategy("sgrid", board, k=2)
    res = verify_strategy(board, strat)
    assert res.captures  # the adversary tries exactly the climb-past escape


def test_validation_errors():
    with pytest.raises(ValueError):
        make_strategy("sgrid", Board.semitorus(5, 6), k=3)
    with pytest.raises(ValueError):
        make_strategy("sgrid-k", Board.semitorus(5, 5), k=3)  # needs n >= 2k
    with pytest.raises(ValueError):
        make_strategy("sgrid", Board.grid(5, 6), k=2)
