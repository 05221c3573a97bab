"""Bounded-grid strategies: the center pair and the paired teams."""

import pytest

from gridpursuit.boards import Board
from gridpursuit.engine import run_game
from gridpursuit.strategies import make_strategy
from gridpursuit.strategies.frames import ConeRank, GridFrame, cone_rank, pair_case_moves
from gridpursuit.strategies.grid import pair_placement
from gridpursuit.strategies.robbers import make_robber
from gridpursuit.verify import verify_strategy


def test_cone_rank_boundaries():
    assert cone_rank(-1, 0) is ConeRank.OUTSIDE
    assert cone_rank(0, 0) is ConeRank.OUTSIDE
    assert cone_rank(3, 3) is ConeRank.EDGE
    assert cone_rank(3, -3) is ConeRank.EDGE
    assert cone_rank(3, 2) is ConeRank.WITHIN
    assert cone_rank(1, 0) is ConeRank.WITHIN
    assert cone_rank(2, 5) is ConeRank.OUTSIDE


def test_frames_round_trip():
    for orient in ("down", "up", "left", "right"):
        f = GridFrame(orient, 5, 7)
        for v in Board.grid(5, 7).vertices():
            assert f.from_frame(f.to_frame(v)) == v


def test_pair_case_moves_cases():
    # One cop sees the robber strictly inside its cone: both descend.
    moves, case = pair_case_moves([(0, 3), (0, 5)], (2, 4), lambda a, b: b - a)
    assert case == "descend" and moves == [(1, 0), (1, 0)]
    # Both on edge: exactly one cop descends.
    moves, case = pair_case_moves([(0, 2), (0, 6)], (2, 4), lambda a, b: b - a)
    assert case == "edge-both" and sorted(moves) == [(0, 0), (1, 0)]
    # Robber outside both cones: both slide toward it.
    moves, case = pair_case_moves([(0, 0), (0, 1)], (1, 5), lambda a, b: b - a)
    assert case == "sweep" and moves == [(0, 1), (0, 1)]


@pytest.mark.parametrize(
    "m, n, expected",
    [
        (4, 5, ((1, 2), (2, 2))),   # even rows: vertical pair, shared column
        (5, 5, ((1, 2), (2, 2))),   # odd x odd: vertical pair, off center
        (5, 6, ((2, 2), (2, 3))),   # odd rows, even cols: horizontal pair
    ],
)
def test_pair_placement_parities(m, n, expected):
    assert pair_placement(m, n) == expected


def test_pair_placement_transposes_tall_boards():
    strat = make_strategy("grid", Board.grid(9, 4), k=2)
    a, b = strat.placement()
    assert a[1] == b[1] or a[0] == b[0]
    assert {a, b} == {(4, 1), (4, 2)}


@pytest.mark.parametrize("m, n, t", [(4, 5, 3), (5, 6, 4), (5, 9, 6)])
def test_pair_exhaustive_capture_times(m, n, t):
    board = Board.grid(m, n)
    res = verify_strategy(board, make_strategy("grid", board, k=2))
    assert res.captures
    assert res.t == t == (m + n) // 2 - 1


@pytest.mark.parametrize(
    "m, n, k, t",
    [(4, 13, 4, 4), (4, 18, 4, 5), (4, 18, 2, 10), (6, 6, 4, 3)],
)
def test_team_scripted_capture_times(m, n, k, t):
    board = Board.grid(m, n)
    strat = make_strategy("grid-k" if k > 2 else "grid", board, k=k)
    res = run_game(board, strat, make_robber("scripted", board, strategy=strat))
    assert res.outcome == "capture"
    assert res.t == t


def test_team_exhaustive_on_small_board():
    board = Board.grid(4, 6)
    res = verify_strategy(board, make_strategy("grid-k", board, k=4))
    assert res.captures and res.t <= 2


def test_team_placement_spreads_pairs():
    board = Board.grid(4, 13)
    strat = make_strategy("grid-k", board, k=4)
    cops = strat.placement()
    assert len(cops) == 4
    # pairs share a column on the two central rows
    assert cops[0][1] == cops[1][1] and cops[2][1] == cops[3][1]
    assert {cops[0][0], cops[1][0]} == {1, 2}


def test_validation_errors():
    board = Board.grid(4, 6)
    with pytest.raises(ValueError):
        make_strategy("grid", board, k=3)
    with pytest.raises(ValueError):
        make_strategy("grid-k", board, k=5)
    with pytest.raises(ValueError):
        make_strategy("grid-k", Board.grid(3, 9), k=4)
    with pytest.raises(ValueError):
        make_strategy("grid-k", Board.grid(4, 5), k=6)  # three pairs, five columns
    with pytest.raises(ValueError):
        make_strategy("grid", Board.torus(4, 6), k=2)
