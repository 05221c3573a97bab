"""Round loop, capture accounting, sieges, and trace replay."""

import io

import pytest

from gridpursuit.boards import Board
from gridpursuit.engine import (
    apply_move,
    default_round_cap,
    is_siege,
    min_siege_size,
    move_name,
    replay_trace,
    run_game,
)
from gridpursuit.strategies import make_strategy
from gridpursuit.strategies.base import CopStrategy
from gridpursuit.strategies.robbers import ScriptReplayRobber, make_robber


class FrozenCops(CopStrategy):
    """Cops that never move; handy for exercising the loop itself."""

    algorithm_id = "frozen"

    def __init__(self, board, spots):
        super().__init__(board, len(spots))
        self.spots = tuple(spots)

    def placement(self):
        return self.spots

    def step(self, cops, robber, state):
        return cops, state


def test_move_name_round_trip():
    b = Board.semitorus(3, 4)
    for v in b.vertices():
        for name in ("stay", "up", "down", "left", "right"):
            try:
                w = apply_move(b, v, name)
            except ValueError:
                continue
            assert move_name(b, v, w) == name


def test_move_name_rejects_jumps():
    b = Board.grid(3, 3)
    with pytest.raises(ValueError):
        move_name(b, (0, 0), (2, 2))


def test_robber_start_must_avoid_closed_neighborhoods():
    b = Board.grid(4, 4)
    cops = [(1, 1), (2, 2)]
    robber = ScriptReplayRobber((1, 2), [])
    with pytest.raises(ValueError, match="closed neighborhood"):
        run_game(b, FrozenCops(b, cops), robber)


def test_robber_suicide_counts_the_current_round():
    b = Board.grid(4, 4)
    # Robber walks into the frozen cop on its own turn of round 2.
    robber = ScriptReplayRobber((0, 3), ["left", "left"])
    res = run_game(b, FrozenCops(b, [(0, 1), (3, 3)]), robber)
    assert res.outcome == "capture"
    assert res.t == 2


def test_round_cap_gives_no_capture():
    b = Board.grid(4, 4)
    robber = ScriptReplayRobber((3, 0), ["stay"] * 500)
    res = run_game(b, FrozenCops(b, [(0, 2), (0, 3)]), robber, round_cap=7)
    assert res.outcome == "no-capture"
    assert res.t is None
    assert res.rounds == 7


def test_default_round_cap_formula():
    assert default_round_cap(Board.grid(4, 5), 2) == 72
    assert default_round_cap(Board.torus(7, 15), 3) == 264


# -- sieges -----------------------------------------------------------------


def test_siege_needs_an_adjacent_cop():
    b = Board.grid(5, 5)
    # All four ring vertices covered, but nobody stands next to the robber.
    cops = [(0, 2), (2, 0), (4, 2), (2, 4)]
    assert not is_siege(b, cops, (2, 2))
    assert is_siege(b, [(1, 2), (3, 2), (2, 1), (2, 3)], (2, 2))


def test_minimal_siege_sizes_on_planar_grid():
    b = Board.grid(5, 6)
    assert min_siege_size(b, (2, 3)) == 3   # internal
    assert min_siege_size(b, (0, 3)) == 2   # border
    assert min_siege_size(b, (0, 0)) == 2   # corner
    assert min_siege_size(b, (4, 5)) == 2


def test_minimal_siege_sizes_on_torus():
    t = Board.torus(4, 5)
    assert all(min_siege_size(t, v) == 3 for v in t.vertices())


def test_minimal_siege_on_semitorus_border():
    s = Board.semitorus(4, 5)
    assert min_siege_size(s, (0, 2)) == 2
    assert min_siege_size(s, (2, 2)) == 3


# -- traces -----------------------------------------------------------------


def run_traced(kind, m, n, k, algo):
    board = Board.make(kind, m, n)
    strat = make_strategy(algo, board, k=k)
    robber = make_robber("scripted", board, strategy=strat)
    buf = io.StringIO()
    res = run_game(
        board, strat, robber,
        trace=buf, keep_lines=True, algorithm=algo, robber_name="scripted",
    )
    return res, buf.getvalue()


def test_trace_shape_and_replay():
    res, text = run_traced("grid", 5, 6, 2, "grid")
    lines = text.splitlines(keepends=True)
    assert len(lines) == res.rounds + 3  # header, round 0, rounds, footer
    assert lines[0].startswith('{"trace": 1, "spec": ')
    assert '"outcome": "capture"' in lines[-1]
    replays = replay_trace(lines)
    assert replays.t == res.t
    assert replays.trace_lines == [ln.rstrip("\n") for ln in lines]


def test_replay_detects_tampering():
    _, text = run_traced("grid", 4, 5, 2, "grid")
    lines = text.splitlines(keepends=True)
    body = lines[2].replace('"robber_move": "stay"', '"robber_move": "up"')
    if body == lines[2]:
        body = lines[2].replace('"robber_move": "down"', '"robber_move": "stay"')
    assert body != lines[2], "fixture game had no move to tamper with"
    with pytest.raises(ValueError, match="diverged"):
        replay_trace(lines[:2] + [body] + lines[3:])


def test_trace_footer_carries_torus_phases():
    res, text = run_traced("torus", 7, 15, 3, "tgrid")
    assert res.phases == [2, 11, 1]
    assert '"phases": [2, 11, 1]' in text.splitlines()[-1]
    replay_trace(text.splitlines(keepends=True))
