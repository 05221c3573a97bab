"""Robber policies.

Four built-ins, picked by name on the CLI:

* ``scripted``   -- the analytic worst-case camper for the board family;
  deterministic, no search.  Starts far from the cops, sits still, and
  spends the forced dodges (one step away from the pinning pattern) that
  make the chase take its full advertised length.
* ``greedy``     -- one-ply distance maximizer, a cheap sanity robber.
* ``worst-case`` -- plays the exact adversarial optimum against the cop
  strategy it is given, via the game-tree verifier.
* ``external``   -- bridges to another process over JSON lines.

Robbers see the whole position (cop locations included) but know nothing
about the cops' internal state; the scripted ones infer the chase
situation from geometry alone.
"""

from __future__ import annotations

import json
from typing import IO

from ..boards import Board, Vertex
from ..engine import DIRECTIONS, apply_move
from .frames import presiege_on_board, sign


def legal_starts(board: Board, cops) -> list[Vertex]:
    blocked = set()
    for c in cops:
        blocked.update(board.closed_neighbors(c))
    return [v for v in board.vertices() if v not in blocked]


def farthest_start(board: Board, cops, keep_last: bool = False) -> Vertex:
    """Legal start maximizing the distance to the nearest cop.

    Ties keep the first candidate in row-major order, or the last when
    ``keep_last`` is set.
    """
    best = None
    best_d = -1
    for v in legal_starts(board, cops):
        d = min(board.distance(v, c) for c in cops)
        if d > best_d or (keep_last and d == best_d):
            best, best_d = v, d
    if best is None:
        raise ValueError("no legal robber start on this board")
    return best


def step_options(board: Board, cops, pos: Vertex) -> list[Vertex]:
    """Legal replies in a fixed order: stay first, then up/down/left/right."""
    out = []
    for dr, dc in DIRECTIONS.values():
        w = board.wrap(pos[0] + dr, pos[1] + dc)
        if w is not None and w not in cops:
            out.append(w)
    return out


class Robber:
    name = "?"

    def start(self, board: Board, cops) -> Vertex:
        raise NotImplementedError

    def move(self, board: Board, cops, pos: Vertex) -> Vertex:
        raise NotImplementedError


class ScriptReplayRobber(Robber):
    """Replays a recorded start and move list; stays once the script ends."""

    name = "script"

    def __init__(self, start: Vertex, moves: list[str]):
        self._start = tuple(start)
        self._moves = list(moves)
        self._at = 0

    def start(self, board, cops):
        return self._start

    def move(self, board, cops, pos):
        if self._at >= len(self._moves):
            return pos
        name = self._moves[self._at]
        self._at += 1
        return apply_move(board, pos, name)


class CornerCampRobber(Robber):
    """Bounded grid: sit in the corner farthest from the cops, never move."""

    name = "scripted"

    def start(self, board, cops):
        corners = [
            (0, 0),
            (0, board.n - 1),
            (board.m - 1, 0),
            (board.m - 1, board.n - 1),
        ]
        legal = set(legal_starts(board, cops))
        best = None
        best_d = -1
        for v in corners:
            if v not in legal:
                continue
            d = min(board.distance(v, c) for c in cops)
            if d >= best_d:
                best, best_d = v, d
        if best is None:
            best = farthest_start(board, cops, keep_last=True)
        return best

    def move(self, board, cops, pos):
        return pos


class CylinderCampRobber(Robber):
    """Row-bounded cylinder: camp at the analytic worst spot, dodge the pin.

    While the pinning pattern (a cop beside, a cop diagonally behind on
    the other side) is on, stepping toward the border buys a round each
    time; once the border or a full siege is reached there is nothing
    left to spend.
    """

    name = "scripted"

    def _camp(self, board: Board, k: int) -> Vertex:
        m, n = board.m, board.n
        reach = -(-(n - k) // (2 * k))  # how far the bracket lets the robber drift
        if m // 2 <= reach:
            return (m - 1, m // 2)
        return ((m - 1) // 2 + reach, reach)

    def start(self, board, cops):
        camp = self._camp(board, len(cops))
        if camp in set(legal_starts(board, cops)):
            return camp
        return farthest_start(board, cops, keep_last=True)

    def move(self, board, cops, pos):
        if presiege_on_board(board, cops, pos, downward=True) and pos[0] < board.m - 1:
            down = (pos[0] + 1, pos[1])
            if down not in cops:
                return down
        return pos


class TorusCampRobber(Robber):
    """Torus: start on the column of the cop that will pin it, walk to the
    middle of the bracket, then camp and dodge downward around the wrap."""

    name = "scripted"

    def __init__(self):
        self._camp_col = None

    def start(self, board, cops):
        k = len(cops)
        width = -(-board.n // (k - 1))
        z = max(2, (width - 1) // 2)
        self._camp_col = z
        v = (z % board.m, -(-board.n // k))
        if v in set(legal_starts(board, cops)):
            return v
        return farthest_start(board, cops, keep_last=True)

    def move(self, board, cops, pos):
        if self._camp_col is not None and pos[1] != self._camp_col:
            d = sign(board.signed_col_delta(pos[1], self._camp_col))
            nxt = (pos[0], (pos[1] + d) % board.n)
            if nxt not in cops:
                return nxt
            return pos
        if presiege_on_board(board, cops, pos, downward=True):
            down = ((pos[0] + 1) % board.m, pos[1])
            if down not in cops:
                return down
        return pos


class GreedyRobber(Robber):
    """One-ply maximizer of the distance to the nearest cop."""

    name = "greedy"

    def start(self, board, cops):
        return farthest_start(board, cops)

    def move(self, board, cops, pos):
        best = pos
        best_d = -1
        for v in step_options(board, cops, pos):
            d = min(board.distance(v, c) for c in cops)
            if d > best_d:
                best, best_d = v, d
        return best


class WorstCaseRobber(Robber):
    """Exact adversarial play against one specific cop strategy.

    Tracks the strategy's internal state by running a shadow copy of it,
    and picks every start/reply by full game-tree value (memoized, so a
    whole game costs about as much as one verification run).
    """

    name = "worst-case"

    def __init__(self, strategy):
        self.strategy = strategy
        self._analysis = None
        self._cops = None
        self._state = None

    def _ensure(self, board):
        if self._analysis is None:
            from ..verify import Adversary

            self._analysis = Adversary(board, self.strategy)

    def start(self, board, cops):
        self._ensure(board)
        self._cops = tuple(cops)
        self._state = self.strategy.initial_state()
        value, vertex = self._analysis.best_start(self._cops, self._state)
        del value
        return vertex

    def move(self, board, cops, pos):
        self._ensure(board)
        moved, self._state = self.strategy.step(self._cops, pos, self._state)
        if tuple(moved) != tuple(cops):
            raise RuntimeError("shadow strategy diverged from the live game")
        self._cops = tuple(cops)
        value, vertex = self._analysis.best_reply(self._cops, pos, self._state)
        del value
        return vertex


class ExternalRobber(Robber):
    """JSON-lines bridge: one request object out, one reply object in.

    Start request:  {"type": "start", "spec": ..., "cops": [[r, c], ...]}
    Move request:   {"type": "move", "round": i, "cops": ..., "robber": [r, c]}
    Replies:        {"place": [r, c]}  /  {"move": "up"} or {"move": [r, c]}
    """

    name = "external"

    def __init__(self, infile: IO[str], outfile: IO[str]):
        self.infile = infile
        self.outfile = outfile
        self._round = 0

    def _ask(self, obj: dict) -> dict:
        self.outfile.write(json.dumps(obj, separators=(", ", ": ")) + "\n")
        self.outfile.flush()
        line = self.infile.readline()
        if not line:
            raise ValueError("external robber: input stream closed")
        return json.loads(line)

    def start(self, board, cops):
        reply = self._ask(
            {"type": "start", "spec": board.spec(), "cops": [list(c) for c in cops]}
        )
        return tuple(reply["place"])

    def move(self, board, cops, pos):
        self._round += 1
        reply = self._ask(
            {
                "type": "move",
                "round": self._round,
                "cops": [list(c) for c in cops],
                "robber": list(pos),
            }
        )
        mv = reply["move"]
        if isinstance(mv, str):
            return apply_move(board, pos, mv)
        return tuple(mv)


def make_robber(
    name: str,
    board: Board,
    *,
    strategy=None,
    infile: IO[str] | None = None,
    outfile: IO[str] | None = None,
) -> Robber:
    if name == "scripted":
        if board.kind == "grid":
            return CornerCampRobber()
        if board.kind == "semitorus":
            return CylinderCampRobber()
        return TorusCampRobber()
    if name == "greedy":
        return GreedyRobber()
    if name == "worst-case":
        if strategy is None:
            raise ValueError("worst-case robber needs the cop strategy to play against")
        return WorstCaseRobber(strategy)
    if name == "external":
        if infile is None or outfile is None:
            raise ValueError("external robber needs input and output streams")
        return ExternalRobber(infile, outfile)
    raise ValueError(f"unknown robber policy {name!r}")
