"""Exhaustive verification of a cop strategy against a perfect robber.

The cop side is deterministic, so fixing a strategy turns the game into
a one-player search: the robber picks a start and a reply each round,
and we ask for the play maximizing the capture round -- or an escape.

``Adversary`` explores that tree iteratively with memoization on
(cop positions, robber position, strategy memo key).  A node revisited
while still on the search path means the robber can force the play back
into it, i.e. loop forever; such nodes (and everything that can reach
them) evaluate to infinity, which is reported as a failed verification
with the offending start as witness.  There is no round cap: the answer
is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .boards import Board, Vertex
from .strategies.robbers import legal_starts, step_options

INF = math.inf


class _Node:
    __slots__ = ("key", "cops", "robber", "state", "children", "expanded")

    def __init__(self, key, cops, robber, state):
        self.key = key
        self.cops = cops
        self.robber = robber
        self.state = state
        self.children = None
        self.expanded = False


class Adversary:
    """Memoized worst-case analysis of one strategy on one board."""

    def __init__(self, board: Board, strategy):
        self.board = board
        self.strategy = strategy
        self.value: dict = {}
        self.reply: dict = {}
        self._gray: set = set()

    def _key(self, cops, robber, state):
        return (cops, robber, self.strategy.memo_key(state))

    def evaluate(self, cops, robber, state) -> float:
        """Rounds to capture from 'cops about to move', under perfect play.

        Returns math.inf when the robber can avoid capture forever.
        """
        root_key = self._key(cops, robber, state)
        if root_key in self.value:
            return self.value[root_key]
        stack = [_Node(root_key, tuple(cops), robber, state)]
        while stack:
            nd = stack[-1]
            if nd.key in self.value:
                stack.pop()
                self._gray.discard(nd.key)
                continue
            if not nd.expanded:
                nd.expanded = True
                self._gray.add(nd.key)
                new_cops, new_state = self.strategy.step(nd.cops, nd.robber, nd.state)
                new_cops = tuple(new_cops)
                if nd.robber in new_cops:
                    self.value[nd.key] = 1
                    self.reply[nd.key] = None
                    self._gray.discard(nd.key)
                    stack.pop()
                    continue
                mk = self.strategy.memo_key(new_state)
                nd.children = [
                    (r2, (new_cops, r2, mk), new_cops, new_state)
                    for r2 in step_options(self.board, new_cops, nd.robber)
                ]
            pushed = False
            for r2, ck, ccops, cstate in nd.children:
                if ck in self.value or ck in self._gray:
                    continue
                stack.append(_Node(ck, ccops, r2, cstate))
                pushed = True
                break
            if pushed:
                continue
            best = -1.0
            best_reply = None
            for r2, ck, _, _ in nd.children:
                v = INF if ck in self._gray else self.value[ck]
                if v > best:
                    best = v
                    best_reply = r2
            self.value[nd.key] = 1 + best
            self.reply[nd.key] = best_reply
            self._gray.discard(nd.key)
            stack.pop()
        return self.value[root_key]

    def best_start(self, cops, state) -> tuple[float, Vertex]:
        starts = legal_starts(self.board, cops)
        if not starts:
            raise ValueError("no legal robber start against this placement")
        best_v = -1.0
        best = None
        for v in starts:
            val = self.evaluate(cops, v, state)
            if val > best_v:
                best_v, best = val, v
        return best_v, best

    def best_reply(self, cops, pos, state) -> tuple[float, Vertex]:
        """Best robber reply after the cops have just moved to `cops`."""
        best_v = -1.0
        best = None
        for v in step_options(self.board, cops, pos):
            val = self.evaluate(cops, v, state)
            if val > best_v:
                best_v, best = val, v
        if best is None:  # boxed in completely: stand and be taken
            return 0.0, pos
        return best_v, best

    def line(self, start: Vertex, max_rounds: int = 100000):
        """The worst play from `start` as [(cops, robber), ...] per round."""
        cops = tuple(self.strategy.placement())
        state = self.strategy.initial_state()
        pos = start
        out = [(cops, pos)]
        for _ in range(max_rounds):
            key = self._key(cops, pos, state)
            self.evaluate(cops, pos, state)
            cops, state = self.strategy.step(cops, pos, state)
            cops = tuple(cops)
            if pos in cops:
                out.append((cops, pos))
                return out
            pos = self.reply[key]
            out.append((cops, pos))
        return out


@dataclass
class VerifyResult:
    captures: bool
    t: int | None
    worst_start: Vertex | None
    starts: int

    def __str__(self):
        if self.starts == 0:
            return "vacuous: no legal robber start"
        if not self.captures:
            return f"NO CAPTURE: robber escapes forever from {self.worst_start}"
        return f"captures all {self.starts} starts, worst t={self.t} from {self.worst_start}"


def verify_strategy(board: Board, strategy) -> VerifyResult:
    """Exact worst-case capture round of `strategy` over every legal start."""
    adv = Adversary(board, strategy)
    cops = tuple(strategy.placement())
    state = strategy.initial_state()
    starts = legal_starts(board, cops)
    if not starts:
        return VerifyResult(True, None, None, 0)
    worst = -1.0
    at = None
    for v in starts:
        val = adv.evaluate(cops, v, state)
        if val == INF:
            return VerifyResult(False, None, v, len(starts))
        if val > worst:
            worst, at = val, v
    return VerifyResult(True, int(worst), at, len(starts))
