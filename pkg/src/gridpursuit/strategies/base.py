"""Common machinery for cop strategies.

A strategy is deterministic and side-effect free: ``step`` maps
(cop positions, robber position, state) to (new positions, new state),
where ``state`` is a small hashable tuple.  The exhaustive verifier
memoizes on ``memo_key(state)``, which must drop fields that do not
influence future decisions (phase counters and the like).
"""

from __future__ import annotations

from ..boards import Board, Vertex

Cops = tuple[Vertex, ...]


class CopStrategy:
    algorithm_id = "?"

    def __init__(self, board: Board, k: int):
        self.board = board
        self.k = k

    # -- interface ---------------------------------------------------------

    def placement(self) -> Cops:
        raise NotImplementedError

    def initial_state(self):
        return ()

    def step(self, cops: Cops, robber: Vertex, state) -> tuple[Cops, tuple]:
        raise NotImplementedError

    def pre_siege(self, cops: Cops, robber: Vertex, state) -> bool:
        return False

    def memo_key(self, state):
        return state

    def phase_report(self, state) -> dict | None:
        return None

    # -- helpers -----------------------------------------------------------

    def capture_step(self, cops: Cops, robber: Vertex) -> Cops | None:
        """If some cop can step onto the robber, do it (lowest index moves,
        the rest hold).  Returns None when no cop is adjacent."""
        for i, c in enumerate(cops):
            if self.board.adjacent(c, robber):
                out = list(cops)
                out[i] = robber
                return tuple(out)
        return None
