"""Cop strategies for the row-bounded cylinder.

The cops stand on one row, carve the cylinder's column cycle into arcs,
and the pair of cops bounding the robber's arc runs the cone chase while
everyone else holds their column as a fence.  The two-cop strategy is
the k == 2 special case of the spread strategy, so both CLI algorithms
share one implementation.
"""

from __future__ import annotations

from ..boards import Board, Vertex
from .base import CopStrategy
from .frames import pair_case_moves, presiege_on_board, sign


def spread_columns(n: int, k: int) -> list[int]:
    # k gaps summing to n - k, larger gaps first.
    q, rem = divmod(n - k, k)
    sizes = [q + 1] * rem + [q] * (k - rem)
    cols = [0]
    for size in sizes[:-1]:
        cols.append(cols[-1] + size + 1)
    return cols


class SemiTorusSpreadStrategy(CopStrategy):
    algorithm_id = "sgrid-k"

    def __init__(self, board: Board, k: int):
        if board.kind != "semitorus":
            raise ValueError(f"{self.algorithm_id} needs a semitorus board, got {board.kind}")
        if k < 2:
            raise ValueError(f"{self.algorithm_id} needs k >= 2, got k={k}")
        if k == 2:
            if board.m < 2:
                raise ValueError(f"k=2 needs m >= 2, got m={board.m}")
        else:
            if board.m < 3:
                raise ValueError(f"{self.algorithm_id} needs m >= 3, got m={board.m}")
            if board.n < 2 * k:
                raise ValueError(f"{self.algorithm_id} needs n >= 2k, got n={board.n}, k={k}")
        super().__init__(board, k)

    def placement(self) -> list[Vertex]:
        row = (self.board.m - 1) // 2
        return [(row, c) for c in spread_columns(self.board.n, self.k)]

    # The chase direction is decided once and written into state: the
    # cops slide sideways, closing the robber's arc, until the robber
    # sits strictly past the pack *inside* a bound's cone -- then the
    # line advances and keeps advancing that way for the rest of the
    # game.  Re-reading the direction off the board every round instead
    # lets the robber toggle it by hovering level with the lead cop.
    def initial_state(self):
        return ("",)

    def _tentative(self, cops, robber) -> str | None:
        rows = [r for r, _ in cops]
        if robber[0] > max(rows):
            return "down"
        if robber[0] < min(rows):
            return "up"
        return None

    def _bounding_pair(self, cops, robber) -> tuple[int, int]:
        """(left, right) cop indices of the arc holding the robber's column."""
        order = sorted(range(self.k), key=lambda i: (cops[i][1], i))
        rc = robber[1]
        left_pos = None
        for pos, i in enumerate(order):
            if cops[i][1] <= rc:
                left_pos = pos
        if left_pos is None:
            left_pos = self.k - 1
        return order[left_pos], order[(left_pos + 1) % self.k]

    def step(self, cops, robber, state):
        cap = self.capture_step(cops, robber)
        if cap is not None:
            return cap, state

        board = self.board
        m = board.m
        left, right = self._bounding_pair(cops, robber)
        a, b = (left, right) if left < right else (right, left)
        rc = robber[1]
        # Column offsets measured through the robber's arc, so the two
        # bounds always pincer: shortest-way offsets can agree in
        # direction on a wide arc and then the whole parade just circles
        # the cylinder forever.
        arc_delta = {
            left: (rc - cops[left][1]) % board.n,
            right: -((cops[right][1] - rc) % board.n),
        }

        orient = state[0] or self._tentative(cops, robber)
        if orient:
            flip = orient == "up"

            def fr(row: int) -> int:
                return m - 1 - row if flip else row

            moves, case = pair_case_moves(
                [(fr(cops[a][0]), cops[a][1]), (fr(cops[b][0]), cops[b][1])],
                (fr(robber[0]), robber[1]),
                board.signed_col_delta,
                deltas=(arc_delta[a], arc_delta[b]),
            )
            if case == "descend":
                # Robber inside a cone: the whole line advances a row.
                new = list(cops)
                step = -1 if flip else 1
                for i in range(self.k):
                    row = max(0, min(m - 1, cops[i][0] + step))
                    new[i] = (row, cops[i][1])
                return new, (orient,)
            new = list(cops)
            vertical = False
            for i, (dr, dc) in zip((a, b), moves):
                vertical = vertical or dr != 0
                row = max(0, min(m - 1, cops[i][0] + (-dr if flip else dr)))
                new[i] = (row, (cops[i][1] + dc) % board.n)
            return new, (orient,) if vertical else state

        # Level with the pack, nothing committed: close the robber's arc.
        new = list(cops)
        for i, d in ((left, 1), (right, -1)):
            if cops[i][1] != rc:
                new[i] = (cops[i][0], (cops[i][1] + d) % board.n)
        return new, state

    def pre_siege(self, cops, robber, state) -> bool:
        orient = state[0] or self._tentative(cops, robber)
        return presiege_on_board(self.board, cops, robber, orient != "up")


class SemiTorusPairStrategy(SemiTorusSpreadStrategy):
    algorithm_id = "sgrid"

    def __init__(self, board: Board, k: int = 2):
        if k != 2:
            raise ValueError(f"{self.algorithm_id} uses exactly 2 cops, got k={k}")
        super().__init__(board, 2)
