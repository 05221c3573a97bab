"""Cop strategies for the bounded grid: the center pair and the k/2-pair team."""

from __future__ import annotations

from ..boards import Board, Vertex
from .base import CopStrategy, Cops
from .frames import ConeRank, GridFrame, blocking_pair, cone_rank, dominant_orientation


def pair_placement(m: int, n: int) -> tuple[Vertex, Vertex]:
    """Central pair on an m x n grid, assuming m <= n."""
    m1, m2 = (m - 1) // 2, m // 2
    n1, n2 = (n - 1) // 2, n // 2
    if m % 2 == 0:
        return (m1, n1), (m2, n1)  # vertical pair, shared column
    if n % 2 == 1:
        return (m1 - 1, n1), (m1, n1)  # vertical pair, off center
    return (m1, n1), (m1, n2)  # horizontal pair


class GridPairStrategy(CopStrategy):
    """Two cops on a bounded grid; capture in floor((m+n)/2) - 1 rounds.

    The pair keeps its shape and either descends (in the current frame)
    when the robber is inside-or-on both cones, or slides sideways toward
    the robber's column.  The frame is re-chosen from the dominant axis of
    the cop->robber offset until the pair makes its first vertical move,
    which commits the frame for the rest of the game.
    """

    algorithm_id = "grid"

    def __init__(self, board: Board, k: int = 2):
        if board.kind != "grid":
            raise ValueError("grid strategy needs a bounded grid")
        if k != 2:
            raise ValueError("grid strategy uses exactly 2 cops")
        super().__init__(board, 2)

    def placement(self) -> Cops:
        m, n = self.board.m, self.board.n
        if m <= n:
            return pair_placement(m, n)
        a, b = pair_placement(n, m)
        return ((a[1], a[0]), (b[1], b[0]))

    def initial_state(self):
        return ("",)  # committed orientation, empty until first vertical move

    def _frame(self, cops: Cops, robber: Vertex, state) -> GridFrame:
        if state[0]:
            orient = state[0]
        else:
            mid_r = (cops[0][0] + cops[1][0]) / 2
            mid_c = (cops[0][1] + cops[1][1]) / 2
            orient = dominant_orientation(robber[0] - mid_r, robber[1] - mid_c)
        return GridFrame(orient, self.board.m, self.board.n)

    def step(self, cops: Cops, robber: Vertex, state) -> tuple[Cops, tuple]:
        grab = self.capture_step(cops, robber)
        if grab is not None:
            return grab, state

        frame = self._frame(cops, robber, state)
        f = [frame.to_frame(c) for c in cops]
        r = frame.to_frame(robber)
        ranks = [cone_rank(r[0] - fc[0], r[1] - fc[1]) for fc in f]

        if min(ranks) >= ConeRank.EDGE:
            new = [(fr + 1, fc) for fr, fc in f]
            state = (frame.orient,)
        else:
            lo = min(fc[1] for fc in f)
            hi = max(fc[1] for fc in f)
            d = 1 if r[1] > hi else (-1 if r[1] < lo else 0)
            new = [(fr, fc + d) for fr, fc in f]
        return tuple(frame.from_frame(v) for v in new), state

    def pre_siege(self, cops: Cops, robber: Vertex, state) -> bool:
        frame = self._frame(cops, robber, state)
        r = frame.to_frame(robber)
        rel = []
        for c in cops:
            fc = frame.to_frame(c)
            rel.append((fc[0] - r[0], fc[1] - r[1]))
        return blocking_pair(rel)


class GridPairsStrategy(CopStrategy):
    """k = 2h cops (h > 1) on a bounded grid, working as h vertical pairs.

    Pairs sit on the two central rows of the shorter axis, spread over the
    longer axis.  Whenever the robber is inside-or-on both cones of some
    pair, the whole team advances one row; otherwise only the pair(s)
    flanking the robber's column slide toward it.
    """

    algorithm_id = "grid-k"

    def __init__(self, board: Board, k: int):
        if board.kind != "grid":
            raise ValueError("grid-k strategy needs a bounded grid")
        if k < 4 or k % 2:
            raise ValueError("grid-k strategy needs an even cop count k >= 4")
        if min(board.m, board.n) < 4:
            raise ValueError("grid-k strategy needs m, n >= 4")
        super().__init__(board, k)
        self.h = k // 2
        # Work in a transposed frame when the rows outnumber the columns,
        # so pairs always spread along the longer axis.
        self.base = "down" if board.m <= board.n else "right"
        self.M, self.N = GridFrame(self.base, board.m, board.n).dims
        if self.N < 2 * self.h:
            raise ValueError(f"{self.h} pairs do not fit on {self.N} columns")

    def _gap_columns(self) -> list[int]:
        h, total = self.h, self.N - self.h
        q, rem = divmod(total, h)
        sizes = [q + 1 if i < rem else q for i in range(h)]  # inner gaps first
        inner, outer = sizes[: h - 1], sizes[h - 1]
        left = outer // 2
        cols = [left]
        for g in inner:
            cols.append(cols[-1] + g + 1)
        return cols

    def placement(self) -> Cops:
        top = self.M // 2 - 1
        frame = GridFrame(self.base, self.board.m, self.board.n)
        out = []
        for x in self._gap_columns():
            out.append(frame.from_frame((top, x)))
            out.append(frame.from_frame((top + 1, x)))
        return tuple(out)

    def initial_state(self):
        return ("",)

    def _orient(self, cops: Cops, robber: Vertex, state) -> str | None:
        if state[0]:
            return state[0]
        base = GridFrame(self.base, self.board.m, self.board.n)
        rows = [base.to_frame(c)[0] for c in cops]
        rr = base.to_frame(robber)[0]
        if rr > max(rows):
            return self.base
        if rr < min(rows):
            return {"down": "up", "right": "left"}[self.base]
        return None  # robber level with the pack; orientation deferred

    def step(self, cops: Cops, robber: Vertex, state) -> tuple[Cops, tuple]:
        grab = self.capture_step(cops, robber)
        if grab is not None:
            return grab, state

        orient = self._orient(cops, robber, state)
        frame = GridFrame(orient or self.base, self.board.m, self.board.n)
        M, N = frame.dims
        f = [frame.to_frame(c) for c in cops]
        r = frame.to_frame(robber)
        pairs = [(f[2 * i], f[2 * i + 1]) for i in range(self.h)]

        advance = False
        if orient is not None:
            for a, b in pairs:
                ra = cone_rank(r[0] - a[0], r[1] - a[1])
                rb = cone_rank(r[0] - b[0], r[1] - b[1])
                if min(ra, rb) >= ConeRank.EDGE:
                    advance = True
                    break

        if advance:
            new = [(min(fr + 1, M - 1), fc) for fr, fc in f]
            state = (frame.orient,)
        else:
            cols = [a[1] for a, _ in pairs]
            moving: dict[int, int] = {}
            if r[1] < cols[0]:
                moving[0] = -1
            elif r[1] > cols[-1]:
                moving[self.h - 1] = 1
            else:
                for i in range(self.h - 1):
                    if cols[i] < r[1] < cols[i + 1]:
                        moving[i] = 1
                        moving[i + 1] = -1
                        break
            new = list(f)
            for i, d in moving.items():
                for j in (2 * i, 2 * i + 1):
                    fr, fc = new[j]
                    new[j] = (fr, fc + d)
        return tuple(frame.from_frame(v) for v in new), state

    def pre_siege(self, cops: Cops, robber: Vertex, state) -> bool:
        orient = self._orient(cops, robber, state)
        frame = GridFrame(orient or self.base, self.board.m, self.board.n)
        r = frame.to_frame(robber)
        rel = []
        for c in cops:
            fc = frame.to_frame(c)
            rel.append((fc[0] - r[0], fc[1] - r[1]))
        return blocking_pair(rel)
