"""Cop strategies for the torus.

With both axes wrapped there is no border to pin the robber against, so
the cops manufacture one.  The play unfolds in three phases:

* deploy -- the cops start spread along row 0; the two whose arc holds
  the robber sweep sideways until one shares its column.  That cop
  becomes the *guard*: from then on it mirrors the robber's column every
  round, which makes its row impossible to cross (the only reachable
  cell there is the guard itself).  Meanwhile one neighbour travels to
  complete a bracket of width W = ceil(n / (k - 1)) around the robber's
  arc, and any remaining cops re-spread on the far side.
* chase -- the bracketing pair runs the cone chase downward in "depth"
  coordinates measured from the guard row, exactly as on the cylinder:
  the guard row acts as both the ceiling and, after wrapping, the floor.
* rise -- whenever the pair pins the robber in the blocking pattern,
  the guard climbs one row (shrinking the strip) instead of waiting.
  The final rise lands on the robber itself.

The capture-round is not counted in any phase tally, so a game report
of (d, c, r) means capture on round d + c + r + 1.
"""

from __future__ import annotations

from ..boards import Board, Vertex
from .base import CopStrategy
from .frames import blocking_pair, pair_case_moves, presiege_on_board, sign

SWEEP = "sweep"
TRAVEL = "travel"
CHASE = "chase"


class TorusSpreadStrategy(CopStrategy):
    algorithm_id = "tgrid-k"

    def __init__(self, board: Board, k: int):
        if board.kind != "torus":
            raise ValueError(f"{self.algorithm_id} needs a torus board, got {board.kind}")
        if k < 3:
            raise ValueError(f"{self.algorithm_id} needs k >= 3, got k={k}")
        if board.m < 6:
            raise ValueError(f"{self.algorithm_id} needs m >= 6, got m={board.m}")
        if board.n < 2 * k:
            raise ValueError(f"{self.algorithm_id} needs n >= 2k, got n={board.n}, k={k}")
        if board.n < board.m:
            raise ValueError(
                f"{self.algorithm_id} needs n >= m (swap the axes), got m={board.m}, n={board.n}"
            )
        super().__init__(board, k)
        self.width = -(-board.n // (k - 1))

    def placement(self) -> list[Vertex]:
        n, k = self.board.n, self.k
        # Column targets in cycle order; cop 0 first, then the last cop,
        # then the rest, so index order walks the cycle one way.
        order = [0, k - 1] + list(range(1, k - 1))
        cops: list[Vertex] = [None] * k  # type: ignore[list-item]
        for j, who in enumerate(order):
            cops[who] = (0, -(-j * n // k))
        return cops

    def initial_state(self):
        return (SWEEP, -1, -1, -1, 0, "", 0, 0, 0)

    def memo_key(self, state):
        # The phase tallies are bookkeeping, not behaviour.
        return state[:6]

    def phase_report(self, state):
        return [state[6], state[7], state[8]]

    # ------------------------------------------------------------------
    # helpers

    def _arc_bounds(self, cops, robber) -> tuple[int, int]:
        order = sorted(range(self.k), key=lambda i: (cops[i][1], i))
        rc = robber[1]
        left_pos = None
        for pos, i in enumerate(order):
            if cops[i][1] <= rc:
                left_pos = pos
        if left_pos is None:
            left_pos = self.k - 1
        return order[left_pos], order[(left_pos + 1) % self.k]

    def _assign_roles(self, cops, guard: int) -> tuple[int, int, int]:
        """Pick (anchor, companion, side) once ``guard`` owns the column."""
        n = self.board.n
        order = sorted(range(self.k), key=lambda i: (cops[i][1], i))
        pos = order.index(guard)
        left = order[(pos - 1) % self.k]
        right = order[(pos + 1) % self.k]
        best = None
        for anchor, ch in ((left, right), (right, left)):
            side = sign(self.board.signed_col_delta(cops[anchor][1], cops[guard][1]))
            if side == 0:
                continue
            target = (cops[anchor][1] + side * self.width) % n
            dist = self.board.col_distance(cops[ch][1], target)
            key = (dist, anchor)
            if best is None or key < best[0]:
                best = (key, anchor, ch, side)
        assert best is not None
        return best[1], best[2], best[3]

    def _respread_moves(self, cops, anchor: int, side: int, roles) -> dict[int, Vertex]:
        """March the spare cops to posts behind the anchor, one W apart."""
        n = self.board.n
        rest = [i for i in range(self.k) if i not in roles]
        rest.sort(key=lambda i: (-side * self.board.signed_col_delta(cops[anchor][1], cops[i][1])) % n)
        moves = {}
        for j, i in enumerate(rest, start=1):
            target = (cops[anchor][1] - side * j * self.width) % n
            d = sign(self.board.signed_col_delta(cops[i][1], target))
            if d:
                moves[i] = (cops[i][0], (cops[i][1] + d) % n)
        return moves

    def _sync_guard(self, cops, robber, guard: int) -> Vertex:
        d = sign(self.board.signed_col_delta(cops[guard][1], robber[1]))
        return (cops[guard][0], (cops[guard][1] + d) % self.board.n)

    # ------------------------------------------------------------------
    # phases

    def step(self, cops, robber, state):
        cap = self.capture_step(cops, robber)
        if cap is not None:
            return cap, state

        phase = state[0]
        if phase == SWEEP:
            matched = [i for i in range(self.k) if cops[i][1] == robber[1]]
            if matched:
                guard = matched[0]
                anchor, ch, side = self._assign_roles(cops, guard)
                target = (cops[anchor][1] + side * self.width) % self.board.n
                phase = CHASE if cops[ch][1] == target else TRAVEL
                state = (phase, guard, anchor, ch, side) + state[5:]
                if phase == CHASE:
                    return self._chase_step(cops, robber, state)
                return self._travel_step(cops, robber, state)
            return self._sweep_step(cops, robber, state)
        if phase == TRAVEL:
            return self._travel_step(cops, robber, state)
        return self._chase_step(cops, robber, state)

    def _sweep_step(self, cops, robber, state):
        n = self.board.n
        a, b = self._arc_bounds(cops, robber)
        new = list(cops)
        for i in (a, b):
            d = sign(self.board.signed_col_delta(cops[i][1], robber[1]))
            if d:
                new[i] = (cops[i][0], (cops[i][1] + d) % n)
        out = state[:6] + (state[6] + 1,) + state[7:]
        matched = [i for i in range(self.k) if new[i][1] == robber[1]]
        if matched:
            guard = matched[0]
            anchor, ch, side = self._assign_roles(new, guard)
            target = (new[anchor][1] + side * self.width) % n
            phase = CHASE if new[ch][1] == target else TRAVEL
            out = (phase, guard, anchor, ch, side) + out[5:]
        return new, out

    def _travel_step(self, cops, robber, state):
        n = self.board.n
        _, guard, anchor, ch, side = state[:5]
        target = (cops[anchor][1] + side * self.width) % n
        new = list(cops)
        new[guard] = self._sync_guard(cops, robber, guard)
        d = sign(self.board.signed_col_delta(cops[ch][1], target))
        if d:
            new[ch] = (cops[ch][0], (cops[ch][1] + d) % n)
        for i, v in self._respread_moves(cops, anchor, side, (guard, anchor, ch)).items():
            new[i] = v
        out = state[:6] + (state[6] + 1,) + state[7:]
        if new[ch][1] == target:
            out = (CHASE,) + out[1:]
        return new, out

    def _chase_step(self, cops, robber, state):
        board = self.board
        m, n = board.m, board.n
        _, guard, anchor, ch, _ = state[:5]
        g_row = cops[guard][0]

        def depth(row: int) -> int:
            return (row - g_row) % m

        da, dc_ = depth(cops[anchor][0]), depth(cops[ch][0])
        z = depth(robber[0])
        new = list(cops)

        # Horizontal approach is measured through the robber's arc
        # between the pair, so the two cops pincer it; chasing by the
        # shortest way round lets a runner parade ahead of the whole
        # line forever.
        ca, cc = cops[anchor][1], cops[ch][1]
        rc = robber[1]
        if (rc - ca) % n <= (rc - cc) % n:
            d_anchor, d_ch = (rc - ca) % n, -((cc - rc) % n)
        else:
            d_anchor, d_ch = -((ca - rc) % n), (rc - cc) % n

        # The guard row walls the strip at both ends, so the pair can
        # run the cone chase from whichever end is nearer the robber --
        # climbing over the guard row and pushing the robber up against
        # it from beneath when it hides in the lower half.  The end is
        # picked once, on the first chase round, and committed in state:
        # rereading it every round would let the robber toggle the
        # direction and stall the chase.
        if state[5]:
            flip = state[5] == "up"
        else:
            flip = z > m // 2
            state = state[:5] + ("up" if flip else "down",) + state[6:]

        def fr(dep: int) -> int:
            return -dep % m if flip else dep

        moves, case = pair_case_moves(
            [(fr(da), cops[anchor][1]), (fr(dc_), cops[ch][1])],
            (fr(z), robber[1]),
            board.signed_col_delta,
            deltas=(d_anchor, d_ch),
        )
        for i, dep, (dr, dcol) in zip((anchor, ch), (da, dc_), moves):
            nd = (dep + (-dr if flip else dr)) % m
            # Never step onto the guard row itself; hold the row instead.
            row = (g_row + nd) % m if nd else cops[i][0]
            new[i] = (row, (cops[i][1] + dcol) % n)

        rose = False
        if cops[guard][1] != robber[1]:
            new[guard] = self._sync_guard(cops, robber, guard)
        elif not flip and self._pair_pins(new, robber, anchor, ch, g_row):
            new[guard] = ((g_row - 1) % m, cops[guard][1])
            # Early climbs, while the robber is merely riding the cone
            # edges, are part of the squeeze; the books open a rise round
            # only once the robber is pinned strictly inside a cone.
            rose = case == "descend"

        if rose:
            out = state[:8] + (state[8] + 1,)
        else:
            out = state[:7] + (state[7] + 1, state[8])
        return new, out

    def _pair_pins(self, cops, robber, anchor: int, ch: int, g_row: int) -> bool:
        board = self.board
        m = board.m
        z = (robber[0] - g_row) % m
        rel = set()
        for i in (anchor, ch):
            dep = (cops[i][0] - g_row) % m
            rel.add((dep - z, board.signed_col_delta(robber[1], cops[i][1])))
        return blocking_pair(rel)

    def pre_siege(self, cops, robber, state) -> bool:
        return presiege_on_board(self.board, cops, robber, downward=True)


class TorusTripleStrategy(TorusSpreadStrategy):
    algorithm_id = "tgrid"

    def __init__(self, board: Board, k: int = 3):
        if k != 3:
            raise ValueError(f"{self.algorithm_id} uses exactly 3 cops, got k={k}")
        super().__init__(board, 3)
