"""Chase geometry: cones, orientation frames, blocking patterns.

The pair strategies steer the robber with *cones*: the cone of a cop at
(i, j) opens in the chase direction and contains every cell (i', j')
with i' > i and |j' - j| <= i' - i.  Cells strictly inside are WITHIN,
cells on the two diagonals are on the EDGE, everything else is OUTSIDE.

Strategies are written for a chase that pushes the robber toward larger
frame rows ("down").  A frame maps board coordinates into that normal
form: the plain grid uses one of four axis frames, the wrapped boards
use row flips and cyclic column offsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from ..boards import Board, Vertex


class ConeRank(IntEnum):
    OUTSIDE = 0
    EDGE = 1
    WITHIN = 2


def cone_rank(dr: int, dc: int) -> ConeRank:
    """Position of a cell `dr` rows below / `dc` columns beside an apex."""
    if dr <= 0:
        return ConeRank.OUTSIDE
    a = abs(dc)
    if a < dr:
        return ConeRank.WITHIN
    if a == dr:
        return ConeRank.EDGE
    return ConeRank.OUTSIDE


ORIENTATIONS = ("down", "up", "right", "left")


@dataclass(frozen=True)
class GridFrame:
    """Axis-aligned change of coordinates on a bounded board.

    ``to_frame`` maps board (row, col) to frame coordinates in which the
    chase direction is +row.  Frames: down = identity, up = row flip,
    right/left = transpose with the matching flip.
    """

    orient: str
    m: int
    n: int

    @property
    def dims(self) -> tuple[int, int]:
        if self.orient in ("down", "up"):
            return self.m, self.n
        return self.n, self.m

    def to_frame(self, v: Vertex) -> Vertex:
        r, c = v
        if self.orient == "down":
            return (r, c)
        if self.orient == "up":
            return (self.m - 1 - r, c)
        if self.orient == "right":
            return (c, r)
        return (self.n - 1 - c, r)  # left

    def from_frame(self, v: Vertex) -> Vertex:
        fr, fc = v
        if self.orient == "down":
            return (fr, fc)
        if self.orient == "up":
            return (self.m - 1 - fr, fc)
        if self.orient == "right":
            return (fc, fr)
        return (fc, self.n - 1 - fr)  # left


def dominant_orientation(dr: float, dc: float) -> str:
    """Axis frame pointing from the cops toward the robber.

    Vertical wins ties so a diagonal robber is chased by rows first.
    """
    if abs(dr) >= abs(dc):
        return "down" if dr >= 0 else "up"
    return "right" if dc > 0 else "left"


# Relative placements (frame rows, signed frame cols w.r.t. the robber)
# that pin the robber so its only safe move is down: one cop beside it,
# the other diagonally above on the opposite side.
_BLOCK_PATTERNS = (
    {(0, -1), (-1, 1)},
    {(0, 1), (-1, -1)},
)


def blocking_pair(rel: list[tuple[int, int]]) -> bool:
    """True if some two of the given cop offsets form the pre-siege pattern."""
    have = set(rel)
    return any(pat <= have for pat in _BLOCK_PATTERNS)


def sign(x: int) -> int:
    return (x > 0) - (x < 0)


def pair_case_moves(
    cop_rc: list[tuple[int, int]],
    robber_rc: tuple[int, int],
    col_delta,
    deltas: tuple[int, int] | None = None,
) -> tuple[list[tuple[int, int]], str]:
    """One round of the bracket-pair chase, in frame coordinates.

    ``cop_rc`` holds the two cops as (frame row, column); ``col_delta``
    maps (from_col, to_col) to the signed column offset (cyclic on
    wrapped boards).  ``deltas`` overrides the per-cop column offsets,
    for callers that measure them through a particular arc rather than
    the shortest way round.  Chase direction is +row.  Returns per-cop
    (d_row, d_col) moves plus the case label:

    * ``descend``   -- robber inside a cone: both cops push one row.
    * ``edge-both`` -- robber on both cone edges: the trailing cop (or
      the first, on equal rows) pushes alone, sharpening the corridor.
    * ``edge-one``  -- robber rides one edge: the other cop slides over.
    * ``sweep``     -- robber outside both cones: both slide toward it.
    """
    (r1, c1), (r2, c2) = cop_rc
    rr, rc = robber_rc
    if deltas is None:
        deltas = (col_delta(c1, rc), col_delta(c2, rc))
    d1, d2 = deltas
    k1 = cone_rank(rr - r1, d1)
    k2 = cone_rank(rr - r2, d2)

    if ConeRank.WITHIN in (k1, k2):
        return [(1, 0), (1, 0)], "descend"
    if k1 == ConeRank.EDGE and k2 == ConeRank.EDGE:
        if r1 == r2 or r1 < r2:
            return [(1, 0), (0, 0)], "edge-both"
        return [(0, 0), (1, 0)], "edge-both"
    if k1 == ConeRank.EDGE:
        return [(0, 0), (0, sign(d2))], "edge-one"
    if k2 == ConeRank.EDGE:
        return [(0, sign(d1)), (0, 0)], "edge-one"
    return [(0, sign(d1)), (0, sign(d2))], "sweep"


def presiege_on_board(board: Board, cops, robber: Vertex, downward: bool = True) -> bool:
    """Pattern test in plain board coordinates (down = +row or flipped).

    Column offsets use the cyclic shortest delta on wrapping boards; row
    offsets likewise, so this works on all three families.
    """
    rel = []
    sign = 1 if downward else -1
    for c in cops:
        dr = board.signed_row_delta(robber[0], c[0]) * sign
        dc = board.signed_col_delta(robber[1], c[1])
        rel.append((dr, dc))
    return blocking_pair(rel)
