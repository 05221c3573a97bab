"""Board topologies for the pursuit games.

Three families of rectangular boards with m rows and n columns, indexed
(row, col) with row 0 at the top and rows growing downward:

* ``grid``      -- bounded in both directions (m, n >= 2)
* ``semitorus`` -- columns wrap around, rows bounded (m >= 2, n >= 3)
* ``torus``     -- both directions wrap (m, n >= 3)

Vertices are plain ``(row, col)`` tuples.  All neighbor enumeration is
deterministic (up, down, left, right) so that games and traces replay
byte-for-byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

Vertex = tuple[int, int]

KINDS = ("grid", "semitorus", "torus")


class VertexClass(Enum):
    CORNER = "corner"
    BORDER = "border"
    INTERNAL = "internal"


@dataclass(frozen=True)
class Board:
    """A rectangular board, possibly wrapping in either direction."""

    kind: str
    m: int
    n: int
    wrap_rows: bool
    wrap_cols: bool

    # -- construction ------------------------------------------------------

    @staticmethod
    def grid(m: int, n: int) -> "Board":
        if m < 2 or n < 2:
            raise ValueError(f"grid needs m,n >= 2, got {m}x{n}")
        return Board("grid", m, n, False, False)

    @staticmethod
    def semitorus(m: int, n: int) -> "Board":
        if m < 2 or n < 3:
            raise ValueError(f"semitorus needs m >= 2 and n >= 3, got {m}x{n}")
        return Board("semitorus", m, n, False, True)

    @staticmethod
    def torus(m: int, n: int) -> "Board":
        if m < 3 or n < 3:
            raise ValueError(f"torus needs m,n >= 3, got {m}x{n}")
        return Board("torus", m, n, True, True)

    @staticmethod
    def make(kind: str, m: int, n: int) -> "Board":
        if kind == "grid":
            return Board.grid(m, n)
        if kind == "semitorus":
            return Board.semitorus(m, n)
        if kind == "torus":
            return Board.torus(m, n)
        raise ValueError(f"unknown board kind {kind!r}")

    @staticmethod
    def from_spec(spec: dict) -> "Board":
        return Board.make(spec["kind"], int(spec["m"]), int(spec["n"]))

    def spec(self) -> dict:
        return {"kind": self.kind, "m": self.m, "n": self.n}

    # -- basic queries -----------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return self.m * self.n

    def vertices(self) -> Iterator[Vertex]:
        for r in range(self.m):
            for c in range(self.n):
                yield (r, c)

    def contains(self, v: Vertex) -> bool:
        r, c = v
        return 0 <= r < self.m and 0 <= c < self.n

    def index(self, v: Vertex) -> int:
        r, c = v
        return r * self.n + c

    def vertex_at(self, i: int) -> Vertex:
        return divmod(i, self.n)

    def wrap(self, r: int, c: int) -> Vertex | None:
        """Normalize raw coordinates, or None if they fall off a bounded edge."""
        if self.wrap_rows:
            r %= self.m
        elif not 0 <= r < self.m:
            return None
        if self.wrap_cols:
            c %= self.n
        elif not 0 <= c < self.n:
            return None
        return (r, c)

    def neighbors(self, v: Vertex) -> list[Vertex]:
        """Open neighborhood, in deterministic up/down/left/right order."""
        r, c = v
        out = []
        for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1)):
            w = self.wrap(r + dr, c + dc)
            if w is not None:
                out.append(w)
        return out

    def closed_neighbors(self, v: Vertex) -> list[Vertex]:
        return [v] + self.neighbors(v)

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        return self.distance(u, v) == 1

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    # -- metric ------------------------------------------------------------

    def row_distance(self, r1: int, r2: int) -> int:
        d = abs(r1 - r2)
        return min(d, self.m - d) if self.wrap_rows else d

    def col_distance(self, c1: int, c2: int) -> int:
        d = abs(c1 - c2)
        return min(d, self.n - d) if self.wrap_cols else d

    def distance(self, u: Vertex, v: Vertex) -> int:
        return self.row_distance(u[0], v[0]) + self.col_distance(u[1], v[1])

    def signed_col_delta(self, frm: int, to: int) -> int:
        """Signed shortest column offset from `frm` to `to` (ties -> +)."""
        d = to - frm
        if not self.wrap_cols:
            return d
        d %= self.n
        return d if d <= self.n - d else d - self.n

    def signed_row_delta(self, frm: int, to: int) -> int:
        """Signed shortest row offset from `frm` to `to` (ties -> +)."""
        d = to - frm
        if not self.wrap_rows:
            return d
        d %= self.m
        return d if d <= self.m - d else d - self.m

    # -- structure ---------------------------------------------------------

    def vertex_class(self, v: Vertex) -> VertexClass:
        r, c = v
        on_row_edge = (not self.wrap_rows) and (r == 0 or r == self.m - 1)
        on_col_edge = (not self.wrap_cols) and (c == 0 or c == self.n - 1)
        if on_row_edge and on_col_edge:
            return VertexClass.CORNER
        if on_row_edge or on_col_edge:
            return VertexClass.BORDER
        return VertexClass.INTERNAL

    def is_cycle(self, cycle: list[Vertex]) -> bool:
        """True iff `cycle` lists distinct vertices forming a closed walk."""
        if len(cycle) < 3 or len(set(cycle)) != len(cycle):
            return False
        return all(
            self.adjacent(cycle[i], cycle[(i + 1) % len(cycle)])
            for i in range(len(cycle))
        )

    def is_chordless_cycle(self, cycle: list[Vertex]) -> bool:
        if not self.is_cycle(cycle):
            return False
        e = len(cycle)
        for i in range(e):
            for j in range(i + 2, e):
                if i == 0 and j == e - 1:
                    continue  # the closing edge, not a chord
                if self.adjacent(cycle[i], cycle[j]):
                    return False
        return True

    def is_isolated_cycle(self, cycle: list[Vertex]) -> bool:
        """A chordless cycle of length >= 4 such that every vertex off the
        cycle is adjacent to at most one cycle vertex."""
        if len(cycle) < 4 or not self.is_chordless_cycle(cycle):
            return False
        on = set(cycle)
        for v in self.vertices():
            if v in on:
                continue
            touches = sum(1 for w in self.neighbors(v) if w in on)
            if touches > 1:
                return False
        return True

    def four_cycle_at(self, v: Vertex) -> list[Vertex] | None:
        """The unit square with top-left corner v, if it exists on this board."""
        r, c = v
        quad = [(r, c), (r, c + 1), (r + 1, c + 1), (r + 1, c)]
        cells = [self.wrap(*w) for w in quad]
        if any(w is None for w in cells) or len(set(cells)) != 4:
            return None
        return cells  # type: ignore[return-value]
