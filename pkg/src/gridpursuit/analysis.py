"""Closed forms: capture-time formulas, windows, team sizing, bounds.

Everything here is exact integer/rational arithmetic (`fractions.Fraction`
for anything non-integral); floats appear only in display helpers.  The
formulas give the round the strategies in `strategies/` are built to
achieve, and the acceptance tests in `tests/` pin them against exhaustive
verification on small boards.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import ceil, floor

import numpy as np

from .boards import Board


def _F(a, b=1) -> Fraction:
    return Fraction(a, b)


def fmt_ratio(x: Fraction) -> str:
    """Two-decimal display, trailing zeros trimmed: 26/5 -> '5.2'."""
    s = f"{float(x):.2f}".rstrip("0").rstrip(".")
    return s if s else "0"


# ---------------------------------------------------------------------------
# capture-time formulas per algorithm


def grid_pair_time(m: int, n: int) -> int:
    return (m + n) // 2 - 1


def grid_pairs_time(m: int, n: int, k: int) -> int:
    if k % 2 or k < 4:
        raise ValueError("the paired grid strategy needs an even k >= 4")
    if m > n:
        m, n = n, m
    h = k // 2
    return -(-(n - h) // (2 * h)) + -(-(m - 2) // 2)


def cylinder_time(m: int, n: int, k: int) -> int:
    reach = -(-(n - k) // (2 * k))
    if m // 2 <= reach:
        return -(-n // k) + 2 * (m // 2) - 2
    return -(-n // k) + reach + m // 2 - 2


def torus_phases(m: int, n: int, k: int) -> tuple[int, int, int]:
    """(deploy, chase, rise) round counts; capture is one more round."""
    if n < m:
        m, n = n, m
    w = -(-n // (k - 1))
    t1 = -(-2 * n // k) - w
    if m <= w:
        t2 = w + 2 * (m // 2) - 3
        t3 = -(-(m - 6) // 4)
    elif w % 2 == 0:
        t2 = 2 * w - 3
        lam = m - (-(-n // (2 * (k - 1)))) - 3
        t3 = -(-lam // 2)
    else:
        t2 = 2 * w - 4
        lam = m - n // (2 * (k - 1)) - 3
        t3 = -(-lam // 2)
    return t1, t2, max(0, t3)


def torus_time(m: int, n: int, k: int) -> int:
    t1, t2, t3 = torus_phases(m, n, k)
    return t1 + t2 + t3 + 1


def strategy_capture_time(kind: str, m: int, n: int, k: int) -> int:
    """Worst-case capture round of the family's strategy for k cops."""
    if kind == "grid":
        return grid_pair_time(m, n) if k == 2 else grid_pairs_time(m, n, k)
    if kind == "semitorus":
        return cylinder_time(m, n, k)
    if kind == "torus":
        return torus_time(m, n, k)
    raise ValueError(f"unknown board kind {kind!r}")


def work(kind: str, m: int, n: int, k: int) -> int:
    """Total cop-rounds spent: team size times capture round."""
    return k * strategy_capture_time(kind, m, n, k)


# ---------------------------------------------------------------------------
# torus optimality window


@dataclass
class Window:
    lo: Fraction
    hi: Fraction
    strict_hi: bool = False

    @property
    def int_lo(self) -> int:
        return ceil(self.lo)

    @property
    def int_hi(self) -> int:
        h = floor(self.hi)
        if self.strict_hi and h == self.hi:
            h -= 1
        return h

    def __contains__(self, t: int) -> bool:
        return self.int_lo <= t <= self.int_hi

    def __str__(self):
        right = ")" if self.strict_hi else "]"
        return f"[{fmt_ratio(self.lo)}, {fmt_ratio(self.hi)}{right} -> {self.int_lo}..{self.int_hi}"


def torus_window(m: int, n: int, k: int) -> Window:
    """Exact-rational bracket on the optimal capture time with k cops."""
    if n < m:
        m, n = n, m
    w = -(-n // (k - 1))
    if k == 3:
        if m <= w:
            return Window(
                _F(n, 2) + _F(5 * m, 4) - _F(9, 2),
                _F(2 * n, 3) + _F(5 * m, 4) - _F(25, 12),
            )
        return Window(
            _F(25 * n, 24) + _F(m, 2) - _F(9, 2),
            _F(25 * n, 24) + _F(m, 2) - _F(17, 8),
        )
    if m <= w:
        return Window(
            _F(2 * n, k) + _F(5 * m, 4) - _F(9, 2),
            _F(2 * n, k) + _F(5 * m, 4) + _F(k - 1, k) - _F(11, 4),
        )
    return Window(
        _F(2 * n, k) + _F(3 * n, 4 * (k - 1)) + _F(m, 2) - _F(9, 2),
        _F(2 * n, k) + _F(3 * n, 4 * (k - 1)) + _F(m, 2) - _F(1, 2),
        strict_hi=True,
    )


# ---------------------------------------------------------------------------
# smallest team that meets a deadline


@dataclass
class TeamSize:
    k: int | None
    bound: Fraction | None = None
    hi: Fraction | None = None
    case: str = ""

    def render(self) -> str:
        if self.k is None:
            return "n/a: no team size meets this deadline"
        if self.hi is not None:
            return f"k in ({fmt_ratio(self.bound)}, {fmt_ratio(self.hi)}) -> k={self.k}"
        return f"k >= {fmt_ratio(self.bound)} -> k={self.k}"


def grid_team_for_deadline(m: int, n: int, t_star: int) -> TeamSize:
    """Smallest even team whose paired grid sweep meets deadline t_star."""
    if m > n:
        m, n = n, m
    den = 2 * t_star - m + 3
    if den <= 0:
        return TeamSize(None)
    bound = _F(2 * n, den)
    k = max(4, 2 * ceil(bound / 2))
    if bound <= 2:
        k = 2
    return TeamSize(k, bound)


def cylinder_team_for_deadline(m: int, n: int, t_star: int) -> TeamSize:
    """Smallest team meeting t_star on the cylinder; the returned case is
    re-checked at the resulting k and the other branch used on mismatch."""
    half = m // 2

    def deep(k: int) -> bool:  # border-limited chase, case "shallow" otherwise
        return half > -(-(n - k) // (2 * k))

    if m % 2 == 0:
        shallow = (_F(n, t_star - m + 2) if t_star - m + 2 > 0 else None, "shallow")
        deep_b = (_F(3 * n, 2 * t_star - m + 5) if 2 * t_star - m + 5 > 0 else None, "deep")
    else:
        shallow = (_F(n, t_star - m + 3) if t_star - m + 3 > 0 else None, "shallow")
        deep_b = (_F(3 * n, 2 * t_star - m + 7) if 2 * t_star - m + 7 > 0 else None, "deep")

    for bound, case in (deep_b, shallow):
        if bound is None or bound <= 0:
            continue
        k = max(2, ceil(bound))
        if (case == "deep") == deep(k):
            return TeamSize(k, bound, case=case)
    for bound, case in (deep_b, shallow):
        if bound is not None and bound > 0:
            return TeamSize(max(2, ceil(bound)), bound, case=case)
    return TeamSize(None)


def torus_team_for_deadline(m: int, n: int, t_star: int) -> TeamSize:
    """Smallest team meeting t_star on the torus, from the window bounds."""
    if n < m:
        m, n = n, m

    def shallow(k: int) -> bool:
        return m <= -(-n // (k - 1))

    # deep-board bracket: open interval
    den_lo = 4 * t_star - 2 * m + 18
    den_hi = 4 * t_star - 2 * m + 2
    if den_lo > 0 and den_hi > 0:
        lo = _F(11 * n, den_lo)
        hi = _F(11 * n, den_hi) + 1
        k = floor(lo) + 1
        if _F(k) <= lo:
            k += 1
        if _F(k) < hi and k >= 3 and not shallow(k):
            return TeamSize(k, lo, hi, case="deep")
    # shallow-board bracket: half-open
    den_lo = 4 * t_star - 5 * m + 18
    den_hi = 4 * t_star - 5 * m + 7
    if den_lo > 0 and den_hi > 0:
        lo = _F(8 * n, den_lo)
        hi = _F(8 * n, den_hi)
        k = ceil(lo)
        if _F(k) < hi and k >= 3 and shallow(k):
            return TeamSize(k, lo, hi, case="shallow")
    return TeamSize(None)


# ---------------------------------------------------------------------------
# lower bounds and cop numbers


def distance_lower_bound(kind: str, m: int, n: int) -> int:
    """Every strategy needs at least this many rounds on the bare distances."""
    if kind == "torus" and m == n and m % 2 == 0:
        return n - 2
    return n // 2 + m // 2 - 2


def predicted_cop_number(kind: str, m: int, n: int) -> int:
    """How many cops the board family needs at all."""
    if kind == "grid":
        return 1 if min(m, n) == 1 else 2
    if kind == "semitorus":
        return 2
    if kind == "torus":
        return 3
    raise ValueError(f"unknown board kind {kind!r}")


def has_isolated_unit_squares(kind: str, m: int, n: int) -> bool:
    """Whether every unit square of the board is an isolated 4-cycle."""
    if kind == "grid":
        return m >= 2 and n >= 2
    if kind == "semitorus":
        return n >= 4 and m >= 2
    return m >= 4 and n >= 4


def placement_sweep_lower_bound(board: Board, k: int) -> int:
    """min over cop placements of max over robber starts of the distance
    bound: the nearest cop must close its whole distance, and where the
    board is covered in isolated unit squares the robber dodges any lone
    cop, so the second cop's distance minus two rounds also binds."""
    verts = list(board.vertices())
    v = len(verts)
    d = np.zeros((v, v), dtype=np.int32)
    for i, a in enumerate(verts):
        for j, b in enumerate(verts):
            d[i, j] = board.distance(a, b)
    bonus = 2 if has_isolated_unit_squares(board.kind, board.m, board.n) else 0
    best = None
    for combo in combinations_with_replacement(range(v), k):
        rows = d[list(combo)]
        if k == 1:
            val = int(rows[0].max())
        else:
            two = np.partition(rows, 1, axis=0)[:2]
            val = int(np.maximum(two[0], two[1] - bonus).max())
        if best is None or val < best:
            best = val
    return best if best is not None else 0


# ---------------------------------------------------------------------------
# trend tables


def doubling_ratio_rows(i_max: int = 8) -> list[dict]:
    """Pair-strategy time over the distance bound on 4 x (4 * 2^i) grids."""
    out = []
    for i in range(i_max + 1):
        n = 4 * (2**i)
        t = grid_pair_time(4, n)
        lb = distance_lower_bound("grid", 4, n)
        out.append(
            {
                "i": i,
                "m": 4,
                "n": n,
                "t": t,
                "lower": lb,
                "ratio": _F(t, lb),
            }
        )
    return out


def square_window_rows(sizes=tuple(range(8, 65, 8))) -> list[dict]:
    """Window ceiling with three cops on n x n tori against the even-square
    bound n - 2; the ratio settles toward 37/24."""
    out = []
    for n in sizes:
        win = torus_window(n, n, 3)
        lb = distance_lower_bound("torus", n, n)
        out.append(
            {
                "n": n,
                "hi": win.hi,
                "lower": lb,
                "ratio": win.hi / lb,
                "limit": _F(37, 24),
            }
        )
    return out
