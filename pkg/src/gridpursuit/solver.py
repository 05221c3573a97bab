"""Exact game solving: optimal capture time and cop number.

Both sides play optimally here (unlike `verify`, which fixes the cop
side).  States are (cop multiset, robber vertex, side to move); values
count cop turns, so the value of a cop-turn state equals the capture
round t under optimal play.  The robber may start on any non-cop vertex.

The state space is solved backwards from the captured states with a
layered parent-counting sweep:

* a cop-turn state is settled the first time any successor settles
  (the cops pick the minimum), one layer later;
* a robber-turn state is settled once ALL its successors are settled
  (the robber picks the maximum), in the same layer as the last one.
  Stepping onto a cop counts as a successor and just settles at 0, which
  is exactly the "suicide is capture now" rule.

Cop moves are a product space, so transitions live on cop *multisets*:
one CSR graph, shared by both propagation directions since every cop
step is reversible.  The heavy loops are numba-compiled; a solve of a
few million states takes seconds.

Value 255 means the robber escapes forever; any finite value must fit
under that, which holds comfortably for every board this refuses to
budget-check (see `estimate_states`).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .boards import Board, Vertex

UNSET = 255
DEFAULT_BUDGET = 50_000_000


class BudgetExceeded(Exception):
    def __init__(self, states: int, budget: int):
        super().__init__(
            f"state space too large: {states:,} states exceeds the budget of {budget:,}"
        )
        self.states = states
        self.budget = budget


def estimate_states(board: Board, k: int) -> int:
    v = board.num_vertices
    msets = 1
    for i in range(k):
        msets = msets * (v + i) // (i + 1)
    return msets * v * 2


def _binom_table(n: int, k: int) -> np.ndarray:
    t = np.zeros((n + 1, k + 1), dtype=np.int64)
    t[:, 0] = 1
    for i in range(1, n + 1):
        for j in range(1, k + 1):
            t[i, j] = t[i - 1, j - 1] + t[i - 1, j]
    return t


@njit(cache=True)
def _rank_sorted(a, k, binom):
    r = 0
    for i in range(k):
        r += binom[a[i] + i, i + 1]
    return r


@njit(cache=True)
def _enumerate_msets(v, k, binom, verts, member):
    a = np.zeros(k, dtype=np.int16)
    total = verts.shape[0]
    count = 0
    while count < total:
        r = _rank_sorted(a, k, binom)
        for i in range(k):
            verts[r, i] = a[i]
            member[r, a[i]] = True
        count += 1
        # next non-decreasing tuple
        i = k - 1
        while i >= 0 and a[i] == v - 1:
            i -= 1
        if i < 0:
            break
        a[i] += 1
        for j in range(i + 1, k):
            a[j] = a[i]


@njit(cache=True)
def _mset_moves(src, k, nbr_indptr, nbr_idx, binom, buf):
    """All distinct multisets reachable in one cop turn, sorted into buf.

    Returns the count of unique destination ranks."""
    choice = np.zeros(k, dtype=np.int64)
    cand = np.zeros(k, dtype=np.int16)
    n_out = 0
    while True:
        for i in range(k):
            cand[i] = nbr_idx[nbr_indptr[src[i]] + choice[i]]
        # insertion sort, k is tiny
        for i in range(1, k):
            x = cand[i]
            j = i - 1
            while j >= 0 and cand[j] > x:
                cand[j + 1] = cand[j]
                j -= 1
            cand[j + 1] = x
        buf[n_out] = _rank_sorted(cand, k, binom)
        n_out += 1
        # odometer
        i = k - 1
        while i >= 0:
            choice[i] += 1
            if choice[i] < nbr_indptr[src[i] + 1] - nbr_indptr[src[i]]:
                break
            choice[i] = 0
            i -= 1
        if i < 0:
            break
    sub = buf[:n_out]
    sub.sort()
    u = 1
    for i in range(1, n_out):
        if sub[i] != sub[i - 1]:
            sub[u] = sub[i]
            u += 1
    return u


@njit(cache=True)
def _build_csr(verts, k, nbr_indptr, nbr_idx, binom, max_prod):
    s = verts.shape[0]
    counts = np.zeros(s + 1, dtype=np.int64)
    buf = np.zeros(max_prod, dtype=np.int64)
    for i in range(s):
        counts[i + 1] = _mset_moves(verts[i], k, nbr_indptr, nbr_idx, binom, buf)
    indptr = np.cumsum(counts)
    idx = np.zeros(indptr[s], dtype=np.int32)
    for i in range(s):
        u = _mset_moves(verts[i], k, nbr_indptr, nbr_idx, binom, buf)
        base = indptr[i]
        for j in range(u):
            idx[base + j] = buf[j]
    return indptr, idx


@njit(cache=True)
def _retrograde(member, mset_indptr, mset_idx, nbr_indptr, nbr_idx, v):
    s = member.shape[0]
    value_c = np.full((s, v), UNSET, dtype=np.uint8)
    value_r = np.full((s, v), UNSET, dtype=np.uint8)
    cnt = np.zeros((s, v), dtype=np.uint8)
    for r in range(v):
        cnt[:, r] = nbr_indptr[r + 1] - nbr_indptr[r]

    front_c = np.zeros(s * v, dtype=np.int64)
    front_r = np.zeros(s * v, dtype=np.int64)
    nc = 0
    nr = 0
    for i in range(s):
        for r in range(v):
            if member[i, r]:
                value_c[i, r] = 0
                value_r[i, r] = 0
                front_c[nc] = i * v + r
                nc += 1
                front_r[nr] = i * v + r
                nr += 1

    layer = 0
    while nc > 0 or nr > 0:
        # Cop-turn states settled at `layer` retire robber options.
        head = 0
        while head < nc:
            sid = front_c[head]
            head += 1
            i = sid // v
            r = sid % v
            for p in range(nbr_indptr[r], nbr_indptr[r + 1]):
                r2 = nbr_idx[p]
                if value_r[i, r2] != UNSET:
                    continue
                cnt[i, r2] -= 1
                if cnt[i, r2] == 0:
                    value_r[i, r2] = layer
                    front_r[nr] = i * v + r2
                    nr += 1
        # Robber-turn states settled at `layer` give cop turns at layer+1.
        next_c = 0
        for q in range(nr):
            sid = front_r[q]
            i = sid // v
            r = sid % v
            for p in range(mset_indptr[i], mset_indptr[i + 1]):
                i2 = mset_idx[p]
                if value_c[i2, r] != UNSET:
                    continue
                value_c[i2, r] = layer + 1
                front_c[next_c] = i2 * v + r
                next_c += 1
        nc = next_c
        nr = 0
        layer += 1
        if layer >= UNSET:
            break
    return value_c, value_r


@dataclass
class SolveResult:
    board: Board
    k: int
    verts: np.ndarray  # (S, k) sorted vertex ids per multiset
    member: np.ndarray  # (S, V) bool
    value_cop: np.ndarray  # (S, V) uint8, capture round with cops to move
    value_rob: np.ndarray  # (S, V) uint8, with robber to move
    mset_indptr: np.ndarray
    mset_idx: np.ndarray
    binom: np.ndarray

    def rank(self, cops) -> int:
        ids = sorted(self.board.index(c) for c in cops)
        r = 0
        for i, a in enumerate(ids):
            r += int(self.binom[a + i, i + 1])
        return r

    def unrank(self, rank: int) -> tuple[Vertex, ...]:
        return tuple(self.board.vertex_at(int(x)) for x in self.verts[rank])

    def worst_start_value(self, rank: int) -> int:
        """Max capture round over all non-cop robber starts, cops to move."""
        row = np.where(self.member[rank], 0, self.value_cop[rank])
        return int(row.max())

    def optimal(self) -> tuple[int | None, tuple[Vertex, ...]]:
        """Best placement and its worst-start value (None if the robber
        escapes even the best placement)."""
        masked = np.where(self.member, 0, self.value_cop)
        per_rank = masked.max(axis=1)
        at = int(per_rank.argmin())
        val = int(per_rank[at])
        return (None if val >= UNSET else val), self.unrank(at)

    def cop_win(self) -> bool:
        return self.optimal()[0] is not None


def _vertex_moves_csr(board: Board) -> tuple[np.ndarray, np.ndarray]:
    """Stay-inclusive neighbor lists for every vertex, CSR layout."""
    indptr = [0]
    idx = []
    for v in board.vertices():
        opts = [board.index(v)] + [board.index(w) for w in board.neighbors(v)]
        idx.extend(opts)
        indptr.append(len(idx))
    return np.array(indptr, dtype=np.int64), np.array(idx, dtype=np.int32)


def solve(board: Board, k: int, budget: int = DEFAULT_BUDGET) -> SolveResult:
    states = estimate_states(board, k)
    if states > budget:
        raise BudgetExceeded(states, budget)
    v = board.num_vertices
    binom = _binom_table(v + k + 1, k + 1)
    n_msets = int(binom[v + k - 1, k])
    verts = np.zeros((n_msets, k), dtype=np.int16)
    member = np.zeros((n_msets, v), dtype=np.bool_)
    _enumerate_msets(v, k, binom, verts, member)

    nbr_indptr, nbr_idx = _vertex_moves_csr(board)
    max_deg = int((nbr_indptr[1:] - nbr_indptr[:-1]).max())
    indptr, idx = _build_csr(verts, k, nbr_indptr, nbr_idx, binom, max_deg**k)
    value_c, value_r = _retrograde(member, indptr, idx, nbr_indptr, nbr_idx, v)
    return SolveResult(board, k, verts, member, value_c, value_r, indptr, idx, binom)


def optimal_capture_time(board: Board, k: int, budget: int = DEFAULT_BUDGET) -> int | None:
    """Capture round under optimal play by both sides, or None if k cops
    cannot force capture on this board."""
    return solve(board, k, budget).optimal()[0]


def cop_number(board: Board, k_max: int = 8, budget: int = DEFAULT_BUDGET) -> int | None:
    for k in range(1, k_max + 1):
        if solve(board, k, budget).cop_win():
            return k
    return None


def save_table(path: str, result: SolveResult) -> None:
    np.savez_compressed(
        path,
        kind=result.board.kind,
        m=result.board.m,
        n=result.board.n,
        k=result.k,
        value_cop=result.value_cop,
        value_rob=result.value_rob,
    )


def load_table(path: str):
    """Load the value arrays saved by `save_table` (values only, no CSR)."""
    data = np.load(path, allow_pickle=False)
    board = Board.make(str(data["kind"]), int(data["m"]), int(data["n"]))
    return board, int(data["k"]), data["value_cop"], data["value_rob"]
