"""Independent reference implementations used to cross-check the package.

Everything here is deliberately naive: plain dicts, ordered cop tuples,
repeated-sweep value iteration.  Slow, but with no machinery shared with
the fast solver, so agreement is meaningful.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations_with_replacement, product

INF = float("inf")


def bfs_distance(board, src):
    """Hop distances from `src` to every vertex, by plain BFS."""
    dist = {src: 0}
    q = deque([src])
    while q:
        v = q.popleft()
        for w in board.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist


def naive_values(board, k):
    """Exact capture-time values for k cops by fixpoint value iteration.

    Returns (value_cop, value_rob): dicts keyed by (cops, robber) with
    cops an ordered tuple.  Value = cop turns until capture counting the
    turn about to be played; INF = the robber escapes forever.  A robber
    stepping onto a cop is captured in the round of that cop turn, so
    robber-turn suicide costs 0 further cop turns.
    """
    verts = list(board.vertices())
    moves = {v: [v] + board.neighbors(v) for v in verts}
    states_c = {}
    states_r = {}
    for cops in product(verts, repeat=k):
        for r in verts:
            captured = r in cops
            states_c[cops, r] = 0 if captured else INF
            states_r[cops, r] = 0 if captured else INF

    cop_moves = {cops: list(product(*(moves[c] for c in cops))) for cops in product(verts, repeat=k)}

    changed = True
    while changed:
        changed = False
        for (cops, r), old in states_r.items():
            if r in cops:
                continue
            best = max(
                (0 if rp in cops else states_c[cops, rp]) for rp in moves[r]
            )
            if best != old:
                states_r[cops, r] = best
                changed = True
        for (cops, r), old in states_c.items():
            if r in cops:
                continue
            best = INF
            for new in cop_moves[cops]:
                if r in new:
                    best = 1
                    break
                vr = states_r[new, r]
                if vr + 1 < best:
                    best = vr + 1
            if best != old:
                states_c[cops, r] = best
                changed = True
    return states_c, states_r


def naive_optimal(board, k, values=None):
    """Best-placement worst-start value, robber free to start on any
    non-cop vertex.  None when some start escapes every placement."""
    states_c = values[0] if values else naive_values(board, k)[0]
    verts = list(board.vertices())
    best = INF
    for cops in combinations_with_replacement(verts, k):
        worst = max(states_c[cops, r] for r in verts if r not in cops)
        best = min(best, worst)
    return None if best is INF else int(best)


def naive_cop_number(board, k_max=4):
    for k in range(1, k_max + 1):
        if naive_optimal(board, k) is not None:
            return k
    return None
