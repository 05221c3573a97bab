"""Game engine: round loop, capture rules, siege tests, trace I/O.

A game runs in rounds.  Round 0 is placement: the cop side puts down k
cops, then the robber picks a start outside every cop's closed
neighborhood.  Each later round has the cops move first (every cop steps
to a neighbor or stays, simultaneously) and then the robber moves.  The
cops capture by occupying the robber's vertex; a robber stepping onto a
cop is likewise captured, in the current round.  ``t`` is the index of
the capturing round.

Traces are JSON lines: one header object, one object per round, one
footer object.  Replaying a trace re-runs the game from the header and
must reproduce the stored lines byte-for-byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import IO, Iterable

from .boards import Board, Vertex

TRACE_VERSION = 1

DIRECTIONS = {
    "stay": (0, 0),
    "up": (-1, 0),
    "down": (1, 0),
    "left": (0, -1),
    "right": (0, 1),
}


def move_name(board: Board, frm: Vertex, to: Vertex) -> str:
    for name, (dr, dc) in DIRECTIONS.items():
        if board.wrap(frm[0] + dr, frm[1] + dc) == to:
            return name
    raise ValueError(f"{frm} -> {to} is not a single step")


def apply_move(board: Board, v: Vertex, name: str) -> Vertex:
    dr, dc = DIRECTIONS[name]
    w = board.wrap(v[0] + dr, v[1] + dc)
    if w is None:
        raise ValueError(f"move {name} from {v} leaves the board")
    return w


# ---------------------------------------------------------------------------
# siege tests


def is_siege(board: Board, cops: Iterable[Vertex], robber: Vertex) -> bool:
    """The robber is under siege: some cop stands in its open neighborhood
    and together the cops' closed neighborhoods cover that whole
    neighborhood, so every robber move (and staying put, next turn) loses."""
    cops = list(cops)
    ring = board.neighbors(robber)
    if not any(c in ring for c in cops):
        return False
    covered = set()
    for c in cops:
        covered.update(board.closed_neighbors(c))
    return all(w in covered for w in ring)


def min_siege_size(board: Board, robber: Vertex, max_size: int = 5) -> int | None:
    """Smallest number of cops that can hold a siege at `robber`.

    Exhaustive search over placements drawn from the two-step neighborhood
    (cops further away cannot cover anything in N(robber))."""
    from itertools import combinations

    candidates = set()
    for w in board.neighbors(robber):
        candidates.update(board.closed_neighbors(w))
    candidates.discard(robber)
    pool = sorted(candidates)
    for size in range(1, max_size + 1):
        for combo in combinations(pool, size):
            if is_siege(board, combo, robber):
                return size
    return None


# ---------------------------------------------------------------------------
# running games


@dataclass
class GameResult:
    outcome: str  # "capture" | "no-capture"
    t: int | None
    rounds: int
    robber_start: Vertex
    phases: dict | None = None
    trace_lines: list[str] = field(default_factory=list)


def default_round_cap(board: Board, k: int) -> int:
    return 4 * (board.m + board.n) * k


def run_game(
    board: Board,
    strategy,
    robber,
    *,
    round_cap: int | None = None,
    trace: IO[str] | None = None,
    keep_lines: bool = False,
    algorithm: str = "?",
    robber_name: str = "?",
    seed: int | None = None,
) -> GameResult:
    """Play one full game.

    `strategy` is a cop strategy object (see strategies.base); `robber` a
    robber policy.  If `trace` is given, JSON lines are written to it.
    """
    cops = list(strategy.placement())
    state = strategy.initial_state()
    start = robber.start(board, tuple(cops))
    for c in cops:
        if start in board.closed_neighbors(c):
            raise ValueError(
                f"robber start {start} lies in the closed neighborhood of cop at {c}"
            )
    cap = default_round_cap(board, len(cops)) if round_cap is None else round_cap

    lines: list[str] = []

    def emit(obj: dict) -> None:
        line = json.dumps(obj, separators=(", ", ": "))
        if trace is not None:
            trace.write(line + "\n")
        if keep_lines:
            lines.append(line)

    emit(
        {
            "trace": TRACE_VERSION,
            "spec": board.spec(),
            "algorithm": algorithm,
            "k": len(cops),
            "robber": robber_name,
            "seed": seed,
            "round_cap": cap,
        }
    )
    emit(
        {
            "round": 0,
            "cop_moves": None,
            "cops": [list(c) for c in cops],
            "robber_move": None,
            "robber": list(start),
            "siege": is_siege(board, cops, start),
            "pre_siege": bool(strategy.pre_siege(tuple(cops), start, state)),
        }
    )

    pos = start
    t = None
    rounds = 0
    for rnd in range(1, cap + 1):
        rounds = rnd
        new_cops, state = strategy.step(tuple(cops), pos, state)
        new_cops = list(new_cops)
        if len(new_cops) != len(cops):
            raise ValueError("strategy changed the number of cops")
        cop_moves = [move_name(board, a, b) for a, b in zip(cops, new_cops)]
        cops = new_cops
        captured = pos in cops
        robber_move = None
        if not captured:
            nxt = robber.move(board, tuple(cops), pos)
            if nxt not in board.closed_neighbors(pos):
                raise ValueError(f"illegal robber move {pos} -> {nxt}")
            robber_move = move_name(board, pos, nxt)
            pos = nxt
            captured = pos in cops
        emit(
            {
                "round": rnd,
                "cop_moves": cop_moves,
                "cops": [list(c) for c in cops],
                "robber_move": robber_move,
                "robber": list(pos),
                "siege": is_siege(board, cops, pos),
                "pre_siege": bool(strategy.pre_siege(tuple(cops), pos, state)),
            }
        )
        if captured:
            t = rnd
            break

    outcome = "capture" if t is not None else "no-capture"
    phases = strategy.phase_report(state)
    footer: dict = {"outcome": outcome, "t": t}
    if phases:
        footer["phases"] = phases
    emit(footer)
    return GameResult(outcome, t, rounds, start, phases, lines)


# ---------------------------------------------------------------------------
# replay


def replay_trace(lines: list[str]) -> GameResult:
    """Re-run the game described by `lines` and verify byte-for-byte equality.

    Raises ValueError on any divergence.  Returns the fresh result.
    """
    from .strategies import make_strategy
    from .strategies.robbers import ScriptReplayRobber

    header = json.loads(lines[0])
    board = Board.from_spec(header["spec"])
    strategy = make_strategy(header["algorithm"], board, header["k"])
    # The robber's recorded decisions are replayed verbatim; this checks the
    # cop side and all bookkeeping deterministically.
    body = [json.loads(ln) for ln in lines[1:-1]]
    start = tuple(body[0]["robber"])
    moves = [rec["robber_move"] for rec in body[1:] if rec["robber_move"] is not None]
    robber = ScriptReplayRobber(start, moves)
    result = run_game(
        board,
        strategy,
        robber,
        round_cap=header["round_cap"],
        keep_lines=True,
        algorithm=header["algorithm"],
        robber_name=header["robber"],
        seed=header["seed"],
    )
    if result.trace_lines != [ln.rstrip("\n") for ln in lines]:
        for old, new in zip(lines, result.trace_lines):
            if old.rstrip("\n") != new:
                raise ValueError(f"replay diverged:\n  stored: {old!r}\n  replay: {new!r}")
        raise ValueError("replay diverged in length")
    return result
