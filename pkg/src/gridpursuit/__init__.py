"""Pursuit games on grids, cylinders, and tori.

Deterministic cop teams with proven capture-time formulas, an exact
adversarial verifier, an exhaustive optimal-play solver, and the
closed-form analysis layer, all behind one CLI (``gridpursuit``).
"""

from .boards import Board, Vertex, VertexClass
from .engine import (
    GameResult,
    default_round_cap,
    is_siege,
    min_siege_size,
    replay_trace,
    run_game,
)
from .solver import (
    BudgetExceeded,
    SolveResult,
    cop_number,
    optimal_capture_time,
    solve,
)
from .strategies import default_algorithm, make_robber, make_strategy
from .verify import Adversary, VerifyResult, verify_strategy

__version__ = "0.1.0"

__all__ = [
    "Adversary",
    "Board",
    "BudgetExceeded",
    "GameResult",
    "SolveResult",
    "VerifyResult",
    "Vertex",
    "VertexClass",
    "cop_number",
    "default_algorithm",
    "default_round_cap",
    "is_siege",
    "make_robber",
    "make_strategy",
    "min_siege_size",
    "optimal_capture_time",
    "replay_trace",
    "run_game",
    "solve",
    "verify_strategy",
]
