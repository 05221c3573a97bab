"""Cop strategies and robber policies, keyed by CLI algorithm id."""

from __future__ import annotations

from ..boards import Board
from .base import CopStrategy
from .grid import GridPairStrategy, GridPairsStrategy
from .sgrid import SemiTorusPairStrategy, SemiTorusSpreadStrategy
from .tgrid import TorusSpreadStrategy, TorusTripleStrategy
from .robbers import Robber, make_robber

ALGORITHMS = {
    cls.algorithm_id: cls
    for cls in (
        GridPairStrategy,
        GridPairsStrategy,
        SemiTorusPairStrategy,
        SemiTorusSpreadStrategy,
        TorusTripleStrategy,
        TorusSpreadStrategy,
    )
}


def make_strategy(algorithm: str, board: Board, k: int | None = None) -> CopStrategy:
    try:
        cls = ALGORITHMS[algorithm]
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}; pick from {sorted(ALGORITHMS)}")
    if k is None:
        return cls(board)  # type: ignore[call-arg]
    return cls(board, k)


def default_algorithm(board: Board, k: int) -> str:
    """The natural algorithm id for a board family and cop count."""
    if board.kind == "grid":
        return "grid" if k == 2 else "grid-k"
    if board.kind == "semitorus":
        return "sgrid" if k == 2 else "sgrid-k"
    return "tgrid" if k == 3 else "tgrid-k"


__all__ = [
    "ALGORITHMS",
    "CopStrategy",
    "Robber",
    "default_algorithm",
    "make_robber",
    "make_strategy",
]
