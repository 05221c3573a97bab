import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridpursuit.boards import Board, VertexClass

from oracles import bfs_distance


def board_strategy():
    kinds = st.sampled_from(["grid", "semitorus", "torus"])
    return kinds.flatmap(
        lambda kind: st.tuples(
            st.just(kind),
            st.integers(min_value=3 if kind == "torus" else 2, max_value=9),
            st.integers(min_value=2 if kind == "grid" else 3, max_value=9),
        )
    ).map(lambda t: Board.make(*t))


def test_constructors_reject_small_boards():
    with pytest.raises(ValueError):
        Board.grid(1, 5)
    with pytest.raises(ValueError):
        Board.semitorus(2, 2)
    with pytest.raises(ValueError):
        Board.torus(2, 3)
    with pytest.raises(ValueError):
        Board.make("moebius", 4, 4)


def test_spec_round_trip():
    b = Board.semitorus(4, 7)
    assert Board.from_spec(b.spec()) == b


def test_neighbor_order_is_up_down_left_right():
    b = Board.grid(4, 4)
    assert b.neighbors((1, 1)) == [(0, 1), (2, 1), (1, 0), (1, 2)]
    assert b.neighbors((0, 0)) == [(1, 0), (0, 1)]
    t = Board.torus(4, 4)
    assert t.neighbors((0, 0)) == [(3, 0), (1, 0), (0, 3), (0, 1)]


def test_semitorus_wraps_columns_only():
    b = Board.semitorus(3, 5)
    assert b.wrap(0, -1) == (0, 4)
    assert b.wrap(-1, 2) is None
    assert b.wrap(3, 2) is None
    assert (0, 4) in b.neighbors((0, 0))


@given(board_strategy())
@settings(max_examples=60, deadline=None)
def test_distance_equals_bfs(board):
    src = (board.m // 2, board.n // 3)
    dist = bfs_distance(board, src)
    for v in board.vertices():
        assert board.distance(src, v) == dist[v]


@given(board_strategy())
@settings(max_examples=60, deadline=None)
def test_signed_deltas_are_shortest_and_tie_positive(board):
    for c1 in range(board.n):
        for c2 in range(board.n):
            d = board.signed_col_delta(c1, c2)
            assert abs(d) == board.col_distance(c1, c2)
            if board.wrap_cols and 2 * abs(d) == board.n:
                assert d > 0
    for r1 in range(board.m):
        d = board.signed_row_delta(r1, (r1 + board.m // 2) % board.m)
        assert abs(d) == board.row_distance(r1, (r1 + board.m // 2) % board.m)


def test_vertex_classes():
    g = Board.grid(3, 4)
    assert g.vertex_class((0, 0)) is VertexClass.CORNER
    assert g.vertex_class((0, 2)) is VertexClass.BORDER
    assert g.vertex_class((1, 2)) is VertexClass.INTERNAL
    s = Board.semitorus(3, 4)
    # no corners once the columns wrap
    assert s.vertex_class((0, 0)) is VertexClass.BORDER
    assert s.vertex_class((1, 0)) is VertexClass.INTERNAL
    t = Board.torus(3, 4)
    assert all(t.vertex_class(v) is VertexClass.INTERNAL for v in t.vertices())


def test_unit_squares():
    g = Board.grid(3, 3)
    sq = g.four_cycle_at((0, 0))
    assert sq == [(0, 0), (0, 1), (1, 1), (1, 0)]
    assert g.is_chordless_cycle(sq)
    assert g.is_isolated_cycle(sq)  # every outside vertex touches it at most once
    assert g.four_cycle_at((2, 2)) is None
    assert g.four_cycle_at((0, 2)) is None


def test_unit_square_isolation_depends_on_size():
    # On a 2xN strip every outside vertex touches the square at most once.
    b = Board.grid(2, 5)
    assert b.is_isolated_cycle(b.four_cycle_at((0, 0)))
    # Wrapping three columns folds the square onto its own flank.
    s = Board.semitorus(2, 3)
    assert not s.is_isolated_cycle(s.four_cycle_at((0, 0)))


def test_cycle_predicates_reject_junk():
    b = Board.grid(4, 4)
    assert not b.is_cycle([(0, 0), (0, 1)])
    assert not b.is_cycle([(0, 0), (0, 1), (3, 3)])
    ring = [(0, 0), (0, 1), (0, 2), (1, 2), (1, 1), (1, 0)]
    assert b.is_cycle(ring)
    assert not b.is_chordless_cycle(ring)  # (0,1)-(1,1) is a chord


def test_torus_four_cycle_wraps():
    t = Board.torus(3, 3)
    sq = t.four_cycle_at((2, 2))
    assert sq == [(2, 2), (2, 0), (0, 0), (0, 2)]
    assert t.is_chordless_cycle(sq)
