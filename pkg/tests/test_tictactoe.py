import pytest

from qarena.games import GameId, Outcome, Player, initial_state
from qarena.games.base import IllegalActionError, TerminalStateError
from qarena.games.tictactoe import TicTacToeState


def board_from(marks: dict[int, int]) -> tuple[int, ...]:
    cells = [0] * 9
    for cell, mark in marks.items():
        cells[cell] = mark
    return tuple(cells)


def test_initial_state():
    s = initial_state(GameId.TICTACTOE)
    assert s.board == (0,) * 9
    assert s.to_move is Player.P1
    assert s.ply == 0
    assert s.outcome() is None


def test_initial_legal_actions_all_cells():
    s = initial_state(GameId.TICTACTOE)
    assert s.legal_actions() == list(range(9))


def test_legal_actions_skips_occupied_cells():
    # Cells 0 and 4 taken -> the seven remaining cells, ascending.
    s = TicTacToeState(board=board_from({0: 1, 4: 2}), to_move=Player.P1, ply=2)
    assert s.legal_actions() == [1, 2, 3, 5, 6, 7, 8]


def test_apply_places_mark_and_flips_turn():
    s = initial_state(GameId.TICTACTOE).apply(4)
    assert s.board[4] == 1
    assert s.to_move is Player.P2
    assert s.ply == 1


def test_apply_rejects_occupied_cell():
    s = initial_state(GameId.TICTACTOE).apply(4)
    with pytest.raises(IllegalActionError):
        s.apply(4)


def test_apply_rejects_moves_on_finished_game():
    s = TicTacToeState(board=board_from({0: 1, 1: 1, 2: 1, 3: 2, 4: 2}), to_move=Player.P2, ply=5)
    assert s.outcome() is Outcome.P1_WIN
    with pytest.raises(IllegalActionError):
        s.apply(5)
    with pytest.raises(TerminalStateError):
        s.legal_actions()


def test_top_row_wins_for_p1():
    s = TicTacToeState(board=board_from({0: 1, 1: 1, 2: 1, 3: 2, 4: 2}), to_move=Player.P2, ply=5)
    assert s.outcome() is Outcome.P1_WIN
    assert s.outcome().winner is Player.P1
    assert s.outcome().value_for(Player.P2) == -1.0


def test_full_board_without_line_is_draw():
    s = TicTacToeState(board=(1, 2, 1, 1, 2, 2, 2, 1, 1), to_move=Player.P2, ply=9)
    assert s.outcome() is Outcome.DRAW


def test_column_and_diagonal_wins():
    col = TicTacToeState(board=board_from({2: 2, 5: 2, 8: 2, 0: 1, 1: 1, 4: 1}), to_move=Player.P1)
    assert col.outcome() is Outcome.P2_WIN
    diag = TicTacToeState(board=board_from({0: 1, 4: 1, 8: 1, 1: 2, 2: 2}), to_move=Player.P2)
    assert diag.outcome() is Outcome.P1_WIN


def test_state_key_stable_and_injective():
    a = initial_state(GameId.TICTACTOE)
    assert a.state_key() == initial_state(GameId.TICTACTOE).state_key()
    b = a.apply(0)
    c = a.apply(1)
    assert b.state_key() != c.state_key()
    assert b.state_key() != a.state_key()


def test_key_rebuilt_from_same_move_sequence_matches():
    moves = [4, 0, 8, 2, 5]
    s1 = initial_state(GameId.TICTACTOE)
    s2 = initial_state(GameId.TICTACTOE)
    for m in moves:
        s1 = s1.apply(m)
        s2 = s2.apply(m)
    assert s1.state_key() == s2.state_key()
    assert s1 == s2
