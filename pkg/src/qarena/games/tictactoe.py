"""Tic-Tac-Toe engine. Cells are indexed 0..8, row-major; P1 plays X, P2 plays O."""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import ClassVar

from .base import GameId, IllegalActionError, Outcome, Player, TerminalStateError

WIN_LINES = (
    (0, 1, 2), (3, 4, 5), (6, 7, 8),
    (0, 3, 6), (1, 4, 7), (2, 5, 8),
    (0, 4, 8), (2, 4, 6),
)

EMPTY_BOARD = (0,) * 9


@dataclass(frozen=True, slots=True)
class TicTacToeState:
    board: tuple[int, ...] = EMPTY_BOARD  # 0 empty, 1 = P1 mark, 2 = P2 mark
    to_move: Player = Player.P1
    ply: int = 0

    game: ClassVar[GameId] = GameId.TICTACTOE

    def legal_actions(self) -> list[int]:
        if self.outcome() is not None:
            raise TerminalStateError()
        board = self.board
        return [c for c in range(9) if board[c] == 0]

    def apply(self, action: int) -> "TicTacToeState":
        if (
            not isinstance(action, int)
            or not 0 <= action < 9
            or self.board[action] != 0
            or self.outcome() is not None
        ):
            raise IllegalActionError(action)
        board = list(self.board)
        board[action] = self.to_move.value
        return replace(
            self, board=tuple(board), to_move=self.to_move.opponent, ply=self.ply + 1
        )

    def outcome(self) -> Outcome | None:
        board = self.board
        for a, b, c in WIN_LINES:
            v = board[a]
            if v != 0 and v == board[b] == board[c]:
                return Outcome.P1_WIN if v == 1 else Outcome.P2_WIN
        if 0 not in board:
            return Outcome.DRAW
        return None

    def state_key(self) -> bytes:
        return b"T" + bytes((self.to_move.value,)) + bytes(self.board)


def initial_state() -> TicTacToeState:
    return TicTacToeState()


def action_to_text(action: int) -> str:
    return str(action)


def action_from_text(text: str) -> int:
    cell = int(text)
    if not 0 <= cell < 9:
        raise ValueError(f"bad cell: {text}")
    return cell
