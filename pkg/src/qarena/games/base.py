"""Shared vocabulary for the three game engines: players, game ids, outcomes, errors."""
from __future__ import annotations

from enum import Enum


class GameId(Enum):
    TICTACTOE = "tictactoe"
    NINE_MENS_MORRIS = "nine-mens-morris"
    MANCALA = "mancala"

    @classmethod
    def parse(cls, text: str) -> "GameId":
        aliases = {
            "tictactoe": cls.TICTACTOE,
            "ttt": cls.TICTACTOE,
            "nine-mens-morris": cls.NINE_MENS_MORRIS,
            "morris": cls.NINE_MENS_MORRIS,
            "nmm": cls.NINE_MENS_MORRIS,
            "mancala": cls.MANCALA,
        }
        key = text.strip().lower()
        if key not in aliases:
            raise ValueError(f"unknown game: {text!r}")
        return aliases[key]


class Player(Enum):
    P1 = 1
    P2 = 2

    @property
    def opponent(self) -> "Player":
        return Player.P2 if self is Player.P1 else Player.P1


class Outcome(Enum):
    """Terminal result of a game. Zero-sum: a win for one side is a loss for the other."""

    P1_WIN = "p1"
    P2_WIN = "p2"
    DRAW = "draw"

    @staticmethod
    def win(player: Player) -> "Outcome":
        return Outcome.P1_WIN if player is Player.P1 else Outcome.P2_WIN

    @property
    def winner(self) -> Player | None:
        if self is Outcome.P1_WIN:
            return Player.P1
        if self is Outcome.P2_WIN:
            return Player.P2
        return None

    def value_for(self, player: Player) -> float:
        """+1 win / -1 loss / 0 draw from the given player's perspective."""
        if self.winner is None:
            return 0.0
        return 1.0 if self.winner is player else -1.0


class GameError(Exception):
    pass


class TerminalStateError(GameError):
    """An operation that requires a live game was called on a terminal state."""

    def __init__(self) -> None:
        super().__init__("terminal")


class IllegalActionError(GameError):
    def __init__(self, action: object) -> None:
        super().__init__(f"illegal_action: {action!r}")
        self.action = action
