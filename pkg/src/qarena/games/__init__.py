"""Uniform environment interface over the three game engines.

Every engine exposes an immutable state type with ``legal_actions`` /
``apply`` / ``outcome`` / ``state_key`` methods; the module-level functions
here dispatch on the state so callers can stay game-agnostic. All operations
are pure: states are frozen values, safe to share and hash on their keys.
"""
from __future__ import annotations

from typing import Union

from . import mancala, morris, tictactoe
from .base import (
    GameError,
    GameId,
    IllegalActionError,
    Outcome,
    Player,
    TerminalStateError,
)
from .mancala import MancalaState
from .morris import MorrisState, Place, Move, Remove
from .tictactoe import TicTacToeState

GameState = Union[TicTacToeState, MorrisState, MancalaState]
Action = Union[int, morris.MorrisAction]

_ENGINES = {
    GameId.TICTACTOE: tictactoe,
    GameId.NINE_MENS_MORRIS: morris,
    GameId.MANCALA: mancala,
}


def initial_state(game: GameId) -> GameState:
    return _ENGINES[game].initial_state()


def legal_actions(state: GameState) -> list:
    return state.legal_actions()


def apply_action(state: GameState, action: Action) -> GameState:
    return state.apply(action)


def outcome(state: GameState) -> Outcome | None:
    return state.outcome()


def state_key(state: GameState) -> bytes:
    return state.state_key()


def action_to_text(game: GameId, action: Action) -> str:
    return _ENGINES[game].action_to_text(action)


def action_from_text(game: GameId, text: str) -> Action:
    return _ENGINES[game].action_from_text(text)


__all__ = [
    "Action",
    "GameError",
    "GameId",
    "GameState",
    "IllegalActionError",
    "MancalaState",
    "MorrisState",
    "Move",
    "Outcome",
    "Place",
    "Player",
    "Remove",
    "TerminalStateError",
    "TicTacToeState",
    "action_from_text",
    "action_to_text",
    "apply_action",
    "initial_state",
    "legal_actions",
    "mancala",
    "morris",
    "outcome",
    "state_key",
    "tictactoe",
]
