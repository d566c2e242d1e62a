"""Reachable-state enumeration, random playouts, and the playout log format.

Log format: one game per line, ``<game-id> <action;action;...> <outcome>``,
e.g. ``tictactoe 4;0;8;2;6;... p1``.
"""
from __future__ import annotations

import random
from collections import deque

from . import action_from_text, action_to_text, initial_state
from .base import GameError, GameId, Outcome


class EnumerationCapError(GameError):
    """Raised when the distinct-state cap is hit; carries the partial count."""

    def __init__(self, partial_count: int, cap: int) -> None:
        super().__init__(f"cap exceeded: {partial_count} states found, cap={cap}")
        self.partial_count = partial_count
        self.cap = cap


def enumerate_reachable(game: GameId, cap: int = 1_000_000, depth: int | None = None) -> int:
    """Count distinct states (by key, terminals included) reachable from the start.

    Breadth-first closure over ``apply``; ``depth`` optionally truncates the
    closure that many plies from the initial state. Exceeding ``cap`` distinct
    states raises :class:`EnumerationCapError` with the partial count.
    """
    start = initial_state(game)
    seen = {start.state_key()}
    if cap < 1:
        raise EnumerationCapError(len(seen), cap)
    frontier = deque([(start, 0)])
    while frontier:
        state, d = frontier.popleft()
        if depth is not None and d >= depth:
            continue
        if state.outcome() is not None:
            continue
        for action in state.legal_actions():
            succ = state.apply(action)
            key = succ.state_key()
            if key in seen:
                continue
            seen.add(key)
            if len(seen) > cap:
                raise EnumerationCapError(len(seen), cap)
            frontier.append((succ, d + 1))
    return len(seen)


def random_playout(game: GameId, rng: random.Random) -> tuple[list, Outcome]:
    """Play uniformly random moves to the end; returns (actions, outcome)."""
    state = initial_state(game)
    actions = []
    while (result := state.outcome()) is None:
        legal = state.legal_actions()
        action = legal[rng.randrange(len(legal))]
        actions.append(action)
        state = state.apply(action)
    return actions, result


def replay(game: GameId, actions: list) -> tuple[list, Outcome | None]:
    """Re-apply a recorded action sequence, returning every visited state.

    Raises if any action is illegal, which makes logs audit the engine's
    legality closure.
    """
    state = initial_state(game)
    states = [state]
    for action in actions:
        state = state.apply(action)
        states.append(state)
    return states, state.outcome()


def format_playout(game: GameId, actions: list, result: Outcome) -> str:
    moves = ";".join(action_to_text(game, a) for a in actions)
    return f"{game.value} {moves} {result.value}"


def parse_playout(line: str) -> tuple[GameId, list, Outcome]:
    game_text, moves, result_text = line.strip().split(" ")
    game = GameId.parse(game_text)
    actions = [action_from_text(game, t) for t in moves.split(";") if t]
    return game, actions, Outcome(result_text)
