"""Head-to-head match playing: one ordered pairing, fixed seats, W:D:L tally."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .agents import Agent, AgentKind, AgentSpec, build_agent
from .games import GameId, GameState, Outcome, Player, initial_state


@dataclass(frozen=True)
class MatchRecord:
    """W:D:L tally for an ordered pairing (first agent always holds P1)."""

    p1: str
    p2: str
    n_games: int
    p1_wins: int
    draws: int
    p1_losses: int

    def __post_init__(self) -> None:
        if self.p1_wins + self.draws + self.p1_losses != self.n_games:
            raise ValueError(f"counts must sum to n_games: {self}")

    @property
    def cell(self) -> str:
        return f"{self.p1_wins}:{self.draws}:{self.p1_losses}"


def play_game(game: GameId, p1: Agent, p2: Agent) -> Outcome:
    state = initial_state(game)
    while (result := state.outcome()) is None:
        agent = p1 if state.to_move is Player.P1 else p2
        state = state.apply(agent.select(state))
    return result


def tally(game: GameId, p1: Agent, p2: Agent, n_games: int) -> tuple[int, int, int]:
    wins = draws = losses = 0
    for _ in range(n_games):
        result = play_game(game, p1, p2)
        if result.winner is Player.P1:
            wins += 1
        elif result.winner is Player.P2:
            losses += 1
        else:
            draws += 1
    return wins, draws, losses


def evaluate(
    a: AgentSpec,
    b: AgentSpec,
    game: GameId,
    n_games: int,
    rng: random.Random,
) -> MatchRecord:
    """Play ``n_games`` with ``a`` as P1 and ``b`` as P2, all policies greedy
    per their specs (Q agents never explore outside training)."""
    p1 = build_agent(a, game, seed=rng.randrange(2**62))
    p2 = build_agent(b, game, seed=rng.randrange(2**62))
    wins, draws, losses = tally(game, p1, p2, n_games)
    return MatchRecord(a.name, b.name, n_games, wins, draws, losses)
