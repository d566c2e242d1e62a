"""Tabular action-value storage and the Bellman update rule.

Values are stored per state key as a list aligned to the state's canonical
action order, so an entry row always has one slot per legal action. States the
learner never visited have no row; readers treat missing rows (and therefore
missing pairs) as value 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .games import GameId, GameState


def q_update(q_sa: float, reward: float, max_next: float, alpha: float, gamma: float) -> float:
    """One value-iteration step: blend the old estimate with the bootstrapped target."""
    return (1.0 - alpha) * q_sa + alpha * (reward + gamma * max_next)


@dataclass
class RewardSpec:
    win: float = 1.0
    loss: float = -1.0
    draw: float = 0.0

    def __post_init__(self) -> None:
        if not (self.win >= self.draw >= self.loss) or self.win <= self.loss:
            raise ValueError(f"rewards must satisfy win >= draw >= loss (win > loss): {self}")

    @property
    def bound(self) -> float:
        return max(abs(self.win), abs(self.loss), abs(self.draw))


@dataclass
class QTable:
    game: GameId
    alpha: float = 0.4
    gamma: float = 0.9
    epsilon: float = 0.0  # exploration rate used while training (snapshot metadata)
    episodes_trained: int = 0
    entries: dict[bytes, list[float]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not (0.0 <= self.alpha <= 1.0 and 0.0 <= self.gamma <= 1.0):
            raise ValueError("alpha and gamma must lie in [0, 1]")

    def values_for(self, state: GameState, n_actions: int) -> list[float]:
        """Stored row for the state, or a zero row of the right width."""
        row = self.entries.get(state.state_key())
        return row if row is not None else [0.0] * n_actions

    def row_for_update(self, key: bytes, n_actions: int) -> list[float]:
        row = self.entries.get(key)
        if row is None:
            row = [0.0] * n_actions
            self.entries[key] = row
        return row

    def max_abs_value(self) -> float:
        return max((abs(v) for row in self.entries.values() for v in row), default=0.0)
