"""Playable policies: random, deterministic/non-deterministic Min-Max over a
game-tree search, and the greedy policy over a learned Q-table.

Selection functions are pure given their rng; agent objects wrap them with a
private rng stream and (for Min-Max) a decision cache shared per (game, depth)
that never changes returned values, only avoids re-searching positions.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, TYPE_CHECKING

from .games import GameId, GameState, Player, TerminalStateError
from .games.morris import MILLS

if TYPE_CHECKING:
    from .qtable import QTable

Heuristic = Callable[[GameState, Player], float]

DEFAULT_DEPTH = {
    GameId.TICTACTOE: 9,
    GameId.NINE_MENS_MORRIS: 6,
    GameId.MANCALA: 6,
}

# Leaf-evaluator weights for truncated searches; exact outcomes always win.
MANCALA_BANK_SCALE = 48.0
MORRIS_PIECE_WEIGHT = 0.08
MORRIS_MILL_WEIGHT = 0.12


class AgentKind(Enum):
    RANDOM = "random"
    MINMAX_DET = "minmax-det"
    MINMAX_NONDET = "minmax-nd"
    Q_GREEDY = "q"
    Q_TWIN = "q-twin"  # trainer-only: greedy reader of the evolving table


@dataclass(frozen=True)
class AgentSpec:
    kind: AgentKind
    depth: int | None = None
    qtable: "QTable | None" = None
    seed: int = 0
    label: str | None = None

    def __post_init__(self) -> None:
        if self.depth is not None and self.depth < 1:
            raise ValueError("minmax depth must be >= 1")
        if self.kind is AgentKind.Q_GREEDY and self.qtable is None:
            raise ValueError("q agent needs a concrete table")

    @property
    def name(self) -> str:
        return self.label if self.label is not None else self.kind.value

    def with_seed(self, seed: int) -> "AgentSpec":
        return replace(self, seed=seed)

    @property
    def is_deterministic(self) -> bool:
        return self.kind is AgentKind.MINMAX_DET


def _h_tictactoe(state: GameState, perspective: Player) -> float:
    out = state.outcome()
    if out is not None:
        return out.value_for(perspective)
    return 0.0


def _h_mancala(state: GameState, perspective: Player) -> float:
    out = state.outcome()
    if out is not None:
        return out.value_for(perspective)
    own = state.pits[6 if perspective is Player.P1 else 13]
    other = state.pits[13 if perspective is Player.P1 else 6]
    return (own - other) / MANCALA_BANK_SCALE


def _mill_count(board: tuple[int, ...], owner: int) -> int:
    return sum(1 for a, b, c in MILLS if board[a] == board[b] == board[c] == owner)


def _h_morris(state: GameState, perspective: Player) -> float:
    out = state.outcome()
    if out is not None:
        return out.value_for(perspective)
    me, other = perspective, perspective.opponent
    pieces = (state.pieces_on_board(me) + state.hand_of(me)) - (
        state.pieces_on_board(other) + state.hand_of(other)
    )
    mills = _mill_count(state.board, me.value) - _mill_count(state.board, other.value)
    score = MORRIS_PIECE_WEIGHT * pieces + MORRIS_MILL_WEIGHT * mills
    return max(-1.0, min(1.0, score))


_HEURISTICS: dict[GameId, Heuristic] = {
    GameId.TICTACTOE: _h_tictactoe,
    GameId.MANCALA: _h_mancala,
    GameId.NINE_MENS_MORRIS: _h_morris,
}


def heuristic_for(game: GameId) -> Heuristic:
    return _HEURISTICS[game]


def select_random(state: GameState, rng: random.Random):
    legal = state.legal_actions()  # raises on terminal states
    return legal[rng.randrange(len(legal))]


def minimax_value(
    state: GameState,
    depth: int,
    heuristic: Heuristic,
    perspective: Player,
    _alpha: float = -2.0,
    _beta: float = 2.0,
) -> float:
    """Game value in [-1, 1] from ``perspective``; exact when the subtree
    bottoms out in terminals, heuristic-backed otherwise. Alpha-beta pruned,
    value-preserving at the call's own window."""
    out = state.outcome()
    if out is not None:
        return out.value_for(perspective)
    if depth <= 0:
        return heuristic(state, perspective)
    if state.to_move is perspective:
        best = -2.0
        for action in state.legal_actions():
            v = minimax_value(state.apply(action), depth - 1, heuristic, perspective, _alpha, _beta)
            if v > best:
                best = v
            if best > _alpha:
                _alpha = best
            if _alpha >= _beta:
                break
        return best
    best = 2.0
    for action in state.legal_actions():
        v = minimax_value(state.apply(action), depth - 1, heuristic, perspective, _alpha, _beta)
        if v < best:
            best = v
        if best < _beta:
            _beta = best
        if _alpha >= _beta:
            break
    return best


# Decision caches shared by every Min-Max agent using the default heuristic.
# Pure speed-up: a cached decision is exactly what the search would return.
_DECISION_CACHES: dict[tuple[GameId, int], dict[bytes, tuple[float, tuple]]] = {}


def _root_decision(state: GameState, depth: int, heuristic: Heuristic) -> tuple[float, tuple]:
    """Exact value per root child (full windows), returning the argmax set."""
    legal = state.legal_actions()
    perspective = state.to_move
    values = [
        minimax_value(state.apply(action), depth - 1, heuristic, perspective)
        for action in legal
    ]
    best = max(values)
    return best, tuple(a for a, v in zip(legal, values) if v == best)


def _cached_decision(state: GameState, depth: int) -> tuple[float, tuple]:
    cache = _DECISION_CACHES.setdefault((state.game, depth), {})
    key = state.state_key()
    hit = cache.get(key)
    if hit is None:
        hit = _root_decision(state, depth, _HEURISTICS[state.game])
        cache[key] = hit
    return hit


def select_minmax(state: GameState, spec: AgentSpec, rng: random.Random):
    if state.outcome() is not None:
        raise TerminalStateError()
    depth = spec.depth if spec.depth is not None else DEFAULT_DEPTH[state.game]
    _, best = _cached_decision(state, depth)
    if spec.kind is AgentKind.MINMAX_DET:
        return best[0]  # first in canonical action order
    return best[rng.randrange(len(best))]


def select_q(state: GameState, qtable: "QTable", rng: random.Random):
    legal = state.legal_actions()  # raises on terminal states
    row = qtable.entries.get(state.state_key())
    if row is None:
        return legal[rng.randrange(len(legal))]  # unseen state: all-zero tie
    best = max(row)
    ties = [i for i, v in enumerate(row) if v == best]
    return legal[ties[rng.randrange(len(ties))]]


class Agent:
    """A policy bound to a private rng stream. Not thread-safe; clone for
    parallel matches instead of sharing one instance."""

    def __init__(self, spec: AgentSpec, game: GameId, seed: int | None = None):
        if spec.kind is AgentKind.Q_TWIN:
            raise ValueError("q-twin resolves only inside a training run")
        if spec.kind is AgentKind.Q_GREEDY and spec.qtable.game is not game:
            raise ValueError(
                f"q table trained for {spec.qtable.game.value} cannot play {game.value}"
            )
        self.spec = spec
        self.game = game
        self.rng = random.Random(spec.seed if seed is None else seed)

    def select(self, state: GameState):
        kind = self.spec.kind
        if kind is AgentKind.RANDOM:
            return select_random(state, self.rng)
        if kind is AgentKind.Q_GREEDY:
            return select_q(state, self.spec.qtable, self.rng)
        return select_minmax(state, self.spec, self.rng)

    def clone(self, seed: int) -> "Agent":
        return Agent(self.spec, self.game, seed=seed)


def build_agent(spec: AgentSpec, game: GameId, seed: int | None = None) -> Agent:
    return Agent(spec, game, seed=seed)


def parse_agent_spec(text: str, base_dir: str | None = None) -> AgentSpec:
    """Parse the CLI/API agent syntax: ``random``, ``minmax-det:depth=9``,
    ``minmax-nd:depth=6``, ``q:<snapshot-path>``, ``q-pct:<run-dir>:<percent>``,
    ``q-twin`` (training only)."""
    from pathlib import Path

    text = text.strip()
    root = Path(base_dir) if base_dir else Path(".")
    if text == "random":
        return AgentSpec(AgentKind.RANDOM, label=text)
    if text == "q-twin":
        return AgentSpec(AgentKind.Q_TWIN, label=text)
    if text.startswith(("minmax-det", "minmax-nd")):
        name, _, rest = text.partition(":")
        depth = None
        if rest:
            key, _, value = rest.partition("=")
            if key != "depth":
                raise ValueError(f"bad minmax option: {rest!r}")
            depth = int(value)
        kind = AgentKind.MINMAX_DET if name == "minmax-det" else AgentKind.MINMAX_NONDET
        if name not in ("minmax-det", "minmax-nd"):
            raise ValueError(f"unknown agent: {text!r}")
        return AgentSpec(kind, depth=depth, label=text)
    if text.startswith("q-pct:"):
        from .snapshots import load_run, percent_agent

        _, run_dir, pct = text.split(":")
        run = load_run(root / run_dir)
        return replace(percent_agent(run, float(pct)), label=text)
    if text.startswith("q:"):
        from .snapshots import load_snapshot

        path = text[2:]
        table = load_snapshot(root / path)
        return AgentSpec(AgentKind.Q_GREEDY, qtable=table, label=text)
    raise ValueError(f"unknown agent: {text!r}")
