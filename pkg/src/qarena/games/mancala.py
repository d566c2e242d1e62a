"""Mancala engine (two-rank board, 6 houses and one bank per player, 48 seeds).

Pit layout (counter-clockwise sowing order):

    index 0..5   P1 houses      index 6   P1 bank
    index 7..12  P2 houses      index 13  P2 bank

Rules implemented: sow counter-clockwise one seed per pit, skipping the
opponent's bank; landing the last seed in the own bank grants an extra turn;
landing it in an empty own house captures that seed plus the seeds of the
directly opposite opponent house (when nonempty) into the own bank. The game
ends when the player to move has no seeds in any house; each side then scores
its bank plus the seeds still in its own houses (no Kalah-style sweep — see
``score``). A generous ply cap guards against degenerate never-ending shuffles
between deterministic policies.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import ClassVar

from .base import GameId, IllegalActionError, Outcome, Player, TerminalStateError

SEEDS_PER_HOUSE = 4
TOTAL_SEEDS = 48
PLY_CAP = 1000

_P1_BANK = 6
_P2_BANK = 13

INITIAL_PITS = (4, 4, 4, 4, 4, 4, 0, 4, 4, 4, 4, 4, 4, 0)


def _offset(player: Player) -> int:
    return 0 if player is Player.P1 else 7


def _bank(player: Player) -> int:
    return _P1_BANK if player is Player.P1 else _P2_BANK


@dataclass(frozen=True, slots=True)
class MancalaState:
    pits: tuple[int, ...] = INITIAL_PITS
    to_move: Player = Player.P1
    ply: int = 0

    game: ClassVar[GameId] = GameId.MANCALA

    def legal_actions(self) -> list[int]:
        if self.outcome() is not None:
            raise TerminalStateError()
        base = _offset(self.to_move)
        pits = self.pits
        return [h for h in range(6) if pits[base + h] > 0]

    def apply(self, action: int) -> "MancalaState":
        mover = self.to_move
        base = _offset(mover)
        if (
            not isinstance(action, int)
            or not 0 <= action < 6
            or self.pits[base + action] == 0
            or self.outcome() is not None
        ):
            raise IllegalActionError(action)

        pits = list(self.pits)
        own_bank = _bank(mover)
        skip = _bank(mover.opponent)
        pos = base + action
        seeds = pits[pos]
        pits[pos] = 0
        while seeds:
            pos = (pos + 1) % 14
            if pos == skip:
                continue
            pits[pos] += 1
            seeds -= 1

        # Capture: last seed fell into a previously empty own house whose
        # directly opposite opponent house holds seeds.
        if base <= pos < base + 6 and pits[pos] == 1:
            opposite = 12 - pos
            if pits[opposite] > 0:
                pits[own_bank] += pits[opposite] + 1
                pits[opposite] = 0
                pits[pos] = 0

        extra_turn = pos == own_bank
        return replace(
            self,
            pits=tuple(pits),
            to_move=mover if extra_turn else mover.opponent,
            ply=self.ply + 1,
        )

    def score(self, player: Player) -> int:
        """Bank plus seeds still sitting in the player's own houses."""
        base = _offset(player)
        return self.pits[_bank(player)] + sum(self.pits[base : base + 6])

    def outcome(self) -> Outcome | None:
        base = _offset(self.to_move)
        pits = self.pits
        ended = all(pits[base + h] == 0 for h in range(6)) or self.ply >= PLY_CAP
        if not ended:
            return None
        p1, p2 = self.score(Player.P1), self.score(Player.P2)
        if p1 > p2:
            return Outcome.P1_WIN
        if p2 > p1:
            return Outcome.P2_WIN
        return Outcome.DRAW

    def state_key(self) -> bytes:
        return b"M" + bytes((self.to_move.value,)) + bytes(self.pits)


def initial_state() -> MancalaState:
    return MancalaState()


def action_to_text(action: int) -> str:
    return str(action)


def action_from_text(text: str) -> int:
    house = int(text)
    if not 0 <= house < 6:
        raise ValueError(f"bad house: {text}")
    return house
