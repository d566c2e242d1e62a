"""Nine Men's Morris engine.

Point numbering (three concentric squares joined at edge midpoints):

    0-----------1-----------2
    |           |           |
    |     3-----4-----5     |
    |     |     |     |     |
    |     |  6--7--8  |     |
    9----10-11     12-13---14
    |     |  |     |  |     |
    |     | 15-16-17  |     |
    |     |     |     |     |
    |    18----19----20     |
    |           |           |
    21---------22----------23

Each player starts with nine pieces in hand. While a player holds pieces they
place one per turn; afterwards they slide one piece per turn along an adjacency
edge (no flying stage - movement stays adjacency-restricted even at three
pieces). Completing a mill keeps the turn and requires removing one opponent
piece; pieces inside opponent mills are protected unless every opponent piece
sits in a mill (``protect_mills`` variant flag, on by default). A player loses
when reduced below three pieces after their hand is empty, or when they cannot
move. Games hit a 200-ply cap and are scored as draws, which guarantees
episode termination for self-play training.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import ClassVar, NamedTuple

from .base import GameId, IllegalActionError, Outcome, Player, TerminalStateError

PLY_CAP = 200
PIECES_PER_PLAYER = 9

ADJACENCY = (
    (1, 9), (0, 2, 4), (1, 14),
    (4, 10), (1, 3, 5, 7), (4, 13),
    (7, 11), (4, 6, 8), (7, 12),
    (0, 10, 21), (3, 9, 11, 18), (6, 10, 15),
    (8, 13, 17), (5, 12, 14, 20), (2, 13, 23),
    (11, 16), (15, 17, 19), (12, 16),
    (10, 19), (16, 18, 20, 22), (13, 19),
    (9, 22), (19, 21, 23), (14, 22),
)

MILLS = (
    (0, 1, 2), (3, 4, 5), (6, 7, 8),
    (9, 10, 11), (12, 13, 14),
    (15, 16, 17), (18, 19, 20), (21, 22, 23),
    (0, 9, 21), (3, 10, 18), (6, 11, 15),
    (1, 4, 7), (16, 19, 22),
    (8, 12, 17), (5, 13, 20), (2, 14, 23),
)

# Mills indexed by the point they contain, for O(1) mill checks after a move.
POINT_MILLS = tuple(
    tuple(mill for mill in MILLS if point in mill) for point in range(24)
)


class Place(NamedTuple):
    point: int


class Move(NamedTuple):
    src: int
    dst: int


class Remove(NamedTuple):
    point: int


MorrisAction = Place | Move | Remove

EMPTY_BOARD = (0,) * 24


@dataclass(frozen=True, slots=True)
class MorrisState:
    board: tuple[int, ...] = EMPTY_BOARD  # 0 empty, 1 = P1 piece, 2 = P2 piece
    to_move: Player = Player.P1
    in_hand: tuple[int, int] = (PIECES_PER_PLAYER, PIECES_PER_PLAYER)
    removal: bool = False  # True: to_move just milled and must remove a piece
    ply: int = 0

    game: ClassVar[GameId] = GameId.NINE_MENS_MORRIS

    @property
    def phase(self) -> str:
        if self.removal:
            return "removal"
        return "placement" if self.hand_of(self.to_move) > 0 else "movement"

    def hand_of(self, player: Player) -> int:
        return self.in_hand[0] if player is Player.P1 else self.in_hand[1]

    def pieces_on_board(self, player: Player) -> int:
        return self.board.count(player.value)

    def legal_actions(self, protect_mills: bool = True) -> list[MorrisAction]:
        if self.outcome() is not None:
            raise TerminalStateError()
        return self._actions(protect_mills)

    def _actions(self, protect_mills: bool = True) -> list[MorrisAction]:
        board = self.board
        mover = self.to_move
        if self.removal:
            return [
                Remove(p)
                for p in _removable(board, mover.opponent.value, protect_mills)
            ]
        if self.hand_of(mover) > 0:
            return [Place(p) for p in range(24) if board[p] == 0]
        mine = mover.value
        moves = []
        for src in range(24):
            if board[src] != mine:
                continue
            for dst in ADJACENCY[src]:
                if board[dst] == 0:
                    moves.append(Move(src, dst))
        return moves

    def apply(self, action: MorrisAction, protect_mills: bool = True) -> "MorrisState":
        if self.outcome() is not None or action not in self._actions(protect_mills):
            raise IllegalActionError(action)
        mover = self.to_move
        board = list(self.board)

        if isinstance(action, Remove):
            board[action.point] = 0
            return replace(
                self,
                board=tuple(board),
                to_move=mover.opponent,
                removal=False,
                ply=self.ply + 1,
            )

        if isinstance(action, Place):
            board[action.point] = mover.value
            hand = list(self.in_hand)
            hand[mover.value - 1] -= 1
            landed = action.point
            new_hand = tuple(hand)
        else:
            board[action.src] = 0
            board[action.dst] = mover.value
            landed = action.dst
            new_hand = self.in_hand

        milled = _in_mill(board, landed, mover.value)
        return replace(
            self,
            board=tuple(board),
            in_hand=new_hand,
            to_move=mover if milled else mover.opponent,
            removal=milled,
            ply=self.ply + 1,
        )

    def outcome(self) -> Outcome | None:
        mover = self.to_move
        if self.hand_of(mover) == 0 and self.pieces_on_board(mover) < 3:
            return Outcome.win(mover.opponent)
        if self.ply >= PLY_CAP:
            return Outcome.DRAW
        if not self._has_any_action():
            return Outcome.win(mover.opponent)
        return None

    def _has_any_action(self) -> bool:
        board = self.board
        mover = self.to_move
        if self.removal:
            return board.count(mover.opponent.value) > 0
        if self.hand_of(mover) > 0:
            return True  # 18 pieces at most never fill 24 points
        mine = mover.value
        for src in range(24):
            if board[src] != mine:
                continue
            for dst in ADJACENCY[src]:
                if board[dst] == 0:
                    return True
        return False

    def state_key(self) -> bytes:
        return (
            b"N"
            + bytes((self.to_move.value, self.in_hand[0], self.in_hand[1], int(self.removal)))
            + bytes(self.board)
        )


def _in_mill(board: list[int] | tuple[int, ...], point: int, owner: int) -> bool:
    for a, b, c in POINT_MILLS[point]:
        if board[a] == board[b] == board[c] == owner:
            return True
    return False


def _removable(board: tuple[int, ...], victim: int, protect_mills: bool) -> list[int]:
    targets = [p for p in range(24) if board[p] == victim]
    if not protect_mills:
        return targets
    loose = [p for p in targets if not _in_mill(board, p, victim)]
    return loose if loose else targets


def initial_state() -> MorrisState:
    return MorrisState()


def action_to_text(action: MorrisAction) -> str:
    if isinstance(action, Place):
        return f"P{action.point}"
    if isinstance(action, Move):
        return f"M{action.src}-{action.dst}"
    return f"R{action.point}"


def action_from_text(text: str) -> MorrisAction:
    kind, rest = text[:1], text[1:]
    if kind == "P":
        return Place(int(rest))
    if kind == "M":
        src, dst = rest.split("-")
        return Move(int(src), int(dst))
    if kind == "R":
        return Remove(int(rest))
    raise ValueError(f"bad action: {text!r}")
