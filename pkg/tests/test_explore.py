"""Closure counts, playout-log round trips, and engine-wide random-playout properties."""
import random

import pytest

from qarena.games import GameId, Outcome, Player, initial_state
from qarena.games.explore import (
    EnumerationCapError,
    enumerate_reachable,
    format_playout,
    parse_playout,
    random_playout,
    replay,
)
from qarena.games.mancala import TOTAL_SEEDS
from qarena.games.morris import MorrisState, Place, Move, Remove


def test_tictactoe_full_closure_is_5478():
    assert enumerate_reachable(GameId.TICTACTOE, cap=1_000_000) == 5478


def test_tictactoe_depth_one_closure():
    assert enumerate_reachable(GameId.TICTACTOE, depth=1) == 10


def test_cap_guard_reports_partial_count():
    with pytest.raises(EnumerationCapError) as err:
        enumerate_reachable(GameId.MANCALA, cap=1000)
    assert err.value.partial_count >= 1000
    with pytest.raises(EnumerationCapError) as err:
        enumerate_reachable(GameId.TICTACTOE, cap=1)
    assert err.value.partial_count >= 1


def test_playout_log_round_trip():
    rng = random.Random(11)
    for game in GameId:
        actions, result = random_playout(game, rng)
        line = format_playout(game, actions, result)
        parsed_game, parsed_actions, parsed_result = parse_playout(line)
        assert parsed_game is game
        assert parsed_actions == actions
        assert parsed_result is result
        states, replayed = replay(parsed_game, parsed_actions)
        assert replayed is result
        assert len(states) == len(actions) + 1


def test_replay_rejects_corrupted_logs():
    rng = random.Random(3)
    actions, result = random_playout(GameId.TICTACTOE, rng)
    line = format_playout(GameId.TICTACTOE, actions, result)
    game, parsed, _ = parse_playout(line)
    bad = parsed + [parsed[0]]  # occupied cell replayed
    with pytest.raises(Exception):
        replay(game, bad)


def _playout_states(game: GameId, rng: random.Random):
    state = initial_state(game)
    yield None, state
    while state.outcome() is None:
        legal = state.legal_actions()
        action = legal[rng.randrange(len(legal))]
        nxt = state.apply(action)
        yield (state, action), nxt
        state = nxt


def test_legality_closure_and_invariants_over_random_playouts():
    """>= 1e5 plies per game: apply never fails and state invariants hold."""
    rng = random.Random(2024)
    targets = {GameId.TICTACTOE: 100_000, GameId.MANCALA: 100_000, GameId.NINE_MENS_MORRIS: 100_000}
    for game, target in targets.items():
        plies = 0
        while plies < target:
            for step, state in _playout_states(game, rng):
                if step is not None:
                    plies += 1
                if game is GameId.MANCALA:
                    assert sum(state.pits) == TOTAL_SEEDS
                elif game is GameId.TICTACTOE:
                    marks = state.board.count(1) - state.board.count(2)
                    assert marks in (0, 1)
                else:
                    for player in Player:
                        on_board = state.pieces_on_board(player)
                        assert on_board + state.hand_of(player) <= 9


def test_morris_removal_only_follows_mill_completion():
    """Replay random playouts; removal states must follow a mill-completing action."""
    from qarena.games.morris import _in_mill

    rng = random.Random(99)
    seen_removals = 0
    for _ in range(60):
        actions, _ = random_playout(GameId.NINE_MENS_MORRIS, rng)
        states, _ = replay(GameId.NINE_MENS_MORRIS, actions)
        for prev, action, state in zip(states, actions, states[1:]):
            if isinstance(state, MorrisState) and state.removal:
                seen_removals += 1
                assert isinstance(action, (Place, Move))
                landed = action.point if isinstance(action, Place) else action.dst
                assert _in_mill(state.board, landed, prev.to_move.value)
                assert state.to_move is prev.to_move
    assert seen_removals > 0


def test_apply_is_deterministic():
    rng = random.Random(5)
    for game in GameId:
        state = initial_state(game)
        for _ in range(6):
            if state.outcome() is not None:
                break
            action = state.legal_actions()[0]
            a = state.apply(action)
            b = state.apply(action)
            assert a == b
            assert a.state_key() == b.state_key()
            state = a


def test_outcomes_never_report_two_winners():
    rng = random.Random(17)
    for game in GameId:
        for _ in range(50):
            _, result = random_playout(game, rng)
            assert result in (Outcome.P1_WIN, Outcome.P2_WIN, Outcome.DRAW)
            if result.winner is not None:
                assert result.value_for(result.winner) == 1.0
                assert result.value_for(result.winner.opponent) == -1.0
