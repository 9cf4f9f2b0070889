"""Synthetic two-dimensional toy domain.

True dynamics move one coordinate per action, ``s' = s + theta* (.) a`` with
``theta* = [1.5, 5]`` and one-hot actions; the episode ends once either
coordinate crosses 25.1. The first reward basis is a square wave in ``s1``
alternating between 5 and -1 every 2.5 units; the second is a parabola in
``s2`` peaking at ``s2 = 13`` with a -201 cliff beyond.

The square-wave phase and reward timing are calibrated jointly so the
brute-force optimal undiscounted return at ``w = 1`` is exactly 51.0:
rewards are evaluated at the arrival state and the episode-ending step yields
zero. ``TOY_WAVE_PHASE`` is frozen from that calibration (any phase in
(1.5, 2.0) is equivalent on the reachable lattice; the midpoint is used).
"""

from __future__ import annotations

import numpy as np

from .base import Environment

TOY_THETA = np.array([1.5, 5.0])
TOY_THRESHOLD = 25.1
TOY_WAVE_PHASE = 1.75        # calibrated once by exhaustive search, frozen
TOY_WAVE_HALF_PERIOD = 2.5
TOY_HORIZON = 200

TOY_ACTION_VECTORS = np.array([[1.0, 0.0], [0.0, 1.0]])


def toy_square_wave(s1: float, phase: float = TOY_WAVE_PHASE) -> float:
    """First reward basis: 5 / -1 square wave over s1, band width 2.5."""
    return 5.0 if (s1 + phase) % (2 * TOY_WAVE_HALF_PERIOD) < TOY_WAVE_HALF_PERIOD else -1.0


def toy_parabola(s2: float) -> float:
    """Second reward basis: 200*(s2/13)^2 - 1 up to s2 = 13, then -201."""
    return 200.0 * (s2 / 13.0) ** 2 - 1.0 if s2 <= 13.0 else -201.0


def toy_reward_bases(s: np.ndarray) -> tuple[float, float]:
    """(r1, r0) evaluated at a state; pure, used by tests and the env wiring."""
    return toy_square_wave(float(s[0])), toy_parabola(float(s[1]))


def toy_is_terminal(s: np.ndarray) -> bool:
    return bool(s[0] > TOY_THRESHOLD or s[1] > TOY_THRESHOLD)


def toy_step(s: np.ndarray, a: int) -> np.ndarray:
    """Apply the true dynamics; stepping a terminal state is a contract error."""
    if toy_is_terminal(s):
        raise ValueError(f"toy_step called on terminal state {s!r}")
    if a not in (0, 1):
        raise ValueError(f"toy action must be 0 or 1, got {a}")
    return np.asarray(s, dtype=float) + TOY_THETA * TOY_ACTION_VECTORS[a]


def _bases(s, a, s_next, t, terminal) -> np.ndarray:
    if terminal:
        return np.zeros(2)
    r1, r0 = toy_reward_bases(s_next)
    return np.array([r1, r0])


def make_toy_env() -> Environment:
    return Environment(
        name="toy",
        state_dim=2,
        n_actions=2,
        horizon=TOY_HORIZON,
        gamma=1.0,
        k=2,
        initial_state=lambda: np.zeros(2),
        step=toy_step,
        is_terminal=toy_is_terminal,
        reward_bases=_bases,
        action_vectors=TOY_ACTION_VECTORS,
        # cell centers on the 0.25 lattice so reachable states sit exactly on centers
        default_planner_grid=(((-0.125), 26.125, 105), ((-0.125), 26.125, 105)),
        default_eval_grid=(((-0.125), 26.125, 105), ((-0.125), 26.125, 105)),
    )
