"""Multi-objective mountain car (classic-control dynamics).

Three actions: accelerate backward, zero throttle, accelerate forward.
Basis r1 charges -1 per time step until the goal; basis r0 charges -0.1
whenever the car accelerates. The step arriving at the goal yields (0, 0).

The car starts at rest at the valley's zero-force point (where the gravity
term vanishes), making every rollout deterministic.
"""

from __future__ import annotations

import numpy as np

from .base import Environment

MC_MIN_POSITION = -1.2
MC_MAX_POSITION = 0.6
MC_MAX_SPEED = 0.07
MC_GOAL_POSITION = 0.5
MC_FORCE = 0.001
MC_GRAVITY = 0.0025
MC_START_POSITION = -np.pi / 6  # cos(3*p) = 0: zero-force valley point
MC_HORIZON = 500

BACKWARD, COAST, FORWARD = 0, 1, 2


def mountain_car_step(s: np.ndarray, a: int) -> np.ndarray:
    if a not in (BACKWARD, COAST, FORWARD):
        raise ValueError(f"mountain car action must be in {{0,1,2}}, got {a}")
    p, v = float(s[0]), float(s[1])
    v = v + MC_FORCE * (a - 1) - MC_GRAVITY * np.cos(3 * p)
    v = float(np.clip(v, -MC_MAX_SPEED, MC_MAX_SPEED))
    p = float(np.clip(p + v, MC_MIN_POSITION, MC_MAX_POSITION))
    if p <= MC_MIN_POSITION and v < 0:
        v = 0.0
    return np.array([p, v])


def mountain_car_is_terminal(s: np.ndarray) -> bool:
    return bool(s[0] >= MC_GOAL_POSITION)


def mountain_car_reward_bases(a: int, terminal: bool) -> tuple[float, float]:
    """(r1, r0) for a step: time penalty and acceleration penalty."""
    if terminal:
        return 0.0, 0.0
    return -1.0, -0.1 if a != COAST else 0.0


def _bases(s, a, s_next, t, terminal) -> np.ndarray:
    return np.array(mountain_car_reward_bases(a, terminal))


def make_mountain_car_env() -> Environment:
    return Environment(
        name="mountain_car",
        state_dim=2,
        n_actions=3,
        horizon=MC_HORIZON,
        gamma=1.0,
        k=2,
        initial_state=lambda: np.array([MC_START_POSITION, 0.0]),
        step=mountain_car_step,
        is_terminal=mountain_car_is_terminal,
        reward_bases=_bases,
        default_planner_grid=((MC_MIN_POSITION, MC_MAX_POSITION, 15),
                              (-MC_MAX_SPEED, MC_MAX_SPEED, 15)),
        default_eval_grid=((MC_MIN_POSITION, MC_MAX_POSITION, 64),
                           (-MC_MAX_SPEED, MC_MAX_SPEED, 64)),
    )
