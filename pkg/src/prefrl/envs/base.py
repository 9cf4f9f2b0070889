"""Environment contract shared by the three benchmark domains.

An :class:`Environment` is an immutable specification: stepping is a pure
function of (state, action), reward bases are pure functions of a transition,
and everything downstream (rollouts, dataset collection, planning) treats the
environment as read-only. Rewards are scalarized from ``k`` basis functions by
a preference weight, ``R_w = sum_k w_k * r_k``.

Reward timing convention used throughout: a step's reward is the basis value
evaluated at the transition it produced, and a step that *ends* the episode
(arrival at a terminal state) is what each domain's bases say it is -- for the
toy and mountain-car domains that is zero, for the cancer domain it carries a
terminal bonus. The bases receive the full transition so each domain owns its
own convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

# basis evaluator: (state, action, next_state, step_index, next_is_terminal) -> (k,) values
BasisFn = Callable[[np.ndarray, int, np.ndarray, int, bool], np.ndarray]


@dataclass(frozen=True)
class Environment:
    """Immutable environment specification.

    ``step`` must be deterministic; stochastic domains are out of scope. The
    ``planner_dims``/``embed_planner_state`` pair lets planners discretize a
    lower-dimensional sufficient view of the state (used by the cancer domain,
    identity elsewhere).
    """

    name: str
    state_dim: int
    n_actions: int
    horizon: int
    gamma: float
    k: int
    initial_state: Callable[[], np.ndarray]
    step: Callable[[np.ndarray, int], np.ndarray]
    is_terminal: Callable[[np.ndarray], bool]
    reward_bases: BasisFn
    # action index -> displacement/feature vector (used by shared-scalar models)
    action_vectors: np.ndarray | None = None
    # planner view of the state space
    planner_dims: tuple[int, ...] | None = None
    embed_planner_state: Callable[[np.ndarray], np.ndarray] | None = None
    # default planning / evaluation grids: (lo, hi, cells) per planner dim
    default_planner_grid: tuple[tuple[float, float, int], ...] | None = None
    default_eval_grid: tuple[tuple[float, float, int], ...] | None = None

    def validate_action(self, a: int) -> None:
        if not 0 <= a < self.n_actions:
            raise ValueError(f"action {a} outside [0, {self.n_actions})")


@dataclass
class Trajectory:
    """One episode: aligned step records plus termination bookkeeping."""

    states: list[np.ndarray] = field(default_factory=list)      # length T+1
    actions: list[int] = field(default_factory=list)            # length T
    basis_rewards: list[np.ndarray] = field(default_factory=list)  # length T, each (k,)
    terminated: bool = False
    truncated: bool = False

    @property
    def length(self) -> int:
        return len(self.actions)


def combine_rewards(w, basis_values) -> float:
    """Scalarize basis values with preference weights.

    ``w`` may be a scalar in [0, 1] (two-basis shorthand, weights ``(w, 1-w)``)
    or a length-k vector on the simplex. Weights must sum to 1 within 1e-9.
    """
    basis_values = np.asarray(basis_values, dtype=float)
    if np.isscalar(w) or np.ndim(w) == 0:
        if basis_values.shape[-1] != 2:
            raise ValueError("scalar preference shorthand requires exactly 2 bases")
        w_vec = np.array([float(w), 1.0 - float(w)])
    else:
        w_vec = np.asarray(w, dtype=float)
        if w_vec.shape[0] != basis_values.shape[-1]:
            raise ValueError(
                f"preference length {w_vec.shape[0]} != basis count {basis_values.shape[-1]}"
            )
    if abs(float(w_vec.sum()) - 1.0) > 1e-9:
        raise ValueError(f"preference weights must sum to 1, got {w_vec.sum()!r}")
    return float(basis_values @ w_vec)


def preference_vector(w, k: int = 2) -> np.ndarray:
    """Normalize the scalar-w shorthand into an explicit weight vector."""
    if np.isscalar(w) or np.ndim(w) == 0:
        if k != 2:
            raise ValueError("scalar preference shorthand requires k == 2")
        return np.array([float(w), 1.0 - float(w)])
    w_vec = np.asarray(w, dtype=float)
    if w_vec.shape[0] != k:
        raise ValueError(f"preference length {w_vec.shape[0]} != basis count {k}")
    return w_vec


def rollout(env: Environment, policy, w, seed: int = 0,
            max_steps: int | None = None) -> tuple[Trajectory, float]:
    """Simulate one episode and return (trajectory, scalar return).

    ``policy`` is anything with an ``act(state, rng) -> int`` method (see
    planning.Policy) or a bare callable ``state -> int``. The return is the
    (gamma-discounted, gamma=1 for all bundled domains) sum of ``R_w`` along
    the trajectory. If the horizon cap is hit before termination the
    trajectory is flagged truncated and the return is still reported.
    """
    rng = np.random.default_rng(seed)
    act = policy.act if hasattr(policy, "act") else (lambda s, _rng: policy(s))
    cap = env.horizon if max_steps is None else max_steps

    traj = Trajectory()
    s = np.array(env.initial_state(), dtype=float)
    traj.states.append(s.copy())
    total = 0.0
    discount = 1.0
    for t in range(cap):
        if env.is_terminal(s):
            traj.terminated = True
            break
        a = int(act(s, rng))
        env.validate_action(a)
        s_next = env.step(s, a)
        terminal = env.is_terminal(s_next)
        bases = np.asarray(env.reward_bases(s, a, s_next, t, terminal), dtype=float)
        traj.actions.append(a)
        traj.states.append(np.array(s_next, dtype=float))
        traj.basis_rewards.append(bases)
        total += discount * combine_rewards(w, bases)
        discount *= env.gamma
        s = s_next
        if terminal:
            traj.terminated = True
            break
    else:
        traj.truncated = True
    return traj, total
