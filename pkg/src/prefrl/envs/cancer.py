"""Cancer treatment surrogate MDP.

A documented stand-in for the external tumor-growth simulator: the state
carries (MTD_t, MTD_{t-1}, C_t, t/T, MTD_0) where MTD is the mean tumor
dimension and C the drug concentration. Dosing raises concentration, which
shrinks the tumor multiplicatively; without drug the tumor grows by a fixed
factor per step. Episodes last exactly T steps.

Reward bases: r1 pays the per-step tumor shrinkage (MTD_t - MTD_{t+1})/10 and,
on the final step, a terminal bonus (MTD_0 - MTD_T); r0 = -concentration.

All five surrogate parameters are configuration values with frozen defaults.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .base import Environment


@dataclass(frozen=True)
class CancerParams:
    decay: float = 0.5        # rho: per-step concentration retention
    growth: float = 0.02      # g: tumor growth rate per step
    kill: float = 0.08        # kappa: drug kill coefficient
    n_steps: int = 30         # T: episode length
    dose: float = 1.0         # concentration added by the dosing action
    mtd0: float = 1.0         # initial mean tumor dimension


DEFAULT_PARAMS = CancerParams()

NO_DOSE, DOSE = 0, 1


def cancer_step(s: np.ndarray, a: int, params: CancerParams = DEFAULT_PARAMS) -> np.ndarray:
    if a not in (NO_DOSE, DOSE):
        raise ValueError(f"cancer action must be 0 or 1, got {a}")
    mtd, _mtd_prev, conc, t_norm, mtd0 = (float(x) for x in s)
    conc_next = params.decay * conc + (params.dose if a == DOSE else 0.0)
    mtd_next = max(0.0, mtd * (1.0 + params.growth) - params.kill * conc_next * mtd)
    t_next = t_norm + 1.0 / params.n_steps
    return np.array([mtd_next, mtd, conc_next, t_next, mtd0])


def cancer_is_terminal(s: np.ndarray, params: CancerParams = DEFAULT_PARAMS) -> bool:
    # terminal once t = T; small slack absorbs accumulated float error in t/T
    return bool(s[3] >= 1.0 - 1e-9)


def cancer_reward_bases(mtd_t: float, mtd_next: float, mtd0: float, mtd_final: float,
                        conc: float, step_is_last: bool) -> tuple[float, float]:
    """(r1, r0) for one transition of the surrogate."""
    r1 = (mtd_t - mtd_next) / 10.0
    if step_is_last:
        r1 += mtd0 - mtd_final
    return r1, -conc


def _make_bases(params: CancerParams):
    def bases(s, a, s_next, t, terminal) -> np.ndarray:
        r1, r0 = cancer_reward_bases(
            mtd_t=float(s[0]), mtd_next=float(s_next[0]), mtd0=float(s[4]),
            mtd_final=float(s_next[0]), conc=float(s_next[2]), step_is_last=terminal,
        )
        return np.array([r1, r0])
    return bases


def make_cancer_env(params: CancerParams = DEFAULT_PARAMS) -> Environment:
    T = params.n_steps
    # grid centers hit t/T = k/T exactly; MTD bound covers (1+g)^T growth
    mtd_hi = params.mtd0 * (1.0 + params.growth) ** T * 1.1
    conc_hi = params.dose / (1.0 - params.decay) * 1.05
    return Environment(
        name="cancer",
        state_dim=5,
        n_actions=2,
        horizon=T,
        gamma=1.0,
        k=2,
        initial_state=lambda: np.array([params.mtd0, params.mtd0, 0.0, 0.0, params.mtd0]),
        step=lambda s, a: cancer_step(s, a, params),
        is_terminal=lambda s: cancer_is_terminal(s, params),
        reward_bases=_make_bases(params),
        planner_dims=(0, 2, 3),
        embed_planner_state=lambda c: np.array([c[0], c[0], c[1], c[2], params.mtd0]),
        default_planner_grid=((0.0, mtd_hi, 24),
                              (0.0, conc_hi, 16),
                              (-0.5 / T, 1.0 + 0.5 / T, T + 1)),
        default_eval_grid=((0.0, mtd_hi, 48),
                           (0.0, conc_hi, 32),
                           (-0.5 / T, 1.0 + 0.5 / T, T + 1)),
    )
