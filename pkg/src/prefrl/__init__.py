"""prefrl: reward-preference-robust decision-focused model-based RL.

A numpy/scipy library for learning restricted transition models that stay
useful when the reward's preference weighting shifts at test time, with
maximum-likelihood and decision-focused baselines, differentiable planning,
and a reproduction harness for the three bundled benchmark domains.
"""

from .envs import Environment, Trajectory, combine_rewards, make_env, rollout

__version__ = "0.1.0"

__all__ = ["Environment", "Trajectory", "combine_rewards", "make_env", "rollout",
           "__version__"]
