from .base import Environment, Trajectory, combine_rewards, preference_vector, rollout
from .cancer import CancerParams, cancer_reward_bases, cancer_step, make_cancer_env
from .mountain_car import (make_mountain_car_env, mountain_car_reward_bases,
                           mountain_car_step)
from .toy import make_toy_env, toy_reward_bases, toy_step

_FACTORIES = {
    "toy": make_toy_env,
    "cancer": make_cancer_env,
    "mountain_car": make_mountain_car_env,
}


def make_env(name: str, **kwargs) -> Environment:
    """Build a bundled environment by name ('toy', 'cancer', 'mountain_car')."""
    try:
        factory = _FACTORIES[name]
    except KeyError:
        raise ValueError(f"unknown environment {name!r}; choose from {sorted(_FACTORIES)}")
    return factory(**kwargs)


__all__ = [
    "Environment", "Trajectory", "combine_rewards", "preference_vector", "rollout",
    "make_env", "make_toy_env", "make_cancer_env", "make_mountain_car_env",
    "toy_step", "toy_reward_bases", "cancer_step", "cancer_reward_bases",
    "mountain_car_step", "mountain_car_reward_bases", "CancerParams",
]
