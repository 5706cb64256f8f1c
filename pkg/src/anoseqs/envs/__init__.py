"""Desk-scale safety environments with reward and binary cost-signal semantics."""

from anoseqs.envs.base import Env, EnvConfig, EnvError, EnvSpec, StepResult
from anoseqs.envs.corridor import CorridorRunEnv
from anoseqs.envs.hazard_goal import HazardPointGoalEnv

ENV_IDS = ("corridor_run", "hazard_point_goal")


def make_env(config: EnvConfig) -> Env:
    if config.env_id == "corridor_run":
        return CorridorRunEnv(config)
    if config.env_id == "hazard_point_goal":
        return HazardPointGoalEnv(config)
    raise ValueError(f"unknown env_id {config.env_id!r} (choose from {ENV_IDS})")


__all__ = [
    "ENV_IDS",
    "CorridorRunEnv",
    "Env",
    "EnvConfig",
    "EnvError",
    "EnvSpec",
    "HazardPointGoalEnv",
    "StepResult",
    "make_env",
]
