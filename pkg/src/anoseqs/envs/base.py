from __future__ import annotations

from dataclasses import dataclass

import numpy as np

ROLES = ("source", "target")


class EnvError(RuntimeError):
    pass


@dataclass(frozen=True)
class EnvConfig:
    env_id: str
    role: str
    layout_seed: int
    max_steps: int

    def __post_init__(self):
        if self.role not in ROLES:
            raise ValueError(f"role must be one of {ROLES}, got {self.role!r}")
        if self.layout_seed < 0:
            raise ValueError("layout_seed must be a non-negative integer")
        if self.max_steps < 1:
            raise ValueError("max_steps must be positive")


@dataclass(frozen=True)
class EnvSpec:
    env_id: str
    state_dim: int
    action_dim: int
    role: str
    v_limit: float | None = None
    goal_radius: float | None = None
    hazard_radius: float | None = None


@dataclass(frozen=True)
class StepResult:
    next_state: np.ndarray
    reward: float
    cost: int
    terminated: bool
    failure: bool
    truncated: bool

    def __post_init__(self):
        if self.cost not in (0, 1):
            raise ValueError(f"cost must be 0 or 1, got {self.cost}")
        if self.failure and not self.terminated:
            raise ValueError("failure implies terminated")

    @property
    def done(self) -> bool:
        return self.terminated or self.truncated


class Env:
    """Deterministic episodic environment; actions in [-1, 1]^action_dim."""

    config: EnvConfig
    spec: EnvSpec

    def __init__(self, config: EnvConfig):
        self.config = config
        self._steps = 0
        self._done = True

    def env_spec(self) -> EnvSpec:
        return self.spec

    def reset(self, episode_seed: int) -> np.ndarray:
        raise NotImplementedError

    def step(self, action: np.ndarray) -> StepResult:
        raise NotImplementedError

    def _begin_episode(self) -> None:
        self._steps = 0
        self._done = False

    def _pre_step(self, action: np.ndarray) -> np.ndarray:
        if self._done:
            raise EnvError("step after episode termination; call reset first")
        action = np.asarray(action, dtype=np.float64)
        if action.shape != (self.spec.action_dim,):
            raise EnvError(
                f"action shape {action.shape} != ({self.spec.action_dim},)")
        return np.clip(action, -1.0, 1.0)

    def _finish_step(self, result: StepResult) -> StepResult:
        self._steps += 1
        if result.done:
            self._done = True
        return result

    def _at_step_limit(self) -> bool:
        # _steps is incremented by _finish_step afterwards
        return self._steps + 1 >= self.config.max_steps


def episode_rng(config: EnvConfig, episode_seed: int) -> np.random.Generator:
    role_code = ROLES.index(config.role)
    ss = np.random.SeedSequence([config.layout_seed, role_code, int(episode_seed)])
    return np.random.Generator(np.random.PCG64(ss))


def layout_rng(config: EnvConfig) -> np.random.Generator:
    # Source and target draw layouts from disjoint streams even for equal seeds.
    role_code = ROLES.index(config.role)
    ss = np.random.SeedSequence(entropy=config.layout_seed, spawn_key=(role_code,))
    return np.random.Generator(np.random.PCG64(ss))
