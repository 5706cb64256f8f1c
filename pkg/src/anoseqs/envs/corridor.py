from __future__ import annotations

import numpy as np

from anoseqs.envs.base import Env, EnvConfig, EnvSpec, StepResult

DT = 0.1
V_LIMIT = 1.0
V_MAX = 1.5
DRAG = 0.9
ACCEL = 0.5
DEFAULT_MAX_STEPS = 300


class CorridorRunEnv(Env):
    """Run forward between walls at |y| = 1; speeding past v_limit costs.

    State: [y, vx, vy, 1 - |y|, vx - v_limit]. Reward is forward progress
    dt * vx'; cost fires when vx' exceeds the velocity limit; leaving the
    corridor is a failure termination.
    """

    def __init__(self, config: EnvConfig):
        super().__init__(config)
        self.spec = EnvSpec(env_id="corridor_run", state_dim=5, action_dim=2,
                            role=config.role, v_limit=V_LIMIT)
        self._y = 0.0
        self._v = np.zeros(2)

    def _state(self) -> np.ndarray:
        return np.array([self._y, self._v[0], self._v[1],
                         1.0 - abs(self._y), self._v[0] - V_LIMIT])

    def reset(self, episode_seed: int) -> np.ndarray:
        self._begin_episode()
        self._y = 0.0
        self._v = np.zeros(2)
        return self._state()

    def step(self, action: np.ndarray) -> StepResult:
        action = self._pre_step(action)
        self._v = np.clip(DRAG * self._v + ACCEL * action, -V_MAX, V_MAX)
        self._y += DT * self._v[1]
        reward = DT * self._v[0]
        cost = 1 if self._v[0] > V_LIMIT else 0
        failure = abs(self._y) > 1.0
        truncated = not failure and self._at_step_limit()
        return self._finish_step(StepResult(
            next_state=self._state(), reward=float(reward), cost=cost,
            terminated=failure, failure=failure, truncated=truncated))
