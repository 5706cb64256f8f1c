from __future__ import annotations

import numpy as np

from anoseqs.envs.base import Env, EnvConfig, EnvSpec, StepResult, episode_rng, layout_rng

DT = 0.1
V_MAX = 1.5
DRAG = 0.9
ACCEL = 0.5
ARENA = 5.0
HAZARD_RADIUS = 0.8
GOAL_RADIUS = 0.3
GOAL_BONUS = 10.0
PROGRESS_GAIN = 2.0
MIN_SEPARATION = 1.5
CLEARANCE_LO, CLEARANCE_HI = -1.0, 5.0
DEFAULT_MAX_STEPS = 200


class HazardPointGoalEnv(Env):
    """Point mass navigating to a goal while crossing hazards costs.

    State: [x, y, vx, vy, gx - x, gy - y, c1, c2] with c_i the signed
    clearance to hazard i (center distance minus radius, clamped). One goal
    and two hazards are placed by the layout seed, pairwise >= 1.5 apart;
    the start position is drawn per episode away from goal and hazards.
    """

    def __init__(self, config: EnvConfig):
        super().__init__(config)
        self.spec = EnvSpec(env_id="hazard_point_goal", state_dim=8, action_dim=2,
                            role=config.role, goal_radius=GOAL_RADIUS,
                            hazard_radius=HAZARD_RADIUS)
        rng = layout_rng(config)
        self.goal, self.hazards = self._place_layout(rng)
        self._p = np.zeros(2)
        self._v = np.zeros(2)

    @staticmethod
    def _place_layout(rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
        bound = ARENA - 1.0
        for _ in range(10_000):
            points = rng.uniform(-bound, bound, size=(3, 2))
            dists = [np.linalg.norm(points[i] - points[j])
                     for i in range(3) for j in range(i + 1, 3)]
            if min(dists) >= MIN_SEPARATION:
                return points[0], points[1:]
        raise RuntimeError("layout placement failed; arena too tight")

    def _clearances(self, p: np.ndarray) -> np.ndarray:
        d = np.linalg.norm(self.hazards - p, axis=1) - HAZARD_RADIUS
        return np.clip(d, CLEARANCE_LO, CLEARANCE_HI)

    def _state(self) -> np.ndarray:
        c = self._clearances(self._p)
        g = self.goal - self._p
        return np.array([self._p[0], self._p[1], self._v[0], self._v[1],
                         g[0], g[1], c[0], c[1]])

    def reset(self, episode_seed: int) -> np.ndarray:
        self._begin_episode()
        rng = episode_rng(self.config, episode_seed)
        bound = ARENA - 1.0
        for _ in range(10_000):
            p = rng.uniform(-bound, bound, size=2)
            far_from_goal = np.linalg.norm(p - self.goal) >= 1.0
            clear = np.all(self._clearances(p) >= 0.3)
            if far_from_goal and clear:
                break
        else:
            raise RuntimeError("could not place start position")
        self._p = p
        self._v = np.zeros(2)
        return self._state()

    def step(self, action: np.ndarray) -> StepResult:
        action = self._pre_step(action)
        self._v = np.clip(DRAG * self._v + ACCEL * action, -V_MAX, V_MAX)
        dist_before = np.linalg.norm(self._p - self.goal)
        self._p = np.clip(self._p + DT * self._v, -ARENA, ARENA)
        dist_after = np.linalg.norm(self._p - self.goal)

        reward = PROGRESS_GAIN * (dist_before - dist_after)
        reached = dist_after <= GOAL_RADIUS
        if reached:
            reward += GOAL_BONUS
        cost = 1 if np.any(self._clearances(self._p) < 0.0) else 0
        truncated = not reached and self._at_step_limit()
        return self._finish_step(StepResult(
            next_state=self._state(), reward=float(reward), cost=int(cost),
            terminated=bool(reached), failure=False, truncated=truncated))
