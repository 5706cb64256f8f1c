from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Transition:
    """One environment step as stored for learning.

    reward_used is what the learner optimizes (shaped in phase 2);
    reward_orig is the environment's own reward. done_for_bootstrap is
    true only for real terminations (failure/goal), never step limits.
    """

    state: np.ndarray
    action: np.ndarray
    reward_used: float
    reward_orig: float
    cost: int
    next_state: np.ndarray
    done_for_bootstrap: bool


@dataclass(frozen=True)
class Batch:
    states: np.ndarray
    actions: np.ndarray
    rewards_used: np.ndarray
    next_states: np.ndarray
    dones: np.ndarray


class ReplayBuffer:
    """Fixed-capacity ring buffer over flat numpy storage; oldest evicted first."""

    def __init__(self, capacity: int, state_dim: int, action_dim: int):
        if capacity < 1:
            raise ValueError("capacity must be positive")
        self.capacity = capacity
        self.insertions = 0
        self._states = np.zeros((capacity, state_dim))
        self._actions = np.zeros((capacity, action_dim))
        self._rewards_used = np.zeros(capacity)
        self._rewards_orig = np.zeros(capacity)
        self._costs = np.zeros(capacity, dtype=np.int64)
        self._next_states = np.zeros((capacity, state_dim))
        self._dones = np.zeros(capacity)

    def __len__(self) -> int:
        return min(self.insertions, self.capacity)

    def add(self, t: Transition) -> None:
        i = self.insertions % self.capacity
        self._states[i] = t.state
        self._actions[i] = t.action
        self._rewards_used[i] = t.reward_used
        self._rewards_orig[i] = t.reward_orig
        self._costs[i] = t.cost
        self._next_states[i] = t.next_state
        self._dones[i] = 1.0 if t.done_for_bootstrap else 0.0
        self.insertions += 1

    def sample(self, batch_size: int, rng: np.random.Generator) -> Batch:
        size = len(self)
        if batch_size > size:
            raise ValueError(f"batch_size {batch_size} exceeds buffer size {size}")
        idx = rng.integers(0, size, size=batch_size)
        return Batch(
            states=self._states[idx],
            actions=self._actions[idx],
            rewards_used=self._rewards_used[idx],
            next_states=self._next_states[idx],
            dones=self._dones[idx],
        )

    def entries(self) -> list[Transition]:
        """Current contents, oldest first (test/inspection helper)."""
        size = len(self)
        start = self.insertions % self.capacity if self.insertions > self.capacity else 0
        out = []
        for k in range(size):
            i = (start + k) % self.capacity
            out.append(Transition(
                state=self._states[i].copy(), action=self._actions[i].copy(),
                reward_used=float(self._rewards_used[i]),
                reward_orig=float(self._rewards_orig[i]),
                cost=int(self._costs[i]),
                next_state=self._next_states[i].copy(),
                done_for_bootstrap=bool(self._dones[i]),
            ))
        return out
