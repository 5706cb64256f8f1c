"""TD3 actor-critic for continuous control on the netcore substrate."""

from anoseqs.agent.replay import ReplayBuffer, Transition
from anoseqs.agent.td3 import (
    AgentConfig,
    TD3Nets,
    UpdateReport,
    critic_target,
    make_td3_nets,
    select_action,
    td3_update,
)
from anoseqs.agent.training import TrainResult, evaluate_policy, train

__all__ = [
    "AgentConfig",
    "ReplayBuffer",
    "TD3Nets",
    "TrainResult",
    "Transition",
    "UpdateReport",
    "critic_target",
    "evaluate_policy",
    "make_td3_nets",
    "select_action",
    "td3_update",
    "train",
]
