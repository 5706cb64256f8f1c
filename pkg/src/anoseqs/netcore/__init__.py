"""Minimal differentiable-network substrate.

Dense layers, multi-head self-attention, layer norm and Adam, all in
float64 numpy with hand-written backward passes so that every gradient
can be checked against central finite differences.
"""

from anoseqs.netcore.adam import Adam, AdamState
from anoseqs.netcore.checkpoint import MAGIC, load_checkpoint, save_checkpoint
from anoseqs.netcore.gradcheck import grad_check
from anoseqs.netcore.layers import softmax
from anoseqs.netcore.network import LayerSpec, NetSpec, Network, build_network, spec_hash
from anoseqs.netcore.tensors import ParamTensor

__all__ = [
    "Adam",
    "AdamState",
    "LayerSpec",
    "MAGIC",
    "NetSpec",
    "Network",
    "ParamTensor",
    "build_network",
    "grad_check",
    "load_checkpoint",
    "save_checkpoint",
    "softmax",
    "spec_hash",
]
