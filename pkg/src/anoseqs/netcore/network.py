from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field

import numpy as np

from anoseqs.netcore.layers import (
    ACTIVATIONS,
    Dense,
    Layer,
    LayerNorm,
    PositionalEncoding,
    Residual,
    SelfAttention,
)
from anoseqs.netcore.tensors import ParamTensor

LAYER_KINDS = ("dense", "layer_norm", "positional", "attention", "encoder_block")


@dataclass(frozen=True)
class LayerSpec:
    """One layer description.

    kind: dense | layer_norm | positional | attention | encoder_block.
    ``heads`` applies to attention/encoder_block, ``hidden`` to the
    encoder block's feed-forward width.
    """

    kind: str
    width_in: int
    width_out: int
    activation: str = "identity"
    heads: int = 0
    hidden: int = 0


@dataclass(frozen=True)
class NetSpec:
    layers: tuple[LayerSpec, ...]
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))


def spec_hash(spec: NetSpec) -> str:
    payload = json.dumps(asdict(spec), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def _validate(spec: NetSpec) -> None:
    prev_out: int | None = None
    for i, ls in enumerate(spec.layers):
        if ls.kind not in LAYER_KINDS:
            raise ValueError(f"layer {i}: unknown kind {ls.kind!r}")
        if ls.width_in < 1 or ls.width_out < 1:
            raise ValueError(f"layer {i} ({ls.kind}): widths must be positive")
        if ls.kind != "dense" and ls.width_in != ls.width_out:
            raise ValueError(f"layer {i} ({ls.kind}): width_in must equal width_out")
        if ls.kind in ("attention", "encoder_block"):
            if ls.heads < 1 or ls.width_in % ls.heads != 0:
                raise ValueError(
                    f"layer {i} ({ls.kind}): heads={ls.heads} must divide width {ls.width_in}")
        if ls.kind == "encoder_block" and ls.hidden < 1:
            raise ValueError(f"layer {i} (encoder_block): hidden width must be positive")
        if ls.kind == "dense" and ls.activation not in ACTIVATIONS:
            raise ValueError(f"layer {i} (dense): unknown activation {ls.activation!r}")
        if prev_out is not None and ls.width_in != prev_out:
            raise ValueError(
                f"layer {i} ({ls.kind}): width_in={ls.width_in} incompatible with "
                f"previous layer output {prev_out}")
        prev_out = ls.width_out


def _build_layer(i: int, ls: LayerSpec, rng: np.random.Generator) -> list[Layer]:
    name = f"l{i}.{ls.kind}"
    if ls.kind == "dense":
        return [Dense(name, ls.width_in, ls.width_out, ls.activation, rng)]
    if ls.kind == "layer_norm":
        return [LayerNorm(name, ls.width_in)]
    if ls.kind == "positional":
        return [PositionalEncoding(name, ls.width_in)]
    if ls.kind == "attention":
        return [SelfAttention(name, ls.width_in, ls.heads, rng)]
    # encoder_block: pre-residual attention + norm, then residual feed-forward + norm
    d, hid = ls.width_in, ls.hidden
    return [
        Residual(f"{name}.attn_res", [SelfAttention(f"{name}.attn", d, ls.heads, rng)]),
        LayerNorm(f"{name}.norm1", d),
        Residual(f"{name}.ff_res", [
            Dense(f"{name}.ff1", d, hid, "relu", rng),
            Dense(f"{name}.ff2", hid, d, "identity", rng),
        ]),
        LayerNorm(f"{name}.norm2", d),
    ]


@dataclass
class Network:
    spec: NetSpec
    layers: list[Layer]
    width_in: int
    width_out: int
    _forward_seen: bool = field(default=False, repr=False)

    def params(self) -> list[ParamTensor]:
        out: list[ParamTensor] = []
        for layer in self.layers:
            out.extend(layer.params())
        return out

    def zero_grad(self) -> None:
        for p in self.params():
            p.zero_grad()

    def forward(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        if x.ndim != 2:
            raise ValueError(f"forward expects a (rows, width) matrix, got shape {x.shape}")
        for layer in self.layers:
            if x.shape[1] != layer.width_in:
                raise ValueError(
                    f"layer {layer.name!r}: expected input width {layer.width_in}, "
                    f"got {x.shape[1]}")
            x = layer.forward(x)
        self._forward_seen = True
        return x

    def backward(self, grad: np.ndarray) -> np.ndarray:
        if not self._forward_seen:
            raise RuntimeError("backward called without a recorded forward pass")
        g = np.asarray(grad, dtype=np.float64)
        for layer in reversed(self.layers):
            g = layer.backward(g)
        return g

    def state(self) -> dict[str, np.ndarray]:
        return {p.name: p.value for p in self.params()}

    def load_state(self, tensors: dict[str, np.ndarray]) -> None:
        for p in self.params():
            if p.name not in tensors:
                raise ValueError(f"checkpoint missing tensor {p.name!r}")
            value = np.asarray(tensors[p.name], dtype=np.float64)
            if value.shape != p.value.shape:
                raise ValueError(
                    f"tensor {p.name!r}: checkpoint shape {value.shape} != {p.value.shape}")
            p.value[...] = value

    def copy_from(self, other: "Network") -> None:
        for mine, theirs in zip(self.params(), other.params()):
            mine.value[...] = theirs.value


def build_network(spec: NetSpec) -> Network:
    """Construct a network with parameters initialized deterministically from the seed."""
    _validate(spec)
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    layers: list[Layer] = []
    for i, ls in enumerate(spec.layers):
        layers.extend(_build_layer(i, ls, rng))
    if not layers:
        raise ValueError("network needs at least one layer")
    return Network(spec=spec, layers=layers,
                   width_in=layers[0].width_in, width_out=layers[-1].width_out)


def mlp_spec(widths: list[int], hidden_activation: str = "relu",
             output_activation: str = "identity", seed: int = 0) -> NetSpec:
    """Dense stack helper: widths [in, h1, ..., out]."""
    if len(widths) < 2:
        raise ValueError("mlp_spec needs at least input and output widths")
    layers = []
    for i in range(len(widths) - 1):
        act = output_activation if i == len(widths) - 2 else hidden_activation
        layers.append(LayerSpec("dense", widths[i], widths[i + 1], act))
    return NetSpec(layers=tuple(layers), seed=seed)
