from __future__ import annotations

import numpy as np

from anoseqs.netcore.tensors import ParamTensor

ACTIVATIONS = ("identity", "relu", "tanh")


def softmax(x: np.ndarray, axis: int = -1) -> np.ndarray:
    """Numerically stable softmax along ``axis``."""
    x = np.asarray(x, dtype=np.float64)
    shifted = x - np.max(x, axis=axis, keepdims=True)
    e = np.exp(shifted)
    return e / np.sum(e, axis=axis, keepdims=True)


def _init_weight(rng: np.random.Generator, fan_in: int, fan_out: int) -> np.ndarray:
    # Uniform in +/- sqrt(1/fan_in), biases elsewhere start at zero.
    bound = np.sqrt(1.0 / fan_in)
    return rng.uniform(-bound, bound, size=(fan_in, fan_out))


class Layer:
    """Base layer: forward caches whatever backward needs; backward
    accumulates parameter gradients and returns the input gradient."""

    name: str = "layer"
    width_in: int = 0
    width_out: int = 0

    def params(self) -> list[ParamTensor]:
        return []

    def forward(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def backward(self, grad: np.ndarray) -> np.ndarray:
        raise NotImplementedError


class Dense(Layer):
    def __init__(self, name: str, width_in: int, width_out: int,
                 activation: str, rng: np.random.Generator):
        if activation not in ACTIVATIONS:
            raise ValueError(f"layer {name!r}: unknown activation {activation!r}")
        self.name = name
        self.width_in = width_in
        self.width_out = width_out
        self.activation = activation
        self.w = ParamTensor(f"{name}.w", _init_weight(rng, width_in, width_out))
        self.b = ParamTensor(f"{name}.b", np.zeros(width_out))
        self._x: np.ndarray | None = None
        self._z: np.ndarray | None = None
        self._a: np.ndarray | None = None

    def params(self) -> list[ParamTensor]:
        return [self.w, self.b]

    def forward(self, x: np.ndarray) -> np.ndarray:
        z = x @ self.w.value + self.b.value
        if self.activation == "relu":
            a = np.maximum(z, 0.0)
        elif self.activation == "tanh":
            a = np.tanh(z)
        else:
            a = z
        self._x, self._z, self._a = x, z, a
        return a

    def backward(self, grad: np.ndarray) -> np.ndarray:
        x, z, a = self._x, self._z, self._a
        if self.activation == "relu":
            dz = grad * (z > 0.0)
        elif self.activation == "tanh":
            dz = grad * (1.0 - a * a)
        else:
            dz = grad
        self.w.grad += x.T @ dz
        self.b.grad += dz.sum(axis=0)
        return dz @ self.w.value.T


class LayerNorm(Layer):
    """Per-row normalization (biased variance) followed by a learned affine."""

    EPS = 1e-6

    def __init__(self, name: str, width: int):
        self.name = name
        self.width_in = width
        self.width_out = width
        self.gamma = ParamTensor(f"{name}.gamma", np.ones(width))
        self.beta = ParamTensor(f"{name}.beta", np.zeros(width))
        self._xhat: np.ndarray | None = None
        self._inv: np.ndarray | None = None

    def params(self) -> list[ParamTensor]:
        return [self.gamma, self.beta]

    def normalize(self, x: np.ndarray) -> np.ndarray:
        mu = x.mean(axis=-1, keepdims=True)
        centered = x - mu
        var = np.mean(centered * centered, axis=-1, keepdims=True)
        inv = 1.0 / np.sqrt(var + self.EPS)
        self._inv = inv
        return centered * inv

    def forward(self, x: np.ndarray) -> np.ndarray:
        xhat = self.normalize(x)
        self._xhat = xhat
        return self.gamma.value * xhat + self.beta.value

    def backward(self, grad: np.ndarray) -> np.ndarray:
        xhat, inv = self._xhat, self._inv
        self.gamma.grad += (grad * xhat).sum(axis=0)
        self.beta.grad += grad.sum(axis=0)
        dxhat = grad * self.gamma.value
        m1 = dxhat.mean(axis=-1, keepdims=True)
        m2 = (dxhat * xhat).mean(axis=-1, keepdims=True)
        return inv * (dxhat - m1 - xhat * m2)


class SelfAttention(Layer):
    """Multi-head self-attention over a (rows, width) sequence."""

    def __init__(self, name: str, width: int, heads: int, rng: np.random.Generator):
        if heads < 1 or width % heads != 0:
            raise ValueError(f"layer {name!r}: head count {heads} must divide width {width}")
        self.name = name
        self.width_in = width
        self.width_out = width
        self.heads = heads
        self.head_dim = width // heads
        self.wq = ParamTensor(f"{name}.wq", _init_weight(rng, width, width))
        self.bq = ParamTensor(f"{name}.bq", np.zeros(width))
        self.wk = ParamTensor(f"{name}.wk", _init_weight(rng, width, width))
        self.bk = ParamTensor(f"{name}.bk", np.zeros(width))
        self.wv = ParamTensor(f"{name}.wv", _init_weight(rng, width, width))
        self.bv = ParamTensor(f"{name}.bv", np.zeros(width))
        self.wo = ParamTensor(f"{name}.wo", _init_weight(rng, width, width))
        self.bo = ParamTensor(f"{name}.bo", np.zeros(width))
        self._cache: tuple | None = None

    def params(self) -> list[ParamTensor]:
        return [self.wq, self.bq, self.wk, self.bk,
                self.wv, self.bv, self.wo, self.bo]

    def _split(self, m: np.ndarray) -> np.ndarray:
        # (rows, width) -> (heads, rows, head_dim)
        rows = m.shape[0]
        return m.reshape(rows, self.heads, self.head_dim).transpose(1, 0, 2)

    def _merge(self, m: np.ndarray) -> np.ndarray:
        rows = m.shape[1]
        return m.transpose(1, 0, 2).reshape(rows, self.width_out)

    def forward(self, x: np.ndarray) -> np.ndarray:
        q = self._split(x @ self.wq.value + self.bq.value)
        k = self._split(x @ self.wk.value + self.bk.value)
        v = self._split(x @ self.wv.value + self.bv.value)
        scale = 1.0 / np.sqrt(self.head_dim)
        scores = np.einsum("hid,hjd->hij", q, k) * scale
        attn = softmax(scores, axis=-1)
        out = np.einsum("hij,hjd->hid", attn, v)
        merged = self._merge(out)
        self._cache = (x, q, k, v, attn, merged, scale)
        return merged @ self.wo.value + self.bo.value

    def backward(self, grad: np.ndarray) -> np.ndarray:
        x, q, k, v, attn, merged, scale = self._cache
        self.wo.grad += merged.T @ grad
        self.bo.grad += grad.sum(axis=0)
        d_out = self._split(grad @ self.wo.value.T)

        d_attn = np.einsum("hid,hjd->hij", d_out, v)
        dv = np.einsum("hij,hid->hjd", attn, d_out)
        # softmax backward, row-wise per head
        inner = np.sum(d_attn * attn, axis=-1, keepdims=True)
        d_scores = attn * (d_attn - inner)
        dq = np.einsum("hij,hjd->hid", d_scores, k) * scale
        dk = np.einsum("hij,hid->hjd", d_scores, q) * scale

        dq, dk, dv = self._merge(dq), self._merge(dk), self._merge(dv)
        self.wq.grad += x.T @ dq
        self.bq.grad += dq.sum(axis=0)
        self.wk.grad += x.T @ dk
        self.bk.grad += dk.sum(axis=0)
        self.wv.grad += x.T @ dv
        self.bv.grad += dv.sum(axis=0)
        return dq @ self.wq.value.T + dk @ self.wk.value.T + dv @ self.wv.value.T


class Residual(Layer):
    """Adds the input back onto the output of a chain of inner layers."""

    def __init__(self, name: str, inner: list[Layer]):
        self.name = name
        self.inner = inner
        self.width_in = inner[0].width_in
        self.width_out = inner[-1].width_out
        if self.width_in != self.width_out:
            raise ValueError(f"layer {name!r}: residual needs matching widths")

    def params(self) -> list[ParamTensor]:
        out: list[ParamTensor] = []
        for layer in self.inner:
            out.extend(layer.params())
        return out

    def forward(self, x: np.ndarray) -> np.ndarray:
        y = x
        for layer in self.inner:
            y = layer.forward(y)
        return x + y

    def backward(self, grad: np.ndarray) -> np.ndarray:
        g = grad
        for layer in reversed(self.inner):
            g = layer.backward(g)
        return grad + g


class PositionalEncoding(Layer):
    """Adds sinusoidal position codes; parameter-free."""

    def __init__(self, name: str, width: int):
        self.name = name
        self.width_in = width
        self.width_out = width
        self._table: np.ndarray = np.zeros((0, width))

    def _codes(self, rows: int) -> np.ndarray:
        if self._table.shape[0] < rows:
            width = self.width_in
            pos = np.arange(rows, dtype=np.float64)[:, None]
            idx = np.arange(width, dtype=np.float64)[None, :]
            angle = pos / np.power(10000.0, 2.0 * np.floor(idx / 2.0) / width)
            table = np.where(idx % 2 == 0, np.sin(angle), np.cos(angle))
            self._table = table
        return self._table[:rows]

    def forward(self, x: np.ndarray) -> np.ndarray:
        return x + self._codes(x.shape[0])

    def backward(self, grad: np.ndarray) -> np.ndarray:
        return grad
