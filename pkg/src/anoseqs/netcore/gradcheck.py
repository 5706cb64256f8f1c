from __future__ import annotations

from typing import Callable

import numpy as np

from anoseqs.netcore.network import Network

LossFn = Callable[[np.ndarray], tuple[float, np.ndarray]]


def sum_of_squares(y: np.ndarray) -> tuple[float, np.ndarray]:
    """Default check loss L = sum(y^2); gradient 2y."""
    return float(np.sum(y * y)), 2.0 * y


def grad_check(net: Network, x: np.ndarray, eps: float = 1e-4,
               loss: LossFn = sum_of_squares) -> float:
    """Max relative error between analytic and central-difference gradients.

    Relative error per entry is |analytic - numeric| / max(1, |numeric|);
    a network with no parameters checks out at 0.
    """
    if not 0.0 < eps <= 1e-2:
        raise ValueError(f"eps must be in (0, 1e-2], got {eps}")
    x = np.asarray(x, dtype=np.float64)

    _, dy = loss(net.forward(x))
    net.zero_grad()
    net.backward(dy)
    analytic = {p.name: p.grad.copy() for p in net.params()}

    worst = 0.0
    for p in net.params():
        flat = p.value.reshape(-1)
        aflat = analytic[p.name].reshape(-1)
        for i in range(flat.size):
            orig = flat[i]
            flat[i] = orig + eps
            up, _ = loss(net.forward(x))
            flat[i] = orig - eps
            down, _ = loss(net.forward(x))
            flat[i] = orig
            numeric = (up - down) / (2.0 * eps)
            err = abs(aflat[i] - numeric) / max(1.0, abs(numeric))
            if err > worst:
                worst = err
    return worst
