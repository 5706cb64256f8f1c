from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from anoseqs.netcore.tensors import ParamTensor

MAGIC = b"ANOSEQ1\n"


def save_checkpoint(path: str | Path, spec_hash: str, params: list[ParamTensor],
                    extra: dict[str, str] | None = None) -> None:
    """Binary checkpoint: magic, key=value text header, then per-tensor
    name length + name + rank + shape (LE u32) + values (LE f32)."""
    header = {"spec_hash": spec_hash, "tensor_count": str(len(params))}
    for key, value in (extra or {}).items():
        if key in header:
            raise ValueError(f"reserved header key {key!r}")
        if "=" in key or "\n" in key or "\n" in str(value):
            raise ValueError(f"header entry {key!r} not representable")
        header[key] = str(value)

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "wb") as f:
        f.write(MAGIC)
        for key, value in header.items():
            f.write(f"{key}={value}\n".encode("utf-8"))
        f.write(b"\n")
        for p in params:
            name = p.name.encode("utf-8")
            f.write(struct.pack("<I", len(name)))
            f.write(name)
            f.write(struct.pack("<I", p.value.ndim))
            f.write(struct.pack(f"<{p.value.ndim}I", *p.value.shape))
            f.write(np.ascontiguousarray(p.value, dtype="<f4").tobytes())


def load_checkpoint(path: str | Path) -> tuple[dict[str, str], dict[str, np.ndarray]]:
    """Returns (header, tensors); tensor values come back as float64."""
    with open(path, "rb") as f:
        data = f.read()
    if not data.startswith(MAGIC):
        raise ValueError(f"{path}: not a checkpoint (bad magic)")
    pos = len(MAGIC)

    header: dict[str, str] = {}
    while True:
        end = data.index(b"\n", pos)
        line = data[pos:end].decode("utf-8")
        pos = end + 1
        if not line:
            break
        key, _, value = line.partition("=")
        header[key] = value
    if "spec_hash" not in header or "tensor_count" not in header:
        raise ValueError(f"{path}: header missing spec_hash/tensor_count")

    tensors: dict[str, np.ndarray] = {}
    count = int(header["tensor_count"])
    for _ in range(count):
        (name_len,) = struct.unpack_from("<I", data, pos)
        pos += 4
        name = data[pos:pos + name_len].decode("utf-8")
        pos += name_len
        (rank,) = struct.unpack_from("<I", data, pos)
        pos += 4
        shape = struct.unpack_from(f"<{rank}I", data, pos)
        pos += 4 * rank
        size = int(np.prod(shape)) if rank else 1
        values = np.frombuffer(data, dtype="<f4", count=size, offset=pos)
        pos += 4 * size
        tensors[name] = values.astype(np.float64).reshape(shape)
    if pos != len(data):
        raise ValueError(f"{path}: trailing bytes after {count} tensors")
    return header, tensors
