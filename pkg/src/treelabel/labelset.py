"""Label container and its binary wire format.

Layout: b"TDL1", scheme tag byte, parameter block, n as u64 LE, then per node
a u32 LE bit length followed by the payload bytes (MSB-first, zero padded).
The parameter block is a u64 LE k for kdist, a u8 length plus ASCII decimal
eps for approx, and empty otherwise.
"""
from __future__ import annotations

import struct
from dataclasses import dataclass, field

from .bitio import BitString

MAGIC = b"TDL1"
TAGS = {"baseline": 0, "exact": 1, "kdist": 2, "approx": 3, "levelanc": 4, "nca": 5}
SCHEMES = {v: k for k, v in TAGS.items()}


class WireFormatError(ValueError):
    pass


@dataclass
class LabelSet:
    scheme: str
    labels: list[BitString]
    k: int | None = None
    eps: str | None = None
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def n(self) -> int:
        return len(self.labels)

    def max_bits(self) -> int:
        return max((len(b) for b in self.labels), default=0)

    def avg_bits(self) -> float:
        return sum(len(b) for b in self.labels) / max(1, len(self.labels))


def serialize(ls: LabelSet) -> bytes:
    if ls.scheme not in TAGS:
        raise WireFormatError(f"unknown scheme {ls.scheme!r}")
    out = [MAGIC, bytes([TAGS[ls.scheme]])]
    if ls.scheme == "kdist":
        out.append(struct.pack("<Q", ls.k))
    elif ls.scheme == "approx":
        e = str(ls.eps).encode("ascii")
        out.append(bytes([len(e)]) + e)
    out.append(struct.pack("<Q", ls.n))
    for b in ls.labels:
        out.append(struct.pack("<I", b.length))
        out.append(b.to_bytes())
    return b"".join(out)


def deserialize(data: bytes) -> LabelSet:
    if data[:4] != MAGIC:
        raise WireFormatError("bad magic")
    pos = 4
    if len(data) < 5:
        raise WireFormatError("truncated header")
    tag = data[pos]
    pos += 1
    if tag not in SCHEMES:
        raise WireFormatError(f"unknown scheme tag {tag}")
    scheme = SCHEMES[tag]
    k = eps = None

    def take(n):
        nonlocal pos
        if pos + n > len(data):
            raise WireFormatError("truncated payload")
        chunk = data[pos:pos + n]
        pos += n
        return chunk

    if scheme == "kdist":
        (k,) = struct.unpack("<Q", take(8))
    elif scheme == "approx":
        ln = take(1)[0]
        eps = take(ln).decode("ascii")
    (n,) = struct.unpack("<Q", take(8))
    labels = []
    for _ in range(n):
        (bl,) = struct.unpack("<I", take(4))
        labels.append(BitString.from_bytes(take((bl + 7) // 8), bl))
    if pos != len(data):
        raise WireFormatError("trailing bytes after last label")
    return LabelSet(scheme, labels, k, eps)
