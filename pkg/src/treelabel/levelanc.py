"""Parent and level-ancestor labels on raw trees.

Label of u on heavy path P (head h at light depth k):
delta(rootdist+1), the path key (NCA components of h without h's own
position code, so h0.l1.h1...lk), delta(d(u, h)+1), and the distance array
delta(d_1)...delta(d_k) where d_i is the distance between the heads of the
paths at light depth i-1 and i. The parent of h sits d_k - 1 below the head
of the previous path, which is how a label turns into its parent's label.
"""
from __future__ import annotations

from .bitio import BitString, BitWriter, read_delta
from .decomposition import Decomposition
from .labelset import LabelSet
from .nca import NcaBuilder, encode_components, read_raw, split_components
from .tree import RootedTree


class LevelAncScheme:
    def __init__(self, t: RootedTree):
        self.t = t
        self.d = Decomposition(t)
        self.nca = NcaBuilder(self.d)

    def label(self, u: int) -> BitString:
        d = self.d
        h = d.head[u]
        comps = self.nca.components(h)[:-1]
        darr = []
        x = h
        par = self.t.parent
        while par[x] >= 0:
            p = par[x]
            darr.append(d.depth[x] - d.depth[d.head[p]])
            x = d.head[p]
        darr.reverse()
        return encode_la(d.depth[u], comps, d.depth[u] - d.depth[h], darr)

    def label_set(self) -> LabelSet:
        return LabelSet("levelanc", [self.label(u) for u in range(self.t.n)])


def build_la(t: RootedTree) -> LabelSet:
    return LevelAncScheme(t).label_set()


def encode_la(rootdist: int, comps, head_off: int, darr) -> BitString:
    w = BitWriter()
    w.delta(rootdist + 1)
    w.write_pair(encode_components(comps))
    w.delta(head_off + 1)
    for x in darr:
        w.delta(x)
    return w.bits()


def decode_la(bits: BitString):
    v, n = bits.value, bits.length
    x, p = read_delta(v, n, 0)
    rootdist = x - 1
    C, Mk, L, p = read_raw(v, n, p)
    comps = split_components(C, Mk, L)
    if len(comps) % 2:
        raise ValueError("malformed path key")
    x, p = read_delta(v, n, p)
    head_off = x - 1
    darr = []
    for _ in range(len(comps) // 2):
        x, p = read_delta(v, n, p)
        darr.append(x)
    if p != n:
        raise ValueError("trailing bits in label")
    return rootdist, comps, head_off, darr


def parent(label: BitString) -> BitString | None:
    """Label of the parent, or None for the root."""
    rd, comps, off, darr = decode_la(label)
    if rd == 0:
        return None
    if off > 0:
        return encode_la(rd - 1, comps, off - 1, darr)
    if not darr:
        raise ValueError("malformed label: head of root path below the root")
    return encode_la(rd - 1, comps[:-2], darr[-1] - 1, darr[:-1])


def level_anc(label: BitString, steps: int) -> BitString:
    """Label of the ancestor ``steps`` levels up; jumps whole heavy paths."""
    rd, comps, off, darr = decode_la(label)
    if steps < 0 or steps > rd:
        raise ValueError("steps exceed the depth of the node")
    left = steps
    while left > off:
        left -= off + 1
        off = darr[-1] - 1
        comps = comps[:-2]
        darr = darr[:-1]
    return encode_la(rd - steps, comps, off - left, darr)
