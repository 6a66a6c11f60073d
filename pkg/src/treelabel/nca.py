"""NCA labels built from the heavy path decomposition.

A label is the component list h0.l1.h1...lk.hk: hi is an alphabetic
(Gilbert-Moore) code of the node's position on the i-th heavy path, weighted
by light-range size, and li is an alphabetic code of the light child taken,
weighted by subtree size. Code lengths telescope, so labels are O(log n).

Serialized as gamma(L+1), the L concatenated code bits, and an L-bit marker
vector flagging the first bit of each component.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bitio import BitString, BitWriter, gamma_code, read_bits, read_gamma
from .decomposition import Decomposition


def alphabetic_codes(weights: list[int]) -> list[tuple[int, int]]:
    """Prefix-free, order-preserving codes; item j gets <= log(W/w_j) + 2 bits."""
    W = sum(weights)
    out = []
    cum = 0
    for w in weights:
        if w <= 0:
            raise ValueError("weights must be positive")
        L = ((W + w - 1) // w - 1).bit_length() + 1
        out.append((((2 * cum + w) << L) // (2 * W), L))
        cum += w
    return out


def code_less(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Lexicographic order of two bit strings (prefix-free, so never equal)."""
    (av, al), (bv, bl) = a, b
    m = max(al, bl)
    return (av << (m - al)) < (bv << (m - bl))


@dataclass(frozen=True)
class NcaLabel:
    components: tuple[tuple[int, int], ...]

    @property
    def lightdepth(self) -> int:
        return len(self.components) // 2

    def encode(self) -> tuple[int, int]:
        return encode_components(self.components)

    def bits(self) -> BitString:
        return BitString(*self.encode())

    @classmethod
    def decode(cls, value: int, length: int, pos: int = 0) -> tuple["NcaLabel", int]:
        C, Mk, L, end = read_raw(value, length, pos)
        return cls(split_components(C, Mk, L)), end

    def __str__(self):
        return ".".join(format(v, "b").zfill(n) for v, n in self.components)


def encode_components(comps) -> tuple[int, int]:
    w = BitWriter()
    L = sum(n for _, n in comps)
    w.write_pair(gamma_code(L + 1))
    mk = 0
    for v, n in comps:
        w.write(v, n)
        mk = (mk << n) | (1 << (n - 1))
    w.write(mk, L)
    return w.value, w.length


def read_raw(value: int, length: int, pos: int):
    L1, p = read_gamma(value, length, pos)
    L = L1 - 1
    C = read_bits(value, length, p, L)
    Mk = read_bits(value, length, p + L, L)
    return C, Mk, L, p + 2 * L


def split_components(C: int, Mk: int, L: int) -> tuple[tuple[int, int], ...]:
    starts = []
    m = Mk
    while m:
        low = m & -m
        starts.append(L - low.bit_length())
        m ^= low
    starts.reverse()
    out = []
    for i, s in enumerate(starts):
        e = starts[i + 1] if i + 1 < len(starts) else L
        out.append(((C >> (L - e)) & ((1 << (e - s)) - 1), e - s))
    return tuple(out)


def common_components(a, b) -> int:
    """Number of leading components shared by two raw (C, Mk, L) triples.

    Works on the bit strings directly: find the first position where code
    bits or markers differ, then count the markers before it.
    """
    Ca, Ma, La = a
    Cb, Mb, Lb = b
    m = min(La, Lb)
    ta, tb = La - m, Lb - m
    x = ((Ca >> ta) ^ (Cb >> tb)) | ((Ma >> ta) ^ (Mb >> tb))
    p = m - x.bit_length()          # first differing position, or m
    cnt = (Ma >> (La - p)).bit_count() if p else 0
    if p < m:
        ma = (Ma >> (La - 1 - p)) & 1
        mb = (Mb >> (Lb - 1 - p)) & 1
        return cnt if (ma and mb) else cnt - 1
    if La == Lb:
        return cnt
    # one side is exhausted: is the longer one starting a component at p?
    if La > Lb:
        nxt = (Ma >> (La - 1 - p)) & 1
    else:
        nxt = (Mb >> (Lb - 1 - p)) & 1
    return cnt if nxt else cnt - 1


def nca_lightdepth_raw(a, b) -> int:
    return common_components(a, b) // 2


class NcaBuilder:
    """Per-node codes for a decomposition; labels are assembled on demand."""

    def __init__(self, d: Decomposition):
        self.d = d
        t = d.tree
        size = d.size
        n = t.n
        node_code = [None] * n
        light_code = [None] * n
        heavy = d.heavy
        for h, nodes in d.paths.items():
            ws = [size[x] - (size[heavy[x]] if heavy[x] >= 0 else 0) for x in nodes]
            for x, c in zip(nodes, alphabetic_codes(ws)):
                node_code[x] = c
            for x in nodes:
                lights = [c for c in t.children[x] if c != heavy[x]]
                if lights:
                    for c, code in zip(lights, alphabetic_codes([size[c] for c in lights])):
                        light_code[c] = code
        self.node_code = node_code
        self.light_code = light_code

    def components(self, u: int) -> tuple[tuple[int, int], ...]:
        d = self.d
        head, par = d.head, d.tree.parent
        out = [self.node_code[u]]
        x = u
        while True:
            h = head[x]
            p = par[h]
            if p < 0:
                break
            out.append(self.light_code[h])
            out.append(self.node_code[p])
            x = p
        out.reverse()
        return tuple(out)

    def label(self, u: int) -> NcaLabel:
        return NcaLabel(self.components(u))


def build_nca(d: Decomposition) -> list[NcaLabel]:
    b = NcaBuilder(d)
    return [b.label(u) for u in range(d.n)]


def nca_query(a: NcaLabel, b: NcaLabel) -> tuple[NcaLabel, int]:
    ca, cb = a.components, b.components
    m = min(len(ca), len(cb))
    c = 0
    while c < m and ca[c] == cb[c]:
        c += 1
    if c == len(ca) and c == len(cb):
        return a, a.lightdepth
    if c % 2 == 0 and c < m:
        # diverging positions on one heavy path: the shallower one wins
        hc = ca[c] if code_less(ca[c], cb[c]) else cb[c]
        return NcaLabel(ca[:c] + (hc,)), c // 2
    return NcaLabel(ca[:c]), (c - 1) // 2
