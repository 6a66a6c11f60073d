"""Exact distance labels on normalized (binary, 0/1 weighted) trees.

Two schemes share the same query skeleton: orient the pair so that u
dominates v, get j = lightdepth(NCA) + 1 from the NCA labels, recover
rootdist(NCA) from level j of u's (and v's) label, and return
rootdist(u) + rootdist(v) - 2 * rootdist(NCA).

* baseline: stores the whole distance array as suffix sums.
* exact: stores fragment-relative distances truncated by a size budget; the
  dropped low bits live in accumulators of the dominated side.
"""
from __future__ import annotations

import math

from .bitio import (BitString, BitWriter, MonotoneSeq, delta_code, encode_monotone,
                    read_bits, read_delta)
from .decomposition import CollapsedTree, Decomposition
from .labelset import LabelSet
from .nca import NcaBuilder, encode_components, nca_lightdepth_raw, read_raw
from .tree import NormalizedTree


def write_sections(sections: list[tuple[int, int]]) -> BitString:
    """Header of delta(len+1) for all sections but the last, then the data."""
    w = BitWriter()
    for v, n in sections[:-1]:
        w.write_pair(delta_code(n + 1))
    for sec in sections:
        w.write_pair(sec)
    return w.bits()


def read_sections(value: int, length: int, count: int) -> list[int]:
    """Start offsets of ``count`` sections (plus the end offset)."""
    lens = []
    p = 0
    for _ in range(count - 1):
        x, p = read_delta(value, length, p)
        lens.append(x - 1)
    starts = [p]
    for ln in lens:
        starts.append(starts[-1] + ln)
    starts.append(length)
    if starts[-2] > length:
        raise ValueError("truncated label")
    return starts


def allocate_budget(n_i: int, n_i_prime: int, value_bits: int) -> tuple[int, int]:
    """Split the bits of a stored distance into (kept, pushed) counts."""
    if not 1 <= n_i < n_i_prime:
        raise ValueError("need 1 <= n_i < n_i_prime")
    if n_i * 256 <= n_i_prime:
        return value_bits, 0
    budget = math.ceil(0.5 * math.log2(n_i_prime / n_i) * math.log2(n_i_prime)) + 1
    kept = min(value_bits, budget)
    return kept, value_bits - kept


class _LeafScheme:
    def __init__(self, nt: NormalizedTree):
        self.nt = nt
        t = nt.tree
        self.t = t
        self.d = Decomposition(t)
        self.c = CollapsedTree(self.d)
        self.nca = NcaBuilder(self.d)
        self.rd = t.rootdist()

    def light_heads(self, u: int) -> list[int]:
        """Heads of the light child paths on the root path of u, top-down."""
        head, par = self.d.head, self.t.parent
        out = []
        x = u
        while True:
            h = head[x]
            p = par[h]
            if p < 0:
                break
            out.append(h)
            x = p
        out.reverse()
        return out

    def nca_bits(self, u: int) -> tuple[int, int]:
        return encode_components(self.nca.components(u))

    def label(self, u: int) -> BitString:
        raise NotImplementedError

    def label_set(self, scheme: str) -> LabelSet:
        labels = [self.label(leaf) for leaf in self.nt.rep]
        return LabelSet(scheme, labels, meta={"normalized_n": self.t.n})


class BaselineScheme(_LeafScheme):
    """Sections: rootdist+inorder, NCA, index of suffix-sum codes, suffix
    sums delta-coded, one weight bit per light level."""

    def label(self, u: int) -> BitString:
        rd = self.rd
        heads = self.light_heads(u)
        k = len(heads)
        top = rd[heads[-1]] if heads else 0
        s0 = BitWriter()
        s0.delta(rd[u] + 1)
        s0.delta(self.c.path_inorder(u) + 1)
        data = BitWriter()
        starts = []
        prev = 0
        for c in heads:
            starts.append(data.length)
            data.delta(top - prev + 1)
            prev = rd[c]
        wbits = BitWriter()
        for c in heads:
            wbits.write(self.t.weight[c], 1)
        return write_sections([(s0.value, s0.length), self.nca_bits(u),
                               encode_monotone(starts, None, False),
                               (data.value, data.length), (wbits.value, wbits.length)])


def baseline_query(a: BitString, b: BitString) -> int:
    if a == b:
        return 0
    pa = _BaseView(a)
    pb = _BaseView(b)
    if pa.ino > pb.ino:
        pa, pb = pb, pa
    j = nca_lightdepth_raw(pa.nca, pb.nca) + 1
    rdw = pa.suffix(1) - pa.suffix(j + 1) - pa.weight(j)
    return pa.rd + pb.rd - 2 * rdw


class _BaseView:
    __slots__ = ("v", "n", "st", "rd", "ino", "nca", "idx")

    def __init__(self, bits: BitString):
        v, n = self.v, self.n = bits.value, bits.length
        st = self.st = read_sections(v, n, 5)
        x, p = read_delta(v, n, st[0])
        self.rd = x - 1
        x, p = read_delta(v, n, p)
        self.ino = x - 1
        self.nca = read_raw(v, n, st[1])[:3]
        self.idx = MonotoneSeq(v, n, st[2], False)

    def suffix(self, i: int) -> int:
        if i > self.idx.s:
            return 0
        x, _ = read_delta(self.v, self.n, self.st[3] + self.idx.access(i))
        return x - 1

    def weight(self, j: int) -> int:
        return read_bits(self.v, self.n, self.st[4] + j - 1, 1)


class ExactScheme(_LeafScheme):
    """Fragment arrays, truncated per-level distances and accumulators.

    Sections: rootdist+inorder, NCA, fragment array F, entry index, entries
    (delta(j'+1) delta(p+1) w delta(kept+1) per light level), accumulator
    end offsets, accumulator bits.
    """

    def __init__(self, nt: NormalizedTree):
        super().__init__(nt)
        d, c, t, rd = self.d, self.c, self.t, self.rd
        n = t.n
        self.B = B = max(1, math.ceil(math.sqrt(math.log2(n)))) if n > 1 else 1

        def levels(S):
            i = 0
            while S << ((i + 1) * B) <= n:
                i += 1
            return i

        size = d.size
        par = t.parent
        self.frag: dict[int, tuple] = {}
        self.entry: dict[int, tuple] = {}
        self.acc_before: dict[int, tuple[int, int]] = {}
        self.acc_end: dict[int, tuple[int, int]] = {}
        self.frag[c.root] = ()
        order = [c.root]
        i = 0
        while i < len(order):
            h = order[i]
            i += 1
            F = self.frag[h]
            acc_v, acc_n = 0, 0
            exc = c.exceptional[h]
            for ch in c.children[h]:
                order.append(ch)
                Fc = F + (rd[ch],) * (levels(size[ch]) - len(F))
                self.frag[ch] = Fc
                self.acc_before[ch] = (acc_v, acc_n)
                if ch == exc:
                    self.entry[ch] = (0, 0, 0, 0)
                    continue
                jp = len(Fc)
                r = rd[ch] - (Fc[-1] if Fc else 0)
                kept, pushed = allocate_budget(size[ch], size[par[ch]], r.bit_length())
                self.entry[ch] = (jp, t.weight[ch], pushed, r >> pushed)
                if pushed:
                    acc_v |= (r & ((1 << pushed) - 1)) << acc_n
                    acc_n += pushed
            self.acc_end[h] = (acc_v, acc_n)

    def fragment_heads(self, u: int) -> list[int]:
        """Rootdists stored in F for the path of u."""
        return list(self.frag[self.d.head[u]])

    def label(self, u: int) -> BitString:
        heads = self.light_heads(u)
        s0 = BitWriter()
        s0.delta(self.rd[u] + 1)
        s0.delta(self.c.path_inorder(u) + 1)
        F = self.frag[self.d.head[u]]
        data = BitWriter()
        starts = []
        for ch in heads:
            jp, w, p, kept = self.entry[ch]
            starts.append(data.length)
            data.delta(jp + 1)
            data.delta(p + 1)
            data.write(w, 1)
            data.delta(kept + 1)
        accs = [self.acc_before[ch] for ch in heads]
        accs.append(self.acc_end[self.d.head[u]])
        acc = BitWriter()
        ends = []
        for v, n in accs:
            acc.write(v, n)
            ends.append(acc.length)
        return write_sections([
            (s0.value, s0.length), self.nca_bits(u),
            encode_monotone(F, None, False), encode_monotone(starts, None, False),
            (data.value, data.length), encode_monotone(ends, None, False),
            (acc.value, acc.length)])

    def level_edge(self, u: int, j: int) -> int:
        """Head of the level-j light child path on u's root path."""
        return self.light_heads(u)[j - 1]


def exact_query(a: BitString, b: BitString) -> int:
    if a == b:
        return 0
    pa = _ExactView(a)
    pb = _ExactView(b)
    if pa.ino > pb.ino:
        pa, pb = pb, pa
    j = nca_lightdepth_raw(pa.nca, pb.nca) + 1
    v, n, st = pa.v, pa.n, pa.st
    p = st[4] + MonotoneSeq(v, n, st[3], False).access(j)
    jp, p = read_delta(v, n, p)
    pushed, p = read_delta(v, n, p)
    w = (v >> (n - p - 1)) & 1
    kept, _ = read_delta(v, n, p + 1)
    jp -= 1
    pushed -= 1
    r = (kept - 1) << pushed
    if pushed:
        ea = pa.ends
        la = ea.access(j) - (ea.access(j - 1) if j > 1 else 0)
        eb = pb.ends
        sb = eb.access(j - 1) if j > 1 else 0
        lb = eb.access(j) - sb
        r |= read_bits(pb.v, pb.n, pb.st[6] + sb + lb - la - pushed, pushed)
    f = MonotoneSeq(v, n, st[2], False).access(jp) if jp else 0
    rdw = f + r - w
    return pa.rd + pb.rd - 2 * rdw


class _ExactView:
    __slots__ = ("v", "n", "st", "rd", "ino", "nca", "ends")

    def __init__(self, bits: BitString):
        v, n = self.v, self.n = bits.value, bits.length
        st = self.st = read_sections(v, n, 7)
        x, p = read_delta(v, n, st[0])
        self.rd = x - 1
        x, p = read_delta(v, n, p)
        self.ino = x - 1
        self.nca = read_raw(v, n, st[1])[:3]
        self.ends = MonotoneSeq(v, n, st[5], False)


def build_baseline(nt: NormalizedTree) -> LabelSet:
    return BaselineScheme(nt).label_set("baseline")


def build_exact(nt: NormalizedTree) -> LabelSet:
    return ExactScheme(nt).label_set("exact")
