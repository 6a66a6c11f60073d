"""k-bounded distance labels on raw trees.

For a node u let u_0 = u and u_{i+1} = parent(head(path(u_i))): its
significant ancestors. A label keeps the chain while d(u, u_i) <= k, plus
enough about the top chain node u_r to place it on its heavy path.

Two chains meet on the deepest heavy path they share. That level is found
from the heights of the preorder ranges of the path-head subtrees: at one
light depth these ranges are disjoint, so two nodes share the path iff the
range heights agree and cover the differing bits of their preorders.
"""
from __future__ import annotations

from .bitio import BitString, BitWriter, MonotoneSeq, encode_monotone, gamma_code, read_delta, read_gamma
from .decomposition import Decomposition
from .labelset import LabelSet
from .tree import RootedTree


class LabelMismatchError(ValueError):
    pass


def range_id(pre: int, height: int, max_height: int | None = None) -> int:
    if height < 0 or (max_height is not None and height > max_height):
        raise ValueError("height out of range")
    if height == 0:
        return pre
    return ((pre >> height) << height) | (1 << (height - 1))


def range_height(lo: int, hi: int) -> int:
    """Trie height of the half-open preorder range [lo, hi)."""
    return (lo ^ (hi - 1)).bit_length()


def appx(x: int) -> int:
    if x < 1:
        raise ValueError("appx needs x >= 1")
    return 1 << (x.bit_length() - 1)


def resolve_path_offset(i_mod_k: int, j_mod_k: int, fwd, bwd, id_u: int, id_v: int, k: int):
    """Offset j - i between two positions on a heavy path, or None if > k.

    ``fwd[t-1]`` is log2 appx(a_{i+t} - a_i) and ``bwd[t-1]`` is
    log2 appx(a_j - a_{j-t}); missing entries mean the path ends first.
    """
    if id_u == id_v:
        return 0
    if id_u > id_v:
        raise ValueError("need id_u < id_v")
    t = (j_mod_k - i_mod_k) % k
    if t == 0:
        t = k        # offsets that are multiples of k: k itself is still in range
    if t > len(fwd) or t > len(bwd):
        return None
    e = (id_v - id_u).bit_length() - 1
    if fwd[t - 1] == e and bwd[t - 1] == e:
        return t
    return None


class _Seq:
    """Plain list view with 1-based access, used by resolve_path_offset."""

    def __init__(self, q: MonotoneSeq):
        self.q = q

    def __len__(self):
        return self.q.s

    def __getitem__(self, i):
        return self.q.access(i + 1)


class KDistScheme:
    def __init__(self, t: RootedTree, k: int):
        if k < 1:
            raise ValueError("k must be >= 1")
        self.t = t
        self.k_requested = k
        self.clamped = k > t.n
        self.k = k = min(k, t.n)
        self.large = (1 << k) >= t.n
        self.d = d = Decomposition(t)
        n = t.n
        pre, size, heavy, head = d.pre, d.size, d.heavy, d.head
        self.lr_height = [0] * n
        self.sub_height = [0] * n
        for x in range(n):
            lo = pre[x]
            hi = pre[heavy[x]] if heavy[x] >= 0 else lo + size[x]
            self.lr_height[x] = range_height(lo, hi)
        for h in d.paths:
            sh = range_height(pre[h], pre[h] + size[h])
            for x in d.paths[h]:
                self.sub_height[x] = sh
        self._top_cache: dict[int, tuple] = {}

    def _top_data(self, x: int) -> tuple:
        """Encoded (lr height, position mod k, fwd, bwd) for a top node."""
        hit = self._top_cache.get(x)
        if hit is not None:
            return hit
        d, k = self.d, self.k
        nodes = d.paths[d.head[x]]
        p = d.depth[x] - d.depth[nodes[0]]
        ids = []
        lo_i = max(0, p - k)
        hi_i = min(len(nodes), p + k + 1)
        for q in range(lo_i, hi_i):
            y = nodes[q]
            ids.append(range_id(d.pre[y], self.lr_height[y]))
        a = ids[p - lo_i]
        fwd = [(ids[q - lo_i] - a).bit_length() - 1 for q in range(p + 1, hi_i)]
        bwd = [(a - ids[q - lo_i]).bit_length() - 1 for q in range(p - 1, lo_i - 1, -1)]
        for s in (fwd, bwd):
            if any(s[i] > s[i + 1] for i in range(len(s) - 1)):
                raise AssertionError("appx gap sequence not monotone")
        w = BitWriter()
        w.write_pair(gamma_code(self.lr_height[x] + 1))
        w.write_pair(gamma_code((p + 1) % k + 1))
        w.write_pair(encode_monotone(fwd, None, False))
        w.write_pair(encode_monotone(bwd, None, False))
        hit = (w.value, w.length)
        self._top_cache[x] = hit
        return hit

    def label(self, u: int) -> BitString:
        d, k = self.d, self.k
        depth, head, par = d.depth, d.head, self.t.parent
        sh = [self.sub_height[u]]
        dists = []
        x = u
        while True:
            p = par[head[x]]
            if p < 0 or depth[u] - depth[p] > k:
                break
            x = p
            sh.append(self.sub_height[x])
            dists.append(depth[u] - depth[x])
        alpha = depth[x] - depth[head[x]]
        w = BitWriter()
        w.delta(k)
        w.write(int(self.clamped), 1)
        w.write(int(self.large), 1)
        w.delta(d.pre[u] + 1)
        w.gamma(d.lightdepth[u] + 1)
        w.write_pair(encode_monotone(sh, None, self.large))
        w.write_pair(encode_monotone(dists, None, False))
        if self.large:
            w.delta(alpha + 1)
        else:
            w.gamma(min(alpha, 2 * k + 1) + 1)
            w.write_pair(self._top_data(x))
        return w.bits()

    def label_set(self) -> LabelSet:
        return LabelSet("kdist", [self.label(u) for u in range(self.t.n)], k=self.k_requested)


def build_k(t: RootedTree, k: int) -> LabelSet:
    return KDistScheme(t, k).label_set()


class _KView:
    __slots__ = ("k", "clamped", "large", "pre", "ld", "sh", "dists", "alpha",
                 "lrh", "pmod", "fwd", "bwd", "v", "n")

    def __init__(self, bits: BitString):
        v, n = self.v, self.n = bits.value, bits.length
        self.k, p = read_delta(v, n, 0)
        if p + 2 > n:
            raise ValueError("truncated label")
        self.clamped = (v >> (n - p - 1)) & 1
        self.large = (v >> (n - p - 2)) & 1
        x, p = read_delta(v, n, p + 2)
        self.pre = x - 1
        x, p = read_gamma(v, n, p)
        self.ld = x - 1
        self.sh = MonotoneSeq(v, n, p, bool(self.large))
        self.dists = MonotoneSeq(v, n, self.sh.end, False)
        p = self.dists.end
        if self.large:
            x, p = read_delta(v, n, p)
            self.alpha = x - 1
        else:
            x, p = read_gamma(v, n, p)
            self.alpha = x - 1
            x, p = read_gamma(v, n, p)
            self.lrh = x - 1
            x, p = read_gamma(v, n, p)
            self.pmod = x - 1
            self.fwd = MonotoneSeq(v, n, p, False)
            self.bwd = MonotoneSeq(v, n, self.fwd.end, False)

    @property
    def r(self) -> int:
        return self.dists.s

    def dist(self, i: int) -> int:
        return self.dists.access(i) if i else 0


def k_query(a: BitString, b: BitString, k: int | None = None):
    """Exact distance if it is at most k, otherwise None."""
    A = _KView(a)
    B = _KView(b)
    if A.k != B.k or A.large != B.large:
        raise LabelMismatchError("labels come from builds with different k")
    K = A.k
    if k is not None and k != K and not (A.clamped and k > K):
        raise LabelMismatchError(f"labels were built for k = {K}, not {k}")
    if A.pre == B.pre:
        return 0
    lcp = (A.pre ^ B.pre).bit_length()
    lo = max(A.ld - A.r, B.ld - B.r)
    hi = min(A.ld, B.ld)
    if lo > hi:
        return None
    iu_top = A.ld - lo
    iv_top = B.ld - lo
    t = A.sh.common_suffix(B.sh, iu_top + 1, iv_top + 1)
    if t == 0:
        return None
    succ = A.sh.successor(lcp)
    if succ is None:
        return None
    idx = max(succ[0], iu_top - t + 2)         # 1-based index into A.sh
    if idx > iu_top + 1:
        return None
    iu = idx - 1
    L = A.ld - iu
    iv = B.ld - L
    du = A.dist(iu)
    dv = B.dist(iv)
    if du + dv > K:
        return None
    top_u = iu == A.r
    top_v = iv == B.r
    if not top_u:
        au = A.dist(iu + 1) - du - 1
    if not top_v:
        av = B.dist(iv + 1) - dv - 1
    if not top_u and not top_v:
        mid = abs(au - av)
    elif top_u and not top_v:
        if not A.large and A.alpha == 2 * K + 1:
            return None
        mid = abs(A.alpha - av)
    elif top_v and not top_u:
        if not B.large and B.alpha == 2 * K + 1:
            return None
        mid = abs(B.alpha - au)
    elif A.large:
        mid = abs(A.alpha - B.alpha)
    else:
        id_u = range_id(A.pre, A.lrh)
        id_v = range_id(B.pre, B.lrh)
        if id_u > id_v:
            A, B = B, A
            id_u, id_v = id_v, id_u
        mid = resolve_path_offset(A.pmod, B.pmod, _Seq(A.fwd), _Seq(B.bwd), id_u, id_v, K)
        if mid is None:
            return None
    total = du + mid + dv
    return total if total <= K else None
