"""(1+eps)-approximate distance labels.

A label holds rootdist(v), the NCA label of v and, for each proper
significant ancestor v_i (v-to-root order), the exponent e_i of the
smallest power of (1+eps/2) that is >= d(v, v_i). All power comparisons use
exact rationals.
"""
from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction
from functools import lru_cache

from .bitio import BitString, BitWriter, MonotoneSeq, encode_monotone, read_delta
from .decomposition import Decomposition
from .labelset import LabelSet
from .nca import NcaBuilder, NcaLabel, encode_components, nca_query
from .tree import RootedTree


def as_fraction(eps) -> Fraction:
    e = eps if isinstance(eps, Fraction) else Fraction(str(eps))
    if e <= 0:
        raise ValueError("eps must be positive")
    return e


class _Powers:
    """floor(x) and floor(2x) of x = (1+e)^k for k = 0, 1, ..., grown on
    demand. For integer y, (1+e)^k >= y iff floor((1+e)^k) >= y."""

    def __init__(self, e: Fraction):
        self.base = 1 + e
        self.cur = Fraction(1)
        self.floors = [1]
        self.twice_floor = [2]

    def extend_to(self, x: int) -> None:
        while self.floors[-1] < x:
            self.cur *= self.base
            num, den = self.cur.numerator, self.cur.denominator
            self.floors.append(num // den)
            self.twice_floor.append(2 * num // den)


@lru_cache(maxsize=None)
def _powers(e: Fraction) -> _Powers:
    return _Powers(e)


def ceil_pow(x: int, eps):
    """Smallest power (1+eps)^e >= x, as (value, e); x = 0 gives (0, None)."""
    e = as_fraction(eps)
    if x < 0:
        raise ValueError("x must be non-negative")
    if x == 0:
        return 0, None
    P = _powers(e)
    P.extend_to(x)
    k = bisect_left(P.floors, x)
    return (1 + e) ** k, k


class ApproxScheme:
    def __init__(self, t: RootedTree, eps):
        e = as_fraction(eps)
        if not 0 < e <= 1:
            raise ValueError("eps must be in (0, 1]")
        self.eps = e
        self.half = e / 2
        self.t = t
        self.d = Decomposition(t)
        self.nca = NcaBuilder(self.d)
        self.rd = self.d.depth
        P = _powers(self.half)
        P.extend_to(t.n)
        self.floors = P.floors

    def exps(self, v: int) -> list[int]:
        d = self.d
        head, par, dep = d.head, self.t.parent, d.depth
        out = []
        x = v
        while True:
            p = par[head[x]]
            if p < 0:
                break
            out.append(bisect_left(self.floors, dep[v] - dep[p]))
            x = p
        return out

    def label(self, v: int) -> BitString:
        w = BitWriter()
        w.delta(self.rd[v] + 1)
        w.write_pair(encode_components(self.nca.components(v)))
        w.write_pair(encode_monotone(self.exps(v), None, False))
        return w.bits()

    def label_set(self) -> LabelSet:
        eps = self.eps
        text = str(eps.numerator / eps.denominator) if eps.denominator != 1 else str(eps.numerator)
        if Fraction(text) != eps:
            text = f"{eps.numerator}/{eps.denominator}"
        return LabelSet("approx", [self.label(v) for v in range(self.t.n)], eps=text)


def build_approx(t: RootedTree, eps) -> LabelSet:
    return ApproxScheme(t, eps).label_set()


def _parse(bits: BitString):
    v, n = bits.value, bits.length
    x, p = read_delta(v, n, 0)
    lab, p = NcaLabel.decode(v, n, p)
    return x - 1, lab, (v, n, p)


def approx_query(a: BitString, b: BitString, eps) -> int:
    """Integer estimate in [d, (1+eps) d]."""
    if a == b:
        return 0
    rd_u, la, _ = _parse(a)
    rd_v, lb, qb = _parse(b)
    w, L = nca_query(la, lb)
    if w == la or w == lb:
        return abs(rd_u - rd_v)
    hw = w.components[2 * L]
    cb = lb.components
    if not (len(cb) > 2 * L + 1 and cb[2 * L] == hw):
        # w is reached from u by a light edge instead: swap roles
        rd_u, rd_v = rd_v, rd_u
        qb = _parse(a)[2]
        cb = la.components
    i = len(cb) // 2 - L
    exps = MonotoneSeq(*qb, False)
    e = exps.access(i)
    P = _powers(as_fraction(eps) / 2)
    while len(P.twice_floor) <= e:
        P.extend_to(P.floors[-1] + 1)
    return rd_u - rd_v + P.twice_floor[e]
