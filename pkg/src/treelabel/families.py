"""Tree generators (random, structured, and the lower-bound families) and
brute-force oracles used as ground truth by the tests."""
from __future__ import annotations

import itertools
import random
from collections import deque
from fractions import Fraction

from .tree import RootedTree

NODE_CAP = 10_000_000


class SizeGuardError(ValueError):
    pass


def _guard(n: int, cap: int | None) -> None:
    if n > (NODE_CAP if cap is None else cap):
        raise SizeGuardError(f"tree would have {n} nodes, above the cap")


def gen_random(n: int, seed: int = 0) -> RootedTree:
    """Random recursive tree: node i picks a uniform parent among 0..i-1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    parent = [-1] + [int(rng.random() * i) for i in range(1, n)]
    return RootedTree(parent)


def gen_path(n: int) -> RootedTree:
    return RootedTree([-1] + list(range(n - 1)))


def gen_cbt(depth: int) -> RootedTree:
    """Complete binary tree with 2**depth - 1 nodes."""
    n = (1 << depth) - 1
    if n < 1:
        raise ValueError("depth must be >= 1")
    return RootedTree([-1] + [(i - 1) // 2 for i in range(1, n)])


def gen_star(n: int) -> RootedTree:
    return RootedTree([-1] + [0] * (n - 1))


def gen_caterpillar(n: int, seed: int = 0) -> RootedTree:
    """A spine with legs: each new node hangs off a random spine node or
    extends the spine."""
    rng = random.Random(seed)
    parent = [-1]
    spine = [0]
    for i in range(1, n):
        if rng.random() < 0.5:
            parent.append(spine[-1])
            spine.append(i)
        else:
            parent.append(rng.choice(spine))
    return RootedTree(parent)


class WeightedTree:
    """Rooted tree with non-negative integer edge weights (weight[v] is the
    edge to v's parent)."""

    def __init__(self, parent: list[int], weight: list[int], bound: int | None = None):
        self.parent = parent
        self.weight = weight
        self.n = len(parent)
        self.children = [[] for _ in range(self.n)]
        for v, p in enumerate(parent):
            if p >= 0:
                self.children[p].append(v)
        if bound is not None and any(w > bound for w in weight):
            raise ValueError("edge weight above bound")

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if not self.children[v]]

    def rootdist(self) -> list[int]:
        rd = [0] * self.n
        for v in range(1, self.n):       # parents precede children
            rd[v] = rd[self.parent[v]] + self.weight[v]
        return rd


def gen_hm(h: int, M: int, xs=None, seed: int | None = None) -> WeightedTree:
    """(h, M)-tree: root -(M-x)-> hub -(x)-> two (h-1, M)-trees.

    ``xs`` gives one x per level (len h, top level first) or one per hub in
    preorder (len 2**h - 1); otherwise x is drawn per hub from ``seed``.
    """
    if h < 0 or M < 2:
        raise ValueError("need h >= 0 and M >= 2")
    rng = random.Random(seed)
    if xs is not None:
        xs = list(xs)
        if len(xs) not in (h, (1 << h) - 1):
            raise ValueError("xs must have h or 2**h - 1 entries")
        for x in xs:
            if not 0 <= x < M:
                raise ValueError(f"x = {x} outside [0, M)")
    per_level = xs is not None and len(xs) == h
    parent = [-1]
    weight = [0]
    hub_idx = itertools.count()
    stack = [(0, h)]
    while stack:
        root, lvl = stack.pop()
        if lvl == 0:
            continue
        i = next(hub_idx)
        if xs is None:
            x = rng.randrange(M)
        else:
            x = xs[h - lvl] if per_level else xs[i]
        parent.append(root)
        weight.append(M - x)
        hub = len(parent) - 1
        subs = []
        for _ in range(2):
            parent.append(hub)
            weight.append(x)
            subs.append((len(parent) - 1, lvl - 1))
        stack.extend(reversed(subs))
    return WeightedTree(parent, weight, M)


def subdivide(w: WeightedTree, return_map: bool = False, cap: int | None = None):
    """Replace each weight-k edge by k unit edges; weight-0 edges contract.

    With ``return_map`` also returns the node of the result holding each
    original node.
    """
    _guard(1 + sum(w.weight), cap)
    parent = [-1]
    where = [0] * w.n
    order = [0]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for c in w.children[v]:
            cur = where[v]
            for _ in range(w.weight[c]):
                parent.append(cur)
                cur = len(parent) - 1
            where[c] = cur
            order.append(c)
    t = RootedTree(parent)
    return (t, where) if return_map else t


def gen_regular(xvec, h: int, d: int, cap: int | None = None) -> RootedTree:
    """Height-2k tree whose depth-level degrees are d^x1, d^(h-x1), d^x2, ..."""
    if d < 2 or h < 1:
        raise ValueError("need d >= 2 and h >= 1")
    degs = []
    for x in xvec:
        if not 1 <= x <= h:
            raise ValueError(f"x = {x} outside [1, h]")
        degs += [d ** x, d ** (h - x)]
    total = 1
    width = 1
    for g in degs:
        width *= g
        total += width
    _guard(total, cap)
    parent = [-1]
    level = [0]
    for g in degs:
        nxt = []
        for v in level:
            for _ in range(g):
                parent.append(v)
                nxt.append(len(parent) - 1)
        level = nxt
    return RootedTree(parent)


def _floor_pow(eps: Fraction, e: int) -> int:
    v = (1 + eps) ** e
    return v.numerator // v.denominator


def f_stretch(k: int, eps) -> int:
    """f(k) = 2 * sum_{i=1..k} floor((1+eps)^i)."""
    e = Fraction(str(eps)) if not isinstance(eps, Fraction) else eps
    return 2 * sum(_floor_pow(e, i) for i in range(1, k + 1))


def gen_stretched(h: int, M: int, eps, xs=None, seed: int | None = None,
                  cap: int | None = None, return_map: bool = False):
    """(h,M)-tree, unit-subdivided to height hM, then every edge whose upper
    end is at depth d becomes floor((1+eps)^(hM-d)) unit edges."""
    e = Fraction(str(eps)) if not isinstance(eps, Fraction) else eps
    if not 0 < e <= 1:
        raise ValueError("eps must be in (0, 1]")
    wt = gen_hm(h, M, xs, seed)
    t, where = subdivide(wt, return_map=True, cap=cap)
    H = h * M
    mult = [_floor_pow(e, H - dd) for dd in range(H + 1)]
    depth = t.depth()
    _guard(1 + sum(mult[depth[t.parent[v]]] for v in range(1, t.n)), cap)
    parent = [-1]
    new_of = [0] * t.n
    for v in t.order()[1:]:
        cur = new_of[t.parent[v]]
        for _ in range(mult[depth[t.parent[v]]]):
            parent.append(cur)
            cur = len(parent) - 1
        new_of[v] = cur
    out = RootedTree(parent)
    if return_map:
        return out, [new_of[where[v]] for v in range(wt.n)], wt
    return out


def enumerate_small(n: int):
    """Every parent vector with p(i) < i (0-based): (n-1)! labeled trees."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > 9:
        raise ValueError("enumeration limited to n <= 9")
    for choice in itertools.product(*[range(i) for i in range(1, n)]):
        yield RootedTree([-1] + list(choice))


# oracles

class Oracle:
    """Walking/BFS ground truth on a (possibly 0/1 weighted) tree."""

    def __init__(self, t: RootedTree):
        self.t = t
        self.depth = t.depth()
        self.rd = t.rootdist()

    def nca(self, u: int, v: int) -> int:
        par, dep = self.t.parent, self.depth
        while dep[u] > dep[v]:
            u = par[u]
        while dep[v] > dep[u]:
            v = par[v]
        while u != v:
            u, v = par[u], par[v]
        return u

    def dist(self, u: int, v: int) -> int:
        w = self.nca(u, v)
        return self.rd[u] + self.rd[v] - 2 * self.rd[w]

    def bfs(self, src: int) -> list[int]:
        """All weighted distances from src (0-1 BFS)."""
        t = self.t
        n = t.n
        dist = [-1] * n
        dist[src] = 0
        dq = deque([src])
        done = [False] * n
        while dq:
            x = dq.popleft()
            if done[x]:
                continue
            done[x] = True
            nbrs = list(t.children[x])
            if t.parent[x] >= 0:
                nbrs.append(t.parent[x])
            for y in nbrs:
                w = t.weight[y] if t.parent[y] == x else t.weight[x]
                nd = dist[x] + w
                if dist[y] < 0 or nd < dist[y]:
                    dist[y] = nd
                    if w == 0:
                        dq.appendleft(y)
                    else:
                        dq.append(y)
        return dist

    def level_anc(self, u: int, steps: int) -> int:
        if steps > self.depth[u]:
            raise ValueError("steps exceed depth")
        for _ in range(steps):
            u = self.t.parent[u]
        return u


def oracle_dist(t: RootedTree, u: int, v: int) -> int:
    return Oracle(t).dist(u, v)


def oracle_nca(t: RootedTree, u: int, v: int) -> int:
    return Oracle(t).nca(u, v)


def oracle_lightdepth(d, u: int) -> int:
    """Count light edges on the root path by walking parents."""
    t = d.tree
    cnt = 0
    while t.parent[u] >= 0:
        p = t.parent[u]
        if d.heavy[p] != u:
            cnt += 1
        u = p
    return cnt


def oracle_level_anc(t: RootedTree, u: int, steps: int) -> int:
    return Oracle(t).level_anc(u, steps)
