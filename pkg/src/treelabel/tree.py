"""Rooted trees, the parent-array text format and binary normalization.

Nodes are 0-based internally (root is 0 for parsed and generated trees); the
text format and the CLI use 1-based ids.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence


class TreeFormatError(ValueError):
    pass


class RootedTree:
    """Parent-array tree with ordered children and per-node edge weight.

    ``weight[v]`` is the weight of the edge from v to its parent (0 for the
    root). Raw trees have unit weights; normalized trees use {0, 1}.
    """

    __slots__ = ("n", "parent", "children", "weight", "root", "_order")

    def __init__(self, parent: Sequence[int], weight: Sequence[int] | None = None,
                 children: list[list[int]] | None = None):
        n = len(parent)
        if n < 1:
            raise TreeFormatError("tree needs at least one node")
        self.n = n
        self.parent = list(parent)
        roots = [v for v in range(n) if self.parent[v] < 0]
        if len(roots) != 1:
            raise TreeFormatError(f"expected exactly one root, found {len(roots)}")
        self.root = roots[0]
        if children is None:
            children = [[] for _ in range(n)]
            for v, p in enumerate(self.parent):
                if p >= 0:
                    if p >= n:
                        raise TreeFormatError(f"parent {p} of node {v} out of range")
                    children[p].append(v)
        self.children = children
        if weight is None:
            weight = [1] * n
            weight[self.root] = 0
        self.weight = list(weight)
        self._order = None

    def order(self) -> list[int]:
        """Nodes in BFS order from the root; validates reachability."""
        if self._order is None:
            order = [self.root]
            ch = self.children
            i = 0
            while i < len(order):
                order.extend(ch[order[i]])
                i += 1
            if len(order) != self.n:
                raise TreeFormatError("parent pointers contain a cycle")
            self._order = order
        return self._order

    def rootdist(self) -> list[int]:
        rd = [0] * self.n
        par, w = self.parent, self.weight
        for v in self.order()[1:]:
            rd[v] = rd[par[v]] + w[v]
        return rd

    def depth(self) -> list[int]:
        d = [0] * self.n
        par = self.parent
        for v in self.order()[1:]:
            d[v] = d[par[v]] + 1
        return d

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if not self.children[v]]

    def to_text(self) -> str:
        if self.root != 0:
            raise ValueError("text format requires node 1 to be the root")
        return "\n".join([str(self.n)] + [str(p + 1) for p in self.parent[1:]]) + "\n"

    def __repr__(self):
        return f"RootedTree(n={self.n})"


def parse_tree(text: str) -> RootedTree:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise TreeFormatError("line 1: missing node count")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise TreeFormatError(f"line 1: bad node count {lines[0]!r}") from None
    if n < 1:
        raise TreeFormatError("line 1: node count must be >= 1")
    if len(lines) != n:
        raise TreeFormatError(f"line {len(lines) + 1}: expected {n} lines, got {len(lines)}")
    parent = [-1] * n
    for i in range(1, n):
        s = lines[i].strip()
        try:
            p = int(s)
        except ValueError:
            raise TreeFormatError(f"line {i + 1}: bad parent id {s!r}") from None
        if not 1 <= p <= n:
            raise TreeFormatError(f"line {i + 1}: parent {p} out of range")
        if p == i + 1:
            raise TreeFormatError(f"line {i + 1}: node {i + 1} is its own parent")
        parent[i] = p - 1
    t = RootedTree(parent)
    # report the first node on a cycle by line
    seen = [0] * n
    seen[0] = 2
    for v in range(1, n):
        path = []
        x = v
        while seen[x] == 0:
            seen[x] = 1
            path.append(x)
            x = parent[x]
        if seen[x] == 1:
            raise TreeFormatError(f"line {x + 1}: cycle through node {x + 1}")
        for y in path:
            seen[y] = 2
    t.order()
    return t


@dataclass
class NormalizedTree:
    """Binary {0,1}-weighted tree plus the map from original nodes to leaves."""
    tree: RootedTree
    rep: list[int]                       # original node -> leaf in tree
    origin: dict[int, int] = field(default_factory=dict)   # leaf -> original node
    n_original: int = 0


def normalize(t: RootedTree) -> NormalizedTree:
    """Attach a weight-0 pendant leaf to every internal node, then binarize.

    The pendant is the first child. A node with c > 2 children becomes a
    left-leaning chain: x -> [y1, c_last], y1 -> [y2, c_(last-1)], ... joined
    by weight-0 edges.
    """
    parent: list[int] = []
    weight: list[int] = []
    children: list[list[int]] = []

    def new(p: int, w: int) -> int:
        parent.append(p)
        weight.append(w)
        children.append([])
        if p >= 0:
            children[p].append(len(parent) - 1)
        return len(parent) - 1

    rep = [0] * t.n
    ident = [0] * t.n     # original node -> its node in the new tree
    ident[t.root] = new(-1, 0)
    tw = t.weight
    for v in t.order():
        x = ident[v]
        kids = t.children[v]
        if not kids:
            rep[v] = x
            continue
        slots = [-1] + list(kids)      # -1 marks the pendant
        cur = x
        while True:
            y = new(cur, 0) if len(slots) > 2 else -1
            for c in (slots.pop(),) if y >= 0 else slots:
                if c < 0:
                    rep[v] = new(cur, 0)
                else:
                    ident[c] = new(cur, tw[c])
            if y < 0:
                break
            cur = y
    tree = RootedTree(parent, weight, children)
    origin = {leaf: v for v, leaf in enumerate(rep)}
    return NormalizedTree(tree, rep, origin, t.n)
