"""Heavy path decomposition (half of the path-start subtree rule) and the
collapsed tree of heavy paths with exceptional edges and inorder numbers."""
from __future__ import annotations

from .tree import RootedTree


class Decomposition:
    """Per-node heavy path data for a rooted tree.

    A heavy path starting at h descends to a child c while 2*|T_c| >= |T_h|.
    Preorder numbers are 0-based and visit the heavy child last.
    """

    def __init__(self, t: RootedTree):
        self.tree = t
        n = t.n
        order = t.order()
        ch = t.children
        par = t.parent
        size = [1] * n
        for v in reversed(order):
            p = par[v]
            if p >= 0:
                size[p] += size[v]
        heavy = [-1] * n
        head = [-1] * n
        paths: dict[int, list[int]] = {}
        for x in order:
            if head[x] >= 0:
                continue
            S = size[x]
            y = x
            nodes = []
            while True:
                head[y] = x
                nodes.append(y)
                nxt = -1
                for c in ch[y]:
                    if 2 * size[c] >= S:
                        nxt = c
                        break
                if nxt < 0:
                    break
                heavy[y] = nxt
                y = nxt
            paths[x] = nodes
        pre = [0] * n
        stack = [t.root]
        cnt = 0
        while stack:
            x = stack.pop()
            pre[x] = cnt
            cnt += 1
            hv = heavy[x]
            if hv >= 0:
                stack.append(hv)
            kids = ch[x]
            for i in range(len(kids) - 1, -1, -1):
                c = kids[i]
                if c != hv:
                    stack.append(c)
        ld = [0] * n
        depth = [0] * n
        for v in order:
            p = par[v]
            if p >= 0:
                depth[v] = depth[p] + 1
                ld[v] = ld[p] + (heavy[p] != v)
        self.n = n
        self.size = size
        self.heavy = heavy
        self.head = head
        self.paths = paths
        self.pre = pre
        self.lightdepth = ld
        self.depth = depth

    def light_range(self, u: int) -> tuple[int, int]:
        h = self.heavy[u]
        if h >= 0:
            return self.pre[u], self.pre[h]
        return self.pre[u], self.pre[u] + self.size[u]

    def light_children(self, u: int) -> list[int]:
        h = self.heavy[u]
        return [c for c in self.tree.children[u] if c != h]

    def is_light(self, v: int) -> bool:
        p = self.tree.parent[v]
        return p >= 0 and self.heavy[p] != v

    def path_of(self, u: int) -> list[int]:
        return self.paths[self.head[u]]


def decompose(t: RootedTree) -> Decomposition:
    return Decomposition(t)


class CollapsedTree:
    """Tree of heavy paths (identified by their heads) for a binary tree.

    Children of a path are its light children ordered by attachment depth;
    the exceptional child (rightmost) is the larger light child of the last
    path node, ties going to the earlier child.
    """

    def __init__(self, d: Decomposition):
        t = d.tree
        for v in range(t.n):
            if len(t.children[v]) > 2:
                raise ValueError("collapsed tree needs a binary tree")
        self.d = d
        size = d.size
        ch = t.children
        self.children: dict[int, list[int]] = {}
        self.exceptional: dict[int, int] = {}    # path head -> exceptional child head or -1
        self.parent: dict[int, int] = {}
        for h, nodes in d.paths.items():
            kids = []
            for x in nodes[:-1]:
                kids.extend(c for c in ch[x] if c != d.heavy[x])
            last = ch[nodes[-1]]
            exc = -1
            if last:
                exc = last[0]
                for c in last[1:]:
                    if size[c] > size[exc]:
                        exc = c
                kids.extend(c for c in last if c != exc)
                kids.append(exc)
            self.children[h] = kids
            self.exceptional[h] = exc
            for c in kids:
                self.parent[c] = h
        self.root = d.head[t.root]
        self.parent[self.root] = -1
        # inorder: non-exceptional children, the path, then the exceptional child
        heads_bfs = [self.root]
        i = 0
        while i < len(heads_bfs):
            heads_bfs.extend(self.children[heads_bfs[i]])
            i += 1
        cnt = {}
        for h in reversed(heads_bfs):
            cnt[h] = 1 + sum(cnt[c] for c in self.children[h])
        base = {self.root: 0}
        ino = {}
        height = {self.root: 0}
        for h in heads_bfs:
            b = base[h]
            exc = self.exceptional[h]
            for c in self.children[h]:
                height[c] = height[h] + 1
                if c != exc:
                    base[c] = b
                    b += cnt[c]
            ino[h] = b
            if exc >= 0:
                base[exc] = b + 1
        self.inorder = ino
        self.depth = height
        self.height = max(height.values())

    def is_exceptional(self, c: int) -> bool:
        """True if c heads a path attached by the exceptional edge."""
        p = self.parent.get(c, -1)
        return p >= 0 and self.exceptional[p] == c

    def path_inorder(self, u: int) -> int:
        return self.inorder[self.d.head[u]]


def collapse(d: Decomposition) -> CollapsedTree:
    return CollapsedTree(d)


def dominates(d: Decomposition, c: CollapsedTree, u: int, v: int) -> bool:
    if u == v:
        raise ValueError("dominates needs two distinct nodes")
    return c.inorder[d.head[u]] < c.inorder[d.head[v]]
