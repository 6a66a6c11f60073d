from __future__ import annotations

import math

import pytest

from treelabel import families as fam
from treelabel.decomposition import CollapsedTree, Decomposition, collapse, decompose, dominates
from treelabel.tree import normalize


def test_path5_fixed_threshold():
    # the path keeps going while the child subtree is at least half of the
    # subtree where the path started: 4, 3 >= 5/2 but 2 < 5/2
    d = decompose(fam.gen_path(5))
    assert d.paths == {0: [0, 1, 2], 3: [3, 4]}
    assert d.lightdepth == [0, 0, 0, 1, 1]
    assert max(d.lightdepth) <= math.floor(math.log2(5))


def test_cbt7_singletons():
    t = fam.gen_cbt(3)
    d = decompose(t)
    assert all(len(p) == 1 for p in d.paths.values())
    assert [d.lightdepth[v] for v in t.leaves()] == [2, 2, 2, 2]


def test_lightdepth_bound(rng):
    for _ in range(40):
        t = fam.gen_random(rng.randrange(1, 3000), rng.randrange(10 ** 6))
        d = decompose(t)
        assert max(d.lightdepth) <= math.floor(math.log2(t.n))
        for u in range(0, t.n, 7):
            assert d.lightdepth[u] == fam.oracle_lightdepth(d, u)


def test_collapse_single_path():
    nt = normalize(fam.gen_path(1))
    c = collapse(decompose(nt.tree))
    assert c.children[c.root] == []


def test_collapse_rejects_nonbinary():
    with pytest.raises(ValueError):
        CollapsedTree(Decomposition(fam.gen_star(5)))


def test_collapsed_height(rng):
    for _ in range(10):
        nt = normalize(fam.gen_random(rng.randrange(2, 2000), rng.randrange(10 ** 6)))
        c = collapse(decompose(nt.tree))
        assert c.height <= math.log2(nt.tree.n) + 1


def _first_step(o, w, x):
    return o.level_anc(x, o.depth[x] - o.depth[w] - 1)


def test_domination_observations(rng):
    seen_light_heavy = seen_exc = 0
    for _ in range(25):
        nt = normalize(fam.gen_random(rng.randrange(2, 60), rng.randrange(10 ** 6)))
        t = nt.tree
        d = decompose(t)
        c = collapse(d)
        o = fam.Oracle(t)
        leaves = t.leaves()
        for u in leaves:
            for v in leaves:
                if u == v or d.head[u] == d.head[v]:
                    continue
                w = o.nca(u, v)
                cu, cv = _first_step(o, w, u), _first_step(o, w, v)
                lu, lv = d.is_light(cu), d.is_light(cv)
                if lu and not lv:
                    assert dominates(d, c, u, v)
                    seen_light_heavy += 1
                if lu and lv and c.is_exceptional(cv):
                    assert dominates(d, c, u, v)
                    seen_exc += 1
    assert seen_light_heavy and seen_exc


def test_dominates_same_node():
    nt = normalize(fam.gen_random(10, 1))
    d = decompose(nt.tree)
    with pytest.raises(ValueError):
        dominates(d, collapse(d), 3, 3)
