from __future__ import annotations

from fractions import Fraction
import math

import pytest

from treelabel import families as fam


def test_hm_counts():
    assert fam.gen_hm(0, 5).n == 1
    assert fam.gen_hm(1, 5, seed=0).n == 4
    for h in range(1, 11):
        assert fam.gen_hm(h, 4, seed=h).n == 3 * 2 ** h - 2


def test_hm_equidistant():
    w = fam.gen_hm(3, 7, seed=2)
    assert w.n == 22
    rd = w.rootdist()
    leaves = w.leaves()
    assert len(leaves) == 8 and {rd[v] for v in leaves} == {21}


def test_hm_xs_validation():
    with pytest.raises(ValueError):
        fam.gen_hm(2, 5, xs=[1, 5])
    with pytest.raises(ValueError):
        fam.gen_hm(2, 5, xs=[1])
    assert fam.gen_hm(2, 5, xs=[1, 2, 3]).n == 10


def test_subdivide():
    w = fam.WeightedTree([-1, 0, 1], [0, 1, 1])
    assert fam.subdivide(w).parent == [-1, 0, 1]
    w = fam.WeightedTree([-1, 0], [0, 3])
    assert fam.subdivide(w).parent == [-1, 0, 1, 2]


def test_subdivide_preserves_leaf_distances(rng):
    for h in range(1, 6):
        w = fam.gen_hm(h, 4, seed=rng.randrange(1000))
        t, where = fam.subdivide(w, return_map=True)
        o = fam.Oracle(t)
        rd = w.rootdist()
        leaves = w.leaves()
        for a in leaves[:6]:
            for b in leaves:
                # all leaves are equidistant, so d(a, b) = 2 (rd(a) - rd(nca))
                x, y = a, b
                anc = set()
                while x >= 0:
                    anc.add(x)
                    x = w.parent[x]
                while y not in anc:
                    y = w.parent[y]
                assert o.dist(where[a], where[b]) == rd[a] + rd[b] - 2 * rd[y]


def test_regular_fig2():
    t = fam.gen_regular((1, 2), 2, 2)
    depth = t.depth()
    degs = []
    for lvl in range(4):
        nodes = [v for v in range(t.n) if depth[v] == lvl]
        degs.append({len(t.children[v]) for v in nodes})
    assert degs == [{2}, {2}, {4}, {1}]
    assert len(t.leaves()) == 16


def test_regular_leaf_count():
    assert len(fam.gen_regular((3,), 3, 2).leaves()) == 8
    for xv, h, d in (((1, 1), 2, 3), ((2, 1, 3), 3, 2)):
        assert len(fam.gen_regular(xv, h, d).leaves()) == d ** (len(xv) * h)
    with pytest.raises(fam.SizeGuardError):
        fam.gen_regular((1, 1, 1), 8, 10, cap=10 ** 6)


def test_f_stretch():
    assert [fam.f_stretch(k, 1) for k in (1, 2, 3)] == [4, 12, 28]
    for eps in ("1", "0.5", "0.1"):
        e = Fraction(eps)
        for k in range(1, 51):
            assert (1 + e) * fam.f_stretch(k, e) < fam.f_stretch(k + 1, e)


def test_stretched_distances():
    eps = Fraction(1, 2)
    t, leafmap, w = fam.gen_stretched(2, 2, eps, seed=3, return_map=True)
    o = fam.Oracle(t)
    rdw = w.rootdist()
    leaves = w.leaves()
    H = 2 * 2
    for a in leaves:
        for b in leaves:
            x, anc = a, set()
            while x >= 0:
                anc.add(x)
                x = w.parent[x]
            y = b
            while y not in anc:
                y = w.parent[y]
            k = H - rdw[y]
            assert o.dist(leafmap[a], leafmap[b]) == fam.f_stretch(k, eps)


def test_stretched_guard():
    with pytest.raises(fam.SizeGuardError):
        fam.gen_stretched(8, 10, 1, seed=0, cap=10 ** 5)


def test_simple_generators():
    p = fam.gen_path(5)
    assert p.n == 5 and max(fam.Oracle(p).dist(0, v) for v in range(5)) == 4
    assert fam.gen_cbt(3).n == 7
    assert fam.gen_random(1000, 7).parent == fam.gen_random(1000, 7).parent
    assert fam.gen_star(6).children[0] == [1, 2, 3, 4, 5]
    assert all(p < i for i, p in enumerate(fam.gen_random(500, 1).parent) if i)


def test_enumerate_small():
    assert [sum(1 for _ in fam.enumerate_small(n)) for n in (1, 2, 3, 4)] == [1, 1, 2, 6]
    with pytest.raises(ValueError):
        list(fam.enumerate_small(10))


def test_oracle_identity(rng):
    t = fam.gen_random(400, 8)
    o = fam.Oracle(t)
    rd = t.rootdist()
    for _ in range(500):
        u, v = rng.randrange(400), rng.randrange(400)
        assert o.dist(u, v) == rd[u] + rd[v] - 2 * rd[o.nca(u, v)]
        assert o.dist(u, v) == o.bfs(u)[v]
    assert o.dist(5, 5) == 0
    assert fam.oracle_level_anc(t, 0, 0) == 0
    assert math.isfinite(fam.oracle_dist(t, 1, 2))
