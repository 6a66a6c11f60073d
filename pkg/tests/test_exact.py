from __future__ import annotations

import pytest

from treelabel import families as fam
from treelabel.exact import (BaselineScheme, ExactScheme, allocate_budget, baseline_query,
                             build_baseline, build_exact, exact_query)
from treelabel.tree import RootedTree, normalize


def test_allocate_budget_examples():
    assert allocate_budget(1, 10 ** 6, 20) == (20, 0)
    assert allocate_budget(2 ** 15, 2 ** 16, 17) == (9, 8)
    with pytest.raises(ValueError):
        allocate_budget(5, 5, 3)


def _all_pairs(t, ls, query):
    o = fam.Oracle(t)
    for u in range(t.n):
        for v in range(t.n):
            assert query(ls.labels[u], ls.labels[v]) == o.dist(u, v)


def test_single_node():
    nt = normalize(RootedTree([-1]))
    for build, q in ((build_baseline, baseline_query), (build_exact, exact_query)):
        ls = build(nt)
        assert ls.n == 1 and q(ls.labels[0], ls.labels[0]) == 0


def test_path_graph():
    t = fam.gen_path(8)
    nt = normalize(t)
    for build, q in ((build_baseline, baseline_query), (build_exact, exact_query)):
        ls = build(nt)
        assert q(ls.labels[2], ls.labels[5]) == 3
        _all_pairs(t, ls, q)


def test_small_exhaustive():
    for n in range(1, 7):
        for t in fam.enumerate_small(n):
            nt = normalize(t)
            _all_pairs(t, build_baseline(nt), baseline_query)
            _all_pairs(t, build_exact(nt), exact_query)


@pytest.mark.parametrize("t", [
    fam.gen_random(400, 1), fam.gen_cbt(8), fam.gen_caterpillar(300, 2), fam.gen_star(50),
    fam.subdivide(fam.gen_hm(4, 5, seed=3)),
], ids=["random", "cbt", "caterpillar", "star", "hm"])
def test_structured(t, rng):
    nt = normalize(t)
    o = fam.Oracle(t)
    B = build_baseline(nt)
    E = build_exact(nt)
    for _ in range(3000):
        u, v = rng.randrange(t.n), rng.randrange(t.n)
        d = o.dist(u, v)
        assert baseline_query(B.labels[u], B.labels[v]) == d
        assert exact_query(E.labels[u], E.labels[v]) == d


def test_pushed_bits_exercised(rng):
    # long weighted edges make the stored distances wide enough to split
    t = fam.subdivide(fam.gen_hm(5, 40, seed=1))
    nt = normalize(t)
    E = ExactScheme(nt)
    assert any(e[2] > 0 for e in E.entry.values())
    ls = E.label_set("exact")
    o = fam.Oracle(t)
    leaves = t.leaves()
    for _ in range(3000):
        u, v = rng.choice(leaves), rng.choice(leaves)
        assert exact_query(ls.labels[u], ls.labels[v]) == o.dist(u, v)


def test_baseline_size_shape():
    import math
    t = fam.gen_random(1000, 9)
    ls = build_baseline(normalize(t))
    lg = math.log2(1000)
    assert ls.max_bits() <= 0.5 * lg * lg + 8 * lg * math.log2(lg)
