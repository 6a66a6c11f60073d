from __future__ import annotations

from fractions import Fraction

import pytest

from treelabel import families as fam
from treelabel.approx import ApproxScheme, approx_query, build_approx, ceil_pow


def test_ceil_pow_examples():
    assert ceil_pow(1, Fraction(1, 3)) == (1, 0)
    assert ceil_pow(5, 1) == (8, 3)
    assert ceil_pow(100, 0.5)[1] == 12
    assert ceil_pow(0, 1) == (0, None)


def test_rejects_bad_eps():
    t = fam.gen_path(3)
    for e in (0, -1, 2):
        with pytest.raises(ValueError):
            ApproxScheme(t, e)


def test_path_graph_exact():
    t = fam.gen_path(30)
    S = ApproxScheme(t, 1)
    ls = S.label_set()
    for u in range(30):
        for v in range(30):
            assert approx_query(ls.labels[u], ls.labels[v], 1) == abs(u - v)


def _check(t, eps, pairs):
    ls = build_approx(t, eps)
    e = Fraction(str(eps))
    o = fam.Oracle(t)
    for u, v in pairs:
        d = o.dist(u, v)
        got = approx_query(ls.labels[u], ls.labels[v], eps)
        assert d <= got <= (1 + e) * d, (u, v, d, got)
        if o.nca(u, v) in (u, v):
            assert got == d


@pytest.mark.parametrize("eps", ["1", "0.25", "0.01"])
def test_small_exhaustive(eps):
    for n in range(1, 7):
        for t in fam.enumerate_small(n):
            _check(t, eps, [(u, v) for u in range(n) for v in range(n)])


@pytest.mark.parametrize("eps", ["1", "0.5", "0.25", "0.01"])
def test_random(eps, rng):
    t = fam.gen_random(5000, 3)
    _check(t, eps, [(rng.randrange(t.n), rng.randrange(t.n)) for _ in range(4000)])


def test_exps_monotone():
    t = fam.gen_random(2000, 5)
    S = ApproxScheme(t, Fraction(1, 4))
    for v in range(t.n):
        xs = S.exps(v)
        assert xs == sorted(xs)
