from __future__ import annotations

import math

from treelabel import families as fam
from treelabel.decomposition import Decomposition
from treelabel.nca import NcaLabel, alphabetic_codes, build_nca, code_less, nca_query
from treelabel.tree import RootedTree


def test_single_node():
    (lab,) = build_nca(Decomposition(RootedTree([-1])))
    assert lab.lightdepth == 0 and len(lab.components) == 1


def test_alphabetic_codes_order():
    for ws in ([1], [1, 1], [5, 1, 1, 9], [1] * 7, [100, 1, 3, 2]):
        codes = alphabetic_codes(ws)
        W = sum(ws)
        for a, b in zip(codes, codes[1:]):
            assert code_less(a, b)
        for (v, L), w in zip(codes, ws):
            assert L <= math.log2(W / w) + 2


def test_labels_distinct_and_short(rng):
    for n in (10, 1000, 10 ** 4):
        t = fam.gen_random(n, rng.randrange(10 ** 6))
        labs = build_nca(Decomposition(t))
        enc = {lab.bits() for lab in labs}
        assert len(enc) == n
        assert max(len(b) for b in enc) <= 10 * math.log2(n) + 8


def test_roundtrip():
    t = fam.gen_random(300, 4)
    for lab in build_nca(Decomposition(t)):
        b = lab.bits()
        back, end = NcaLabel.decode(b.value, b.length)
        assert back == lab and end == len(b)


def test_query_oracle(rng):
    for n in (2, 5, 60, 2000):
        t = fam.gen_random(n, rng.randrange(10 ** 6))
        d = Decomposition(t)
        labs = build_nca(d)
        o = fam.Oracle(t)
        pairs = [(u, v) for u in range(n) for v in range(n)] if n <= 60 else \
            [(rng.randrange(n), rng.randrange(n)) for _ in range(20000)]
        for u, v in pairs:
            w, ld = nca_query(labs[u], labs[v])
            x = o.nca(u, v)
            assert w == labs[x] and ld == d.lightdepth[x]


def test_path_nca_is_shallower():
    t = fam.gen_path(12)
    labs = build_nca(Decomposition(t))
    for u in range(12):
        for v in range(12):
            assert nca_query(labs[u], labs[v])[0] == labs[min(u, v)]
    assert nca_query(labs[3], labs[3]) == (labs[3], labs[3].lightdepth)
