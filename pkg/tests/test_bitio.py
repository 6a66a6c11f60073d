from __future__ import annotations

import math
import random

import pytest

from treelabel.bitio import (BitError, BitString, BitVector, MonotoneSeq, build_monotone,
                             elias_decode, elias_encode, encode_monotone, mono_access,
                             mono_common_suffix, mono_successor, rank1, select1)


def ref_gamma(x):
    b = bin(x)[2:]
    return "0" * (len(b) - 1) + b


def ref_delta(x):
    b = bin(x)[2:]
    return ref_gamma(len(b)) + b[1:]


def test_gamma_delta_small():
    assert str(elias_encode(1, "gamma")) == "1"
    assert str(elias_encode(1, "delta")) == "1"
    assert str(elias_encode(4, "gamma")) == "00100"
    for x in range(1, 3000):
        assert str(elias_encode(x, "gamma")) == ref_gamma(x)
        assert str(elias_encode(x, "delta")) == ref_delta(x)


def test_elias_errors():
    with pytest.raises(ValueError):
        elias_encode(0)
    bits = elias_encode(1000, "delta")
    with pytest.raises(ValueError):
        elias_decode(bits.slice(0, len(bits) - 1), 0, "delta")


def test_decode_offsets():
    stream = elias_encode(7, "gamma") + elias_encode(300, "delta") + elias_encode(1, "gamma")
    x, p = elias_decode(stream, 0, "gamma")
    y, p = elias_decode(stream, p, "delta")
    z, p = elias_decode(stream, p, "gamma")
    assert (x, y, z, p) == (7, 300, 1, len(stream))


def test_delta_length():
    for x in (2, 17, 1000, 10 ** 6, 2 ** 40):
        lg = x.bit_length() - 1
        assert len(elias_encode(x, "delta")) <= lg + 2 * math.log2(lg + 1) + 1


def test_bitstring_bytes_roundtrip():
    b = BitString.from_str("1011001")
    assert BitString.from_bytes(b.to_bytes(), 7) == b
    assert b[0] == 1 and b[1] == 0


def test_mono_examples():
    q = build_monotone([], 10)
    assert len(q) == 0 and q.successor(0) is None
    q = build_monotone([0, 0, 0], 10)
    assert [q.access(k) for k in (1, 2, 3)] == [0, 0, 0]
    q = build_monotone([2, 5, 5, 9], 10)
    assert q.to_list() == [2, 5, 5, 9]
    assert mono_access(q, 1) == 2 and mono_access(q, 4) == 9
    assert mono_successor(q, 6) == (4, 9)
    assert mono_successor(q, 0) == (1, 2)
    assert mono_successor(q, 10) is None
    ident = build_monotone(list(range(20)))
    assert [ident.access(k) for k in range(1, 21)] == list(range(20))


def test_mono_errors():
    with pytest.raises(ValueError):
        build_monotone([3, 2])
    with pytest.raises(ValueError):
        build_monotone([1, 11], 10)
    q = build_monotone([1, 2])
    with pytest.raises((ValueError, IndexError)):
        q.access(3)


def test_common_suffix_examples():
    a = build_monotone([1, 4, 7])
    b = build_monotone([2, 4, 7])
    assert mono_common_suffix(a, a, 3, 3) == 3
    assert mono_common_suffix(a, b, 3, 3) == 2
    c = build_monotone([1, 4, 8])
    assert mono_common_suffix(a, c, 3, 3) == 0


def _naive_suffix(x, y, i, j):
    t = 0
    while t < i and t < j and x[i - 1 - t] == y[j - 1 - t]:
        t += 1
    return t


def _rand_seq(r):
    s = r.choice([1, 2, 3, 5, 8, 20])
    kind = r.random()
    if kind < 0.2:
        return [r.randrange(4)] * s
    top = r.choice([3, 10, 100, 10 ** 4])
    return sorted(r.randrange(top) for _ in range(s))


def test_mono_random_oracle(rng):
    for _ in range(3000):
        xs = _rand_seq(rng)
        q = build_monotone(xs)
        for k in range(1, len(xs) + 1):
            assert q.access(k) == xs[k - 1]
        for x in range(-1, xs[-1] + 3):
            exp = next(((i + 1, v) for i, v in enumerate(xs) if v >= x), None)
            assert q.successor(x) == exp
        ys = xs[:rng.randrange(len(xs) + 1)] + sorted(rng.randrange(xs[-1], xs[-1] + 3)
                                                       for _ in range(rng.randrange(3)))
        if ys:
            p = build_monotone(ys)
            for i in range(len(xs) + 1):
                for j in range(len(ys) + 1):
                    assert q.common_suffix(p, i, j) == _naive_suffix(xs, ys, i, j)


def test_mono_embedded_offset():
    prefix = elias_encode(99, "delta")
    v, n = encode_monotone([3, 3, 8], None, False)
    total = BitString((prefix.value << n) | v, len(prefix) + n)
    q = MonotoneSeq(total.value, total.length, len(prefix), False)
    assert q.to_list() == [3, 3, 8] and q.end == len(total)


def test_mono_size_grid():
    r = random.Random(5)
    for s in (1, 2, 7, 64, 1000):
        for M in (s, 4 * s, 1000 * s, 2 ** 30):
            xs = sorted(r.randrange(M + 1) for _ in range(s))
            xs[-1] = M
            budget = s * max(1, math.log2(M / s))
            assert encode_monotone(xs, M, False)[1] <= 8 * budget + 64
            assert encode_monotone(xs, M, True)[1] <= 16 * budget + 96


def test_mono_deterministic():
    assert encode_monotone([1, 5, 9]) == encode_monotone([1, 5, 9])


def test_rank_select_examples():
    z = BitVector("0000")
    assert rank1(z, 3) == 0
    with pytest.raises((ValueError, BitError)):
        select1(z, 1)
    bv = BitVector("10101")
    assert rank1(bv, 3) == 2
    assert select1(bv, 3) == 5


def test_rank_select_random(rng):
    for _ in range(300):
        bits = [int(rng.random() < rng.random()) for _ in range(rng.randrange(1, 700))]
        bv = BitVector(bits)
        for i in range(len(bits) + 1):
            assert bv.rank1(i) == sum(bits[:i])
        ones = [i + 1 for i, b in enumerate(bits) if b]
        for k, pos in enumerate(ones, 1):
            assert bv.select1(k) == pos
