"""Bit strings, Elias codes, rank/select and a succinct monotone sequence.

Bit order is MSB-first everywhere: a bit string of length ``n`` is held as a
Python int whose most significant of ``n`` bits is bit 0.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

_POP8 = [bin(i).count("1") for i in range(256)]
# _SEL8[b][j] = LSB-based position of the (j+1)-th set bit of byte b
_SEL8 = [[p for p in range(8) if (b >> p) & 1] for b in range(256)]
_W64 = (1 << 64) - 1


class BitError(ValueError):
    """Malformed, truncated or out-of-range bit access."""


class BitString:
    """Immutable bit string stored as an int plus an explicit length."""

    __slots__ = ("value", "length")

    def __init__(self, value: int = 0, length: int = 0):
        if length < 0 or value < 0 or value.bit_length() > length:
            raise BitError("value does not fit in length")
        self.value = value
        self.length = length

    @classmethod
    def from_str(cls, s: str) -> "BitString":
        s = s.strip()
        if s and set(s) - {"0", "1"}:
            raise BitError("bit string must contain only 0/1")
        return cls(int(s, 2) if s else 0, len(s))

    @classmethod
    def from_bytes(cls, data: bytes, length: int) -> "BitString":
        if len(data) * 8 < length:
            raise BitError("truncated payload")
        v = int.from_bytes(data, "big") >> (len(data) * 8 - length)
        return cls(v, length)

    def to_bytes(self) -> bytes:
        nbytes = (self.length + 7) // 8
        return (self.value << (nbytes * 8 - self.length)).to_bytes(nbytes, "big")

    def __len__(self):
        return self.length

    def __str__(self):
        return format(self.value, "b").zfill(self.length) if self.length else ""

    def __repr__(self):
        return f"BitString('{self}')"

    def __eq__(self, other):
        return (isinstance(other, BitString) and self.length == other.length
                and self.value == other.value)

    def __hash__(self):
        return hash((self.value, self.length))

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise BitError(f"bit index {i} out of range")
        return (self.value >> (self.length - 1 - i)) & 1

    def __add__(self, other: "BitString") -> "BitString":
        return BitString((self.value << other.length) | other.value,
                         self.length + other.length)

    def slice(self, start: int, stop: int) -> "BitString":
        if not 0 <= start <= stop <= self.length:
            raise BitError("slice out of range")
        return BitString(read_bits(self.value, self.length, start, stop - start),
                         stop - start)


# raw (value, length) helpers; the hot paths use these directly

def read_bits(value: int, length: int, pos: int, n: int) -> int:
    if pos < 0 or n < 0 or pos + n > length:
        raise BitError("read past end of bit string")
    return (value >> (length - pos - n)) & ((1 << n) - 1)


def gamma_code(x: int) -> tuple[int, int]:
    """Elias gamma code of x >= 1 as (value, length); leading zeros implicit."""
    if x < 1:
        raise BitError("gamma code needs x >= 1")
    return x, 2 * x.bit_length() - 1


def delta_code(x: int) -> tuple[int, int]:
    if x < 1:
        raise BitError("delta code needs x >= 1")
    n = x.bit_length()
    lv, ll = gamma_code(n)
    return (lv << (n - 1)) | (x ^ (1 << (n - 1))), ll + n - 1


def read_gamma(value: int, length: int, pos: int) -> tuple[int, int]:
    rem_len = length - pos
    if rem_len <= 0:
        raise BitError("truncated gamma code")
    rem = value & ((1 << rem_len) - 1)
    z = rem_len - rem.bit_length()
    end = pos + 2 * z + 1
    if rem == 0 or end > length:
        raise BitError("truncated gamma code")
    return rem >> (length - end), end


def read_delta(value: int, length: int, pos: int) -> tuple[int, int]:
    n, pos = read_gamma(value, length, pos)
    if pos + n - 1 > length:
        raise BitError("truncated delta code")
    low = read_bits(value, length, pos, n - 1)
    return (1 << (n - 1)) | low, pos + n - 1


def elias_encode(x: int, kind: str = "gamma") -> BitString:
    if kind == "gamma":
        return BitString(*gamma_code(x))
    if kind == "delta":
        return BitString(*delta_code(x))
    raise ValueError(f"unknown code kind {kind!r}")


def elias_decode(bits: BitString, offset: int = 0, kind: str = "gamma") -> tuple[int, int]:
    if kind == "gamma":
        return read_gamma(bits.value, bits.length, offset)
    if kind == "delta":
        return read_delta(bits.value, bits.length, offset)
    raise ValueError(f"unknown code kind {kind!r}")


class BitWriter:
    """Append-only builder. Fine for label-sized outputs."""

    __slots__ = ("value", "length")

    def __init__(self):
        self.value = 0
        self.length = 0

    def write(self, v: int, n: int) -> None:
        self.value = (self.value << n) | v
        self.length += n

    def write_pair(self, vl: tuple[int, int]) -> None:
        self.value = (self.value << vl[1]) | vl[0]
        self.length += vl[1]

    def gamma(self, x: int) -> None:
        self.write_pair(gamma_code(x))

    def delta(self, x: int) -> None:
        self.write_pair(delta_code(x))

    def bits(self) -> BitString:
        return BitString(self.value, self.length)


# in-word select

def _select_lsb(x: int, j: int) -> int:
    """LSB-based position of the j-th (1-based) set bit of x."""
    q = 0
    while True:
        w = x & _W64
        c = w.bit_count()
        if j <= c:
            break
        j -= c
        x >>= 64
        q += 64
    while True:
        b = w & 0xFF
        c = _POP8[b]
        if j <= c:
            return q + _SEL8[b][j - 1]
        j -= c
        w >>= 8
        q += 8


def select1_int(x: int, m: int, k: int) -> int:
    """0-based MSB-first position of the k-th set bit of an m-bit string."""
    total = x.bit_count()
    if not 1 <= k <= total:
        raise BitError("select beyond popcount")
    return m - 1 - _select_lsb(x, total - k + 1)


def select0_int(x: int, m: int, k: int) -> int:
    return select1_int(x ^ ((1 << m) - 1), m, k)


class BitVector:
    """Static bit vector with a two-level rank directory and sampled select."""

    SB_WORDS = 8          # words per superblock
    SEL_SAMPLE = 256      # every SEL_SAMPLE-th one is sampled

    def __init__(self, bits: Iterable[int] | str | BitString):
        if isinstance(bits, BitString):
            s = str(bits)
        elif isinstance(bits, str):
            s = bits
        else:
            s = "".join("1" if b else "0" for b in bits)
        self.length = len(s)
        self.words = [int(s[i:i + 64].ljust(64, "0"), 2) for i in range(0, len(s), 64)]
        self.sb_rank = []
        self.word_rank = []
        total = 0
        base = 0
        for wi, w in enumerate(self.words):
            if wi % self.SB_WORDS == 0:
                self.sb_rank.append(total)
                base = total
            self.word_rank.append(total - base)
            total += w.bit_count()
        self.ones = total
        # word index holding the (t*SEL_SAMPLE + 1)-th one
        self.sel_samples = []
        seen = 0
        for wi, w in enumerate(self.words):
            c = w.bit_count()
            while len(self.sel_samples) * self.SEL_SAMPLE < seen + c:
                self.sel_samples.append(wi)
            seen += c

    def _rank_word(self, wi: int) -> int:
        return self.sb_rank[wi // self.SB_WORDS] + self.word_rank[wi]

    def rank1(self, i: int) -> int:
        if not 0 <= i <= self.length:
            raise BitError("rank index out of range")
        wi, off = divmod(i, 64)
        if wi == len(self.words):
            return self.ones
        return self._rank_word(wi) + (self.words[wi] >> (64 - off)).bit_count()

    def select1(self, k: int) -> int:
        """1-based position of the k-th set bit."""
        if not 1 <= k <= self.ones:
            raise BitError("select beyond popcount")
        wi = self.sel_samples[(k - 1) // self.SEL_SAMPLE]
        while self._rank_word(wi) + self.words[wi].bit_count() < k:
            wi += 1
        j = k - self._rank_word(wi)
        return wi * 64 + select1_int(self.words[wi], 64, j) + 1

    def aux_bits(self) -> int:
        """Directory size if stored with minimal fixed widths."""
        w = max(1, self.length.bit_length())
        return len(self.sb_rank) * w + len(self.word_rank) * 9 + len(self.sel_samples) * w


def rank1(bv: BitVector, i: int) -> int:
    return bv.rank1(i)


def select1(bv: BitVector, k: int) -> int:
    return bv.select1(k)


# succinct monotone sequence

def _check_monotone(xs: Sequence[int], M: int | None) -> None:
    prev = 0
    for x in xs:
        if x < prev:
            raise ValueError("sequence is not non-decreasing")
        prev = x
    if M is not None and xs and xs[-1] > M:
        raise ValueError("last element exceeds bound M")


@lru_cache(maxsize=1 << 16)
def _encode_mono(xs: tuple, M: int, with_diffs: bool) -> tuple[int, int]:
    s = len(xs)
    w = BitWriter()
    w.gamma(s + 1)
    if s == 0:
        return w.value, w.length
    b = max(1, -(-M // s))
    wl = (b - 1).bit_length()
    w.gamma(b)
    hi = 0
    hi_len = 0
    low = 0
    prev_y = 0
    for x in xs:
        y, r = divmod(x, b)
        low = (low << wl) | r
        gap = y - prev_y
        hi = (hi << (gap + 1)) | 1
        hi_len += gap + 1
        prev_y = y
    w.write(low, s * wl)
    w.write(hi, hi_len)
    if with_diffs:
        pay = 0
        pay_len = 0
        bnd = 0
        prev = 0
        for x in xs:
            v, n = gamma_code(x - prev + 1)
            pay = (pay << n) | v
            bnd = (bnd << n) | (1 << (n - 1))
            pay_len += n
            prev = x
        w.gamma(pay_len + 1)
        w.write(pay, pay_len)
        w.write(bnd, pay_len)
    return w.value, w.length


def encode_monotone(xs: Sequence[int], M: int | None = None,
                    with_diffs: bool = True) -> tuple[int, int]:
    """Encode as (value, length); M defaults to the last element."""
    xs = tuple(xs)
    _check_monotone(xs, M)
    if M is None:
        M = xs[-1] if xs else 0
    return _encode_mono(xs, M, with_diffs)


class MonotoneSeq:
    """View of an encoded monotone sequence inside a larger bit string.

    Layout: gamma(s+1); if s > 0: gamma(b), s low parts of ceil(log2 b) bits,
    the unary high-part vector, then optionally gamma(L+1), an L-bit stream of
    gamma(x_i - x_{i-1} + 1) codes and an L-bit code-boundary vector.
    """

    __slots__ = ("value", "length", "s", "b", "wl", "low_off", "high", "hi_len",
                 "pay", "bnd", "pay_len", "end", "with_diffs")

    def __init__(self, value: int, length: int, offset: int = 0, with_diffs: bool = True):
        self.value = value
        self.length = length
        self.with_diffs = with_diffs
        s1, p = read_gamma(value, length, offset)
        s = self.s = s1 - 1
        self.pay = self.bnd = self.pay_len = 0
        if s == 0:
            self.b = 1
            self.wl = 0
            self.low_off = p
            self.high = 0
            self.hi_len = 0
            self.end = p
            return
        b, p = read_gamma(value, length, p)
        self.b = b
        wl = self.wl = (b - 1).bit_length()
        self.low_off = p
        p += s * wl
        if p > length:
            raise BitError("truncated monotone sequence")
        # high part is at most 2s+1 bits long and ends at its s-th one
        win = min(2 * s + 1, length - p)
        hv = read_bits(value, length, p, win)
        if hv.bit_count() < s:
            raise BitError("truncated monotone sequence")
        hi_len = select1_int(hv, win, s) + 1
        self.high = hv >> (win - hi_len)
        self.hi_len = hi_len
        p += hi_len
        if with_diffs:
            L1, p = read_gamma(value, length, p)
            L = self.pay_len = L1 - 1
            self.pay = read_bits(value, length, p, L)
            self.bnd = read_bits(value, length, p + L, L)
            p += 2 * L
        self.end = p

    @classmethod
    def build(cls, xs: Sequence[int], M: int | None = None, with_diffs: bool = True):
        v, n = encode_monotone(xs, M, with_diffs)
        return cls(v, n, 0, with_diffs)

    @property
    def bits(self) -> int:
        return self.end

    def __len__(self):
        return self.s

    def access(self, k: int) -> int:
        if not 1 <= k <= self.s:
            raise IndexError(f"index {k} out of range 1..{self.s}")
        wl = self.wl
        low = (self.value >> (self.length - self.low_off - k * wl)) & ((1 << wl) - 1) if wl else 0
        y = select1_int(self.high, self.hi_len, k) - (k - 1)
        return y * self.b + low

    def __getitem__(self, k: int) -> int:
        return self.access(k)

    def to_list(self) -> list[int]:
        return [self.access(k) for k in range(1, self.s + 1)]

    def _ones_before_zero(self, y: int) -> int:
        """Number of elements whose high part is < y."""
        if y <= 0:
            return 0
        zeros = self.hi_len - self.s
        if y > zeros:
            return self.s
        return select0_int(self.high, self.hi_len, y) - (y - 1)

    def successor(self, x: int):
        """Smallest (index, value) with value >= x, or None."""
        s = self.s
        if s == 0:
            return None
        if x <= 0:
            return 1, self.access(1)
        y = x // self.b
        lo = self._ones_before_zero(y) + 1
        hi = self._ones_before_zero(y + 1)   # last index with high part == y
        # binary search inside the bucket of high part y
        while lo <= hi:
            mid = (lo + hi) // 2
            if self.access(mid) >= x:
                hi = mid - 1
            else:
                lo = mid + 1
        if lo > s:
            return None
        return lo, self.access(lo)

    def _code_end(self, i: int) -> int:
        """End offset in the diff stream of the first i codes."""
        if i == self.s:
            return self.pay_len
        # the (i+1)-th boundary mark starts code i+1
        return select1_int(self.bnd, self.pay_len, i + 1)

    def common_suffix(self, other: "MonotoneSeq", i: int, j: int) -> int:
        if not (0 <= i <= self.s and 0 <= j <= other.s):
            raise IndexError("prefix length out of range")
        if i == 0 or j == 0 or self.access(i) != other.access(j):
            return 0
        if not (self.with_diffs and other.with_diffs):
            t = 1
            while t < i and t < j and self.access(i - t) == other.access(j - t):
                t += 1
            return t
        ea = self._code_end(i)
        eb = other._code_end(j)
        m = min(ea, eb)
        pa = (self.pay >> (self.pay_len - ea)) & ((1 << m) - 1)
        pb = (other.pay >> (other.pay_len - eb)) & ((1 << m) - 1)
        ba = (self.bnd >> (self.pay_len - ea)) & ((1 << m) - 1)
        bb = (other.bnd >> (other.pay_len - eb)) & ((1 << m) - 1)
        diff = (pa ^ pb) | (ba ^ bb)
        # length of the common suffix where both bits and code marks agree
        c = (diff & -diff).bit_length() - 1 if diff else m
        mask = (1 << c) - 1
        t = (ba & mask).bit_count()
        # t equal trailing differences pin t+1 equal trailing elements
        return min(t + 1, i, j)


def build_monotone(xs: Sequence[int], M: int | None = None, with_diffs: bool = True) -> MonotoneSeq:
    return MonotoneSeq.build(xs, M, with_diffs)


def mono_access(q: MonotoneSeq, k: int) -> int:
    return q.access(k)


def mono_successor(q: MonotoneSeq, x: int):
    return q.successor(x)


def mono_common_suffix(a: MonotoneSeq, b: MonotoneSeq, i: int, j: int) -> int:
    return a.common_suffix(b, i, j)
