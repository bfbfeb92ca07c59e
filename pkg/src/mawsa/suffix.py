"""Suffix array, inverse suffix array and LCP array construction.

The suffix array is built with SA-IS (induced sorting).  The terminator is
virtual: it is never materialised, so the arrays have exactly ``n`` entries
and no sentinel row.  The reduced problem and the LMS names are stored in
the output array itself, so besides ``sa`` the only extra memory is one
packed letter/type byte per position and the bucket counters.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._accel import kernel
from .alphabet import EncodedText

_L = 0
_S = 1
LOOKAHEAD = 16  # induce/LCP slots touched ahead of use


def index_dtype(n: int):
    return np.int32 if n < 2**31 else np.int64


@dataclass(frozen=True)
class SuffixIndex:
    """SA, iSA and LCP of one text.

    ``isa`` may be ``None`` when the caller chose not to keep it (it is only
    needed to build ``lcp``).
    """

    sa: np.ndarray
    isa: np.ndarray | None
    lcp: np.ndarray

    @property
    def n(self) -> int:
        return int(self.sa.size)


@kernel
def _pack(src, dst):
    """``dst[i] = (src[i] << 1) | type(i)``; ``dst`` may alias ``src``.

    Keeping the letter and its L/S type in one word halves the random reads
    made while inducing.
    """
    n = src.size
    # the last suffix is L: the virtual terminator sorts below every letter
    dst[n - 1] = src[n - 1] << 1
    for i in range(n - 2, -1, -1):
        c = src[i]
        nc = dst[i + 1] >> 1
        if c < nc or (c == nc and (dst[i + 1] & 1) == _S):
            dst[i] = (c << 1) | _S
        else:
            dst[i] = c << 1


@kernel
def _is_lms(tt, i):
    return i > 0 and (tt[i] & 1) == _S and (tt[i - 1] & 1) == _L


@kernel
def _bucket_counts(tt, k):
    counts = np.zeros(k, dtype=np.int64)
    for i in range(tt.size):
        counts[tt[i] >> 1] += 1
    return counts


@kernel
def _heads(counts):
    out = np.empty_like(counts)
    acc = 0
    for c in range(counts.size):
        out[c] = acc
        acc += counts[c]
    return out


@kernel
def _tails(counts):
    out = np.empty_like(counts)
    acc = 0
    for c in range(counts.size):
        acc += counts[c]
        out[c] = acc - 1
    return out


@kernel
def _induce(tt, sa, counts):
    """Induce L-type then S-type suffixes from the seeded LMS positions.

    Each step reads ``tt[SA[r] - 1]`` at a random place.  Touching the entry
    ``LOOKAHEAD`` slots ahead first lets those cache misses overlap; the
    peeked value may be stale and is only folded into the returned checksum.
    """
    n = tt.size
    head = _heads(counts)
    last = tt[n - 1] >> 1
    sa[head[last]] = n - 1
    head[last] += 1
    sink = 0
    for r in range(n):
        if r + LOOKAHEAD < n:
            q = sa[r + LOOKAHEAD]
            if q > 0:
                sink ^= tt[q - 1]
        p = sa[r]
        if p > 0:
            v = tt[p - 1]
            if (v & 1) == _L:
                c = v >> 1
                sa[head[c]] = p - 1
                head[c] += 1
    tail = _tails(counts)
    for r in range(n - 1, -1, -1):
        if r >= LOOKAHEAD:
            q = sa[r - LOOKAHEAD]
            if q > 0:
                sink ^= tt[q - 1]
        p = sa[r]
        if p > 0:
            v = tt[p - 1]
            if (v & 1) == _S:
                c = v >> 1
                sa[tail[c]] = p - 1
                tail[c] -= 1
    return sink


@kernel
def _lms_equal(tt, a, b):
    n = tt.size
    d = 0
    while True:
        pa = a + d
        pb = b + d
        if pa == n or pb == n:
            return False
        if tt[pa] != tt[pb]:
            return False
        if d > 0:
            la = _is_lms(tt, pa)
            lb = _is_lms(tt, pb)
            if la and lb:
                return True
            if la != lb:
                return False
        d += 1


@kernel
def _reduce(tt, sa, counts):
    """Sort LMS substrings and write the reduced text to ``sa[n-m:]``.

    Returns ``(m, number_of_names)``.
    """
    n = tt.size
    sa[:] = -1
    tail = _tails(counts)
    for i in range(1, n):
        if _is_lms(tt, i):
            c = tt[i] >> 1
            sa[tail[c]] = i
            tail[c] -= 1
    _induce(tt, sa, counts)

    m = 0
    for r in range(n):
        p = sa[r]
        if _is_lms(tt, p):
            sa[m] = p
            m += 1
    if m == 0:
        return 0, 0

    sa[m:] = -1
    name = -1
    prev = -1
    for r in range(m):
        p = sa[r]
        if prev < 0 or not _lms_equal(tt, prev, p):
            name += 1
            prev = p
        sa[m + p // 2] = name

    j = n - 1
    for r in range(n - 1, m - 1, -1):
        if sa[r] >= 0:
            sa[j] = sa[r]
            j -= 1
    return m, name + 1


@kernel
def _direct_reduced_sa(reduced, out):
    for k in range(reduced.size):
        out[reduced[k]] = k


@kernel
def _expand(tt, sa, counts, m):
    """Place the sorted LMS suffixes from ``sa[:m]`` and induce the rest."""
    n = tt.size
    if m > 0:
        j = n - m
        for i in range(1, n):
            if _is_lms(tt, i):
                sa[j] = i
                j += 1
        for r in range(m):
            sa[r] = sa[n - m + sa[r]]
        sa[m:] = -1
        tail = _tails(counts)
        for r in range(m - 1, -1, -1):
            p = sa[r]
            sa[r] = -1
            c = tt[p] >> 1
            sa[tail[c]] = p
            tail[c] -= 1
    else:
        sa[:] = -1
    _induce(tt, sa, counts)


def _sais(tt: np.ndarray, sa: np.ndarray, k: int) -> None:
    """Suffix array of the packed text ``tt`` over ``k`` letters into ``sa``."""
    n = tt.size
    if n == 1:
        sa[0] = 0
        return
    counts = _bucket_counts(tt, k)
    m, names = _reduce(tt, sa, counts)
    if m > 0:
        reduced = sa[n - m :]
        sub = sa[:m]
        if names < m:
            _pack(reduced, reduced)
            _sais(reduced, sub, names)
        else:
            _direct_reduced_sa(reduced, sub)
    _expand(tt, sa, counts, m)


def build_suffix_array(text: EncodedText) -> np.ndarray:
    """Suffix array of ``text`` in O(n) time (SA-IS, no sentinel row)."""
    n = text.n
    if n < 1:
        raise ValueError("suffix array of an empty text")
    sa = np.empty(n, dtype=index_dtype(n))
    tt = np.empty(n, dtype=np.uint8 if text.sigma <= 128 else np.uint16)
    _pack(text.data, tt)
    _sais(tt, sa, text.sigma)
    return sa


@kernel
def _inverse(sa, isa):
    for r in range(sa.size):
        isa[sa[r]] = r


def build_inverse(sa: np.ndarray) -> np.ndarray:
    sa = np.asarray(sa)
    isa = np.empty_like(sa)
    _inverse(sa, isa)
    return isa


@kernel
def _kasai(text, sa, isa, lcp):
    n = text.size
    lcp[0] = 0
    h = 0
    for i in range(n):
        r = isa[i]
        if r > 0:
            j = sa[r - 1]
            while i + h < n and j + h < n and text[i + h] == text[j + h]:
                h += 1
            lcp[r] = h
            if h > 0:
                h -= 1
        else:
            h = 0


def build_lcp(text: EncodedText, sa: np.ndarray, isa: np.ndarray) -> np.ndarray:
    """LCP array by Kasai's algorithm; ``lcp[0] == 0``."""
    lcp = np.empty_like(sa)
    _kasai(text.data, sa, isa, lcp)
    return lcp


@kernel
def _phi_lcp(text, sa, phi, lcp):
    n = text.size
    phi[sa[0]] = -1
    for r in range(1, n):
        phi[sa[r]] = sa[r - 1]
    # phi[i] becomes the LCP of suffix i with its predecessor in SA order
    h = 0
    sink = 0
    for i in range(n):
        if i + LOOKAHEAD < n:
            q = phi[i + LOOKAHEAD]
            if q >= 0:
                sink ^= text[q]
        j = phi[i]
        if j < 0:
            phi[i] = 0
            h = 0
            continue
        while i + h < n and j + h < n and text[i + h] == text[j + h]:
            h += 1
        phi[i] = h
        if h > 0:
            h -= 1
    for r in range(n):
        lcp[r] = phi[sa[r]]
    return sink


def build_lcp_phi(text: EncodedText, sa: np.ndarray) -> np.ndarray:
    """LCP array without the inverse suffix array (permuted-LCP method).

    Same O(n) bound as :func:`build_lcp`, one fewer random-access sweep.
    """
    phi = np.empty_like(sa)
    lcp = np.empty_like(sa)
    _phi_lcp(text.data, sa, phi, lcp)
    return lcp


def build_suffix_index(text: EncodedText, keep_inverse: bool = True) -> SuffixIndex:
    sa = build_suffix_array(text)
    if not keep_inverse:
        return SuffixIndex(sa=sa, isa=None, lcp=build_lcp_phi(text, sa))
    isa = build_inverse(sa)
    return SuffixIndex(sa=sa, isa=isa, lcp=build_lcp(text, sa, isa))
