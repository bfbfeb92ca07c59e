"""Minimal absent words from the suffix array and LCP array.

Every minimal absent word ``a.x1`` has its suffix ``x1`` equal to one of
the factors ``y[SA[i] .. SA[i] + LCP[i]]`` (row ``2i``) or
``y[SA[i] .. SA[i] + LCP[i+1]]`` (row ``2i+1``).  For each row we collect

* ``before[row]``: letters preceding occurrences of the factor, and
* ``before_lcp[row]``: letters preceding occurrences of its longest proper
  prefix,

with one top-down and one bottom-up sweep over SA/LCP.  A letter in
``before_lcp[row]`` but not in ``before[row]`` yields a minimal absent
word.  Both sweeps and the extraction run in O(n * sigma / 8) time.

Letter sets are rows of little-endian bytes (see :class:`LetterSet`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from . import _accel
from ._accel import kernel, structure
from .alphabet import Alphabet, EncodedText, LetterSet, encode_sequence
from .suffix import SuffixIndex, build_suffix_index, index_dtype


class ConfigError(ValueError):
    pass


class StackOrderError(RuntimeError):
    pass


if _accel.USE_NUMBA:
    from numba import int64 as _i64

    _STACK_SPEC = [("values", _i64[:]), ("size", _i64), ("cursor", _i64)]
else:
    _STACK_SPEC = []


@structure(_STACK_SPEC)
class LcpStack:
    """Array-backed stack of strictly increasing LCP values.

    ``top()`` also resets a read cursor to the top; ``next()`` then walks
    toward the bottom without popping, returning -1 once exhausted.
    """

    def __init__(self, values):
        self.values = values
        self.size = 0
        self.cursor = -1

    def push(self, v):
        if self.size > 0 and self.values[self.size - 1] >= v:
            raise StackOrderError("LCP stack must stay strictly increasing")
        self.values[self.size] = v
        self.size += 1

    def pop(self):
        self.size -= 1
        return self.values[self.size]

    def top(self):
        self.cursor = self.size - 1
        return self.values[self.cursor]

    def next(self):
        self.cursor -= 1
        if self.cursor < 0:
            return -1
        return self.values[self.cursor]

    def empty(self):
        return self.size == 0

    def depth(self):
        return self.size


# -- letter-set rows ---------------------------------------------------------


@kernel
def _test(rows, r, k):
    return (rows[r, k >> 3] >> (k & 7)) & 1


@kernel
def _set(rows, r, k):
    rows[r, k >> 3] |= 1 << (k & 7)


@kernel
def _clear(rows, r):
    for w in range(rows.shape[1]):
        rows[r, w] = 0


@kernel
def _copy(dst, dr, src, sr):
    for w in range(dst.shape[1]):
        dst[dr, w] = src[sr, w]


@kernel
def _or(dst, dr, src, sr):
    for w in range(dst.shape[1]):
        dst[dr, w] |= src[sr, w]


@kernel
def _mark_down(interval, stack, u):
    """Add letter ``u`` to the stacked levels, top down, until one has it."""
    value = stack.top()
    while value >= 0 and _test(interval, value, u) == 0:
        _set(interval, value, u)
        value = stack.next()


# -- the two sweeps ----------------------------------------------------------


NO_LETTER = 255  # never a rank, since sigma <= 255


@kernel
def _preceding(y, sa, out):
    # out[i] = y[SA[i] - 1]; a tight gather is far cheaper than the same
    # cache misses taken one at a time inside the top-down loop
    for i in range(sa.size):
        s = sa[i]
        out[i] = y[s - 1] if s > 0 else NO_LETTER


@kernel
def _top_down(bwt, lcp, before, before_lcp, interval, stack_buf):
    n = bwt.size
    stack = LcpStack(stack_buf)
    stack.push(0)
    prev = NO_LETTER  # bwt[i - 1]
    for i in range(n):
        li = lcp[i]
        if i > 0 and li < lcp[i - 1]:
            proxa = stack.pop()
            while stack.top() > li:
                _clear(interval, proxa)
                proxa = stack.pop()
            # the last popped level is read before it is cleared
            if stack.top() < li:
                _copy(interval, li, interval, proxa)
            _copy(before, 2 * i - 1, interval, proxa)
            _copy(before_lcp, 2 * i - 1, interval, li)
            _clear(interval, proxa)
        u = bwt[i]
        if u != NO_LETTER:
            _mark_down(interval, stack, u)
            _set(interval, li, u)
            _set(before, 2 * i, u)
            _set(before, 2 * i + 1, u)
            _set(before_lcp, 2 * i, u)
            _set(before_lcp, 2 * i + 1, u)
        if li > 0 and prev != NO_LETTER:
            _set(interval, li, prev)
        prev = u
        _copy(before_lcp, 2 * i, interval, li)
        if stack.top() != li:
            stack.push(li)


@kernel
def _bottom_up(y, sa, lcp, before, before_lcp, interval, stack_buf, rem_buf):
    n = y.size
    width = before.shape[1]
    stack = LcpStack(stack_buf)
    stack.push(0)
    rem = rem_buf
    nrem = 0
    proxb = 1
    for i in range(n - 1, -1, -1):
        li = lcp[i]
        lnext = lcp[i + 1] if i < n - 1 else 0
        proxa = li + 1
        if i < n - 1 and li < lnext:
            while stack.top() > li:
                proxa = stack.pop()
                rem[nrem] = proxa
                nrem += 1
            if stack.top() < li:
                _copy(interval, li, interval, proxa)
        for w in range(width):
            byte = before[2 * i, w]
            if byte == 0:
                continue
            for bit in range(8):
                if (byte >> bit) & 1:
                    k = w * 8 + bit
                    _mark_down(interval, stack, k)
                    _set(interval, li, k)
        _or(before_lcp, 2 * i, interval, li)
        _or(before_lcp, 2 * i + 1, interval, lnext)
        _or(before, 2 * i + 1, interval, proxb)
        proxb = proxa
        _or(before, 2 * i, interval, proxa)
        while nrem > 0:
            nrem -= 1
            _clear(interval, rem[nrem])
        if stack.top() != li:
            stack.push(li)


@kernel
def _add_text_end(y, lcp, before_lcp):
    # the empty word also occurs at position n, preceded by y[n-1]
    n = y.size
    last = y[n - 1]
    for i in range(n):
        if lcp[i] == 0:
            _set(before_lcp, 2 * i, last)
        if i < n - 1 and lcp[i + 1] == 0:
            _set(before_lcp, 2 * i + 1, last)


# -- extraction --------------------------------------------------------------


@kernel
def _emit_row(before, before_lcp, row, start, depth, n, min_len, max_len,
              count, fill, out_letter, out_start, out_depth):
    m = depth + 2
    if start + depth >= n or m < min_len or m > max_len:
        return count
    for w in range(before.shape[1]):
        diff = before_lcp[row, w] & ~before[row, w] & 0xFF
        if diff == 0:
            continue
        for bit in range(8):
            if (diff >> bit) & 1:
                if fill:
                    out_letter[count] = w * 8 + bit
                    out_start[count] = start
                    out_depth[count] = depth
                count += 1
    return count


@kernel
def _extract(y, sa, lcp, before, before_lcp, min_len, max_len, stack_buf,
             fill, out_letter, out_start, out_depth):
    n = y.size
    stack = LcpStack(stack_buf)
    stack.push(0)
    count = 0
    for i in range(n):
        li = lcp[i]
        if i > 0:
            # row 2i-1 names the same factor as row 2p, p = PSV<=(i),
            # exactly when LCP[p] == LCP[i]; row 2p was emitted already
            while stack.top() > li:
                stack.pop()
            if stack.top() != li:
                stack.push(li)
                count = _emit_row(before, before_lcp, 2 * i - 1, sa[i - 1], li, n,
                                  min_len, max_len, count, fill,
                                  out_letter, out_start, out_depth)
        count = _emit_row(before, before_lcp, 2 * i, sa[i], li, n,
                          min_len, max_len, count, fill,
                          out_letter, out_start, out_depth)
    return count


# -- public surface ----------------------------------------------------------


@dataclass
class BeforeArrays:
    """``before`` and ``before_lcp``: ``2n`` letter sets each, one row per factor."""

    before: np.ndarray
    before_lcp: np.ndarray
    sigma: int

    @classmethod
    def empty(cls, n: int, sigma: int) -> BeforeArrays:
        width = max(1, (sigma + 7) >> 3)
        return cls(
            before=np.zeros((2 * n, width), dtype=np.uint8),
            before_lcp=np.zeros((2 * n, width), dtype=np.uint8),
            sigma=sigma,
        )

    def __len__(self) -> int:
        return self.before.shape[0]

    def before_set(self, row: int) -> LetterSet:
        return LetterSet(self.before[row], self.sigma)

    def before_lcp_set(self, row: int) -> LetterSet:
        return LetterSet(self.before_lcp[row], self.sigma)

    def copy(self) -> BeforeArrays:
        return BeforeArrays(self.before.copy(), self.before_lcp.copy(), self.sigma)

    def bitstrings(self) -> list[tuple[str, str]]:
        """Rows as ``("10", "11")`` pairs, rank 0 first."""
        return [
            (self.before_set(j).to_bitstring(), self.before_lcp_set(j).to_bitstring())
            for j in range(len(self))
        ]


def _scratch(index: SuffixIndex, width: int):
    top = int(index.lcp.max()) if index.n else 0
    interval = np.zeros((top + 2, width), dtype=np.uint8)
    return interval, np.empty(top + 2, dtype=np.int64)


def top_down_pass(text: EncodedText, index: SuffixIndex) -> BeforeArrays:
    """Letters before each factor's occurrences at or above its SA rank."""
    arrays = BeforeArrays.empty(text.n, text.sigma)
    interval, stack_buf = _scratch(index, arrays.before.shape[1])
    bwt = np.empty(text.n, dtype=np.uint8)
    _preceding(text.data, index.sa, bwt)
    _top_down(bwt, index.lcp, arrays.before, arrays.before_lcp, interval, stack_buf)
    return arrays


def bottom_up_pass(text: EncodedText, index: SuffixIndex, arrays: BeforeArrays) -> BeforeArrays:
    """Complete ``arrays`` (in place) with occurrences below each rank.

    Also adds ``y[n-1]`` to the prefix sets of one-letter factors, whose
    longest proper prefix is the empty word.
    """
    interval, stack_buf = _scratch(index, arrays.before.shape[1])
    rem_buf = np.empty_like(stack_buf)
    _bottom_up(text.data, index.sa, index.lcp, arrays.before, arrays.before_lcp,
               interval, stack_buf, rem_buf)
    _add_text_end(text.data, index.lcp, arrays.before_lcp)
    return arrays


class MawTuple(NamedTuple):
    """Word ``letter . y[start .. end]`` (``end`` inclusive)."""

    letter: int
    start: int
    end: int

    @property
    def length(self) -> int:
        return self.end - self.start + 2


@dataclass(frozen=True)
class MawReport:
    """Deduplicated minimal absent words of one text, in row order.

    Stored column-wise as ``letter``, ``start`` and ``depth = end - start``;
    ``depth`` uses the narrowest unsigned type that holds the largest LCP
    value, which keeps a DNA report at 6 bytes per word.  Iterate for
    :class:`MawTuple` values.
    """

    letters: np.ndarray
    starts: np.ndarray
    depths: np.ndarray
    text: EncodedText

    @property
    def n(self) -> int:
        return self.text.n

    @property
    def alphabet(self) -> Alphabet:
        return self.text.alphabet

    def __len__(self) -> int:
        return int(self.letters.size)

    @property
    def ends(self) -> np.ndarray:
        return self.starts.astype(np.int64) + self.depths

    def __iter__(self) -> Iterator[MawTuple]:
        for a, i, d in zip(self.letters.tolist(), self.starts.tolist(), self.depths.tolist()):
            yield MawTuple(a, i, i + d)

    @property
    def tuples(self) -> list[MawTuple]:
        return list(self)

    def lengths(self) -> np.ndarray:
        return self.depths.astype(np.int64) + 2

    def word(self, k: int) -> bytes:
        a, i, d = int(self.letters[k]), int(self.starts[k]), int(self.depths[k])
        return self.alphabet.letter(a) + self.text.decode(i, i + d + 1)

    def words(self) -> list[bytes]:
        raw = self.text.decode()
        letters = self.alphabet.letters
        return [
            letters[a : a + 1] + raw[i : i + d + 1]
            for a, i, d in zip(self.letters.tolist(), self.starts.tolist(), self.depths.tolist())
        ]

    def word_set(self) -> set[bytes]:
        return set(self.words())

    def sorted_order(self) -> list[int]:
        """Report positions ordered lexicographically by word bytes."""
        words = self.words()
        return sorted(range(len(words)), key=words.__getitem__)


def _depth_dtype(max_lcp: int):
    for dtype in (np.uint8, np.uint16, np.uint32):
        if max_lcp <= np.iinfo(dtype).max:
            return dtype
    return np.uint64


def _check_range(min_len: int, max_len: int | None) -> None:
    if min_len < 2:
        raise ConfigError(f"min_len must be >= 2, got {min_len}")
    if max_len is not None and min_len > max_len:
        raise ConfigError(f"min_len ({min_len}) > max_len ({max_len})")


def extract_maws(
    text: EncodedText,
    index: SuffixIndex,
    arrays: BeforeArrays,
    min_len: int = 2,
    max_len: int | None = None,
) -> MawReport:
    """Read off every minimal absent word with ``min_len <= length <= max_len``.

    Rows whose factor would run past the end of the text are skipped, and a
    word reached from two rows is reported once, from the first row.
    """
    _check_range(min_len, max_len)
    n = text.n
    if max_len is None:
        max_len = n + 1
    max_len = min(max_len, n + 1)
    _, stack_buf = _scratch(index, 1)
    args = (text.data, index.sa, index.lcp, arrays.before, arrays.before_lcp,
            min_len, max_len, stack_buf)
    start_type = index_dtype(n)
    depth_type = _depth_dtype(int(index.lcp.max()))
    count = _extract(*args, False, np.empty(0, dtype=np.uint8),
                     np.empty(0, dtype=start_type), np.empty(0, dtype=depth_type))
    letters = np.empty(count, dtype=np.uint8)
    starts = np.empty(count, dtype=start_type)
    depths = np.empty(count, dtype=depth_type)
    _extract(*args, True, letters, starts, depths)
    return MawReport(letters=letters, starts=starts, depths=depths, text=text)


def compute_maws(raw, min_len: int = 2, max_len: int | None = None) -> MawReport:
    """All minimal absent words of ``raw`` with lengths in ``[min_len, max_len]``.

    ``max_len`` defaults to ``n + 1``, the longest possible.
    """
    _check_range(min_len, max_len)
    text = raw if isinstance(raw, EncodedText) else encode_sequence(raw)
    index = build_suffix_index(text, keep_inverse=False)
    arrays = top_down_pass(text, index)
    bottom_up_pass(text, index, arrays)
    return extract_maws(text, index, arrays, min_len, max_len)
