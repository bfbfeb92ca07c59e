"""Brute-force reference implementations for small inputs.

Nothing here touches the suffix-array machinery; everything is computed
from the definitions by slicing and sorting Python sequences.
"""

from __future__ import annotations

from .alphabet import EncodedText

MAX_ORACLE_N = 1000

WordSet = set  # set[bytes]


def _as_seq(text):
    if isinstance(text, EncodedText):
        return bytes(text.data)
    if isinstance(text, str):
        return text.encode("ascii")
    if isinstance(text, (bytes, bytearray)):
        return bytes(text)
    return tuple(text)


def _check_size(seq) -> None:
    if len(seq) < 1:
        raise ValueError("oracle needs a non-empty text")
    if len(seq) > MAX_ORACLE_N:
        raise ValueError(f"oracle input too large: n={len(seq)} > {MAX_ORACLE_N}")


def naive_suffix_array(text) -> list[int]:
    seq = _as_seq(text)
    _check_size(seq)
    return sorted(range(len(seq)), key=lambda i: seq[i:])


def _common_prefix(a, b) -> int:
    k = 0
    while k < len(a) and k < len(b) and a[k] == b[k]:
        k += 1
    return k


def naive_lcp(text, sa) -> list[int]:
    seq = _as_seq(text)
    _check_size(seq)
    return [0] + [_common_prefix(seq[sa[r - 1] :], seq[sa[r] :]) for r in range(1, len(sa))]


def factors(text) -> set:
    seq = _as_seq(text)
    n = len(seq)
    return {seq[i:j] for i in range(n) for j in range(i, n + 1)}


def is_minimal_absent(word: bytes, text) -> bool:
    """Absent from ``text`` while every proper factor occurs (checked by substring scan)."""
    seq = _as_seq(text)
    if len(word) < 2 or word in seq:
        return False
    m = len(word)
    return all(
        word[i:j] in seq for i in range(m) for j in range(i + 1, m + 1) if (i, j) != (0, m)
    )


def naive_maws(text, min_len: int = 2, max_len: int | None = None) -> WordSet:
    """Minimal absent words of ``text`` by candidate enumeration.

    A minimal absent word ``x`` has ``x[1:]`` occurring in the text, so it is
    enough to try ``a + w`` for every letter ``a`` and factor ``w``; keep it
    when it is absent and its prefix ``x[:-1]`` occurs (``x[1:-1]`` is a
    factor of ``w``, so all other proper factors occur).
    """
    seq = _as_seq(text)
    _check_size(seq)
    if not isinstance(seq, bytes):
        raise TypeError("naive_maws works on byte strings")
    if max_len is None:
        max_len = len(seq) + 1
    present = factors(seq)
    letters = sorted(set(seq))
    out = set()
    for w in present:
        if not min_len <= len(w) + 1 <= max_len:
            continue
        for a in letters:
            x = bytes([a]) + w
            if x not in present and x[:-1] in present:
                out.add(x)
    return out


def _kmers(seq: bytes, k: int) -> set:
    return {seq[i : i + k] for i in range(len(seq) - k + 1)}


def layered_maws(text, min_len: int = 2, max_len: int | None = None) -> WordSet:
    """Minimal absent words length by length from k-mer sets; fine for n ~ 10^4.

    ``x`` of length ``m`` is minimal absent iff ``x[:-1]`` and ``x[1:]`` are
    (m-1)-mers of the text and ``x`` is not an m-mer.  ``x[1:-1]`` then
    occurs at least twice, so lengths stop once no (m-2)-mer repeats.
    """
    seq = _as_seq(text)
    if not isinstance(seq, bytes) or not seq:
        raise ValueError("layered_maws needs a non-empty byte string")
    n = len(seq)
    if max_len is None:
        max_len = n + 1
    letters = [bytes([a]) for a in sorted(set(seq))]
    out = set()
    shorter = _kmers(seq, 1)
    m = 2
    while m <= max_len:
        core = m - 2
        if core > 0 and len(_kmers(seq, core)) == n - core + 1:
            break  # every (m-2)-mer is unique
        current = _kmers(seq, m)
        if m >= min_len:
            for w in shorter:
                for a in letters:
                    x = a + w
                    if x not in current and x[:-1] in shorter:
                        out.add(x)
        shorter = current
        m += 1
    return out
