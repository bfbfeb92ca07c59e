"""Dense alphabet encoding and fixed-width letter sets."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MAX_SIGMA = 255
_MISSING = 255  # never a valid rank, since sigma <= 255
_CHUNK = 1 << 22

_UPPER = np.arange(256, dtype=np.uint8)
_UPPER[ord("a") : ord("z") + 1] -= 32


class AlphabetError(ValueError):
    pass


def _as_bytes_array(raw) -> np.ndarray:
    if isinstance(raw, str):
        raw = raw.encode("ascii")
    if isinstance(raw, np.ndarray):
        return raw.astype(np.uint8, copy=False)
    return np.frombuffer(raw, dtype=np.uint8)


def letter_width(sigma: int) -> int:
    """Bytes per letter set of ``sigma`` letters."""
    return max(1, (sigma + 7) >> 3)


@dataclass(frozen=True)
class Alphabet:
    letters: bytes
    ranks: dict = field(repr=False)

    @property
    def sigma(self) -> int:
        return len(self.letters)

    @property
    def width(self) -> int:
        return letter_width(self.sigma)

    def lookup_table(self) -> np.ndarray:
        """256-entry byte -> rank table (case folded); 255 marks absent bytes."""
        table = np.full(256, _MISSING, dtype=np.uint8)
        for byte, rank in self.ranks.items():
            table[byte] = rank
        return table[_UPPER]

    def letter(self, rank: int) -> bytes:
        return self.letters[rank : rank + 1]


def build_alphabet(raw) -> Alphabet:
    """Infer the effective alphabet of ``raw``: distinct (upper-cased) bytes, ascending."""
    data = _as_bytes_array(raw)
    if data.size == 0:
        raise AlphabetError("empty sequence")
    counts = np.zeros(256, dtype=np.int64)
    # chunked so bincount's intp cast stays small on genome-sized input
    for lo in range(0, data.size, _CHUNK):
        counts += np.bincount(data[lo : lo + _CHUNK], minlength=256)
    folded = np.zeros(256, dtype=np.int64)
    np.add.at(folded, _UPPER, counts)
    present = np.flatnonzero(folded)
    if present.size > MAX_SIGMA:
        raise AlphabetError(f"alphabet too large ({present.size} distinct bytes, max {MAX_SIGMA})")
    letters = bytes(present.astype(np.uint8))
    return Alphabet(letters=letters, ranks={b: r for r, b in enumerate(letters)})


@dataclass(frozen=True)
class EncodedText:
    data: np.ndarray
    alphabet: Alphabet

    def __len__(self) -> int:
        return int(self.data.size)

    @property
    def n(self) -> int:
        return int(self.data.size)

    @property
    def sigma(self) -> int:
        return self.alphabet.sigma

    def decode(self, start: int = 0, stop: int | None = None) -> bytes:
        letters = np.frombuffer(self.alphabet.letters, dtype=np.uint8)
        return letters[self.data[start:stop]].tobytes()


def encode(raw, alphabet: Alphabet) -> EncodedText:
    """Map every byte of ``raw`` to its dense rank in ``alphabet``."""
    data = _as_bytes_array(raw)
    out = alphabet.lookup_table()[data]
    if data.size and alphabet.sigma < _MISSING:
        bad = out == _MISSING
        if bad.any():
            pos = int(np.argmax(bad))
            byte = int(data[pos])
            raise AlphabetError(f"byte {bytes([byte])!r} (0x{byte:02x}) at position {pos} not in alphabet")
    return EncodedText(data=out, alphabet=alphabet)


def decode(text: EncodedText) -> bytes:
    return text.decode()


def encode_sequence(raw) -> EncodedText:
    return encode(raw, build_alphabet(raw))


class LetterSet:
    """A set of alphabet ranks stored as ``sigma`` bits.

    ``bits`` is a little-endian byte vector: rank ``k`` lives in byte
    ``k >> 3``, bit ``k & 7``.  The same layout is used for the rows of the
    two-dimensional arrays handed to the kernels, so ``LetterSet(row, sigma)``
    wraps a row without copying.
    """

    __slots__ = ("bits", "sigma")

    def __init__(self, bits: np.ndarray, sigma: int):
        if bits.dtype != np.uint8 or bits.shape != (letter_width(sigma),):
            raise ValueError(f"expected {letter_width(sigma)} uint8 words for sigma={sigma}")
        self.bits = bits
        self.sigma = sigma

    @classmethod
    def empty(cls, sigma: int) -> LetterSet:
        return cls(np.zeros(letter_width(sigma), dtype=np.uint8), sigma)

    @classmethod
    def of(cls, sigma: int, ranks) -> LetterSet:
        s = cls.empty(sigma)
        for k in ranks:
            s.set(k)
        return s

    def _check_rank(self, k: int) -> None:
        if not 0 <= k < self.sigma:
            raise IndexError(f"rank {k} outside [0, {self.sigma})")

    def _check_width(self, other: LetterSet) -> None:
        if other.sigma != self.sigma:
            raise ValueError(f"letter set width mismatch: {self.sigma} != {other.sigma}")

    def set(self, k: int) -> None:
        self._check_rank(k)
        self.bits[k >> 3] |= np.uint8(1 << (k & 7))

    def clear(self, k: int) -> None:
        self._check_rank(k)
        self.bits[k >> 3] &= np.uint8(~(1 << (k & 7)) & 0xFF)

    def test(self, k: int) -> bool:
        self._check_rank(k)
        return bool((int(self.bits[k >> 3]) >> (k & 7)) & 1)

    __contains__ = test

    def clear_all(self) -> None:
        self.bits[:] = 0

    def copy(self) -> LetterSet:
        return LetterSet(self.bits.copy(), self.sigma)

    def union(self, other: LetterSet) -> LetterSet:
        self._check_width(other)
        return LetterSet(self.bits | other.bits, self.sigma)

    def intersection(self, other: LetterSet) -> LetterSet:
        self._check_width(other)
        return LetterSet(self.bits & other.bits, self.sigma)

    def difference(self, other: LetterSet) -> LetterSet:
        self._check_width(other)
        return LetterSet(self.bits & ~other.bits, self.sigma)

    __or__ = union
    __and__ = intersection
    __sub__ = difference

    def issubset(self, other: LetterSet) -> bool:
        self._check_width(other)
        return not np.any(self.bits & ~other.bits)

    def members(self) -> list[int]:
        unpacked = np.unpackbits(self.bits, bitorder="little")[: self.sigma]
        return np.flatnonzero(unpacked).tolist()

    def __iter__(self):
        return iter(self.members())

    def __len__(self) -> int:
        return len(self.members())

    def __eq__(self, other) -> bool:
        if not isinstance(other, LetterSet):
            return NotImplemented
        return self.sigma == other.sigma and bool(np.array_equal(self.bits, other.bits))

    def to_bitstring(self) -> str:
        """Rank 0 first, e.g. ``"10"`` for ``{A}`` over ``{A, B}``."""
        unpacked = np.unpackbits(self.bits, bitorder="little")[: self.sigma]
        return "".join("1" if b else "0" for b in unpacked)

    def __repr__(self) -> str:
        return f"LetterSet({self.members()}, sigma={self.sigma})"
