"""(Multi)FASTA input and MAW report output."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import BinaryIO, Iterable

from .maw import MawReport

_WHITESPACE = b" \t\r\n\v\f"
_UPPER = bytes.maketrans(b"abcdefghijklmnopqrstuvwxyz", b"ABCDEFGHIJKLMNOPQRSTUVWXYZ")
_COMPLEMENT = bytes.maketrans(b"ACGT", b"TGCA")

FORWARD = "forward"
REVERSE = "rc"


class FastaFormatError(ValueError):
    pass


class StrandMode(enum.Enum):
    FORWARD = "forward"
    BOTH = "both"


@dataclass(frozen=True)
class FastaRecord:
    header: bytes
    sequence: bytes


def read_fasta(stream) -> list[FastaRecord]:
    """Parse every record of a (Multi)FASTA stream.

    Sequence lines are concatenated with all whitespace removed and folded
    to upper case.  Blank lines are ignored; CRLF line ends are accepted.
    """
    records: list[FastaRecord] = []
    header: bytes | None = None
    chunks: list[bytes] = []

    def finish() -> None:
        seq = b"".join(chunks)
        if not seq:
            raise FastaFormatError(f"record {header.decode(errors='replace')!r} has an empty sequence")
        records.append(FastaRecord(header, seq))

    for lineno, line in enumerate(stream, start=1):
        if isinstance(line, str):
            line = line.encode()
        body = line.strip(_WHITESPACE)
        if not body:
            continue
        if body.startswith(b">"):
            if header is not None:
                finish()
            header = line.lstrip(_WHITESPACE)[1:].rstrip(b"\r\n")
            chunks = []
        elif header is None:
            raise FastaFormatError(f"line {lineno}: expected '>' header, got {body[:20]!r}")
        else:
            chunks.append(body.translate(_UPPER, _WHITESPACE))
    if header is not None:
        finish()
    return records


def reverse_complement(sequence: bytes) -> bytes:
    """Reverse and swap A<->T, C<->G; any other byte keeps its value."""
    return sequence.translate(_COMPLEMENT)[::-1]


def strands(record: FastaRecord, mode: StrandMode) -> list[tuple[str, bytes]]:
    out = [(FORWARD, record.sequence)]
    if mode is StrandMode.BOTH:
        out.append((REVERSE, reverse_complement(record.sequence)))
    return out


def section_header(record: FastaRecord, strand: str) -> bytes:
    suffix = b" |rc" if strand == REVERSE else b""
    return b">" + record.header + suffix + b"\n"


def format_section(record: FastaRecord, strand: str, report: MawReport, fmt: str = "words") -> bytes:
    """One header line, then the report's words (or tuples) in word order."""
    words = report.words()
    order = sorted(range(len(words)), key=words.__getitem__)
    lines = [section_header(record, strand)]
    if fmt == "words":
        lines.extend(words[k] + b"\n" for k in order)
    elif fmt == "tuples":
        letters = report.alphabet.letters
        codes = report.letters.tolist()
        starts = report.starts.tolist()
        depths = report.depths.tolist()
        for k in order:
            a, i = codes[k], starts[k]
            lines.append(b"%s\t%d\t%d\n" % (letters[a : a + 1], i, i + depths[k]))
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    return b"".join(lines)


def write_report(
    records: Iterable[tuple[FastaRecord, str, MawReport]],
    fmt: str,
    stream: BinaryIO,
) -> None:
    for record, strand, report in records:
        stream.write(format_section(record, strand, report, fmt))
