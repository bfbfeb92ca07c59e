import io

import pytest

from mawsa.fasta import (
    FastaFormatError,
    FastaRecord,
    StrandMode,
    format_section,
    read_fasta,
    reverse_complement,
    strands,
    write_report,
)
from mawsa.maw import compute_maws


def parse(data: bytes):
    return read_fasta(io.BytesIO(data))


def test_multiline_record():
    assert parse(b">s\nAABA\nBABB\n") == [FastaRecord(b"s", b"AABABABB")]


def test_multiple_records_in_order():
    recs = parse(b">a\nAC\n>b\nGT\n")
    assert [r.header for r in recs] == [b"a", b"b"]
    assert [r.sequence for r in recs] == [b"AC", b"GT"]


def test_crlf_blank_lines_case_and_spaces():
    recs = parse(b"\r\n>chr1 desc\r\nac gt\r\n\r\n\tnn\r\n")
    assert recs == [FastaRecord(b"chr1 desc", b"ACGTNN")]


def test_text_stream():
    assert read_fasta(io.StringIO(">x\nAC\n"))[0].sequence == b"AC"


def test_empty_header_kept():
    assert parse(b">\nA\n")[0].header == b""


def test_missing_header():
    with pytest.raises(FastaFormatError, match="line 1"):
        parse(b"ACGT\n")


def test_empty_sequence_names_header():
    with pytest.raises(FastaFormatError, match="empty"):
        parse(b">a\n>b\nAC\n")


def test_reverse_complement():
    assert reverse_complement(b"GATTACA") == b"TGTAATC"
    assert reverse_complement(b"A") == b"T"
    assert reverse_complement(b"NN") == b"NN"
    assert reverse_complement(reverse_complement(b"ACGTTGCA")) == b"ACGTTGCA"


def test_strands():
    rec = FastaRecord(b"s", b"AAC")
    assert strands(rec, StrandMode.FORWARD) == [("forward", b"AAC")]
    assert strands(rec, StrandMode.BOTH)[1] == ("rc", b"GTT")


def test_words_section_sorted():
    rec = FastaRecord(b"s", b"AABABABB")
    out = format_section(rec, "forward", compute_maws(rec.sequence))
    assert out == b">s\nAAA\nAABABB\nAABB\nBAA\nBABABA\nBBA\nBBB\n"


def test_tuples_section():
    rec = FastaRecord(b"s", b"AABABABB")
    lines = format_section(rec, "forward", compute_maws(rec.sequence), "tuples").splitlines()
    assert lines[0] == b">s"
    assert b"A\t0\t1" in lines
    assert len(lines) == 8


def test_empty_range_section():
    rec = FastaRecord(b"s", b"AABABABB")
    assert format_section(rec, "rc", compute_maws(rec.sequence, 9)) == b">s |rc\n"


def test_write_report_roundtrip():
    recs = parse(b">a\nACGTTA\n>b\nGGGA\n")
    buf = io.BytesIO()
    write_report([(r, "forward", compute_maws(r.sequence)) for r in recs], "words", buf)
    text = buf.getvalue().decode()
    assert text.startswith(">a\n") and "\n>b\n" in text
    body = text.split("\n>b\n")[1].splitlines()
    assert body == sorted(set(body))


def test_unknown_format():
    rec = FastaRecord(b"s", b"AB")
    with pytest.raises(ValueError):
        format_section(rec, "forward", compute_maws(b"AB"), "json")
