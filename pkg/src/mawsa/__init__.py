"""Minimal absent words in linear time from a suffix array and its LCP array."""

from ._accel import BACKEND
from .alphabet import (
    Alphabet,
    AlphabetError,
    EncodedText,
    LetterSet,
    build_alphabet,
    decode,
    encode,
    encode_sequence,
)
from .fasta import FastaFormatError, FastaRecord, StrandMode, read_fasta, reverse_complement
from .maw import (
    BeforeArrays,
    ConfigError,
    LcpStack,
    MawReport,
    MawTuple,
    StackOrderError,
    bottom_up_pass,
    compute_maws,
    extract_maws,
    top_down_pass,
)
from .oracle import naive_lcp, naive_maws, naive_suffix_array
from .suffix import SuffixIndex, build_inverse, build_lcp, build_suffix_array, build_suffix_index

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Alphabet",
    "AlphabetError",
    "BeforeArrays",
    "ConfigError",
    "EncodedText",
    "FastaFormatError",
    "FastaRecord",
    "LcpStack",
    "LetterSet",
    "MawReport",
    "MawTuple",
    "StackOrderError",
    "StrandMode",
    "SuffixIndex",
    "bottom_up_pass",
    "build_alphabet",
    "build_inverse",
    "build_lcp",
    "build_suffix_array",
    "build_suffix_index",
    "compute_maws",
    "decode",
    "encode",
    "encode_sequence",
    "extract_maws",
    "naive_lcp",
    "naive_maws",
    "naive_suffix_array",
    "read_fasta",
    "reverse_complement",
    "top_down_pass",
]
