"""Command line: ``mawsa --input y.fa --output maws.txt`` and ``mawsa bench``.

Exit codes: 0 success, 1 bad arguments, 2 input/output or format error,
3 brute-force verification mismatch (``--verify``).  ``mawsa bench`` exits
0 when the scaling check passes and 1 otherwise.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import bench
from .alphabet import AlphabetError
from .fasta import FastaFormatError, StrandMode, format_section, read_fasta, strands
from .maw import ConfigError, compute_maws
from .oracle import MAX_ORACLE_N, naive_maws

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_VERIFY = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


@dataclass
class CliConfig:
    input: str
    output: str | None = None
    min_len: int = 2
    max_len: int | None = None
    strand: StrandMode = StrandMode.FORWARD
    format: str = "words"
    verify: bool = False
    max_verify_n: int = 300

    def validate(self) -> None:
        if self.min_len < 2:
            raise ConfigError(f"--min-len must be at least 2, got {self.min_len}")
        if self.max_len is not None and self.min_len > self.max_len:
            raise ConfigError(f"--min-len ({self.min_len}) exceeds --max-len ({self.max_len})")
        if self.format not in ("words", "tuples"):
            raise ConfigError(f"unknown --format {self.format!r}")
        if not 1 <= self.max_verify_n <= MAX_ORACLE_N:
            raise ConfigError(f"--max-verify-n must lie in [1, {MAX_ORACLE_N}]")


def _run_parser() -> _Parser:
    p = _Parser(prog="mawsa", description="Minimal absent words of each FASTA record.")
    p.add_argument("-i", "--input", required=True, help="(Multi)FASTA file")
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.add_argument("--min-len", type=int, default=2, help="shortest word to report (default 2)")
    p.add_argument("--max-len", type=int, default=None, help="longest word to report (default n+1)")
    p.add_argument("--both-strands", action="store_true",
                   help="also report the reverse complement, as a separate '|rc' section")
    p.add_argument("--format", choices=("words", "tuples"), default="words")
    p.add_argument("--verify", action="store_true",
                   help="cross-check against brute force for sequences of length <= --max-verify-n")
    p.add_argument("--max-verify-n", type=int, default=300)
    return p


def _bench_parser() -> _Parser:
    p = _Parser(prog="mawsa bench", description="Linear-scaling benchmark on random DNA.")
    p.add_argument("--sizes", type=int, nargs="+", default=[1_000_000, 2_000_000, 4_000_000, 8_000_000])
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--memory", action="store_true", help="also measure peak scratch bytes per letter")
    p.add_argument("--max-ratio", type=float, default=bench.MAX_DOUBLING_RATIO)
    return p


def run(config: CliConfig) -> int:
    config.validate()
    try:
        with open(config.input, "rb") as fh:
            records = read_fasta(fh)
        out = open(config.output, "wb") if config.output else sys.stdout.buffer
    except (OSError, FastaFormatError) as exc:
        print(f"mawsa: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        for record in records:
            for strand, seq in strands(record, config.strand):
                report = compute_maws(seq, config.min_len, config.max_len)
                if config.verify and len(seq) <= config.max_verify_n:
                    expected = naive_maws(seq, config.min_len, config.max_len)
                    got = report.word_set()
                    if got != expected:
                        name = record.header.decode(errors="replace")
                        print(f"mawsa: verification failed for {name!r} ({strand}): "
                              f"{len(got - expected)} unexpected, {len(expected - got)} missing",
                              file=sys.stderr)
                        return EXIT_VERIFY
                out.write(format_section(record, strand, report, config.format))
    except (OSError, AlphabetError) as exc:
        print(f"mawsa: {exc}", file=sys.stderr)
        return EXIT_IO
    finally:
        if config.output:
            out.close()
        else:
            out.flush()
    return EXIT_OK


def run_bench(args: argparse.Namespace) -> int:
    outcome = bench.scaling_run(args.sizes, trials=args.trials, seed=args.seed,
                                memory=args.memory, max_ratio=args.max_ratio)
    print(bench.format_table(outcome))
    return EXIT_OK if outcome.passed else EXIT_USAGE


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        if argv[:1] == ["bench"]:
            args = _bench_parser().parse_args(argv[1:])
            try:
                return run_bench(args)
            except ValueError as exc:
                raise UsageError(f"mawsa bench: {exc}") from exc
        args = _run_parser().parse_args(argv)
        config = CliConfig(
            input=args.input,
            output=args.output,
            min_len=args.min_len,
            max_len=args.max_len,
            strand=StrandMode.BOTH if args.both_strands else StrandMode.FORWARD,
            format=args.format,
            verify=args.verify,
            max_verify_n=args.max_verify_n,
        )
        return run(config)
    except (UsageError, ConfigError) as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
