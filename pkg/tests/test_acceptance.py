"""Acceptance criteria, one PASS/FAIL line each (repeated in the session summary).

The scaling and 50 Mbp memory checks take about a minute together.  The
genome check needs the two bacterial FASTA files in ``$MAWSA_GENOME_DIR``.
"""

import os
import statistics
import time
from pathlib import Path

import numpy as np
import pytest

from conftest import random_text
from properties import completeness_violations, soundness_violations
from mawsa.alphabet import encode_sequence
from mawsa.bench import MAX_DOUBLING_RATIO, MEMORY_BUDGET, measure_peak_scratch, scaling_run
from mawsa.fasta import read_fasta
from mawsa.maw import bottom_up_pass, compute_maws, top_down_pass
from mawsa.oracle import naive_maws
from mawsa.suffix import build_suffix_index
from test_maw import BOTTOM_UP, SEVEN, TOP_DOWN, TUPLES

pytestmark = pytest.mark.acceptance

GENOMES = {
    # accession: counts of MAWs of length 11, 14, 17, 24 on the forward strand
    "NC_000913": (1_072_074, 1_125_653, 36_395, 247),
    "NC_000908": (246_342, 66_324, 2_737, 28),
}


def verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def test_golden_example(criterion):
    compute_maws(b"AABABABB")  # compile and warm caches
    times = []
    for _ in range(50):
        t0 = time.perf_counter()
        report = compute_maws(b"AABABABB")
        times.append(time.perf_counter() - t0)
    ms = statistics.median(times) * 1e3
    ok = report.word_set() == SEVEN and [tuple(t) for t in report] == TUPLES and ms < 1.0
    criterion("golden example", verdict(ok), f"7 words, expected tuples, median {ms:.3f} ms (< 1 ms)")
    assert ok


def test_intermediate_tables(criterion):
    text = encode_sequence(b"AABABABB")
    index = build_suffix_index(text)
    arrays = top_down_pass(text, index)
    td = arrays.bitstrings()[:15]
    bu = bottom_up_pass(text, index, arrays).bitstrings()[:15]
    bad = sum(a != b for a, b in zip(td + bu, TOP_DOWN + BOTTOM_UP))
    criterion("intermediate tables", verdict(bad == 0), f"{bad} of 30 rows differ after top-down/bottom-up")
    assert bad == 0


def test_suffix_structures(criterion):
    index = build_suffix_index(encode_sequence(b"AABABABB"))
    ok = index.sa.tolist() == [0, 1, 3, 5, 7, 2, 4, 6] and index.lcp.tolist() == [0, 1, 4, 2, 0, 1, 3, 1]
    criterion("suffix structures", verdict(ok), f"SA={index.sa.tolist()} LCP={index.lcp.tolist()}")
    assert ok


def test_oracle_equivalence(criterion):
    rng = np.random.default_rng(1000)
    t0 = time.perf_counter()
    mismatches = []
    cases = 0
    for sigma in (1, 2, 4, 8):
        for _ in range(300):
            raw = random_text(rng, int(rng.integers(1, 201)), sigma)
            if compute_maws(raw).word_set() != naive_maws(raw):
                mismatches.append(raw)
            cases += 1
    seconds = time.perf_counter() - t0
    ok = not mismatches and seconds < 120
    criterion("oracle equivalence", verdict(ok), f"{cases} cases, {len(mismatches)} mismatches, {seconds:.1f} s (< 120 s)")
    assert ok, mismatches[:3]


def test_lemma_suites(criterion):
    rng = np.random.default_rng(200)
    unsound = incomplete = 0
    for k in range(200):
        raw = random_text(rng, int(rng.integers(1, 201)), (1, 2, 4, 8)[k % 4])
        unsound += len(soundness_violations(raw))
        incomplete += len(completeness_violations(raw))
    ok = unsound == 0 and incomplete == 0
    criterion("lemma suites", verdict(ok), f"200 texts, {unsound} unsound tuples, {incomplete} MAWs outside rows")
    assert ok


def test_linear_scaling(criterion):
    t0 = time.perf_counter()
    outcome = scaling_run([1_000_000, 2_000_000, 4_000_000, 8_000_000], trials=3)
    total = time.perf_counter() - t0
    ratios = ", ".join(f"{r:.2f}" for r in outcome.ratios)
    ok = outcome.passed and len(outcome.ratios) == 3 and total < 300
    criterion("linear scaling", verdict(ok),
              f"doubling ratios {ratios} (each <= {MAX_DOUBLING_RATIO}), bench {total:.0f} s (< 300 s)")
    assert ok


def test_memory_budget(criterion):
    n = 50_000_000
    probe = measure_peak_scratch(n, seed=1)
    per_char = probe["scratch_bytes"] / n
    ok = per_char <= MEMORY_BUDGET
    criterion("memory budget", verdict(ok),
              f"{per_char:.2f} bytes/char peak at n=50M incl. report (<= {MEMORY_BUDGET}), "
              f"{probe['maw_count']} MAWs in {probe['seconds']:.1f} s")
    assert ok


def _genome_file(root: Path, accession: str):
    for path in sorted(root.glob(f"{accession}*")):
        if path.suffix.lower() in (".fa", ".fasta", ".fna"):
            return path
    return None


def test_genome_reproduction(criterion):
    root = os.environ.get("MAWSA_GENOME_DIR")
    files = {acc: _genome_file(Path(root), acc) for acc in GENOMES} if root else {}
    if not files or None in files.values():
        criterion("genome reproduction", "SKIP", "optional; set MAWSA_GENOME_DIR to a directory with NC_000913/NC_000908 FASTA")
        pytest.skip("genome FASTA files not available")
    details = []
    ok = True
    for acc, expected in GENOMES.items():
        with open(files[acc], "rb") as fh:
            seq = read_fasta(fh)[0].sequence
        lengths = compute_maws(seq).lengths()
        got = tuple(int(np.count_nonzero(lengths == m)) for m in (11, 14, 17, 24))
        ok &= got == expected
        details.append(f"{acc} n={len(seq)} {got}")
    criterion("genome reproduction", verdict(ok), "; ".join(details))
    assert ok
