import numpy as np
import pytest

from mawsa.bench import (
    RNG_ALGORITHM,
    BenchResult,
    MutationSpec,
    doubling_ratio,
    format_table,
    measure_peak_scratch,
    mutate,
    mutation_positions,
    random_dna,
    scaling_run,
)

SEQ = random_dna(64, seed=3)


def test_zero_rate_is_identity():
    assert mutate(SEQ, MutationSpec(0.0, seed=1)) == SEQ


def test_full_rate_single_letter():
    assert mutate(SEQ, MutationSpec(1.0, seed=1, alphabet=b"A")) == b"A" * 64


def test_half_rate_positions_reproducible():
    spec = MutationSpec(0.5, seed=11)
    pos = mutation_positions(8, spec)
    assert pos.size == 4 and len(set(pos.tolist())) == 4
    np.testing.assert_array_equal(pos, mutation_positions(8, spec))
    seq = b"ACGTACGT"
    out = mutate(seq, spec)
    changed = {i for i in range(8) if out[i] != seq[i]}
    assert changed <= set(pos.tolist())
    assert mutate(seq, spec) == out


def test_mutation_distance_at_most_rate():
    for seed in range(20):
        out = mutate(SEQ, MutationSpec(0.3, seed))
        assert sum(a != b for a, b in zip(out, SEQ)) <= round(0.3 * 64)


@pytest.mark.parametrize("rate", [-0.1, 1.5])
def test_bad_rate(rate):
    with pytest.raises(ValueError):
        MutationSpec(rate, seed=0)


def test_random_dna():
    seq = random_dna(1000, seed=5)
    assert len(seq) == 1000 and set(seq) <= set(b"ACGT")
    assert seq == random_dna(1000, seed=5)


def test_doubling_ratio_normalises():
    assert doubling_ratio(1, 1.0, 2, 2.0) == pytest.approx(2.0)
    assert doubling_ratio(1, 1.0, 4, 4.0) == pytest.approx(2.0)


def test_single_size_vacuous_pass():
    outcome = scaling_run([10], trials=1)
    assert len(outcome.results) == 1 and outcome.ratios == [] and outcome.passed
    assert outcome.results[0].rng == RNG_ALGORITHM


def test_unsorted_sizes():
    with pytest.raises(ValueError):
        scaling_run([2000, 1000])


def test_small_scaling_table():
    outcome = scaling_run([2000, 4000, 8000], trials=1)
    assert len(outcome.ratios) == 2
    table = format_table(outcome)
    assert table.splitlines()[0].split() == ["n", "seconds", "bytes/char", "ratio", "maws"]
    for r in outcome.results:
        assert r.seconds >= 0 and r.maw_count > 0


def test_bytes_per_char():
    assert BenchResult(10, 1.0, 3, peak_bytes=250).bytes_per_char == 25.0
    assert BenchResult(10, 1.0, 3).bytes_per_char is None


def test_memory_probe_small():
    probe = measure_peak_scratch(200_000, seed=1)
    assert probe["n"] == 200_000 and probe["maw_count"] > 0
    assert probe["scratch_bytes"] >= probe["report_bytes"] // 2
