"""Synthetic inputs, timing and memory measurements for :func:`compute_maws`."""

from __future__ import annotations

import gc
import json
import math
import os
import subprocess
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from ._accel import BACKEND
from .maw import compute_maws

RNG_ALGORITHM = "numpy.random.PCG64"
DNA = b"ACGT"
MAX_DOUBLING_RATIO = 2.5
MEMORY_BUDGET = 30  # bytes of scratch per input letter


@dataclass(frozen=True)
class MutationSpec:
    rate: float
    seed: int
    alphabet: bytes = DNA

    def __post_init__(self):
        if not 0.0 <= self.rate <= 1.0:
            raise ValueError(f"mutation rate must lie in [0, 1], got {self.rate}")
        if not self.alphabet:
            raise ValueError("mutation alphabet is empty")


def mutation_positions(n: int, spec: MutationSpec) -> np.ndarray:
    """The ``round(rate * n)`` distinct positions ``mutate`` rewrites, ascending."""
    rng = np.random.default_rng(spec.seed)
    k = int(round(spec.rate * n))
    return np.sort(rng.choice(n, size=k, replace=False))


def mutate(sequence: bytes, spec: MutationSpec) -> bytes:
    """Overwrite ``round(rate * n)`` distinct random positions with random letters.

    A replacement letter may equal the one it overwrites, so the number of
    changed positions is at most ``round(rate * n)``.
    """
    n = len(sequence)
    rng = np.random.default_rng(spec.seed)
    k = int(round(spec.rate * n))
    positions = rng.choice(n, size=k, replace=False)
    letters = np.frombuffer(spec.alphabet, dtype=np.uint8)
    out = np.frombuffer(sequence, dtype=np.uint8).copy()
    out[positions] = letters[rng.integers(0, letters.size, size=k)]
    return out.tobytes()


def random_dna(n: int, seed: int) -> bytes:
    rng = np.random.default_rng(seed)
    codes = rng.integers(0, 4, size=n, dtype=np.uint8)
    return np.frombuffer(DNA, dtype=np.uint8)[codes].tobytes()


@dataclass
class BenchResult:
    n: int
    seconds: float
    maw_count: int
    peak_bytes: int | None = None
    rng: str = RNG_ALGORITHM
    backend: str = BACKEND

    @property
    def bytes_per_char(self) -> float | None:
        if self.peak_bytes is None:
            return None
        return self.peak_bytes / self.n


@dataclass
class ScalingOutcome:
    results: list[BenchResult]
    ratios: list[float] = field(default_factory=list)
    max_ratio: float = MAX_DOUBLING_RATIO

    @property
    def passed(self) -> bool:
        return all(r <= self.max_ratio for r in self.ratios)


def pin_to_one_cpu() -> None:
    if hasattr(os, "sched_setaffinity"):
        try:
            os.sched_setaffinity(0, {min(os.sched_getaffinity(0))})
        except OSError:
            pass


def warm_up() -> None:
    compute_maws(b"ACGTTGCAAC" * 8)


def time_once(seq: bytes, trials: int = 3) -> tuple[float, int]:
    """Best wall time of ``trials`` runs, and the MAW count."""
    best = math.inf
    count = 0
    for _ in range(trials):
        gc.collect()
        t0 = time.perf_counter()
        report = compute_maws(seq)
        best = min(best, time.perf_counter() - t0)
        count = len(report)
        del report
    return best, count


def doubling_ratio(n0: int, t0: float, n1: int, t1: float) -> float:
    """Time ratio rescaled to a doubling of the input size."""
    return (t1 / t0) ** (math.log(2) / math.log(n1 / n0))


def scaling_run(sizes, trials: int = 3, seed: int = 0, memory: bool = False,
                max_ratio: float = MAX_DOUBLING_RATIO) -> ScalingOutcome:
    """Time :func:`compute_maws` on random DNA of each size.

    Passes when every consecutive time ratio, normalised to a doubling of
    ``n``, is at most ``max_ratio``.
    """
    sizes = list(sizes)
    if not sizes:
        raise ValueError("no sizes given")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ValueError(f"sizes must be strictly ascending: {sizes}")
    pin_to_one_cpu()
    warm_up()
    outcome = ScalingOutcome(results=[], max_ratio=max_ratio)
    for n in sizes:
        seq = random_dna(n, seed + n)
        seconds, count = time_once(seq, trials)
        del seq
        peak = measure_peak_scratch(n, seed + n)["scratch_bytes"] if memory else None
        outcome.results.append(BenchResult(n=n, seconds=seconds, maw_count=count, peak_bytes=peak))
    res = outcome.results
    outcome.ratios = [
        doubling_ratio(a.n, a.seconds, b.n, b.seconds) for a, b in zip(res, res[1:])
    ]
    return outcome


def format_table(outcome: ScalingOutcome) -> str:
    lines = [f"{'n':>12} {'seconds':>10} {'bytes/char':>11} {'ratio':>7} {'maws':>12}"]
    for k, r in enumerate(outcome.results):
        bpc = "-" if r.bytes_per_char is None else f"{r.bytes_per_char:.2f}"
        ratio = "-" if k == 0 else f"{outcome.ratios[k - 1]:.2f}"
        lines.append(f"{r.n:>12} {r.seconds:>10.3f} {bpc:>11} {ratio:>7} {r.maw_count:>12}")
    verdict = "PASS" if outcome.passed else "FAIL"
    lines.append(f"linear scaling (every doubling ratio <= {outcome.max_ratio}): {verdict}")
    lines.append(f"backend={BACKEND} rng={RNG_ALGORITHM}")
    return "\n".join(lines)


# -- memory probe --------------------------------------------------------------


def _current_rss() -> int:
    with open("/proc/self/statm") as fh:
        return int(fh.read().split()[1]) * os.sysconf("SC_PAGE_SIZE")


def _peak_rss() -> int:
    import resource

    peak = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    return peak if sys.platform == "darwin" else peak * 1024


def _probe(n: int, seed: int) -> dict:
    warm_up()
    seq = random_dna(n, seed)
    gc.collect()
    base = _current_rss()
    t0 = time.perf_counter()
    report = compute_maws(seq)
    seconds = time.perf_counter() - t0
    return {
        "n": n,
        "seconds": seconds,
        "maw_count": len(report),
        "report_bytes": int(report.letters.nbytes + report.starts.nbytes + report.depths.nbytes),
        # statm and ru_maxrss disagree by a few pages; tiny inputs can read negative
        "scratch_bytes": max(0, _peak_rss() - base),
    }


def measure_peak_scratch(n: int, seed: int = 0) -> dict:
    """Peak resident memory added by one ``compute_maws`` call on random DNA.

    Runs in a fresh interpreter so earlier allocations cannot hide the peak.
    The figure includes the returned report (Linux only: uses ``/proc``).
    """
    proc = subprocess.run(
        [sys.executable, "-m", "mawsa.bench", "probe", str(n), str(seed)],
        capture_output=True, text=True, check=True,
    )
    return json.loads(proc.stdout.strip().splitlines()[-1])


if __name__ == "__main__":
    if len(sys.argv) == 4 and sys.argv[1] == "probe":
        print(json.dumps(_probe(int(sys.argv[2]), int(sys.argv[3]))))
    else:
        sys.exit("usage: python -m mawsa.bench probe N SEED")
