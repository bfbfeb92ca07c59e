import numpy as np
import pytest

LETTERS = b"ACGTNRYK"

_ACCEPTANCE: list[str] = []


def random_text(rng: np.random.Generator, n: int, sigma: int) -> bytes:
    pool = np.frombuffer(LETTERS[:sigma], dtype=np.uint8)
    return pool[rng.integers(0, sigma, size=n)].tobytes()


@pytest.fixture
def rng():
    return np.random.default_rng(20160518)


@pytest.fixture
def criterion():
    """Record one acceptance line; the lines are repeated in the session summary."""

    def record(name: str, status: str, detail: str) -> None:
        line = f"{status:4}  {name}: {detail}"
        _ACCEPTANCE.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
