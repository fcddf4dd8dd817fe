import numpy as np
import pytest

ACCEPTANCE_LINES: list[str] = []

SEED = 20240607


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section(f"acceptance criteria (seed {SEED})")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
