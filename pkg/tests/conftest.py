import numpy as np
import pytest

from qwalk import assign_uniform, build_unitary, hadamard_biased, make_line


def line_unitary(n, delta=0.5):
    g = make_line(n)
    return g, build_unitary(g, assign_uniform(g, hadamard_biased(delta)))


@pytest.fixture
def rng():
    return np.random.default_rng(20111)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record a one-line PASS/FAIL verdict for an acceptance criterion."""

    def record(label, ok, detail=""):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
