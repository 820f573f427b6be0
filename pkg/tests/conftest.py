import numpy as np
import pytest

from graphicseq import DegreeSequence, from_unsorted


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def seq(*values):
    return DegreeSequence(values)


def random_sequence(rng, n, high):
    return from_unsorted(rng.integers(0, high + 1, size=n))


# criterion id -> (passed, detail); filled by tests/test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key}: {detail}")
