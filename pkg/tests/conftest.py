import numpy as np
import pytest

from codeideal import GF, LinearCode, RankDeficient
from codeideal.golden import f7_code, f9_code, ternary_6_3, ternary_7_2_5


@pytest.fixture(scope="session")
def c7():
    return f7_code()


@pytest.fixture(scope="session")
def c63():
    return ternary_6_3()


@pytest.fixture(scope="session")
def c9():
    return f9_code()


@pytest.fixture(scope="session")
def c725():
    return ternary_7_2_5()


def random_code(rng, p, n, k, systematic=False):
    """A random full-rank ``[n, k]`` code over F_p (retries until rank k)."""
    F = GF(p)
    while True:
        G = rng.integers(0, p, size=(k, n))
        if systematic:
            G[:, :k] = np.eye(k, dtype=np.int64)
        try:
            return LinearCode(F, G)
        except RankDeficient:
            continue


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion that ran."""
    import sys

    mod = next((m for name, m in list(sys.modules.items())
                if name.endswith("test_acceptance") and hasattr(m, "report_lines")), None)
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
