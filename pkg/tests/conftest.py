import numpy as np
import pytest

from maxcone import _backend

# 4x5 example matrix; its basis is columns 1, 4, 5 (1-based)
PAPER_A = np.array(
    [
        [1, 9, 10, 5, 9],
        [2, 10, 10, 0, 10],
        [3, 15, 14, 7, 0],
        [4, 20, 16, 8, 12],
    ],
    dtype=float,
)
PAPER_BASIS = np.array([[1, 5, 9], [2, 0, 10], [3, 7, 0], [4, 8, 12]], dtype=float)


@pytest.fixture
def A():
    return PAPER_A.copy()


@pytest.fixture(params=sorted(_backend.BACKENDS))
def backend(request):
    return request.param


def ex1_prefix(m):
    """Columns (1, 1/r) for r = 1..m."""
    return np.array([[1.0] * m, [1.0 / r for r in range(1, m + 1)]])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
