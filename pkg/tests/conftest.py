import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from posmap_ineq.checkers import Instance, PolyaBand
from posmap_ineq.maps import NormalizedTrace

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])


# The two worked examples, built straight from their literal data.
EX1_A = np.array([[2.0, -2.0], [-2.0, 7.0]])
EX1_B = np.array([[21.0, 0.5], [0.5, 21.0]])
EX1_BAND = (1.21, 16.0, 20.25, 25.0)
EX2_A = np.array([[6.0, -1.0], [-1.0, 5.0]])
EX2_B = np.array([[1.5, 0.5], [0.5, 1.2]])
EX2_BAND = (4.0, 9.0, 0.5, 2.0)


def example_inst(A, B, band, refined=True):
    return Instance(A, B, NormalizedTrace(2, 0.5), 0.5, 2.0, PolyaBand(*band), 0,
                    {"refined": refined})


@pytest.fixture
def ex1():
    return example_inst(EX1_A, EX1_B, EX1_BAND)


@pytest.fixture
def ex2():
    return example_inst(EX2_A, EX2_B, EX2_BAND)


def random_spd(rng, n, lo=0.1, hi=10.0):
    q, _ = np.linalg.qr(rng.standard_normal((n, n)))
    lam = rng.uniform(lo, hi, size=n)
    x = (q * lam) @ q.T
    return 0.5 * (x + x.T)
