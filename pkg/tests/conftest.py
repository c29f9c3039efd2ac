from pathlib import Path

import pytest

from karmarkar import KarmarkarProblem, certify_zero_optimum, make_zero_optimum_instance

DATA = Path(__file__).parent / "data"


def instance_shape(seed):
    """Deterministic (n, m) with 3 <= n <= 8, 0 <= m <= min(3, n - 2)."""
    n = 3 + seed % 6
    m = (seed // 6) % (min(3, n - 2) + 1)
    return n, m


def certified_instances(count=50):
    """Seeded zero-optimum instances, each re-certified by vertex enumeration."""
    out = []
    for seed in range(count):
        n, m = instance_shape(seed)
        problem = make_zero_optimum_instance(seed, n, m)
        assert certify_zero_optimum(problem), f"seed {seed} failed certification"
        out.append(problem)
    return out


@pytest.fixture(scope="session")
def certified():
    return certified_instances()


@pytest.fixture
def example3():
    return KarmarkarProblem([[1.0, 1.0, -2.0]], [1.0, 0.0, 0.0])


@pytest.fixture
def data_dir():
    return DATA


_acceptance_lines = []


def record_acceptance(line):
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def acceptance():
    return record_acceptance
