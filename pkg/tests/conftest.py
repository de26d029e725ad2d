import numpy as np
import pytest

from repvar import GroupDescriptor, random_good_schottky

GRID = [("SL", 2, 2), ("SL", 2, 3), ("SL", 3, 2), ("GL", 2, 2)]


def random_lie(desc, rng):
    c = rng.normal(size=desc.dim_G) + 1j * rng.normal(size=desc.dim_G)
    return desc.from_coords(c)


def random_invertible(desc, rng):
    n = desc.n
    if desc.family.value == "TORUS":
        return np.diag(rng.normal(size=n) + 1j * rng.normal(size=n) + 2.0)
    m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)) + 2 * np.eye(n)
    if desc.is_special:
        m = m / np.linalg.det(m) ** (1 / n)
    return m


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def good_reps():
    """A few good unitary reps per grid cell, strict and not."""
    out = {}
    for fam, n, g in GRID:
        desc = GroupDescriptor(fam, n)
        out[(fam, n, g, True)] = [random_good_schottky(desc, g, True, s) for s in range(3)]
        out[(fam, n, g, False)] = [random_good_schottky(desc, g, False, s) for s in range(3)]
    return out


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
