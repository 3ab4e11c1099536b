"""Shared test data: the Cartan type battery and weight enumerations."""

import random
from functools import lru_cache
from itertools import product
from math import lcm

import pytest

from klrdim import CartanData, Weight, builtin_cartan, validate_cartan

RANDOM_SEED = 91101


def random_cartan(rng: random.Random) -> CartanData:
    """A random validated symmetrizable 3x3 GCM with at least one edge.

    Built from a random symmetrizer candidate and a random symmetric form:
    the off-diagonal pairing on edge (i,j) is a multiple of lcm(d_i, d_j),
    which guarantees integer entries and symmetrizability by construction.
    """
    while True:
        d = [rng.choice([1, 2, 3]) for _ in range(3)]
        mat = [[2, 0, 0], [0, 2, 0], [0, 0, 2]]
        any_edge = False
        for i in range(3):
            for j in range(i + 1, 3):
                k = rng.choice([0, 1, 1, 2])
                if k:
                    any_edge = True
                    s = -k * lcm(d[i], d[j])
                    mat[i][j] = s // d[i]
                    mat[j][i] = s // d[j]
        if any_edge:
            return validate_cartan(mat)


@lru_cache(maxsize=1)
def battery_types() -> tuple[CartanData, ...]:
    """The verification battery: five named types plus five seeded random
    3x3 symmetrizable matrices."""
    rng = random.Random(RANDOM_SEED)
    named = tuple(builtin_cartan(x) for x in ("A2", "A3", "C2", "G2", "A1~"))
    return named + tuple(random_cartan(rng) for _ in range(5))


def dominant_weights(n: int, max_level: int):
    """All dominant weights over n nodes with level 0..max_level."""
    for total in range(max_level + 1):
        for head in product(range(total + 1), repeat=n - 1):
            if sum(head) <= total:
                yield Weight(head + (total - sum(head),))


def small_battery() -> list[tuple[CartanData, Weight]]:
    """A quick (type, weight) sample for module-level tests; the acceptance
    suite runs the full battery."""
    out = []
    for c in battery_types()[:5]:
        ws = list(dominant_weights(c.n, 2))
        out.append((c, ws[len(ws) // 2]))
        out.append((c, ws[-1]))
    return out


@pytest.fixture(scope="session")
def battery():
    return battery_types()


# One line per acceptance criterion, echoed in the terminal summary so the
# pass/fail report is visible even under output capture.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
