import random
import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from misx.generators import enumerate_labeled_graphs  # noqa: E402
from misx.graph import from_edge_list, parse_edge_list_text  # noqa: E402

DATA = Path(__file__).parent / "data"
FIGURE1_EDGES = [(0, 2), (1, 2), (0, 3), (1, 3), (3, 4), (3, 5), (2, 6), (2, 7)]


def to_paper_labels(sets):
    return sorted(tuple(sorted(v + 1 for v in s)) for s in sets)


@lru_cache(maxsize=None)
def catalog(n):
    return tuple(enumerate_labeled_graphs(n))


def catalog_upto(n):
    for k in range(n + 1):
        yield from catalog(k)


def gnp(n, p, rng):
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_graphs(count, n_range, densities=(0.2, 0.5, 0.8), seed=0):
    rng = random.Random(seed)
    for i in range(count):
        n = rng.choice(list(n_range))
        yield gnp(n, densities[i % len(densities)], rng)


@pytest.fixture(scope="session")
def fig1():
    g, _ = parse_edge_list_text((DATA / "figure1.txt").read_text())
    assert g == from_edge_list(8, FIGURE1_EDGES)
    return g


@pytest.fixture(scope="session")
def fig1_path():
    return DATA / "figure1.txt"


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
