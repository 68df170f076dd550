import random
from itertools import combinations

import pytest

from indideal.graph import Graph


def brute_independent_sets(g: Graph):
    """All independent sets as sorted vertex tuples, by testing every subset against the edge list."""
    edges = set(g.edges())
    out = []
    for k in range(g.n + 1):
        for sub in combinations(range(1, g.n + 1), k):
            if not any(p in edges for p in combinations(sub, 2)):
                out.append(sub)
    return out


def brute_coefficients(g: Graph):
    counts = {}
    for s in brute_independent_sets(g):
        counts[len(s)] = counts.get(len(s), 0) + 1
    return [counts[k] for k in range(max(counts) + 1)]


def random_graphs(count, n_range, seed):
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(*n_range)
        p = rng.random()
        graphs.append(
            Graph.from_edges(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < p])
        )
    return graphs


@pytest.fixture
def rng():
    return random.Random(20261016)


_acceptance_lines = []


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    props = dict(report.user_properties)
    if "criterion" in props:
        status = "PASS" if report.passed else "FAIL"
        _acceptance_lines.append(f"{status}  {props['criterion']}  ({report.duration:.2f}s)")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
