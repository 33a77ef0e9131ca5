import random
from itertools import combinations

import pytest

from quasizagreb.graph import Graph, build, is_connected, relabel


def random_graph(rng: random.Random, n: int, density: float = 0.5) -> Graph:
    return build(n, [e for e in combinations(range(n), 2) if rng.random() < density])


def random_connected_graph(rng: random.Random, n: int, density: float = 0.5) -> Graph:
    while True:
        g = random_graph(rng, n, density)
        if is_connected(g):
            return g


def shuffled(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.order))
    rng.shuffle(perm)
    return relabel(g, perm)


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, status, detail in sorted(test_acceptance.RESULTS, key=lambda r: int(r[0].split()[0])):
        terminalreporter.write_line(f"[{status}] {label}" + (f"  ({detail})" if detail else ""))
