import random

import pytest

from spectral_extrema.graph import Graph
from spectral_extrema.selftest import random_graph


def random_connected(rng: random.Random, n: int, p: float) -> Graph:
    """Random spanning tree plus independent extra edges."""
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    edges |= {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    return Graph.from_edges(n, edges)


@pytest.fixture
def rng():
    return random.Random(0)


__all__ = ["random_graph", "random_connected"]


_CRITERIA: dict[int, str] = {}


@pytest.fixture
def criterion(request):
    """Call with (number, ok, detail); prints and keeps one line per criterion."""
    def report(number: int, ok: bool, detail: str = "") -> bool:
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip()
        _CRITERIA[number] = line
        print(line)
        return ok
    return report


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[n])
