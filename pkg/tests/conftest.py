"""Shared fixtures: small named graphs used across the suite."""

from __future__ import annotations

import pytest

from glpart import Graph


@pytest.fixture
def c4() -> Graph:
    return Graph.cycle(4)


@pytest.fixture
def c5() -> Graph:
    return Graph.cycle(5)


@pytest.fixture
def house() -> Graph:
    # body 0-1-2-3, roof 4 over the adjacent pair (2, 3)
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)])


@pytest.fixture
def domino() -> Graph:
    # two induced C4 glued along the edge (1, 2)
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 2)])


@pytest.fixture
def double_house() -> Graph:
    # two C4 sharing vertex 0, plus the edge (1, 4) between its neighbors
    return Graph.from_edges(
        7,
        [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0), (1, 4)],
    )


@pytest.fixture
def w4() -> Graph:
    # rim 0-1-2-3, hub 4
    return Graph.from_edges(
        5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)]
    )


@pytest.fixture
def w5() -> Graph:
    # rim 0-4, hub 5
    rim = [(i, (i + 1) % 5) for i in range(5)]
    return Graph.from_edges(6, rim + [(5, i) for i in range(5)])


@pytest.fixture
def k4() -> Graph:
    return Graph.complete(4)


@pytest.fixture
def k5() -> Graph:
    return Graph.complete(5)


@pytest.fixture
def p4() -> Graph:
    return Graph.path(4)


@pytest.fixture
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
