from __future__ import annotations

import pytest

from linkscope.graph import Graph


def k_n(n: int, start: int = 1) -> Graph:
    nodes = list(range(start, start + n))
    return Graph(nodes, [(u, v) for i, u in enumerate(nodes) for v in nodes[i + 1 :]])


def c_n(n: int) -> Graph:
    return Graph(edges=[(i, i % n + 1) for i in range(1, n + 1)])


def path_n(n: int) -> Graph:
    return Graph(edges=[(i, i + 1) for i in range(1, n)])


@pytest.fixture
def k4() -> Graph:
    return k_n(4)


@pytest.fixture
def c4() -> Graph:
    return c_n(4)


@pytest.fixture
def triangle() -> Graph:
    return k_n(3)


@pytest.fixture
def bowtie() -> Graph:
    # two triangles sharing node 5
    return Graph(edges=[(1, 2), (1, 5), (2, 5), (3, 4), (3, 5), (4, 5)])
