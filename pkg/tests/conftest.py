from __future__ import annotations

import random

import pytest

from squco import Graph, make_graph, named

from oracles import LabeledClasses


def cycle(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    return make_graph(n, [(0, i) for i in range(1, n)])


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return make_graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    # random spanning tree plus extra edges
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        edges.add((min(order[i], rng.choice(order[:i])),
                   max(order[i], rng.choice(order[:i]))))
    edges = {e for e in edges if e[0] != e[1]}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.add((i, j))
    g = make_graph(n, list(edges))
    from squco import is_connected
    assert is_connected(g)
    return g


@pytest.fixture(scope="session")
def corpus() -> list[Graph]:
    """Assorted small graphs (order <= 8): named, structured, and random."""
    rng = random.Random(20240901)
    graphs = [
        make_graph(0, []),
        make_graph(1, []),
        make_graph(2, []),
        make_graph(2, [(0, 1)]),
        path(3), path(4), path(7),
        cycle(3), cycle(4), cycle(5), cycle(6), cycle(7), cycle(8),
        complete(4), complete(5),
        star(4), star(6),
        make_graph(6, [(0, 1), (2, 3), (4, 5)]),
        make_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)]),
        named("c7"),
    ]
    for n in range(3, 9):
        for p in (0.2, 0.5, 0.8):
            for _ in range(4):
                graphs.append(random_graph(rng, n, p))
    return graphs


@pytest.fixture(scope="session")
def labeled_classes() -> dict[int, LabeledClasses]:
    """Brute-force isomorphism classes of all graphs on 1..6 vertices."""
    return {n: LabeledClasses(n) for n in range(1, 7)}
