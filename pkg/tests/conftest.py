"""Shared builders and independent oracles for the test suite."""

from __future__ import annotations

import pytest

from intervalcubes import (
    GenConfig,
    Graph,
    make_model,
    model_to_clique_ordering,
    model_to_graph,
    random_interval_model,
)
from intervalcubes.generate import DISTRIBUTIONS


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(m: int) -> Graph:
    """Center 0, leaves 1..m."""
    return Graph(m + 1, [(0, i) for i in range(1, m + 1)])


def star_model(m: int):
    """Center spanning everything, leaves in left-to-right order; cliques
    come out in leaf order."""
    pairs = [(0, m)] + [(i, f"{2 * i + 1}/2") for i in range(m)]
    return make_model(pairs)


def net_graph() -> Graph:
    """Triangle with a pendant on each corner: chordal but not interval."""
    return Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def p3_model():
    """Center [0,2] with leaf intervals hanging off both ends."""
    return make_model([(0, 2), (0, "1/2"), ("3/2", 2)])


def bron_kerbosch(graph: Graph) -> set[frozenset[int]]:
    """Independent maximal-clique oracle."""
    cliques: set[frozenset[int]] = set()

    def expand(r: set[int], p: set[int], x: set[int]):
        if not p and not x:
            cliques.add(frozenset(r))
            return
        pivot_pool = p | x
        pivot = max(pivot_pool, key=lambda v: len(graph.adj[v] & p))
        for v in sorted(p - graph.adj[pivot]):
            expand(r | {v}, p & graph.adj[v], x & graph.adj[v])
            p = p - {v}
            x = x | {v}

    if graph.n:
        expand(set(), set(range(graph.n)), set())
    return cliques


def literal_labelling(ordering, graph):
    """The label-and-subtract loop, word for word, as a test oracle."""
    remaining = set(range(graph.n))
    levels = {}
    anchors = []
    level = 0
    while remaining:
        anchor = min(remaining, key=lambda v: (ordering.right[v], v))
        group = {anchor} | {v for v in remaining if graph.has_edge(anchor, v)}
        for v in group:
            levels[v] = level
        anchors.append(anchor)
        remaining -= group
        level += 1
    return tuple(levels[v] for v in range(graph.n)), tuple(anchors)


def random_models(count: int, n_range, seed: int = 0):
    """A deterministic spread of models across sizes and distributions."""
    sizes = list(n_range)
    out = []
    for i in range(count):
        cfg = GenConfig(
            n=sizes[i % len(sizes)],
            seed=seed * 100_000 + i,
            dist=DISTRIBUTIONS[i % len(DISTRIBUTIONS)],
        )
        out.append(random_interval_model(cfg))
    return out


def model_pipeline(model):
    graph = model_to_graph(model)
    ordering = model_to_clique_ordering(model)
    return graph, ordering


@pytest.fixture
def p3():
    return path_graph(3)
