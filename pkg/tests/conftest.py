"""Shared fixtures: the named example graphs and random graph generators."""

import random
from pathlib import Path

import pytest

from chipalg.multigraph import Multigraph

DATA = Path(__file__).parent / "data"


def k4() -> Multigraph:
    """Complete graph on 4 nodes."""
    return Multigraph.from_edges(
        4, {(i, j): 1 for i in range(1, 5) for j in range(i + 1, 5)}
    )


def c4() -> Multigraph:
    """4-cycle 1-2-3-4-1."""
    return Multigraph.from_edges(4, {(1, 2): 1, (2, 3): 1, (3, 4): 1, (1, 4): 1})


def cycle_family(delta: int, eps: int) -> Multigraph:
    """4-cycle edges with multiplicity delta, diagonals with multiplicity eps."""
    edges = {(1, 2): delta, (2, 3): delta, (3, 4): delta, (1, 4): delta}
    if eps:
        edges[(1, 3)] = eps
        edges[(2, 4)] = eps
    return Multigraph.from_edges(4, edges)


def prism() -> Multigraph:
    """Triangular prism: two triangles 123, 456 joined by a perfect matching."""
    return Multigraph.from_edges(
        6,
        {(1, 2): 1, (2, 3): 1, (1, 3): 1, (4, 5): 1, (5, 6): 1, (4, 6): 1,
         (1, 4): 1, (2, 5): 1, (3, 6): 1},
    )


def chain_graph() -> Multigraph:
    """4 nodes a,b,c,d with 2 a-b edges, 1 b-c edge, 3 c-d edges."""
    return Multigraph.from_edges(4, {(1, 2): 2, (2, 3): 1, (3, 4): 3})


def random_saturated(rng: random.Random, n: int, max_mult: int = 3) -> Multigraph:
    return Multigraph.from_edges(
        n,
        {
            (i, j): rng.randint(1, max_mult)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
        },
    )


def random_connected(rng: random.Random, n: int, max_mult: int = 2) -> Multigraph:
    """Random connected multigraph: a random spanning tree plus random edges."""
    edges = {}
    nodes = list(range(1, n + 1))
    rng.shuffle(nodes)
    for a, b in zip(nodes, nodes[1:]):
        i, j = min(a, b), max(a, b)
        edges[(i, j)] = rng.randint(1, max_mult)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) not in edges and rng.random() < 0.5:
                edges[(i, j)] = rng.randint(1, max_mult)
    return Multigraph.from_edges(n, edges)


def all_connected_graphs(n: int, max_mult: int):
    """Every connected multigraph on n labeled nodes with bounded multiplicities."""
    from itertools import product

    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for mults in product(range(max_mult + 1), repeat=len(pairs)):
        edges = {p: m for p, m in zip(pairs, mults) if m}
        if len(edges) < n - 1:
            continue
        try:
            yield Multigraph.from_edges(n, edges)
        except ValueError:  # disconnected
            continue


@pytest.fixture(name="k4_graph")
def _k4_graph():
    return k4()


@pytest.fixture(name="c4_graph")
def _c4_graph():
    return c4()


@pytest.fixture(name="prism_graph")
def _prism_graph():
    return prism()


@pytest.fixture(name="chain")
def _chain():
    return chain_graph()
