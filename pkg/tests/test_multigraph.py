"""Graphs, Laplacians, spanning trees, splits, and divisor class groups."""

import random

import pytest

from chipalg.exactla import determinant
from chipalg.multigraph import (
    Multigraph,
    Split,
    acyclic_orientations_unique_sink,
    connected_splits,
    div_class,
    divisor_class_group,
    format_graph,
    laplacian,
    parse_graph,
    splits,
    tree_count,
)
from conftest import c4, k4, prism, random_connected


def test_validation():
    with pytest.raises(ValueError):
        Multigraph.from_edges(2, {})  # disconnected
    with pytest.raises(ValueError):
        Multigraph.from_edges(2, {(1, 1): 1})  # loop
    with pytest.raises(ValueError):
        Multigraph(2, ((0, 1), (2, 0)))  # asymmetric


def test_basic_invariants(k4_graph, c4_graph, prism_graph):
    assert k4_graph.num_edges == 6 and k4_graph.genus == 3
    assert c4_graph.num_edges == 4 and c4_graph.genus == 1
    assert prism_graph.num_edges == 9 and prism_graph.genus == 4
    assert k4_graph.is_saturated()
    assert not c4_graph.is_saturated()


def test_laplacian_rows_sum_to_zero(prism_graph):
    lam = laplacian(prism_graph)
    for i in range(prism_graph.n):
        assert sum(lam.row(i)) == 0
        assert lam.at(i, i) == prism_graph.degree(i + 1)


def test_tree_counts():
    assert tree_count(k4()) == 16
    assert tree_count(c4()) == 4
    assert tree_count(prism()) == 75
    # Cayley's formula on complete graphs
    for n in range(2, 7):
        kn = Multigraph.from_edges(
            n, {(i, j): 1 for i in range(1, n + 1) for j in range(i + 1, n + 1)}
        )
        assert tree_count(kn) == n ** (n - 2)


def test_tree_count_independent_of_deleted_node():
    rng = random.Random(3)
    for _ in range(10):
        g = random_connected(rng, rng.randint(2, 6))
        lam = laplacian(g)
        dets = {
            determinant(lam.delete_row_col(i, i)) for i in range(g.n)
        }
        assert dets == {tree_count(g)}


def test_splits_counts():
    # 2^(n-1) - 1 splits of [n]
    for n in range(2, 6):
        assert len(list(splits(n))) == 2 ** (n - 1) - 1
    assert len(connected_splits(k4())) == 7
    assert len(connected_splits(prism())) == 22


def test_split_validation():
    with pytest.raises(ValueError):
        Split((1, 4), (2, 3))  # n on side I
    with pytest.raises(ValueError):
        Split((1,), (3,))  # does not cover


def test_divisor_class_group_order_is_tree_count():
    rng = random.Random(11)
    for _ in range(15):
        g = random_connected(rng, rng.randint(2, 5), max_mult=3)
        grp = divisor_class_group(g)
        assert grp.order == tree_count(g)
        # class arithmetic is consistent
        a = tuple(rng.randint(-3, 3) for _ in range(g.n))
        b = tuple(rng.randint(-3, 3) for _ in range(g.n))
        ca, cb = grp.class_of(a), grp.class_of(b)
        ab = tuple(x + y for x, y in zip(a, b))
        assert grp.class_add(ca, cb) == grp.class_of(ab)


def test_laplacian_columns_have_trivial_class():
    g = prism()
    grp = divisor_class_group(g)
    lam = laplacian(g)
    zero = grp.class_of((0,) * g.n)
    for j in range(g.n):
        col = tuple(lam.at(i, j) for i in range(g.n))
        assert grp.class_of(col) == zero
    assert div_class(g, (1, 0, 0, 0, 0)) != zero  # x_1 is not a lattice element


def test_acyclic_orientations():
    assert acyclic_orientations_unique_sink(k4(), 4) == 6
    assert acyclic_orientations_unique_sink(c4(), 4) == 3
    assert acyclic_orientations_unique_sink(prism(), 6) == 26


def test_relabel_sink_preserves_invariants(prism_graph):
    for i in range(1, 7):
        h = prism_graph.relabel_sink(i)
        assert h.num_edges == prism_graph.num_edges
        assert tree_count(h) == tree_count(prism_graph)
    assert prism_graph.relabel_sink(6) == prism_graph


def test_parse_format_roundtrip():
    for g in (k4(), c4(), prism()):
        assert parse_graph(format_graph(g)) == g
    with pytest.raises(ValueError):
        parse_graph("edge 1 2 1")
    with pytest.raises(ValueError):
        parse_graph("nodes 3\nedge 1 1 2")
    with pytest.raises(ValueError):
        parse_graph("nodes 3\nedge 1 2 0")
