import itertools

import pytest

from qwalk.graph import (
    GraphError,
    InvalidSizeError,
    UnbalancedGraphError,
    flat_index,
    graph_from_json,
    is_physical,
    make_custom,
    make_line,
    unflat,
)


def test_line_two():
    assert make_line(2).neighborhoods == ((1, 2), (1, 2))


def test_line_three():
    assert make_line(3).neighborhoods == ((1, 2), (1, 3), (2, 3))


def test_line_interior():
    assert make_line(5).neighbors(3) == (2, 4)


@pytest.mark.parametrize("n", [-1, 0, 1])
def test_line_too_small(n):
    with pytest.raises(InvalidSizeError):
        make_line(n)


def test_custom_complete_two_equals_line():
    assert make_custom([[2, 1], [1, 2]]) == make_line(2)


def test_custom_cycle():
    g = make_custom([[3, 2], [1, 3], [2, 1]])
    assert g.neighborhoods == ((2, 3), (1, 3), (1, 2))


def test_custom_unbalanced():
    # vertex 1 has out-degree 2 but only vertex 2 points at it
    with pytest.raises(UnbalancedGraphError):
        make_custom([[1, 2], [1], [2]])


@pytest.mark.parametrize("bad", [[[1, 4], [1, 2], [2, 3]], [[1, 1], [2]], [[], [1]]])
def test_custom_malformed(bad):
    with pytest.raises(GraphError):
        make_custom(bad)


def test_directed_balanced_cycle_accepted():
    g = make_custom([[2], [3], [1]])
    assert not g.is_undirected()


def test_is_physical_examples():
    g3 = make_line(3)
    assert is_physical(g3, 1, 2)
    assert not is_physical(g3, 1, 3)
    g2 = make_line(2)
    assert all(is_physical(g2, x, c) for x in (1, 2) for c in (1, 2))


def test_is_physical_range():
    with pytest.raises(IndexError):
        is_physical(make_line(3), 4, 1)


@pytest.mark.parametrize("n", range(2, 11))
def test_line_balance_and_physical_count(n):
    g = make_line(n)
    assert all(g.degree(x) == 2 == len(g.in_coins(x)) for x in range(1, n + 1))
    count = sum(is_physical(g, x, c) for x in range(1, n + 1) for c in range(1, n + 1))
    assert count == 2 * n


@pytest.mark.parametrize("d", [1, 2, 3, 7])
def test_flat_index_bijection(d):
    pairs = list(itertools.product(range(1, d + 1), repeat=2))
    flats = [flat_index(d, x, c) for x, c in pairs]
    assert sorted(flats) == list(range(1, d * d + 1))
    assert all(unflat(d, n) == p for n, p in zip(flats, pairs))


def test_json_round_trip():
    g = make_line(4)
    assert graph_from_json(g.to_json()) == g


def test_json_size_mismatch():
    with pytest.raises(GraphError):
        graph_from_json({"n_vertices": 3, "neighborhoods": [[1, 2], [1, 2]]})
