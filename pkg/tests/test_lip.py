import random

import pytest

from mimpaths import (
    Graph,
    LipIndex,
    lip_bruteforce,
    lip_join,
    lip_leaf_table,
    lip_solve,
    lip_validate_index,
    linear_order_decomposition,
    optimal_decomposition_bruteforce,
)
from mimpaths._dp import CutContext
from mimpaths.lip import CLOSED, is_induced_path, lip_tables

from conftest import complete_graph, cycle_graph, gnp, named_families, path_graph


def caterpillar(g):
    return linear_order_decomposition(g, list(range(g.n)))


def test_leaf_table_counts():
    # vertex 1 of P3 has two neighbours across its leaf cut
    g = path_graph(3)
    d = caterpillar(g)
    t = d.leaf_of[1]
    table = lip_leaf_table(g, d, t)
    idx = list(table.indices())
    assert sum(1 for i in idx if i.endpoints == 1) == 2
    assert sum(1 for i in idx if i.fragment and i.endpoints == 0) == 1
    empties = [i for i in idx if i.fragment == 0]
    assert {i.cover for i in empties} == {1 << 1, (1 << 0) | (1 << 2)}
    assert all(i.size == 0 for i in empties)


def test_leaf_of_isolated_vertex():
    g = Graph(3, [(0, 1)])
    d = caterpillar(g)
    assert list(lip_leaf_table(g, d, d.leaf_of[2]).indices()) == [LipIndex(0, 0, (), 0, 0)]


def test_leaf_of_k2():
    g = path_graph(2)
    d = caterpillar(g)
    assert LipIndex(1, 0, (), 2, 1) in lip_leaf_table(g, d, d.leaf_of[0])


def test_validate_examples():
    g = path_graph(3)
    inside = 0b001
    assert lip_validate_index(LipIndex(0, 0, (), 0, 0), g, inside) == "special_case_3"
    assert lip_validate_index(LipIndex(0, 0, (), 1, 0), g, inside) == "reject"
    assert lip_validate_index(LipIndex(1, 0, (), 2, 1), g, inside) == "valid"
    assert lip_validate_index(LipIndex(0, 0, (), 3, 2), g, inside) == "special_case_1"
    assert lip_validate_index(LipIndex(0, 0, (), 2, 1), g, inside) == "reject"
    # a pairing that closes a cycle: 0-2, 1-2 and pair (0, 1) in C3 cut {0,1}|{2}
    c3 = complete_graph(3)
    s = (1 << c3.edge_index[(0, 2)]) | (1 << c3.edge_index[(1, 2)])
    assert lip_validate_index(LipIndex(s, 0, ((0, 1),), 3, 0), c3, 0b011) == "reject"


def test_join_examples():
    g = path_graph(3)
    d = caterpillar(g)
    tables = lip_tables(g, d)
    assert 3 in tables[d.root].entries[CLOSED][0]
    k3 = complete_graph(3)
    tables = lip_tables(k3, caterpillar(k3))
    assert max(tables[caterpillar(k3).root].entries[CLOSED][0]) == 2
    two = Graph(4, [(0, 1), (2, 3)])
    d2 = caterpillar(two)
    root = lip_tables(two, d2)[d2.root].entries
    assert max(root[CLOSED][0]) == 2
    assert all(shape[0] == 0 and shape[1] == () for shape in root)


def test_solve_examples():
    assert lip_solve(cycle_graph(5), caterpillar(cycle_graph(5))) == 4
    assert lip_solve(complete_graph(4), caterpillar(complete_graph(4))) == 2
    for n in range(2, 9):
        assert lip_solve(path_graph(n), caterpillar(path_graph(n))) == n
    assert lip_solve(Graph(0), None) == 0
    assert lip_solve(Graph(1), None) == 1
    assert lip_solve(Graph(4), caterpillar(Graph(4))) == 1


def test_needs_decomposition():
    with pytest.raises(ValueError):
        lip_solve(path_graph(3), None)


def test_join_is_commutative():
    rng = random.Random(31)
    for _ in range(15):
        n = rng.randint(3, 8)
        g = gnp(n, 0.45, rng)
        d = optimal_decomposition_bruteforce(g)
        ctx = CutContext(g, d)
        tables = lip_tables(g, d, ctx)
        for t in range(d.size):
            if d.is_leaf(t):
                continue
            a, b = d.children[t]
            left = set(lip_join(g, d, t, tables[a], tables[b], ctx).indices())
            right = set(lip_join(g, d, t, tables[b], tables[a], ctx).indices())
            assert left == right


def test_root_restriction_and_validity():
    rng = random.Random(37)
    for _ in range(20):
        n = rng.randint(3, 8)
        g = gnp(n, 0.4, rng)
        d = linear_order_decomposition(g, rng.sample(range(n), n))
        tables = lip_tables(g, d)
        for idx in tables[d.root].indices():
            assert (idx.fragment, idx.cover, idx.pairing) == (0, 0, ())
            assert idx.endpoints == 2 or idx.size == 0
        for t, table in tables.items():
            for idx in table.indices():
                assert lip_validate_index(idx, g, d.vmask[t]) != "reject"


def test_witness_and_oracle_on_families():
    for name, g in named_families():
        if g.n > 9:
            continue
        res = lip_solve(g, caterpillar(g), witness=True)
        assert res.length == lip_bruteforce(g), name
        assert len(res.path) == res.length and is_induced_path(g, res.path)


def test_random_against_oracle():
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randint(3, 9)
        g = gnp(n, rng.choice([0.2, 0.4, 0.6]), rng)
        expected = lip_bruteforce(g)
        for d in (linear_order_decomposition(g, rng.sample(range(n), n)), optimal_decomposition_bruteforce(g, max_vertices=12)):
            assert lip_solve(g, d) == expected


def test_width_reported():
    res = lip_solve(cycle_graph(6), caterpillar(cycle_graph(6)), stats=True)
    assert res.width == 2
    assert res.table_sizes
