import pytest

from snarkforge.coloring import (Unsatisfiable, chromatic_index, color_with_string, edge_order,
                                 find_3_edge_coloring, is_3_edge_colorable, is_proper_snark, is_snark)
from snarkforge.errors import BudgetExceeded, Indeterminate, LengthMismatch, NotDegreeAtMost3
from snarkforge.graph import EdgeColoring, Graph, complete_bipartite, complete_graph, petersen, prism
from snarkforge.multipole import g_bar, g_pole, petersen_pole
from snarkforge.voltage import alpha_connection, beta_connection, family

from oracles import naive_coloring, oddness as oracle_oddness, random_cubic


def test_petersen_unsatisfiable():
    res = find_3_edge_coloring(petersen())
    assert isinstance(res, Unsatisfiable) and not res
    assert res.nodes > 0


def test_small_positive_cases():
    for g in (complete_bipartite(3, 3), complete_graph(4), prism(3), g_bar()[0]):
        col = find_3_edge_coloring(g)
        assert isinstance(col, EdgeColoring) and col.is_proper_for(g)
        assert chromatic_index(g) == 3


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12, 14])
@pytest.mark.parametrize("seed", range(12))
def test_agrees_with_naive_backtracking(n, seed):
    g = random_cubic(n, seed)
    assert is_3_edge_colorable(g) == (naive_coloring(g) is not None)


@pytest.mark.parametrize("seed", range(10))
def test_agrees_with_even_two_factor_criterion(seed):
    # a cubic graph is 3-edge-colorable iff some perfect matching leaves only even cycles
    g = random_cubic(14, 100 + seed)
    assert is_3_edge_colorable(g) == (oracle_oddness(g) == 0)


def test_unsatisfiable_cross_checked_on_snarks():
    for g in (petersen(), family("P", "alpha", 3, contract=True)):
        assert not find_3_edge_coloring(g)
    assert naive_coloring(petersen()) is None


def test_pinned_colors_respected():
    g = complete_graph(4)
    col = find_3_edge_coloring(g, pinned={(0, 1): 3, (2, 3): 3})
    assert col.color(0, 1) == 3 and col.color(2, 3) == 3 and col.is_proper_for(g)
    assert not find_3_edge_coloring(g, pinned={(0, 1): 1, (0, 2): 1})


def test_deterministic_witness():
    g = family("G", "beta", 5)
    a, b = find_3_edge_coloring(g), find_3_edge_coloring(g)
    assert a.lines() == b.lines()
    assert edge_order(g) == edge_order(g)


def test_degree_check():
    with pytest.raises(NotDegreeAtMost3):
        find_3_edge_coloring(complete_graph(5))


def test_budget():
    with pytest.raises(BudgetExceeded):
        find_3_edge_coloring(petersen(), node_budget=3)
    assert Indeterminate is BudgetExceeded


def test_snark_predicates():
    assert is_snark(petersen()) and is_proper_snark(petersen())
    g = family("G", "alpha", 3)
    assert is_snark(g) and not is_proper_snark(g)
    assert not is_snark(prism(3))


@pytest.mark.parametrize("m", [3, 5, 7])
def test_g_family_indices(m):
    assert chromatic_index(family("G", "alpha", m)) == 4
    assert chromatic_index(family("G", "beta", m)) == 3


def test_g_alpha_10_2_2_1_colorable():
    assert chromatic_index(family("G", "alpha", 10, 2, 2, 1)) == 3


@pytest.mark.parametrize("conn", ["alpha", "beta"])
@pytest.mark.parametrize("m, a, c", [(3, 1, 1), (5, 1, 1), (5, 2, 1), (7, 1, 1), (10, 2, 1)])
def test_loupekine_instances(conn, m, a, c):
    assert chromatic_index(family("P", conn, m, a, a, c)) == 4


def test_color_with_string_examples():
    g, res = color_with_string(alpha_connection(g_pole(), 9, 1, 1, 4), "211131111")
    assert isinstance(res, EdgeColoring) and res.is_proper_for(g)
    _, res = color_with_string(alpha_connection(g_pole(), 3), "123")
    assert isinstance(res, Unsatisfiable)
    vg = alpha_connection(g_pole(), 12, 2, 2, 3)
    g, res = color_with_string(vg, "1" * 12)
    assert isinstance(res, EdgeColoring)
    for i in range(12):
        assert res.color(vg.index("v", i), vg.index("w", i)) == 1


def test_color_with_string_beta_witness():
    vg = beta_connection(g_pole(), 5)
    _, res = color_with_string(vg, "11132")
    assert isinstance(res, EdgeColoring)


def test_color_with_string_length():
    with pytest.raises(LengthMismatch):
        color_with_string(alpha_connection(petersen_pole(), 5), "123")
