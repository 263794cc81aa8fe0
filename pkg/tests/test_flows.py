import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from snarkforge import flows as fl
from snarkforge.coloring import color_with_string
from snarkforge.graph import EdgeColoring
from snarkforge.multipole import g_pole, petersen_pole
from snarkforge.voltage import alpha_connection, beta_connection

G = g_pole()
XYZ = {"x": 1, "y": 2, "z": 3}
colors = st.lists(st.sampled_from((1, 2, 3)), min_size=1, max_size=10)


def concrete(word):
    return tuple(XYZ[ch] for ch in word)


def lift_index(C, conn):
    build = alpha_connection if conn == "alpha" else beta_connection
    _, res = color_with_string(build(G, len(C)), C)
    return 3 if isinstance(res, EdgeColoring) else 4


def test_flow_xyzzyy():
    got = fl.flow(G, "123322")
    assert got == {((1, 1, 2), (1, 2, 1)), ((1, 1, 2), (2, 1, 1)),
                   ((1, 3, 2), (3, 2, 1)), ((3, 1, 2), (2, 3, 1))}
    assert fl.format_flow(got) == "{ [(1,1,2),(1,2,1)], [(1,1,2),(2,1,1)], [(1,3,2),(3,2,1)], [(3,1,2),(2,3,1)] }"


def test_flow_xyx_is_empty():
    for perm in fl.PERMUTATIONS:
        assert fl.flow(G, fl.permute((1, 2, 1), perm)) == frozenset()


@given(st.lists(st.sampled_from((1, 2, 3)), min_size=2, max_size=10), st.data())
@settings(max_examples=100, deadline=None)
def test_composition_law(C, data):
    k = data.draw(st.integers(1, len(C) - 1))
    for conn in ("alpha", "beta"):
        assert fl.flow(G, C, conn) == fl.compose(fl.flow(G, C[:k], conn), fl.flow(G, C[k:], conn), conn)


def test_transfer_is_single_cluster_flow():
    for c in (1, 2, 3):
        assert fl.flow(G, [c]) == fl.transfer(G, c)
        for (i, o) in fl.transfer(G, c):
            assert {c, i[2], o[2]} == {1, 2, 3}


def test_string_index_base_cases():
    assert fl.string_index(G, "123") == 4
    assert fl.string_index(G, "123123123") == 4


@pytest.mark.parametrize("m", [3, 5, 7])
def test_string_index_agrees_with_lift_alpha(m):
    for C in itertools.product((1, 2, 3), repeat=m):
        assert fl.string_index(G, C) == lift_index(C, "alpha"), C


@pytest.mark.parametrize("m", [3, 4, 5])
def test_string_index_agrees_with_lift_beta(m):
    for C in itertools.product((1, 2, 3), repeat=m):
        assert fl.string_index(G, C, "beta") == lift_index(C, "beta"), C


@given(colors)
@settings(max_examples=200, deadline=None)
def test_forbidden_substring_forces_index_four(C):
    if fl.forbidden_scan(C, cyclic=True):
        assert fl.string_index(G, C) == 4


@given(st.lists(st.sampled_from((1, 2, 3)), min_size=1, max_size=11).filter(lambda c: len(c) % 2))
@settings(max_examples=300, deadline=None)
def test_parity_constraint(C):
    if fl.string_index(G, C) == 3:
        assert all(C.count(c) % 2 == 1 for c in (1, 2, 3))


def test_forbidden_scan_examples():
    v = fl.forbidden_scan("121")
    assert len(v) == 1 and v[0].kind == "xyx" and v[0].text == "121"
    v = fl.forbidden_scan("1223")
    assert len(v) == 1 and v[0].kind == "xyyz"
    assert fl.forbidden_scan("123123", cyclic=True) == []
    assert fl.forbidden_scan("11111", cyclic=True) == []
    assert [x.kind for x in fl.forbidden_scan("1222221")] == ["xyx"]
    assert fl.forbidden_scan("112", cyclic=True)[0].kind == "xyx"
    assert [x.kind for x in fl.forbidden_scan("1123", cyclic=True)] == ["xyyz"]


def test_generalized_forbidden():
    assert fl.generalized_forbidden("211131111", 4) == []
    # c_{i-c} = c_{i+c} != c_i along the skip-2 orbit 0, 2, 4
    assert fl.generalized_forbidden("1?2?1".replace("?", "3"), 2)
    for C in ("121", "1223", "123123", "3112", "2111311"):
        assert fl.generalized_forbidden(C, 1) == fl.forbidden_scan(C, cyclic=True)


@pytest.mark.parametrize("left, right", fl.REDUCTIONS)
def test_reductions_for_every_permutation(left, right):
    for perm in fl.PERMUTATIONS:
        a, b = fl.permute(concrete(left), perm), fl.permute(concrete(right), perm)
        assert fl.functionally_equivalent(G, a, b)
        assert fl.functionally_equivalent(G, a[::-1], b[::-1])


LOOP_COLORS = {
    "xxx": {("y", "z"), ("z", "y")},
    "xyzzyy": {("y", "x")},
    "xyzxyy": {("y", "z")},
    "xyzzyxx": {("y", "z")},
    "xyzzyxz": {("y", "x")},
    # periodic spokes force equal loop colors at both ends
    "xyzxyzxyzxyz": {("y", "y")},
}


@pytest.mark.parametrize("word", sorted(LOOP_COLORS))
def test_loop_color_bookkeeping(word):
    inv = {v: k for k, v in XYZ.items()}
    got = {(inv[i[2]], inv[o[2]]) for i, o in fl.flow(G, concrete(word))}
    assert got == LOOP_COLORS[word]


@given(colors, colors)
@settings(max_examples=100, deadline=None)
def test_reversal_preserves_equivalence(C1, C2):
    if fl.functionally_equivalent(G, C1, C2):
        assert fl.functionally_equivalent(G, C1[::-1], C2[::-1])


def test_reduce_string_examples():
    assert fl.reduce_string("11111") == (1,)
    assert fl.reduce_string("123123123123") == (1, 2, 3, 1, 2, 3)
    assert fl.reduce_string("123322") == (1, 2, 3, 3)


@given(st.lists(st.sampled_from((1, 2, 3)), min_size=1, max_size=9))
@settings(max_examples=200, deadline=None)
def test_reduction_preserves_index(C):
    assert fl.string_index(G, fl.reduce_string(C)) == fl.string_index(G, C)


def test_odd_base_cases():
    rep = fl.verify_theorem_base(G, 9, lift_sample=["123", "12312", "1231231"])
    assert rep.passed
    assert rep.irreducible == {"123", "123123123"}
    assert rep.per_length[3]["reduced_to"] == ["123"]
    assert [len(rep.per_length[L]["survivors"]) for L in (3, 5, 7, 9)] == [1, 1, 3, 11]


def test_necklaces_cover_all_strings():
    seen = {fl.canonical(C) for C in itertools.product((1, 2, 3), repeat=5)}
    assert set(fl.necklaces(5)) == seen


def test_cluster_cycle_triples():
    for C in itertools.product((1, 2, 3), repeat=3):
        assert not fl.cluster_cycle_admissible(G, C)


def test_symbolic_display():
    asg = ((1, 1, 2), (1, 2, 1))
    assert fl.symbolic(asg, 1, 2, 3) == "[(x,x,y),(x,y,x)]"


def test_loupekine_pole_flows_close_only_for_odd_free_strings():
    p = petersen_pole()
    assert fl.string_index(p, "111") == 4
    rng = random.Random(3)
    for _ in range(30):
        C = tuple(rng.choice((1, 2, 3)) for _ in range(5))
        _, res = color_with_string(alpha_connection(p, 5), C)
        assert fl.string_index(p, C) == (3 if isinstance(res, EdgeColoring) else 4)
