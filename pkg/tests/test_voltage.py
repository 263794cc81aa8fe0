import math
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from snarkforge.coloring import chromatic_index
from snarkforge.errors import (InvalidParameters, OddM, ParallelEdgeInLift, SelfLoopInLift, UnequalSkips,
                               UnknownFamily, VoltageOutOfRange, WrongShape)
from snarkforge.graph import connected_components, girth, is_cubic, petersen
from snarkforge.invariants import automorphism_order, cyclic_edge_connectivity, isomorphic
from snarkforge.multipole import g_bar, g_pole, petersen_pole, t_bar, t1_pole, t2_pole
from snarkforge.suites import random_voltage_graph
from snarkforge.voltage import (FAMILIES, SpecParseError, VoltageGraph, alpha_connection, beta_connection,
                                claw_pole, claw_source, cluster_cycles, diameters_variant, family,
                                family_voltage_graph, parse_family_spec, reconstruct_original)

from oracles import to_nx

seeds = st.integers(0, 2**32 - 1)


@given(seeds, st.integers(3, 12))
@settings(max_examples=200, deadline=None)
def test_lift_is_cubic_with_expected_size(seed, m):
    vg = random_voltage_graph(random.Random(seed), m)
    g = vg.lift()
    assert g.n == m * len(vg.vertices) and is_cubic(g)
    assert all(d == 3 for d in vg.base_degrees().values())


@given(seeds, st.integers(3, 12), st.data())
@settings(max_examples=200, deadline=None)
def test_coprime_scaling_gives_isomorphic_lift(seed, m, data):
    units = [s for s in range(2, m) if math.gcd(s, m) == 1]
    vg = random_voltage_graph(random.Random(seed), m)
    s = data.draw(st.sampled_from(units))
    assert isomorphic(vg.lift(), vg.scaled(s).lift())


@given(seeds, st.integers(3, 8), st.data())
@settings(max_examples=30, deadline=None)
def test_coprime_scaling_networkx_cross_check(seed, m, data):
    units = [s for s in range(2, m) if math.gcd(s, m) == 1]
    vg = random_voltage_graph(random.Random(seed), m)
    s = data.draw(st.sampled_from(units))
    assert nx.is_isomorphic(to_nx(vg.lift()), to_nx(vg.scaled(s).lift()))


@given(seeds, st.sampled_from([4, 6, 8, 9, 10, 12]), st.data())
@settings(max_examples=200, deadline=None)
def test_common_factor_disconnects(seed, m, data):
    d = data.draw(st.sampled_from([d for d in range(2, m) if m % d == 0]))
    vg = random_voltage_graph(random.Random(seed), m)
    try:
        h = vg.scaled(d).lift()
    except (ParallelEdgeInLift, SelfLoopInLift):
        return
    assert len(connected_components(h)) >= d


@given(st.integers(3, 12), st.data())
@settings(max_examples=100, deadline=None)
def test_loop_cycle_structure(m, data):
    c = data.draw(st.integers(1, (m - 1) // 2))
    vg = VoltageGraph(m, ("x",), loops=(("x", c),))
    comps = connected_components(vg.lift())
    t = math.gcd(c, m)
    assert sorted(len(comp) for comp in comps) == [m // t] * t


def test_loop_cycles_example():
    vg = VoltageGraph(10, ("x",), loops=(("x", 2),))
    assert sorted(len(c) for c in connected_components(vg.lift())) == [5, 5]


@given(seeds, st.integers(3, 12), st.data())
@settings(max_examples=200, deadline=None)
def test_arrow_reversal(seed, m, data):
    vg = random_voltage_graph(random.Random(seed), m)
    k = data.draw(st.integers(0, len(vg.arrows) - 1))
    assert vg.reversed_arrow(k).lift().edge_set() == vg.lift().edge_set()


def test_index_formula():
    vg = alpha_connection(petersen_pole(), 5)
    assert vg.index("w", 3) == vg.vertices.index("w") * 5 + 3
    assert vg.index("w", 8) == vg.index("w", 3)
    g = vg.lift()
    for t, h, a in vg.arrows:
        for i in range(5):
            assert g.has_edge(vg.index(t, i), vg.index(h, i + a))


def test_connection_wiring():
    p = petersen_pole()
    al = alpha_connection(p, 7, 2, 3, 1)
    be = beta_connection(p, 7, 2, 3, 1)
    role = dict(al.roles)
    assert {(al.resolve(t), al.resolve(h), a) for t, h, a in al.arrows} == {
        (role["A'"], role["A"], 2), (role["B'"], role["B"], 3)}
    assert {(be.resolve(t), be.resolve(h), a) for t, h, a in be.arrows} == {
        (role["B'"], role["A"], 2), (role["A'"], role["B"], 3)}
    assert al.loops[0][1] == 1


@pytest.mark.parametrize("m, a, b, c", [(3, 0, 1, 1), (3, 1, 3, 1), (6, 1, 1, 3), (7, 1, 1, 4), (2, 1, 1, 1)])
def test_voltage_range(m, a, b, c):
    with pytest.raises((VoltageOutOfRange, InvalidParameters)):
        alpha_connection(petersen_pole(), m, a, b, c)


def test_loupekine_22():
    a = family("P", "alpha", 3, contract=True)
    b = family("P", "beta", 3, contract=True)
    assert a.n == b.n == 22 and not isomorphic(a, b)


def test_t2_connections_isomorphic():
    assert isomorphic(family("T2", "alpha", 3), family("T2", "beta", 3))


def test_flower_and_goldberg():
    j5 = family("flower", m=5)
    assert j5.n == 20 and automorphism_order(j5) == 20
    assert family("goldberg", m=5) == family("P", "alpha", 5)
    with pytest.raises(InvalidParameters):
        family("goldberg", "beta", 5)


def test_unknown_family():
    with pytest.raises(UnknownFamily):
        family("Q")


@pytest.mark.parametrize("m, a, lengths", [(10, 2, [5, 5]), (7, 1, [7]), (9, 3, [3, 3, 3])])
def test_cluster_cycles(m, a, lengths):
    cyc = cluster_cycles(alpha_connection(petersen_pole(), m, a, a, 1))
    assert sorted(len(c) for c in cyc) == lengths
    assert sorted(i for c in cyc for i in c) == list(range(m))


def test_cluster_cycles_need_equal_skips():
    with pytest.raises(UnequalSkips):
        cluster_cycles(alpha_connection(petersen_pole(), 5, 1, 2, 1))


@pytest.mark.parametrize("make, source", [
    (petersen_pole, lambda: petersen()),
    (t1_pole, lambda: t_bar()[0]),
    (t2_pole, lambda: t_bar()[0]),
    (g_pole, lambda: g_bar()[0]),
    (claw_pole, lambda: claw_source()[0]),
])
@pytest.mark.parametrize("build", [alpha_connection, beta_connection])
def test_reconstruct_round_trip(make, source, build):
    g, names = reconstruct_original(build(make(), 5))
    assert is_cubic(g) and isomorphic(g, source())
    assert names[-2:] == ("s", "t")


def test_reconstructed_g_is_colorable():
    g, _ = reconstruct_original(alpha_connection(g_pole(), 3))
    assert g.n == 14 and chromatic_index(g) == 3


def test_reconstruct_shape_check():
    with pytest.raises(WrongShape):
        reconstruct_original(VoltageGraph(5, ("x",), loops=(("x", 1),)))


def test_diameters_variant():
    vg = alpha_connection(petersen_pole(), 10, 2, 2, 1)
    g = diameters_variant(vg)
    assert is_cubic(g) and g.n == 10 * (len(vg.vertices) - 1)
    v = vg.rank("v")
    diam = [(x, y) for x, y in g.edges if x // 10 == v and y // 10 == v]
    assert len(diam) == 5
    assert cyclic_edge_connectivity(g, 5).value == 5
    with pytest.raises(OddM):
        diameters_variant(alpha_connection(petersen_pole(), 9))


def test_spec_parsing():
    s = parse_family_spec("T2:alpha:m=7,a=1,b=1,c=1,contract=false")
    assert (s.name, s.conn, s.m, s.a, s.b, s.c, s.contract) == ("T2", "alpha", 7, 1, 1, 1, False)
    assert str(s) == "T2:alpha:m=7,a=1,b=1,c=1,contract=false"
    assert parse_family_spec(str(s)) == s
    assert parse_family_spec("G:beta:m=5").conn == "beta"
    assert parse_family_spec("flower:m=7").build().n == 28
    assert parse_family_spec("P:alpha:m=10,a=2,b=2,c=1,diameters=true").build().n == 70


@pytest.mark.parametrize("text, pos", [
    ("G:gamma:m=5", 2),
    ("G:alpha:m=5:x", 8),
    ("G:alpha:m=five", 10),
    ("G:alpha:m=5,zz=1", 12),
    ("G:alpha:m=5,contract=maybe", 21),
])
def test_spec_parse_errors(text, pos):
    with pytest.raises(SpecParseError) as info:
        parse_family_spec(text)
    assert info.value.position == pos


def test_every_family_builds():
    for name in FAMILIES:
        vg = family_voltage_graph(name, "alpha", 5)
        assert is_cubic(vg.lift())
