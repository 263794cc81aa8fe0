import itertools

import pytest

from snarkforge.errors import AnchorCollision, NotAPath
from snarkforge.graph import complete_graph, is_cubic, petersen, prism
from snarkforge.multipole import (PATTERN_FAMILIES, ColorPattern, FivePole, admissible_patterns,
                                  g_bar, g_pole, has_loupekine_property, normalized_patterns,
                                  petersen_pole, remove_path, t1_pole, t2_pole, t_bar)
from snarkforge.voltage import claw_pole

from oracles import naive_coloring, pole_patterns

POLES = {"P": petersen_pole, "T1": t1_pole, "T2": t2_pole, "G": g_pole, "claw": claw_pole}


def _as_patterns(tuples):
    return {ColorPattern((a, b), (ap, bp), sp) for a, b, sp, bp, ap in tuples}


def test_sizes():
    assert petersen_pole().core.n == 7
    assert t1_pole().core.n == 9
    assert g_pole().core.n == 11
    assert g_bar()[0].n == 14 and is_cubic(g_bar()[0])
    assert t_bar()[0].n == 12 and is_cubic(t_bar()[0])


@pytest.mark.parametrize("make", [petersen_pole, t1_pole])
def test_patterns_match_full_enumeration(make):
    p = make()
    assert admissible_patterns(p) == _as_patterns(pole_patterns(p.core, p.anchors))


@pytest.mark.parametrize("name", sorted(POLES))
def test_patterns_match_naive_backtracking(name):
    p = POLES[name]()
    g, dang = p.with_pendants()
    ref = set()
    for cols in itertools.product((1, 2, 3), repeat=5):
        if naive_coloring(g, dict(zip(dang, cols))) is not None:
            ref.add(cols)
    assert admissible_patterns(p) == _as_patterns(ref)


@pytest.mark.parametrize("name", sorted(POLES))
def test_parity_signature(name):
    for pat in admissible_patterns(POLES[name]()):
        cols = [*pat.input, *pat.output, pat.spoke]
        assert sorted(cols.count(c) for c in (1, 2, 3)) == [1, 1, 3]


def test_g_patterns_are_the_four_families():
    assert set(PATTERN_FAMILIES.values()) == {"TwoLeft", "TwoRight", "AltTop", "AltBot"}
    assert normalized_patterns(g_pole()) == set(PATTERN_FAMILIES)
    assert len(admissible_patterns(g_pole())) == 24
    assert all(p.spoke == p.main_color() for p in admissible_patterns(g_pole()))


def test_loupekine_property():
    assert has_loupekine_property(petersen_pole())
    assert has_loupekine_property(t1_pole())
    assert has_loupekine_property(t2_pole())
    assert not has_loupekine_property(g_pole())


def test_petersen_pole_match_mismatch():
    for pat in admissible_patterns(petersen_pole()):
        if pat.input[0] == pat.input[1]:
            assert pat.output[0] != pat.output[1]
        else:
            assert pat.output[0] == pat.output[1]


def test_normalized_form():
    assert ColorPattern((2, 2), (1, 3), 2).normalized() == "[(x,x),(y,z)] spoke x"
    assert ColorPattern((1, 3), (1, 2), 1).normalized() == "[(x,y),(x,z)] spoke x"


def test_text_round_trip():
    for make in POLES.values():
        p = make()
        q = FivePole.from_text(p.to_text())
        assert q.core == p.core and q.anchors == p.anchors
        assert admissible_patterns(q) == admissible_patterns(p)


def test_remove_path_errors():
    g = petersen()
    with pytest.raises(NotAPath):
        remove_path(g, 0, 2, 4)
    with pytest.raises(NotAPath):
        remove_path(complete_graph(4), 0, 1, 2)
    with pytest.raises(AnchorCollision):
        remove_path(prism(3), 0, 3, 4)


def test_shared_anchor_needs_opt_in():
    p = t2_pole()
    assert p.shared_anchor
    g, names = t_bar()
    ix = names.index
    with pytest.raises(AnchorCollision):
        remove_path(g, ix("t2"), ix("t1"), ix("u1"), names=names)
