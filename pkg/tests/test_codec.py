import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from snarkforge.codec import (FIXTURE_FILES, decode_graph6, encode_graph6, load_all_fixtures,
                              load_fixture, parse_fixture_text)
from snarkforge.errors import MalformedHeader, NonPrintableByte, TruncatedPayload
from snarkforge.graph import Graph, is_connected, is_cubic, petersen

from oracles import to_nx


@st.composite
def graphs(draw, max_n=40):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_round_trip(g):
    assert decode_graph6(encode_graph6(g)) == g


@given(graphs(max_n=30))
@settings(max_examples=100, deadline=None)
def test_matches_networkx_encoder(g):
    ref = nx.to_graph6_bytes(to_nx(g), header=False).strip().decode()
    assert encode_graph6(g) == ref


def test_large_n_uses_long_header():
    g = Graph(70, [(i, i + 1) for i in range(69)])
    s = encode_graph6(g)
    assert s[0] == "~" and decode_graph6(s) == g
    assert s == nx.to_graph6_bytes(to_nx(g), header=False).strip().decode()


def test_header_arithmetic():
    assert decode_graph6("[" + "?" * 63).n == 28
    assert decode_graph6("a" + "?" * 94).n == 34


def test_single_vertex():
    assert encode_graph6(Graph(1, [])) == "@"
    assert decode_graph6("@") == Graph(1, [])


def test_petersen_encoding():
    s = encode_graph6(petersen())
    assert s[0] == "I"
    # ten vertices need 45 bits, so 8 payload bytes after the header
    assert len(s) == 9
    assert s == nx.to_graph6_bytes(nx.petersen_graph(), header=False).strip().decode()


def test_optional_prefix():
    assert decode_graph6(">>graph6<<IheA@GUAo") == decode_graph6("IheA@GUAo")


@pytest.mark.parametrize("text, exc, offset", [
    ("", MalformedHeader, 0),
    ("~", MalformedHeader, 1),
    ("I", TruncatedPayload, 1),
    ("IheA@GU", TruncatedPayload, 7),
    ("IheA@G Ao", NonPrintableByte, 6),
    ("Ihe\x7fA@GUAo", NonPrintableByte, 3),
])
def test_errors_name_offset(text, exc, offset):
    with pytest.raises(exc) as info:
        decode_graph6(text)
    assert info.value.offset == offset


def test_trailing_bytes_rejected():
    with pytest.raises(MalformedHeader):
        decode_graph6("IheA@GUAoA")


def test_fixture_files():
    counts = {"g28.g6": 3, "g34.g6": 19, "g36.g6": 10}
    assert set(FIXTURE_FILES) == set(counts)
    for name, k in counts.items():
        rows = load_fixture(name)
        assert len(rows) == k
        for label, g in rows:
            assert label.startswith(f"G{name[1:3]}no")
            assert g.n == int(name[1:3]) and g.m == 3 * g.n // 2
            assert is_cubic(g) and is_connected(g)


def test_fixture_strings_round_trip():
    from snarkforge.codec import packaged_fixture_dir

    for name in FIXTURE_FILES:
        for line in (packaged_fixture_dir() / name).read_text().splitlines():
            label, s = line.split()
            assert encode_graph6(decode_graph6(s)) == s


def test_parse_fixture_text_skips_blank_and_comments():
    rows = parse_fixture_text("# demo\n\nK4 C~\n")
    assert [r[0] for r in rows] == ["K4"] and rows[0][1].m == 6


def test_fixture_directory_fallback(tmp_path):
    (tmp_path / "g28.g6").write_text("only C~\n")
    assert [r[0] for r in load_fixture("g28.g6", tmp_path)] == ["only"]
    assert len(load_all_fixtures(tmp_path / "missing")) == 32
