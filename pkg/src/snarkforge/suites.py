"""Verification suites behind `snarkforge verify`."""

from __future__ import annotations

import itertools
import math
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from . import flows as fl
from .codec import load_fixture
from .coloring import DEFAULT_NODE_BUDGET, chromatic_index, color_with_string
from .graph import EdgeColoring, Graph, connected_components, girth, is_cubic
from .invariants import (automorphism_order, cluster_matching_census, coverable_by_k_perfect_matchings,
                         cyclic_edge_connectivity, isomorphic, oddness)
from .multipole import PATTERN_FAMILIES, g_pole, normalized_patterns, t_bar
from .report import Check
from .voltage import (VoltageGraph, alpha_connection, beta_connection, cluster_cycles, family,
                      family_pole, family_voltage_graph, reconstruct_original)

SUITES = ("appendices", "families", "flows", "voltage-facts")


class _Timer:
    def __enter__(self):
        self.t = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t


def _check(name, expected, fn: Callable[[], object], source: str) -> Check:
    with _Timer() as t:
        actual = fn()
    return Check(name, expected, actual, source, t.seconds)


# ---------------------------------------------------------------------------
# appendices

def _fixture_props(args):
    name, g6, budget = args
    from .codec import decode_graph6

    g = decode_graph6(g6)
    return name, g.n, is_cubic(g), chromatic_index(g, budget), automorphism_order(g), girth(g)


def appendices(fixtures=None, threads: int = 1, node_budget: int = DEFAULT_NODE_BUDGET) -> list[Check]:
    from .codec import encode_graph6

    jobs = []
    counts = {}
    for fn in ("g28.g6", "g34.g6", "g36.g6"):
        graphs = load_fixture(fn, fixtures)
        counts[fn] = len(graphs)
        jobs += [(nm, encode_graph6(g), node_budget) for nm, g in graphs]
    t0 = time.perf_counter()
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            rows = list(ex.map(_fixture_props, jobs))
    else:
        rows = [_fixture_props(j) for j in jobs]
    per = (time.perf_counter() - t0) / max(1, len(rows))
    out = [Check("fixture counts", {"g28.g6": 3, "g34.g6": 19, "g36.g6": 10}, counts, "fixtures")]
    for nm, n, cubic, chi, aut, gi in rows:
        min_girth = 4 if n == 28 else 5
        out.append(Check(f"{nm} cubic snark, 3 | |Aut|, girth >= {min_girth}", (True, 4, 0, True),
                         (cubic, chi, aut % 3, gi >= min_girth), f"fixture {nm}", per))
    auts = {n: Counter() for n in (28, 34, 36)}
    for _, n, _, _, aut, _ in rows:
        auts.setdefault(n, Counter())[aut] += 1
    out.append(Check("n=28 automorphism orders", {6: 1, 12: 2}, dict(sorted(auts[28].items())), "g28.g6"))
    out.append(Check("n=34 automorphism orders", {3: 7, 6: 7, 12: 1, 24: 3, 48: 1},
                     dict(sorted(auts[34].items())), "g34.g6"))
    return out


# ---------------------------------------------------------------------------
# families

def families(fixtures=None, node_budget: int = DEFAULT_NODE_BUDGET) -> list[Check]:
    fx = {}
    for fn in ("g28.g6", "g34.g6"):
        fx.update(dict(load_fixture(fn, fixtures)))
    out = []

    pa, pb = family("P", "alpha", 3, contract=True), family("P", "beta", 3, contract=True)
    out.append(_check("Loupekine 22: P_alpha(3), P_beta(3) contracted", (22, 22, 4, 4, False),
                      lambda: (pa.n, pb.n, chromatic_index(pa), chromatic_index(pb), isomorphic(pa, pb)),
                      "family P"))

    t1a, t1b = family("T1", "alpha", 3, contract=True), family("T1", "beta", 3, contract=True)
    t2a, t2b = family("T2", "alpha", 3, contract=True), family("T2", "beta", 3, contract=True)
    out.append(_check("T families at m=3 are 28-vertex snarks", [(28, 4)] * 3,
                      lambda: [(g.n, chromatic_index(g)) for g in (t1a, t1b, t2a)], "families T1, T2"))
    out.append(_check("T1a, T1b, T2a pairwise non-isomorphic; T2a = T2b", (False, False, False, True),
                      lambda: (isomorphic(t1a, t1b), isomorphic(t1a, t2a), isomorphic(t1b, t2a), isomorphic(t2a, t2b)),
                      "families T1, T2"))
    g28 = [fx[f"G28no{i}"] for i in (1, 2, 3)]
    out.append(_check("T families match g28.g6 as a set", True,
                      lambda: _set_iso([t1a, t1b, t2a], g28), "fixture g28.g6"))
    out.append(_check("contracted G_alpha(3) = G34no9", True,
                      lambda: isomorphic(family("G", "alpha", 3, contract=True), fx["G34no9"]), "fixture G34no9"))
    claw = family("G34no4", "alpha", 3, contract=True)
    out.append(_check("contracted claw lift = G34no4", True, lambda: isomorphic(claw, fx["G34no4"]),
                      "fixture G34no4"))

    for m, exp in ((5, 4), (7, 4), (9, 6), (11, 6)):
        out.append(_check(f"oddness T2_alpha({m};1,1,1)", exp, lambda m=m: oddness(family("T2", "alpha", m)).value,
                          "family T2"))
    for i in (1, 2, 3):
        out.append(_check(f"oddness G28no{i}", 2, lambda i=i: oddness(fx[f"G28no{i}"]).value, "fixture g28.g6"))
    for m in (3, 5, 7):
        out.append(_check(f"oddness G_alpha({m};1,1,1)", 2, lambda m=m: oddness(family("G", "alpha", m)).value,
                          "family G"))

    cen = cluster_matching_census(family_pole("T2"))
    smallest = Counter(min(x) for x in cen.odd_cycle_lengths if x)
    out.append(Check("T2 cluster matchings", 28, len(cen.matchings), "family T2"))
    out.append(Check("T2 compatible ordered pairs", 100, len(cen.pairs), "family T2"))
    out.append(Check("T2 pairs without an odd cycle", 0, sum(1 for x in cen.odd_cycle_lengths if not x), "family T2"))
    out.append(Check("T2 pairs by shortest odd cycle", {5: 74, 9: 8, 13: 12, 17: 4},
                     dict(sorted(smallest.items())), "family T2"))

    for m in (3, 5, 7, 9):
        out.append(_check(f"chromatic index G_alpha({m};1,1,1)", 4,
                          lambda m=m: chromatic_index(family("G", "alpha", m), node_budget), "family G"))
    out.append(_check("chromatic index G_alpha(5;2,2,2)", 4,
                      lambda: chromatic_index(family("G", "alpha", 5, 2, 2, 2), node_budget), "family G"))
    for m in range(3, 9):
        out.append(_check(f"chromatic index G_beta({m};1,1,1)", 3,
                          lambda m=m: chromatic_index(family("G", "beta", m), node_budget), "family G"))
    out.append(_check("G_alpha(9;1,1,4) colors with spokes 211131111", True,
                      lambda: isinstance(color_with_string(family_voltage_graph("G", "alpha", 9, 1, 1, 4),
                                                           "211131111", node_budget)[1], EdgeColoring),
                      "family G"))
    for args in ((12, 2, 2, 3), (10, 2, 2, 1)):
        out.append(_check(f"chromatic index G_alpha({args[0]};{args[1]},{args[2]},{args[3]})", 3,
                          lambda args=args: chromatic_index(family("G", "alpha", *args), node_budget), "family G"))

    for m in (4, 5, 6, 7):
        out.append(_check(f"cyclic connectivity G_alpha({m};1,1,1)", 4,
                          lambda m=m: cyclic_edge_connectivity(family("G", "alpha", m)).value, "family G"))
    for nm in ("P", "T1", "T2", "G"):
        for conn in ("alpha", "beta"):
            out.append(_check(f"cyclic connectivity {nm}_{conn}(3;1,1,1) uncontracted", 3,
                              lambda nm=nm, conn=conn: cyclic_edge_connectivity(family(nm, conn, 3)).value,
                              f"family {nm}"))
    for conn in ("alpha", "beta"):
        out.append(_check(f"cyclic connectivity T1_{conn}(5;1,1,1)", 5,
                          lambda conn=conn: cyclic_edge_connectivity(family("T1", conn, 5)).value, "family T1"))
    out.append(_check("cyclic connectivity G_alpha(9;3,3,1)", 3,
                      lambda: cyclic_edge_connectivity(family("G", "alpha", 9, 3, 3, 1)).value, "family G"))
    gp = g_pole()
    out.append(_check("closed 3-cluster-cycle rejects xxx and xyz", (False, False),
                      lambda: (fl.cluster_cycle_admissible(gp, "111"), fl.cluster_cycle_admissible(gp, "123")),
                      "pole G"))
    out.append(_check("G_alpha(9;3,3,1) is a snark", 4,
                      lambda: chromatic_index(family("G", "alpha", 9, 3, 3, 1), node_budget), "family G"))

    from .graph import petersen

    out.append(_check("Petersen not coverable by 4 perfect matchings", None,
                      lambda: coverable_by_k_perfect_matchings(petersen(), 4), "Petersen"))
    out.append(_check("G34no4 lift not coverable by 4 perfect matchings", None,
                      lambda: coverable_by_k_perfect_matchings(claw, 4), "fixture G34no4"))
    out.append(_check("|Aut| of G34no4 lift", 48, lambda: automorphism_order(claw), "fixture G34no4"))
    out.append(_check("|Aut| of Petersen", 120, lambda: automorphism_order(petersen()), "Petersen"))
    for n in (5, 7):
        out.append(_check(f"|Aut(J_{n})|", 4 * n, lambda n=n: automorphism_order(family("flower", "alpha", n)),
                          "flower family"))
    return out


def _set_iso(gs: list[Graph], hs: list[Graph]) -> bool:
    left = list(hs)
    for g in gs:
        hit = next((h for h in left if isomorphic(g, h)), None)
        if hit is None:
            return False
        left.remove(hit)
    return not left


# ---------------------------------------------------------------------------
# flows

def flow_checks(node_budget: int = DEFAULT_NODE_BUDGET, sample: int = 500, seed: int = 7) -> list[Check]:
    G = g_pole()
    out = [Check("admissible pattern families of G", sorted(PATTERN_FAMILIES.values()),
                 sorted(PATTERN_FAMILIES.get(s, s) for s in normalized_patterns(G)), "pole G")]
    # xyzzyy with x, y, z = 1, 2, 3
    pairs = {((1, 1), (1, 2)), ((1, 1), (2, 1)), ((1, 3), (3, 2)), ((3, 1), (2, 3))}
    fs = fl.flow(G, "123322")
    out.append(Check("Flow(xyzzyy) pairs", sorted(pairs), sorted(((a[:2]), (b[:2])) for a, b in fs), "pole G"))
    out.append(Check("Flow(xyzzyy) loop colors (in, out)", {(2, 1)}, {(a[2], b[2]) for a, b in fs}, "pole G"))
    for lhs, rhs in fl.REDUCTIONS:
        ok = all(fl.functionally_equivalent(G, fl._instantiate(lhs, p), fl._instantiate(rhs, p))
                 for p in fl.PERMUTATIONS)
        out.append(Check(f"reduction {lhs} ~ {rhs}", True, ok, "pole G"))
    out.append(Check("string index 123", 4, fl.string_index(G, "123"), "pole G"))
    out.append(Check("string index 123123123", 4, fl.string_index(G, "123123123"), "pole G"))
    rep = fl.verify_theorem_base(G, 9)
    out.append(Check("irreducible odd strings up to length 9", ["123", "123123123"], sorted(rep.irreducible), "pole G"))
    out.append(Check("every odd string up to length 9 has index 4", True, rep.all_index_four, "pole G"))
    for m in (3, 5, 7):
        strings = list(itertools.product((1, 2, 3), repeat=m))
        if m == 7:
            strings = random.Random(seed).sample(strings, sample)
        out.append(_check(f"string index agrees with lift coloring, m={m} ({len(strings)} strings)", 0,
                          lambda m=m, strings=strings: _disagreements(G, m, strings, node_budget), "pole G"))
    return out


def _disagreements(G, m, strings, node_budget) -> int:
    vg = alpha_connection(G, m)
    bad = 0
    for C in strings:
        _, res = color_with_string(vg, C, node_budget)
        bad += (3 if isinstance(res, EdgeColoring) else 4) != fl.string_index(G, C)
    return bad


# ---------------------------------------------------------------------------
# voltage facts

def random_voltage_graph(rng: random.Random, m: int, k: int | None = None) -> VoltageGraph:
    """Random connected base with a simple cubic lift over Z_m.

    Half-edges are paired at random; a pair becomes a loop (same vertex) or an
    arrow; voltages are drawn so the lift stays simple.
    """
    for _ in range(1000):
        k = k or rng.choice((2, 4, 6))
        names = tuple(f"q{i}" for i in range(k))
        half = [i for i in range(k) for _ in range(3)]
        rng.shuffle(half)
        arrows, loops = [], []
        for j in range(0, len(half), 2):
            a, b = half[j], half[j + 1]
            if a == b:
                c = rng.randrange(1, m)
                if 2 * c % m == 0:
                    break
                loops.append((names[a], c))
            else:
                arrows.append((names[a], names[b], rng.randrange(m)))
        else:
            vg = VoltageGraph(m, names, (), tuple(arrows), tuple(loops))
            try:
                g = vg.lift()
            except ValueError:
                continue
            base = Graph(k, {tuple(sorted((names.index(t), names.index(h)))) for t, h, _ in arrows if t != h})
            if len(connected_components(base)) == 1 and is_cubic(g):
                return vg
    raise RuntimeError("could not sample a simple voltage graph")


def voltage_facts(count: int = 200, seed: int = 2024) -> list[Check]:
    rng = random.Random(seed)
    fails = Counter()
    for _ in range(count):
        m = rng.randint(3, 12)
        vg = random_voltage_graph(rng, m)
        g = vg.lift()
        if g.n != m * len(vg.vertices) or not is_cubic(g):
            fails["size"] += 1
        units = [s for s in range(2, m) if math.gcd(s, m) == 1]
        if units:
            s = rng.choice(units)
            if not isomorphic(g, vg.scaled(s).lift()):
                fails["(1) scaling"] += 1
        divisors = [d for d in range(2, m) if m % d == 0]
        if divisors:
            d = rng.choice(divisors)
            try:
                h = vg.scaled(d).lift()
            except ValueError:
                h = None  # scaling can create loops or doubled edges; nothing to check
            if h is not None and len(connected_components(h)) < 2:
                fails["(2) common factor"] += 1
        for x, c in vg.loops:
            t = math.gcd(c, m)
            r = vg.rank(x)
            sub = [(u, v) for u, v in g.edges if u // m == r and v // m == r and _is_loop_edge(u, v, m, c)]
            comps = _cycle_lengths(sub)
            if m // t >= 3 and comps != [m // t] * t:
                fails["(3) loop cycles"] += 1
        for k in range(len(vg.arrows)):
            if vg.reversed_arrow(k).lift() != g:
                fails["(4) reversal"] += 1
    out = [Check(f"voltage facts on {count} random voltage graphs", {}, dict(fails), "random")]
    for m, a in ((10, 2), (7, 1), (9, 3), (12, 4), (12, 5)):
        vg = alpha_connection(family_pole("P"), m, a, a, 1)
        t = math.gcd(a, m)
        out.append(Check(f"cluster-cycles m={m}, a={a}", [m // t] * t, [len(c) for c in cluster_cycles(vg)], "family P"))
    for nm in ("P", "T1", "T2", "G", "G34no4"):
        out.append(_check(f"remove/reconstruct round trip for pole {nm}", True,
                          lambda nm=nm: _round_trip(nm), f"family {nm}"))
    return out


def _is_loop_edge(u, v, m, c) -> bool:
    d = (v - u) % m
    return d == c % m or d == (-c) % m


def _cycle_lengths(edges) -> list[int]:
    verts = sorted({x for e in edges for x in e})
    ix = {v: i for i, v in enumerate(verts)}
    g = Graph(len(verts), [(ix[u], ix[v]) for u, v in edges])
    return sorted(len(c) for c in connected_components(g))


def _round_trip(name: str) -> bool:
    from . import multipole as mp
    from .voltage import claw_source

    source = {"P": mp.petersen_labelled, "T1": mp.t_bar, "T2": mp.t_bar, "G": mp.g_bar,
              "G34no4": claw_source}[name]()[0]
    p = family_pole(name)
    ok = True
    for build in (alpha_connection, beta_connection):
        rebuilt, _ = reconstruct_original(build(p, 5))
        ok &= isomorphic(rebuilt, source)
    return ok


def run(suite: str, fixtures=None, threads: int = 1, node_budget: int = DEFAULT_NODE_BUDGET) -> list[Check]:
    if suite == "appendices":
        return appendices(fixtures, threads, node_budget)
    if suite == "families":
        return families(fixtures, node_budget)
    if suite == "flows":
        return flow_checks(node_budget)
    if suite == "voltage-facts":
        return voltage_facts()
    if suite == "all":
        out = []
        for s in SUITES:
            out += run(s, fixtures, threads, node_budget)
        return out
    raise ValueError(f"unknown suite {suite!r}")
