"""Structural certificates: automorphism order and canonical form, oddness,
cyclic edge-connectivity, perfect-matching covers, and the cluster matching
census used in the oddness lower bound for the T2 family."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import BudgetExceeded, NoPerfectMatching, NotDegreeAtMost3
from .graph import Graph, connected_components, is_cubic, norm_edge

DEFAULT_BUDGET = 10**7


# ---------------------------------------------------------------------------
# canonical labelling by individualization-refinement

def _refine(adj, cells: list[list[int]], n: int) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Cells split by the multiset of neighbour cells; split pieces are ordered
    by that signature, so the result is label-invariant.
    """
    color = [0] * n
    for i, c in enumerate(cells):
        for v in c:
            color[v] = i
    while True:
        new: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in c:
                groups.setdefault(tuple(sorted(color[w] for w in adj[v])), []).append(v)
            if len(groups) == 1:
                new.append(c)
            else:
                new.extend(groups[k] for k in sorted(groups))
        if len(new) == len(cells):
            return cells
        cells = new
        for i, c in enumerate(cells):
            for v in c:
                color[v] = i


def _individualize(cells: list[list[int]], v: int) -> list[list[int]]:
    out = []
    for c in cells:
        if v in c:
            out.append([v])
            rest = [x for x in c if x != v]
            if rest:
                out.append(rest)
        else:
            out.append(c)
    return out


class _Orbits:
    def __init__(self, n: int, gens: Sequence[Sequence[int]]):
        self.parent = list(range(n))
        for g in gens:
            for v in range(n):
                self._union(v, g[v])

    def find(self, v: int) -> int:
        p = self.parent
        while p[v] != v:
            p[v] = p[p[v]]
            v = p[v]
        return v

    def _union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


@dataclass(frozen=True)
class CanonicalForm:
    """`relabeling[v]` is the canonical index of vertex v."""

    relabeling: tuple[int, ...]
    canonical_edges: tuple[tuple[int, int], ...]
    n: int

    def key(self) -> tuple:
        return (self.n, self.canonical_edges)


@dataclass
class AutResult:
    order: int
    generators: list[tuple[int, ...]]
    canonical: CanonicalForm
    nodes: int


class _Search:
    def __init__(self, g: Graph, budget: int):
        self.g = g
        self.n = g.n
        self.adj = [g.neighbors(v) for v in range(g.n)]
        self.budget = budget
        self.nodes = 0
        self.gens: list[tuple[int, ...]] = []
        self.first = None  # (inv path, cert, lab, path)
        self.best = None

    def _leaf(self, cells) -> tuple[tuple, list[int]]:
        lab = [0] * self.n
        for i, c in enumerate(cells):
            lab[c[0]] = i
        cert = tuple(sorted(norm_edge(lab[u], lab[v]) for u, v in self.g.edges))
        return cert, lab

    def _auto(self, lab_a, lab_b) -> tuple[int, ...]:
        inv_a = [0] * self.n
        for v, p in enumerate(lab_a):
            inv_a[p] = v
        return tuple(inv_a[lab_b[v]] for v in range(self.n))

    @staticmethod
    def _lcp(a, b) -> int:
        k = 0
        while k < len(a) and k < len(b) and a[k] == b[k]:
            k += 1
        return k

    def run(self):
        cells = _refine(self.adj, [list(range(self.n))], self.n) if self.n else []
        self.first_orbit_sizes: list[int] = []
        self._rec(cells, [], [tuple(len(c) for c in cells)])

    def _rec(self, cells, path, invs):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"automorphism search exceeded {self.budget} nodes")
        depth = len(path)
        if self.best is not None:
            bi = self.best[0][: depth + 1]
            if tuple(invs) > tuple(bi) and (self.first is None or tuple(invs) != tuple(self.first[0][: depth + 1])):
                return None
        if all(len(c) == 1 for c in cells):
            cert, lab = self._leaf(cells)
            key = (tuple(invs), cert)
            if self.first is None:
                self.first = (tuple(invs), cert, lab, list(path))
                self.best = self.first
                return None
            if key == (self.first[0], self.first[1]):
                self.gens.append(self._auto(self.first[2], lab))
                return self._lcp(path, self.first[3])
            if key == (self.best[0], self.best[1]):
                self.gens.append(self._auto(self.best[2], lab))
                return self._lcp(path, self.best[3])
            if key < (self.best[0], self.best[1]):
                self.best = (tuple(invs), cert, lab, list(path))
            return None
        size = max(len(c) for c in cells)
        target = next(c for c in cells if len(c) == size)
        on_first = self.first is None or path == self.first[3][:depth]
        explored: list[int] = []
        ngens = -1
        orbits = None
        for v in sorted(target):
            if len(self.gens) != ngens:
                ngens = len(self.gens)
                fixing = [g for g in self.gens if all(g[x] == x for x in path)]
                orbits = _Orbits(self.n, fixing)
            if any(orbits.find(v) == orbits.find(u) for u in explored):
                continue
            explored.append(v)
            child = _refine(self.adj, _individualize(cells, v), self.n)
            jump = self._rec(child, path + [v], invs + [tuple(len(c) for c in child)])
            if jump is not None and jump < depth:
                return jump
        if on_first and self.first is not None and path == self.first[3][:depth]:
            fixing = [g for g in self.gens if all(g[x] == x for x in path)]
            orbits = _Orbits(self.n, fixing)
            v0 = self.first[3][depth]
            root = orbits.find(v0)
            self.first_orbit_sizes.append((depth, sum(1 for u in target if orbits.find(u) == root)))
        return None


def _search(g: Graph, budget: int) -> AutResult:
    s = _Search(g, budget)
    s.run()
    order = 1
    for _, k in s.first_orbit_sizes:
        order *= k
    if s.n == 0:
        canon = CanonicalForm((), (), 0)
    else:
        canon = CanonicalForm(tuple(s.best[2]), s.best[1], g.n)
    return AutResult(order, s.gens, canon, s.nodes)


def automorphism_order(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    return _search(g, budget).order


def automorphism_group(g: Graph, budget: int = DEFAULT_BUDGET) -> AutResult:
    return _search(g, budget)


def canonical_form(g: Graph, budget: int = DEFAULT_BUDGET) -> CanonicalForm:
    return _search(g, budget).canonical


def isomorphic(g1: Graph, g2: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1, budget).key() == canonical_form(g2, budget).key()


# ---------------------------------------------------------------------------
# oddness: dynamic programming over a low-frontier edge order

@dataclass
class TwoFactor:
    cycles: list[list[int]]
    complement_matching: list[tuple[int, int]]

    @property
    def odd_cycles(self) -> int:
        return sum(1 for c in self.cycles if len(c) % 2)


@dataclass
class OddnessResult:
    value: int
    witness: TwoFactor


def _cycles_of(n: int, edges: Sequence[tuple[int, int]]) -> list[list[int]]:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        cyc = [s]
        seen[s] = True
        prev, cur = -1, s
        while True:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            if nxt == s:
                break
            seen[nxt] = True
            cyc.append(nxt)
            prev, cur = cur, nxt
        out.append(cyc)
    return out


def oddness(g: Graph, budget: int = DEFAULT_BUDGET) -> OddnessResult:
    """Minimum number of odd cycles over all 2-factors, with a witness.

    Vertex states on the frontier: 0 (no chosen edge yet), 2 (done), or an
    open path end, encoded as 4 + 2 * partner + parity of the path length.
    """
    from .coloring import edge_order

    if not is_cubic(g):
        raise NotDegreeAtMost3("oddness is defined here for cubic graphs")
    order = edge_order(g)
    n = g.n
    last = [-1] * n
    first = [-1] * n
    for d, (u, v) in enumerate(order):
        for x in (u, v):
            if first[x] < 0:
                first[x] = d
            last[x] = d
    E = len(order)
    active = [None] * (E + 1)
    for d in range(E + 1):
        active[d] = tuple(x for x in range(n) if first[x] < d <= last[x])
    layers: list[dict] = [dict() for _ in range(E + 1)]
    layers[0][()] = (0, None, False)
    work = 0
    for d, (u, v) in enumerate(order):
        before = active[d]
        after = active[d + 1]
        nxt = layers[d + 1]
        for state, (cost, _, _) in layers[d].items():
            work += 1
            if work > budget:
                raise BudgetExceeded(f"oddness search exceeded {budget} states")
            st = dict(zip(before, state))
            su = st.get(u, 0)
            sv = st.get(v, 0)
            for take in (False, True):
                s2 = dict(st)
                s2.setdefault(u, 0)
                s2.setdefault(v, 0)
                c2 = cost
                if take:
                    if su == 2 or sv == 2:
                        continue
                    if su == 0 and sv == 0:
                        s2[u] = 4 + 2 * v + 1
                        s2[v] = 4 + 2 * u + 1
                    elif su == 0 or sv == 0:
                        a, b, sb = (u, v, sv) if su == 0 else (v, u, su)
                        partner, par = divmod(sb - 4, 2)
                        s2[b] = 2
                        s2[a] = 4 + 2 * partner + (par ^ 1)
                        s2[partner] = 4 + 2 * a + (par ^ 1)
                    else:
                        pu, qu = divmod(su - 4, 2)
                        pv, qv = divmod(sv - 4, 2)
                        if pu == v:
                            s2[u] = s2[v] = 2
                            if (qu + 1) % 2 == 1:
                                c2 += 1
                        else:
                            q = qu ^ qv ^ 1
                            s2[u] = s2[v] = 2
                            s2[pu] = 4 + 2 * pv + q
                            s2[pv] = 4 + 2 * pu + q
                # vertices leaving the frontier must be saturated
                ok = True
                for x in (u, v):
                    if last[x] == d and s2[x] != 2:
                        ok = False
                if not ok:
                    continue
                key = tuple(s2.get(x, 0) for x in after)
                prev = nxt.get(key)
                if prev is None or c2 < prev[0]:
                    nxt[key] = (c2, state, take)
    final = layers[E].get(())
    if final is None:
        raise NoPerfectMatching("graph has no 2-factor (equivalently no perfect matching)")
    chosen = []
    key = ()
    for d in range(E, 0, -1):
        cost, prev, take = layers[d][key]
        if take:
            chosen.append(order[d - 1])
        key = prev
    chosen.sort()
    cset = set(chosen)
    matching = [e for e in g.edges if e not in cset]
    cycles = _cycles_of(n, chosen)
    wit = TwoFactor(cycles, matching)
    return OddnessResult(wit.odd_cycles, wit)


# ---------------------------------------------------------------------------
# perfect matchings

def perfect_matchings(g: Graph, budget: int = DEFAULT_BUDGET) -> list[frozenset]:
    """All perfect matchings, each a frozenset of normalized edges."""
    n = g.n
    matched = [False] * n
    cur: list[tuple[int, int]] = []
    out: list[frozenset] = []
    count = [0]

    def rec(start: int) -> None:
        count[0] += 1
        if count[0] > budget:
            raise BudgetExceeded(f"matching enumeration exceeded {budget} nodes")
        v = start
        while v < n and matched[v]:
            v += 1
        if v == n:
            out.append(frozenset(cur))
            return
        matched[v] = True
        for w in g.neighbors(v):
            if not matched[w]:
                matched[w] = True
                cur.append(norm_edge(v, w))
                rec(v + 1)
                cur.pop()
                matched[w] = False
        matched[v] = False

    if n % 2 == 0:
        rec(0)
    return out


def coverable_by_k_perfect_matchings(g: Graph, k: int, budget: int = DEFAULT_BUDGET):
    """Return a list of k perfect matchings covering E(g), or None."""
    pms = perfect_matchings(g, budget)
    eidx = {e: i for i, e in enumerate(g.edges)}
    masks = [sum(1 << eidx[e] for e in pm) for pm in pms]
    full = (1 << g.m) - 1
    containing = [[j for j, mk in enumerate(masks) if mk >> i & 1] for i in range(g.m)]
    nodes = [0]

    def rec(covered: int, chosen: list[int]):
        if covered == full:
            return list(chosen)
        if len(chosen) == k:
            return None
        nodes[0] += 1
        if nodes[0] > budget:
            raise BudgetExceeded("cover search exceeded budget")
        best = None
        for i in range(g.m):
            if not covered >> i & 1:
                if best is None or len(containing[i]) < len(containing[best]):
                    best = i
        for j in containing[best]:
            chosen.append(j)
            r = rec(covered | masks[j], chosen)
            chosen.pop()
            if r is not None:
                return r
        return None

    if g.m == 0:
        return []
    res = rec(0, [])
    if res is None:
        return None
    res += [res[-1]] * (k - len(res))
    return [sorted(pms[j]) for j in res]


# ---------------------------------------------------------------------------
# cyclic edge-connectivity

@dataclass
class CyclicConnectivity:
    value: int
    exact: bool
    cut: list[tuple[int, int]] = field(default_factory=list)
    side: list[int] = field(default_factory=list)

    def __str__(self) -> str:
        return str(self.value) if self.exact else f">={self.value}"


def _has_cycle(g: Graph, verts: set[int]) -> bool:
    ne = sum(1 for u, v in g.edges if u in verts and v in verts)
    comps = 0
    seen = set()
    for s in verts:
        if s in seen:
            continue
        comps += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y in verts and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return ne > len(verts) - comps


def _maxflow(g: Graph, S: set[int], X: set[int], cap: int) -> int:
    """Edge-disjoint S-X paths (unit capacities), stopping at `cap`."""
    flow: dict[tuple[int, int], int] = {}
    total = 0
    while total < cap:
        prev: dict[int, int | None] = {x: None for x in S}
        q = deque(S)
        end = None
        while q and end is None:
            x = q.popleft()
            for y in g.neighbors(x):
                if y in prev or y in S:
                    continue
                if flow.get((x, y), 0) >= 1:
                    continue
                prev[y] = x
                if y in X:
                    end = y
                    break
                q.append(y)
        if end is None:
            break
        y = end
        while prev[y] is not None:
            x = prev[y]
            if flow.get((y, x), 0) > 0:
                flow[(y, x)] -= 1
            else:
                flow[(x, y)] = flow.get((x, y), 0) + 1
            y = x
        total += 1
    return total


def _cut_search(g: Graph, k: int, budget: list[int]):
    n = g.n
    allv = set(range(n))
    S = {0}
    X: set[int] = set()

    def boundary():
        return [(s, y) for s in S for y in g.neighbors(s) if y not in S]

    def rec():
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceeded("cyclic connectivity search exceeded budget")
        bd = boundary()
        if X and _maxflow(g, S, X, k + 1) > k:
            return None
        open_edges = [e for e in bd if e[1] not in X]
        if not open_edges:
            if len(bd) > k or len(S) == n:
                return None
            if _has_cycle(g, S) and _has_cycle(g, allv - S):
                return sorted(S), sorted(norm_edge(*e) for e in bd)
            return None
        y = min(open_edges, key=lambda e: e[1])[1]
        S.add(y)
        r = rec()
        S.discard(y)
        if r:
            return r
        X.add(y)
        r = rec()
        X.discard(y)
        return r

    return rec()


def cyclic_edge_connectivity(g: Graph, k_max: int = 6, budget: int = DEFAULT_BUDGET) -> CyclicConnectivity:
    """Least k <= k_max with a cycle-separating k-edge-cut, else AtLeast(k_max + 1)."""
    if g.n == 0:
        return CyclicConnectivity(k_max + 1, False)
    if len(connected_components(g)) > 1:
        comps = connected_components(g)
        cyc = [c for c in comps if _has_cycle(g, set(c))]
        if len(cyc) >= 2:
            return CyclicConnectivity(0, True, [], cyc[0])
    left = [budget]
    for k in range(0, k_max + 1):
        r = _cut_search(g, k, left)
        if r:
            side, cut = r
            return CyclicConnectivity(len(cut), True, cut, side)
    return CyclicConnectivity(k_max + 1, False)


# ---------------------------------------------------------------------------
# matching census on one clipped cluster of a 5-pole lift

@dataclass
class Census:
    matchings: list[frozenset]
    pairs: list[tuple[int, int]]
    odd_cycle_lengths: list[tuple[int, ...]]  # per pair, sorted odd cycle lengths
    distribution: dict[int, int]  # odd length -> number of pairs containing such a cycle

    @property
    def all_pairs_have_odd_cycle(self) -> bool:
        return all(self.odd_cycle_lengths)


def cluster_matching_census(p, conn: str = "alpha") -> Census:
    """Saturating matchings of one cluster (core plus w, dangling edges
    allowed), compatible ordered pairs, and the odd cycles each pair forces
    in the complement on two joined clusters."""
    from .multipole import FivePole

    assert isinstance(p, FivePole)
    n = p.core.n
    w = n
    inner = list(p.core.edges) + [norm_edge(p.anchor("v"), w)]
    # dangling edges, named by role
    dang = {"A": p.anchor("A"), "B": p.anchor("B"), "B'": p.anchor("B'"), "A'": p.anchor("A'"),
            "in": w, "out": w}
    roles = list(dang)
    items = [("e", e) for e in inner] + [("d", r) for r in roles]
    nv = n + 1
    ends = {("e", e): e for e in inner}
    for r in roles:
        ends[("d", r)] = (dang[r],)
    match: list[frozenset] = []
    used = [False] * nv

    def rec(i, cur):
        if i == len(items):
            if all(used):
                match.append(frozenset(cur))
            return
        it = items[i]
        vs = ends[it]
        if all(not used[x] for x in vs):
            for x in vs:
                used[x] = True
            cur.append(it)
            rec(i + 1, cur)
            cur.pop()
            for x in vs:
                used[x] = False
        rec(i + 1, cur)

    rec(0, [])
    joins = [("A'", "A"), ("B'", "B"), ("out", "in")] if conn == "alpha" else \
        [("B'", "A"), ("A'", "B"), ("out", "in")]

    def part(M, r):
        return ("d", r) in M

    pairs = [(i, j) for i, M1 in enumerate(match) for j, M2 in enumerate(match)
             if all(part(M1, o) == part(M2, q) for o, q in joins)]
    lengths = []
    dist: dict[int, int] = {}
    for i, j in pairs:
        M1, M2 = match[i], match[j]
        edges = [e for e in inner if ("e", e) not in M1]
        edges += [(x + nv, y + nv) for x, y in inner if ("e", (x, y)) not in M2]
        for o, q in joins:
            if not part(M1, o):
                edges.append((dang[o], dang[q] + nv))
        odd = tuple(sorted(len(c) for c in _closed_cycles(2 * nv, edges) if len(c) % 2))
        lengths.append(odd)
        for L in set(odd):
            dist[L] = dist.get(L, 0) + 1
    return Census(match, pairs, lengths, dict(sorted(dist.items())))


def _closed_cycles(n: int, edges) -> list[list[int]]:
    """Cycles among components where every vertex has degree 2."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s] or not adj[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        if all(len(adj[x]) == 2 for x in comp):
            out.append(comp)
    return out
