"""Exact 3-edge-coloring for graphs of maximum degree 3.

The search assigns colors edge by edge in a fixed order derived from a
low-frontier vertex sweep.  Because the order is fixed, the remaining
subproblem at depth d depends only on the colors already used at the
"active" vertices (those with both colored and uncolored incident edges).
Failed states are memoized as nogoods, keyed up to a permutation of the
three colors, which turns the exhaustive search on long cyclic lifts into
something close to a dynamic program over the sweep.
"""

from __future__ import annotations

import itertools
import sys
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import BudgetExceeded, LengthMismatch, NotDegreeAtMost3
from .graph import EdgeColoring, Graph, check_proper, is_cubic, norm_edge

DEFAULT_NODE_BUDGET = 10**8

_BITS = (1, 2, 4)
_PERM_MASK = []
for _p in itertools.permutations(range(3)):
    _PERM_MASK.append(tuple(sum(1 << _p[b] for b in range(3) if m >> b & 1) for m in range(8)))


@dataclass(frozen=True)
class Unsatisfiable:
    """Certificate that the search space was exhausted.

    `nodes` counts search nodes visited; `order` is the edge order used, so
    the run can be replayed.
    """

    nodes: int
    order: tuple[tuple[int, int], ...]

    def __bool__(self) -> bool:
        return False


def _sweep_from(g: Graph, start: int) -> tuple[list[int], tuple[int, int]]:
    n = g.n
    placed = [False] * n
    left = [g.degree(v) for v in range(n)]  # unplaced neighbours
    order: list[int] = []
    frontier = 0
    width = total = 0
    roots = [start] + [v for v in range(n) if v != start]
    cand: set[int] = set()
    for root in roots:
        if placed[root]:
            continue
        cand.add(root)
        while cand:
            best = None
            for v in cand:
                closes = sum(1 for w in g.neighbors(v) if placed[w] and left[w] == 1)
                delta = (1 if left[v] - sum(1 for w in g.neighbors(v) if placed[w]) > 0 else 0) - closes
                key = (delta, -closes, v)
                if best is None or key < best[0]:
                    best = (key, v)
            v = best[1]
            cand.discard(v)
            placed[v] = True
            order.append(v)
            frontier += best[0][0]
            for w in g.neighbors(v):
                left[w] -= 1
                if not placed[w]:
                    cand.add(w)
            width = max(width, frontier)
            total += frontier
    return order, (width, total)


def sweep_order(g: Graph, start: int | None = None, tries: int = 64) -> list[int]:
    """Greedy vertex order keeping the frontier small.

    The frontier is the set of placed vertices that still have unplaced
    neighbours.  Each step places the candidate that grows it least (ties:
    closes most frontier vertices, then lowest index).  Without `start`, up to
    `tries` evenly spread start vertices are tried and the narrowest order kept.
    """
    if g.n == 0:
        return []
    if start is not None:
        return _sweep_from(g, start)[0]
    step = max(1, g.n // tries)
    best = None
    for s in range(0, g.n, step):
        order, cost = _sweep_from(g, s)
        if best is None or cost < best[0]:
            best = (cost, order)
    return best[1]


def edge_order(g: Graph, start: int | None = None) -> list[tuple[int, int]]:
    return list(_edge_order(g, start))


@lru_cache(maxsize=256)
def _edge_order(g: Graph, start: int | None) -> tuple[tuple[int, int], ...]:
    pos = {}
    out = []
    for k, v in enumerate(sweep_order(g, start)):
        pos[v] = k
        for w in sorted(g.neighbors(v), key=lambda x: pos.get(x, -1)):
            if w in pos and w != v:
                out.append(norm_edge(v, w))
    return tuple(out)


class EdgeColorSolver:
    """One search instance.  Construct, then call `solve()`."""

    def __init__(self, g: Graph, pinned: Mapping[tuple[int, int], int] | None = None,
                 node_budget: int = DEFAULT_NODE_BUDGET, start: int | None = None):
        if any(d > 3 for d in g.degrees()):
            raise NotDegreeAtMost3("maximum degree exceeds 3")
        self.g = g
        self.pinned = {norm_edge(*e): c for e, c in (pinned or {}).items()}
        for e, c in self.pinned.items():
            if e not in g.edge_set():
                raise ValueError(f"pinned edge {e} not in graph")
            if c not in (1, 2, 3):
                raise ValueError(f"pinned color {c} not in 1..3")
        self.node_budget = node_budget
        self.order = [e for e in edge_order(g, start) if e not in self.pinned]
        self.nodes = 0

    def _prepare(self) -> bool:
        n = self.g.n
        self.mask = [0] * n
        for (u, v), c in self.pinned.items():
            b = _BITS[c - 1]
            if self.mask[u] & b or self.mask[v] & b:
                return False
            self.mask[u] |= b
            self.mask[v] |= b
        first = [None] * n
        last = [-1] * n
        for (u, v) in self.pinned:
            first[u] = first[v] = -1
        for d, (u, v) in enumerate(self.order):
            for x in (u, v):
                if first[x] is None:
                    first[x] = d
                last[x] = d
        E = len(self.order)
        self.active: list[tuple[int, ...]] = []
        buckets: list[list[int]] = [[] for _ in range(E + 1)]
        for x in range(n):
            if first[x] is None or last[x] < 0:
                continue
            for d in range(first[x] + 1, last[x] + 1):
                buckets[max(d, 0)].append(x)
        self.active = [tuple(b) for b in buckets]
        self.fail: list[set] = [set() for _ in range(E + 1)]
        self.colors = [0] * E
        return True

    def _key(self, d: int):
        masks = tuple(self.mask[x] for x in self.active[d])
        return min(tuple(pm[m] for m in masks) for pm in _PERM_MASK)

    def _rec(self, d: int) -> bool:
        if d == len(self.order):
            return True
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise BudgetExceeded(f"node budget {self.node_budget} exhausted")
        key = self._key(d)
        if key in self.fail[d]:
            return False
        u, v = self.order[d]
        mask = self.mask
        free = ~(mask[u] | mask[v]) & 7
        for c in range(3):
            b = _BITS[c]
            if free & b:
                mask[u] |= b
                mask[v] |= b
                self.colors[d] = c + 1
                if self._rec(d + 1):
                    return True
                mask[u] &= ~b
                mask[v] &= ~b
        self.fail[d].add(key)
        return False

    def solve(self) -> EdgeColoring | Unsatisfiable:
        order = tuple(self.order)
        if not self._prepare():
            return Unsatisfiable(0, order)
        limit = sys.getrecursionlimit()
        if limit < len(self.order) + 200:
            sys.setrecursionlimit(len(self.order) + 200)
        if not self._rec(0):
            return Unsatisfiable(self.nodes, order)
        assignment = dict(self.pinned)
        assignment.update(zip(self.order, self.colors))
        col = EdgeColoring(assignment)
        check_proper(self.g, col)
        return col


def find_3_edge_coloring(g: Graph, pinned: Mapping[tuple[int, int], int] | None = None,
                         node_budget: int = DEFAULT_NODE_BUDGET) -> EdgeColoring | Unsatisfiable:
    """A proper 3-edge-coloring of `g` extending `pinned`, or an Unsatisfiable certificate."""
    return EdgeColorSolver(g, pinned, node_budget).solve()


def is_3_edge_colorable(g: Graph, pinned=None, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    return isinstance(find_3_edge_coloring(g, pinned, node_budget), EdgeColoring)


def chromatic_index(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    """3 if `g` is 3-edge-colorable, else 4 (Vizing, for simple max-degree-3 graphs)."""
    return 3 if is_3_edge_colorable(g, node_budget=node_budget) else 4


def is_snark(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    from .graph import is_connected

    return is_cubic(g) and is_connected(g) and chromatic_index(g, node_budget) == 4


def is_proper_snark(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    from .graph import girth
    from .invariants import cyclic_edge_connectivity

    if not is_snark(g, node_budget):
        return False
    if girth(g) < 5:
        return False
    return cyclic_edge_connectivity(g, k_max=3).value >= 4


def color_with_string(vg, colors: Sequence[int] | str, node_budget: int = DEFAULT_NODE_BUDGET):
    """Color the lift of `vg` with spoke v_i w_i forced to colors[i].

    `vg` is a VoltageGraph with base vertices named "v" and "w".  Returns
    (lift graph, EdgeColoring or Unsatisfiable).
    """
    cs = [int(c) for c in colors]
    if len(cs) != vg.m:
        raise LengthMismatch(f"string has length {len(cs)}, lift has m={vg.m}")
    g = vg.lift()
    pins = {norm_edge(vg.index("v", i), vg.index("w", i)): c for i, c in enumerate(cs)}
    return g, find_3_edge_coloring(g, pins, node_budget)
