"""Simple undirected graphs on dense integer vertices and basic structure."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import ContractionCreatesMultiEdge, ImproperColoring, InvalidGraph, NotACycle

Edge = tuple[int, int]
INFINITE = math.inf


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on vertices 0..n-1.

    Edges are stored as sorted pairs; `edges` is sorted lexicographically so
    iteration order is deterministic.
    """

    __slots__ = ("n", "edges", "_adj", "_eset", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise InvalidGraph("negative vertex count")
        eset = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise InvalidGraph(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraph(f"edge {u}-{v} out of range for n={n}")
            key = norm_edge(u, v)
            if key in eset:
                raise InvalidGraph(f"parallel edge {key[0]}-{key[1]}")
            eset.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(eset))
        self._eset = frozenset(eset)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._hash = None

    # basic queries ---------------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self._eset

    def edge_set(self) -> frozenset[Edge]:
        return self._eset

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._eset == other._eset

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self._eset))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # derived graphs --------------------------------------------------------
    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex v renamed perm[v]."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; vertex vertices[k] becomes k."""
        pos = {v: k for k, v in enumerate(vertices)}
        return Graph(len(vertices), ((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos))

    def without_edges(self, removed: Iterable[Sequence[int]]) -> "Graph":
        gone = {norm_edge(*e) for e in removed}
        return Graph(self.n, (e for e in self.edges if e not in gone))

    def with_edges(self, added: Iterable[Sequence[int]], extra_vertices: int = 0) -> "Graph":
        return Graph(self.n + extra_vertices, list(self.edges) + [tuple(e) for e in added])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    off = 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges)
        off += g.n
    return Graph(off, edges)


# ---------------------------------------------------------------------------
# small named graphs

def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def prism(k: int = 3) -> Graph:
    """Circular ladder C_k x K_2."""
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return Graph(2 * k, edges)


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i - (i+5)."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph(10, edges)


# ---------------------------------------------------------------------------
# structure

def is_cubic(g: Graph) -> bool:
    return all(d == 3 for d in g.degrees())


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def girth(g: Graph) -> float | int:
    """Length of a shortest cycle, or INFINITE for forests."""
    best = INFINITE
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def contract_cycle(g: Graph, cycle_vertices: Iterable[int]) -> Graph:
    """Replace an induced cycle by a single vertex.

    Remaining vertices keep their relative order and are renumbered densely;
    the new vertex is appended last.
    """
    cyc = sorted(set(cycle_vertices))
    cset = set(cyc)
    if len(cyc) < 3:
        raise NotACycle("a cycle needs at least 3 vertices")
    outside = []
    for v in cyc:
        inner = [w for w in g.neighbors(v) if w in cset]
        if len(inner) != 2:
            raise NotACycle(f"vertex {v} has {len(inner)} neighbours on the cycle")
        outer = [w for w in g.neighbors(v) if w not in cset]
        if len(outer) != 1:
            raise NotACycle(f"vertex {v} has {len(outer)} neighbours off the cycle")
        outside.append(outer[0])
    if len(connected_components(g.induced(cyc))) != 1:
        raise NotACycle("vertex set induces several cycles")
    if len(set(outside)) != len(outside):
        raise ContractionCreatesMultiEdge("two cycle vertices share an outside neighbour")
    keep = [v for v in range(g.n) if v not in cset]
    pos = {v: k for k, v in enumerate(keep)}
    new = len(keep)
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    edges += [(pos[w], new) for w in outside]
    return Graph(new + 1, edges)


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for u, v in g.edges:
        for w in g.neighbors(v):
            if w > v and g.has_edge(u, w):
                out.append((u, v, w))
    return out


# ---------------------------------------------------------------------------
# edge colorings and cuts

@dataclass(frozen=True)
class EdgeColoring:
    """Map from normalized edge to color in {1, 2, 3}."""

    assignment: Mapping[Edge, int]

    def __post_init__(self):
        object.__setattr__(self, "assignment", {norm_edge(*e): c for e, c in self.assignment.items()})

    def color(self, u: int, v: int) -> int:
        return self.assignment[norm_edge(u, v)]

    def is_proper_for(self, g: Graph) -> bool:
        try:
            check_proper(g, self)
        except ImproperColoring:
            return False
        return True

    def lines(self) -> list[str]:
        return [f"edge {u}-{v}: color {c}" for (u, v), c in sorted(self.assignment.items())]

    def to_json(self) -> list[dict]:
        return [{"u": u, "v": v, "color": c} for (u, v), c in sorted(self.assignment.items())]


def check_proper(g: Graph, coloring: EdgeColoring, colors: int = 3) -> None:
    a = coloring.assignment
    if set(a) != set(g.edges):
        raise ImproperColoring("coloring does not cover exactly the edge set")
    for (u, v), c in a.items():
        if not 1 <= c <= colors:
            raise ImproperColoring(f"edge {u}-{v} has color {c}")
    for v in range(g.n):
        seen = [a[norm_edge(v, w)] for w in g.neighbors(v)]
        if len(set(seen)) != len(seen):
            raise ImproperColoring(f"clash at vertex {v}")


@dataclass(frozen=True)
class Cutset:
    edges: frozenset[Edge]
    side_a: frozenset[int] | None = None
    side_b: frozenset[int] | None = field(default=None)

    @classmethod
    def from_side(cls, g: Graph, side: Iterable[int]) -> "Cutset":
        a = frozenset(side)
        b = frozenset(range(g.n)) - a
        es = frozenset(e for e in g.edges if (e[0] in a) != (e[1] in a))
        return cls(es, a, b)


def cutset_color_parity(g: Graph, coloring: EdgeColoring, cut: Cutset) -> tuple[int, int, int, int]:
    """Per-color counts (n1, n2, n3) on the cut plus its size n."""
    check_proper(g, coloring)
    counts = [0, 0, 0]
    for e in cut.edges:
        e = norm_edge(*e)
        if e not in g.edge_set():
            raise ImproperColoring(f"cut edge {e} not in graph")
        counts[coloring.assignment[e] - 1] += 1
    return counts[0], counts[1], counts[2], len(cut.edges)


# ---------------------------------------------------------------------------
# DOT export

def to_dot(g: Graph, name: str = "G", m: int | None = None, coloring: EdgeColoring | None = None,
           labels: Sequence[str] | None = None) -> str:
    """Graphviz text. With `m`, vertex v is treated as class v // m, layer v % m,
    and pinned at angle -2*pi*layer/m on a ring whose radius grows with the class.
    """
    palette = {1: "red", 2: "green", 3: "blue"}
    lines = [f"graph {name} {{", "  node [shape=circle, width=0.25, fixedsize=true];"]
    for v in range(g.n):
        attrs = []
        if labels is not None:
            attrs.append(f'label="{labels[v]}"')
        if m:
            cls, layer = divmod(v, m)
            r = 1.5 + 1.2 * cls
            ang = -2 * math.pi * layer / m + math.pi / 2
            attrs.append(f'pos="{r * math.cos(ang):.4f},{r * math.sin(ang):.4f}!"')
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    for u, v in g.edges:
        attr = ""
        if coloring is not None and (u, v) in coloring.assignment:
            attr = f' [color="{palette.get(coloring.assignment[(u, v)], "black")}"]'
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
