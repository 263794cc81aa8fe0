"""5-poles cut from cubic graphs, and their admissible color patterns."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .coloring import is_3_edge_colorable
from .errors import AnchorCollision, InvalidGraph, NotAPath
from .graph import Graph, is_cubic, petersen

ROLES = ("A", "B", "v", "B'", "A'")


@dataclass(frozen=True)
class FivePole:
    """A core graph plus five dangling semiedges.

    `anchors` lists the core vertices carrying the dangling edges in the
    order (A, B, v, B', A').  A vertex may appear twice when two dangling
    edges end on it.  `names` gives a printable label per core vertex.
    """

    core: Graph
    anchors: tuple[int, int, int, int, int]
    names: tuple[str, ...]

    def __post_init__(self):
        if len(self.anchors) != 5:
            raise InvalidGraph("a 5-pole needs exactly five anchors")
        if len(self.names) != self.core.n or len(set(self.names)) != self.core.n:
            raise InvalidGraph("names must be unique, one per core vertex")
        extra = [0] * self.core.n
        for a in self.anchors:
            extra[a] += 1
        for x in range(self.core.n):
            if self.core.degree(x) + extra[x] != 3:
                raise InvalidGraph(f"vertex {self.names[x]} would not be cubic with its dangling edges")

    def anchor(self, role: str) -> int:
        return self.anchors[ROLES.index(role)]

    @property
    def shared_anchor(self) -> bool:
        return len(set(self.anchors)) < 5

    def with_pendants(self) -> tuple[Graph, tuple[tuple[int, int], ...]]:
        """Core plus one pendant vertex per dangling edge, in anchor order.

        Returns the graph and the five pendant edges (anchor, pendant).
        """
        n = self.core.n
        dang = tuple((a, n + k) for k, a in enumerate(self.anchors))
        return Graph(n + 5, list(self.core.edges) + list(dang)), dang

    @cached_property
    def _concrete_patterns(self) -> frozenset["ColorPattern"]:
        g, dang = self.with_pendants()
        out = set()
        for cols in itertools.product((1, 2, 3), repeat=5):
            counts = sorted(cols.count(c) for c in (1, 2, 3))
            if counts != [1, 1, 3]:
                continue  # parity: any other signature is impossible
            if is_3_edge_colorable(g, dict(zip(dang, cols))):
                a, b, sp, bp, ap = cols
                out.add(ColorPattern((a, b), (ap, bp), sp))
        return frozenset(out)

    def to_text(self) -> str:
        """Two lines: graph6 of the core, then the anchor indices (A B v B' A')."""
        from .codec import encode_graph6

        return encode_graph6(self.core) + "\n" + " ".join(map(str, self.anchors)) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "FivePole":
        from .codec import decode_graph6

        lines = [ln for ln in text.splitlines() if ln.strip()]
        core = decode_graph6(lines[0])
        anchors = tuple(int(x) for x in lines[1].split())
        return cls(core, anchors, tuple(str(i) for i in range(core.n)))


@dataclass(frozen=True, order=True)
class ColorPattern:
    """Colors on the dangling edges: input (A, B), output (A', B'), spoke at v."""

    input: tuple[int, int]
    output: tuple[int, int]
    spoke: int

    def main_color(self) -> int:
        cols = [*self.input, *self.output, self.spoke]
        return max((1, 2, 3), key=cols.count)

    def normalized(self) -> str:
        """x/y/z form: x is the thrice-used color, y and z by first appearance."""
        x = self.main_color()
        seq = [*self.input, *self.output]
        rest = [c for c in dict.fromkeys(seq) if c != x]
        rest += [c for c in (1, 2, 3) if c != x and c not in rest]
        name = {x: "x", rest[0]: "y", rest[1]: "z"}
        (a, b), (ap, bp) = self.input, self.output
        return f"[({name[a]},{name[b]}),({name[ap]},{name[bp]})] spoke {name[self.spoke]}"


PATTERN_FAMILIES = {
    "[(x,x),(y,z)] spoke x": "TwoLeft",
    "[(y,z),(x,x)] spoke x": "TwoRight",
    "[(x,y),(x,z)] spoke x": "AltTop",
    "[(y,x),(z,x)] spoke x": "AltBot",
}


def admissible_patterns(p: FivePole) -> frozenset[ColorPattern]:
    """Every concrete assignment of colors to the five dangling edges that
    extends to a proper 3-edge-coloring of the core."""
    return p._concrete_patterns


def normalized_patterns(p: FivePole) -> set[str]:
    return {c.normalized() for c in admissible_patterns(p)}


def has_loupekine_property(p: FivePole) -> bool:
    """Equal input colors force unequal outputs, unequal inputs force equal outputs."""
    for pat in admissible_patterns(p):
        same_in = pat.input[0] == pat.input[1]
        same_out = pat.output[0] == pat.output[1]
        if same_in == same_out:
            return False
    return True


def remove_path(g: Graph, s: int, w: int, t: int, A: int | None = None, B: int | None = None,
                A_prime: int | None = None, B_prime: int | None = None,
                names: tuple[str, ...] | None = None, allow_shared: bool = False) -> FivePole:
    """Delete the path s-w-t from cubic `g`.

    A, B name the two other neighbours of s; A', B' those of t.  When not
    given they default to the neighbours in increasing order.  Remaining
    vertices keep their relative order.
    """
    if not is_cubic(g):
        raise NotAPath("source graph is not cubic")
    if len({s, w, t}) != 3 or not g.has_edge(s, w) or not g.has_edge(w, t):
        raise NotAPath(f"{s}-{w}-{t} is not a path")
    if g.has_edge(s, t):
        raise NotAPath("path endpoints are adjacent, so a dangling edge would end on the path")
    ns = sorted(x for x in g.neighbors(s) if x != w)
    nt = sorted(x for x in g.neighbors(t) if x != w)
    (nv,) = [x for x in g.neighbors(w) if x not in (s, t)]
    if A is None and B is None:
        A, B = ns
    elif A is None or B is None:
        (other,) = [x for x in ns if x != (A if A is not None else B)]
        A, B = (A, other) if A is not None else (other, B)
    if sorted((A, B)) != ns:
        raise NotAPath("A, B must be the two other neighbours of s")
    if A_prime is None and B_prime is None:
        A_prime, B_prime = nt
    elif A_prime is None or B_prime is None:
        (other,) = [x for x in nt if x != (A_prime if A_prime is not None else B_prime)]
        A_prime, B_prime = (A_prime, other) if A_prime is not None else (other, B_prime)
    if sorted((A_prime, B_prime)) != nt:
        raise NotAPath("A', B' must be the two other neighbours of t")
    raw = (A, B, nv, B_prime, A_prime)
    if len(set(raw)) < 5 and not allow_shared:
        raise AnchorCollision("two dangling edges share an endpoint")
    keep = [x for x in range(g.n) if x not in (s, w, t)]
    pos = {x: k for k, x in enumerate(keep)}
    core = g.induced(keep)
    labels = tuple(names[x] for x in keep) if names else tuple(str(x) for x in keep)
    return FivePole(core, tuple(pos[x] for x in raw), labels)


# ---------------------------------------------------------------------------
# source graphs and the named poles

def petersen_labelled() -> tuple[Graph, tuple[str, ...]]:
    """Petersen with outer w0..w4 and inner pentagram v0..v4 (spokes v_i w_i)."""
    return petersen(), tuple(f"w{i}" for i in range(5)) + tuple(f"v{i}" for i in range(5))


def petersen_pole() -> FivePole:
    g, names = petersen_labelled()
    ix = {nm: k for k, nm in enumerate(names)}
    return remove_path(g, ix["w3"], ix["w4"], ix["w0"], A=ix["v3"], B=ix["w2"],
                       A_prime=ix["v0"], B_prime=ix["w1"], names=names)


def t_bar() -> tuple[Graph, tuple[str, ...]]:
    """Petersen with the outer vertex u0 blown up into the triangle t1 t2 t3."""
    names = tuple(f"u{j}" for j in range(1, 5)) + tuple(f"i{j}" for j in range(5)) + ("t1", "t2", "t3")
    ix = {nm: k for k, nm in enumerate(names)}
    pairs = [("u1", "u2"), ("u2", "u3"), ("u3", "u4")]
    pairs += [(f"i{j}", f"i{(j + 2) % 5}") for j in range(5)]
    pairs += [(f"u{j}", f"i{j}") for j in range(1, 5)]
    pairs += [("t1", "t2"), ("t2", "t3"), ("t1", "t3"), ("t1", "u1"), ("t2", "u4"), ("t3", "i0")]
    return Graph(len(names), [(ix[a], ix[b]) for a, b in pairs]), names


def t1_pole() -> FivePole:
    g, names = t_bar()
    ix = {nm: k for k, nm in enumerate(names)}
    return remove_path(g, ix["t1"], ix["u1"], ix["u2"], A=ix["t3"], B=ix["t2"],
                       A_prime=ix["u3"], B_prime=ix["i2"], names=names)


def t2_pole() -> FivePole:
    g, names = t_bar()
    ix = {nm: k for k, nm in enumerate(names)}
    return remove_path(g, ix["t2"], ix["t1"], ix["u1"], A=ix["t3"], B=ix["u4"],
                       A_prime=ix["i1"], B_prime=ix["u2"], names=names, allow_shared=True)


G_CORE_EDGES = (
    ("A", "C"), ("x2", "x6"), ("x1", "x5"), ("x3", "A'"), ("B'", "x4"),
    ("C", "A'"), ("A", "x6"), ("x2", "x4"), ("x1", "B"), ("x5", "x3"),
    ("x6", "x5"), ("x2", "B"), ("x4", "x3"), ("B'", "x1"),
)


def g_bar() -> tuple[Graph, tuple[str, ...]]:
    """The 14-vertex colorable graph whose 5-pole generates the G family."""
    names = ("A", "B", "C", "B'", "A'", "x1", "x2", "x3", "x4", "x5", "x6", "s", "w", "t")
    ix = {nm: k for k, nm in enumerate(names)}
    pairs = list(G_CORE_EDGES) + [("A", "s"), ("B", "s"), ("A'", "t"), ("B'", "t"),
                                  ("s", "w"), ("w", "t"), ("C", "w")]
    return Graph(len(names), [(ix[a], ix[b]) for a, b in pairs]), names


def g_pole() -> FivePole:
    g, names = g_bar()
    ix = {nm: k for k, nm in enumerate(names)}
    return remove_path(g, ix["s"], ix["w"], ix["t"], A=ix["A"], B=ix["B"],
                       A_prime=ix["A'"], B_prime=ix["B'"], names=names)
