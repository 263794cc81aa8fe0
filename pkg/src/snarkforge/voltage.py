"""Voltage graphs over Z_m, their lifts, and the named snark families.

Lift vertex numbering: base vertex of rank r (declaration order) in layer i
gets index r * m + i.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field, replace

from .errors import (InvalidGraph, InvalidParameters, OddM, ParallelEdgeInLift, SelfLoopInLift,
                     UnequalSkips, UnknownFamily, VoltageOutOfRange, WrongShape)
from .graph import Graph, contract_cycle, norm_edge
from .multipole import FivePole


@dataclass(frozen=True)
class VoltageGraph:
    m: int
    vertices: tuple[str, ...]
    zero_edges: tuple[tuple[str, str], ...] = ()
    arrows: tuple[tuple[str, str, int], ...] = ()  # (tail, head, voltage)
    loops: tuple[tuple[str, int], ...] = ()
    semiedges: tuple[tuple[str, int], ...] = ()  # voltage m/2: v_i -- v_{i+m/2}
    roles: tuple[tuple[str, str], ...] = ()
    meta: tuple[tuple[str, object], ...] = ()

    def __post_init__(self):
        if self.m < 3:
            raise InvalidParameters("m must be at least 3")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidGraph("duplicate base vertex name")
        known = set(self.vertices)
        for e in self.zero_edges:
            if not set(e) <= known:
                raise InvalidGraph(f"unknown vertex in {e}")
        object.__setattr__(self, "arrows", tuple((t, h, a % self.m) for t, h, a in self.arrows))
        object.__setattr__(self, "loops", tuple((x, c % self.m) for x, c in self.loops))
        for t, h, _ in self.arrows:
            if t not in known or h not in known:
                raise InvalidGraph(f"unknown vertex in arrow {t}->{h}")
        for x, c in self.loops:
            if x not in known:
                raise InvalidGraph(f"unknown loop vertex {x}")
        for x, k in self.semiedges:
            if x not in known:
                raise InvalidGraph(f"unknown semiedge vertex {x}")
            if self.m % 2 or k % self.m != self.m // 2:
                raise InvalidParameters("a semiedge needs even m and voltage m/2")

    # lookups -----------------------------------------------------------------
    @property
    def info(self) -> dict:
        return dict(self.meta)

    def resolve(self, label: str) -> str:
        return dict(self.roles).get(label, label)

    def rank(self, label: str) -> int:
        return self.vertices.index(self.resolve(label))

    def index(self, label: str, layer: int) -> int:
        return self.rank(label) * self.m + layer % self.m

    def base_degrees(self) -> dict[str, int]:
        deg = dict.fromkeys(self.vertices, 0)
        for a, b in self.zero_edges:
            deg[a] += 1
            deg[b] += 1
        for t, h, _ in self.arrows:
            deg[t] += 1
            deg[h] += 1
        for x, _ in self.loops:
            deg[x] += 2
        for x, _ in self.semiedges:
            deg[x] += 1
        return deg

    # lift ----------------------------------------------------------------
    def lift_edges(self) -> list[tuple[int, int]]:
        m = self.m
        out = []
        for a, b in self.zero_edges:
            out += [(self.index(a, i), self.index(b, i)) for i in range(m)]
        for t, h, a in self.arrows:
            out += [(self.index(t, i), self.index(h, i + a)) for i in range(m)]
        for x, c in self.loops:
            out += [(self.index(x, i), self.index(x, i + c)) for i in range(m)]
        for x, k in self.semiedges:
            out += [(self.index(x, i), self.index(x, i + m // 2)) for i in range(m // 2)]
        return out

    def lift(self) -> Graph:
        seen = set()
        for u, v in self.lift_edges():
            if u == v:
                raise SelfLoopInLift(f"lift vertex {u} would carry a loop")
            e = norm_edge(u, v)
            if e in seen:
                raise ParallelEdgeInLift(f"lift edge {e[0]}-{e[1]} would be doubled")
            seen.add(e)
        return Graph(self.m * len(self.vertices), seen)

    def scaled(self, s: int) -> "VoltageGraph":
        """Multiply every voltage by s."""
        return replace(self, arrows=tuple((t, h, a * s) for t, h, a in self.arrows),
                       loops=tuple((x, c * s) for x, c in self.loops))

    def reversed_arrow(self, k: int) -> "VoltageGraph":
        """Reverse arrow k and negate its voltage."""
        arr = list(self.arrows)
        t, h, a = arr[k]
        arr[k] = (h, t, -a)
        return replace(self, arrows=tuple(arr))


# ---------------------------------------------------------------------------
# connections

def _check_voltages(m: int, a: int, b: int, c: int) -> None:
    if m < 3:
        raise InvalidParameters("m must be at least 3")
    for nm, val in (("a", a), ("b", b)):
        if not 1 <= val < m:
            raise VoltageOutOfRange(f"{nm}={val} outside 1..{m - 1}")
    if not (1 <= c and 2 * c < m):
        raise VoltageOutOfRange(f"c={c} must satisfy 1 <= c < m/2")


def _connect(p: FivePole, m: int, a: int, b: int, c: int, conn: str) -> VoltageGraph:
    _check_voltages(m, a, b, c)
    names = list(p.names)
    if "w" in names:
        raise InvalidGraph("pole already has a vertex named w")
    nm = {role: p.names[p.anchor(role)] for role in ("A", "B", "v", "B'", "A'")}
    zero = [(p.names[u], p.names[v]) for u, v in p.core.edges] + [(nm["v"], "w")]
    if conn == "alpha":
        arrows = [(nm["A'"], nm["A"], a), (nm["B'"], nm["B"], b)]
    else:
        arrows = [(nm["B'"], nm["A"], a), (nm["A'"], nm["B"], b)]
    roles = tuple(nm.items()) + (("w", "w"),)
    meta = (("connection", conn), ("a", a), ("b", b), ("c", c))
    return VoltageGraph(m, tuple(names) + ("w",), tuple(zero), tuple(arrows), (("w", c),), (), roles, meta)


def alpha_connection(p: FivePole, m: int, a: int = 1, b: int = 1, c: int = 1) -> VoltageGraph:
    """Arrows A'->A (voltage a) and B'->B (voltage b), spoke v-w, loop c at w."""
    return _connect(p, m, a, b, c, "alpha")


def beta_connection(p: FivePole, m: int, a: int = 1, b: int = 1, c: int = 1) -> VoltageGraph:
    """Arrows B'->A (voltage a) and A'->B (voltage b), spoke v-w, loop c at w."""
    return _connect(p, m, a, b, c, "beta")


def cluster_cycles(vg: VoltageGraph) -> list[list[int]]:
    """Orbits of i -> i + a on cluster indices; needs equal arrow voltages."""
    if len(vg.arrows) != 2:
        raise WrongShape("expected exactly two arrows")
    a, b = vg.arrows[0][2], vg.arrows[1][2]
    if a != b:
        raise UnequalSkips(f"arrow voltages {a} and {b} differ")
    m = vg.m
    seen = [False] * m
    out = []
    for s in range(m):
        if seen[s]:
            continue
        cyc = []
        i = s
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = (i + a) % m
        out.append(cyc)
    return out


def _shape(vg: VoltageGraph):
    if len(vg.arrows) != 2 or len(vg.loops) != 1 or vg.semiedges:
        raise WrongShape("need exactly two arrows, one loop and no semiedges")
    w = vg.loops[0][0]
    spokes = [e for e in vg.zero_edges if w in e]
    if len(spokes) != 1:
        raise WrongShape("loop vertex must have a single spoke")
    return w, spokes[0]


def reconstruct_original(vg: VoltageGraph) -> tuple[Graph, tuple[str, ...]]:
    """Clip arrows and loop, then re-insert the removed path s-w-t.

    Heads of the arrows attach to s, tails to t.  Returns the graph and its
    vertex names (base names plus "s" and "t").
    """
    w, _ = _shape(vg)
    names = list(vg.vertices) + ["s", "t"]
    if len(set(names)) != len(names):
        raise WrongShape("base already has vertices named s or t")
    ix = {nm: k for k, nm in enumerate(names)}
    edges = [(ix[a], ix[b]) for a, b in vg.zero_edges]
    for tail, head, _ in vg.arrows:
        edges += [(ix[head], ix["s"]), (ix[tail], ix["t"])]
    edges += [(ix["s"], ix[w]), (ix[w], ix["t"])]
    try:
        return Graph(len(names), edges), tuple(names)
    except InvalidGraph as exc:
        raise WrongShape(str(exc)) from exc


def diameters_variant(vg: VoltageGraph) -> Graph:
    """Drop w and its loop; join v_i to v_{i+m/2} instead."""
    if vg.m % 2:
        raise OddM(f"m={vg.m} is odd")
    w, spoke = _shape(vg)
    v = spoke[0] if spoke[1] == w else spoke[1]
    keep = tuple(x for x in vg.vertices if x != w)
    zero = tuple(e for e in vg.zero_edges if w not in e)
    roles = tuple((r, x) for r, x in vg.roles if x != w)
    new = VoltageGraph(vg.m, keep, zero, vg.arrows, (), ((v, vg.m // 2),), roles, vg.meta)
    return new.lift()


# ---------------------------------------------------------------------------
# named families

FAMILIES = ("P", "T1", "T2", "G", "G34no4", "flower", "goldberg")


def claw_source() -> tuple[Graph, tuple[str, ...]]:
    """Petersen with one vertex p split: its three edges are subdivided by
    B, A and w, and the new vertices A, B, w meet at a claw centre v."""
    names = ("p", "q1", "q2", "q3", "o1", "o2", "o3", "o4", "o5", "o6", "A", "B", "w", "v")
    # Petersen relabelled so that p = 0 has neighbours q1, q2, q3.
    pet = [(1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9),
           (4, 6), (4, 8), (5, 7), (5, 9), (6, 9), (7, 8)]
    extra = [(0, 11), (11, 1), (0, 10), (10, 2), (0, 12), (12, 3), (13, 10), (13, 11), (13, 12)]
    return Graph(14, pet + extra), names


def claw_pole() -> FivePole:
    """The claw source minus the path p, w, q3."""
    from .multipole import remove_path

    g, names = claw_source()
    ix = {nm: k for k, nm in enumerate(names)}
    return remove_path(g, ix["p"], ix["w"], ix["q3"], A=ix["A"], B=ix["B"],
                       A_prime=ix["o5"], B_prime=ix["o6"], names=names)


def flower_voltage_graph(m: int) -> VoltageGraph:
    """Claw z; p, q, r with arrows p->q, q->p (voltage 1) and a loop 1 at r."""
    if m < 3:
        raise InvalidParameters("m must be at least 3")
    return VoltageGraph(m, ("z", "p", "q", "r"), (("z", "p"), ("z", "q"), ("z", "r")),
                        (("p", "q", 1), ("q", "p", 1)), (("r", 1),), meta=(("family", "flower"),))


def family_pole(name: str) -> FivePole:
    from . import multipole as mp

    table = {"P": mp.petersen_pole, "goldberg": mp.petersen_pole, "T1": mp.t1_pole,
             "T2": mp.t2_pole, "G": mp.g_pole, "G34no4": claw_pole}
    if name not in table:
        raise UnknownFamily(name)
    return table[name]()


def family_voltage_graph(name: str, conn: str = "alpha", m: int = 3, a: int = 1, b: int = 1,
                         c: int = 1) -> VoltageGraph:
    if name not in FAMILIES:
        raise UnknownFamily(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")
    if name == "flower":
        return flower_voltage_graph(m)
    if conn not in ("alpha", "beta"):
        raise InvalidParameters(f"connection must be alpha or beta, got {conn!r}")
    if name == "goldberg":
        if (conn, a, b, c) != ("alpha", 1, 1, 1):
            raise InvalidParameters("goldberg is P with alpha connection and voltages 1,1,1")
    p = family_pole(name)
    build = alpha_connection if conn == "alpha" else beta_connection
    return build(p, m, a, b, c)


def central_cycle(vg: VoltageGraph) -> list[int]:
    """Lift indices of w_0, w_c, w_2c, ... (the loop cycle through w_0)."""
    w, c = vg.loops[0]
    out = []
    i = 0
    while True:
        out.append(vg.index(w, i))
        i = (i + c) % vg.m
        if i == 0:
            return out


def family(name: str, conn: str = "alpha", m: int = 3, a: int = 1, b: int = 1, c: int = 1,
           contract: bool = False) -> Graph:
    """Lift of a named family; with `contract`, the central triangle (m/gcd(c,m) = 3
    with a single loop cycle, i.e. m = 3) is shrunk to a vertex."""
    vg = family_voltage_graph(name, conn, m, a, b, c)
    g = vg.lift()
    if contract:
        if not vg.loops or vg.m != 3:
            raise InvalidParameters("contraction needs a loop forming one triangle (m = 3)")
        g = contract_cycle(g, central_cycle(vg))
    return g


# ---------------------------------------------------------------------------
# textual family spec, e.g. "T2:alpha:m=7,a=1,b=1,c=1,contract=false"

@dataclass(frozen=True)
class FamilySpec:
    name: str
    conn: str = "alpha"
    m: int = 3
    a: int = 1
    b: int = 1
    c: int = 1
    contract: bool = False
    diameters: bool = False

    def voltage_graph(self) -> VoltageGraph:
        return family_voltage_graph(self.name, self.conn, self.m, self.a, self.b, self.c)

    def build(self) -> Graph:
        if self.diameters:
            return diameters_variant(self.voltage_graph())
        return family(self.name, self.conn, self.m, self.a, self.b, self.c, self.contract)

    def __str__(self) -> str:
        s = (f"{self.name}:{self.conn}:m={self.m},a={self.a},b={self.b},c={self.c},"
             f"contract={str(self.contract).lower()}")
        return s + (",diameters=true" if self.diameters else "")


class SpecParseError(InvalidParameters):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_BOOL = {"true": True, "1": True, "yes": True, "false": False, "0": False, "no": False}


def parse_family_spec(text: str) -> FamilySpec:
    """Grammar: NAME[:CONN][:key=value,...]; keys m, a, b, c, contract, diameters."""
    parts = text.split(":")
    name = parts[0]
    if name not in FAMILIES:
        raise UnknownFamily(f"unknown family {name!r} at position 0")
    kw: dict = {"name": name}
    pos = len(name) + 1
    rest = parts[1:]
    if rest and "=" not in rest[0]:
        conn = {"alpha": "alpha", "a": "alpha", "beta": "beta", "b": "beta"}.get(rest[0].lower())
        if conn is None:
            raise SpecParseError(f"unknown connection {rest[0]!r}", pos)
        kw["conn"] = conn
        pos += len(rest[0]) + 1
        rest = rest[1:]
    if len(rest) > 1:
        raise SpecParseError("too many ':' sections", pos)
    if rest and rest[0]:
        for item in rest[0].split(","):
            m = re.fullmatch(r"\s*(\w+)\s*=\s*(\S+)\s*", item)
            if not m:
                raise SpecParseError(f"expected key=value, got {item!r}", pos)
            key, val = m.group(1), m.group(2)
            if key in ("m", "a", "b", "c"):
                if not re.fullmatch(r"-?\d+", val):
                    raise SpecParseError(f"{key} must be an integer", pos + item.index(val))
                kw[key] = int(val)
            elif key in ("contract", "diameters"):
                if val.lower() not in _BOOL:
                    raise SpecParseError(f"{key} must be true or false", pos + item.index(val))
                kw[key] = _BOOL[val.lower()]
            else:
                raise SpecParseError(f"unknown key {key!r}", pos)
            pos += len(item) + 1
    return FamilySpec(**kw)
