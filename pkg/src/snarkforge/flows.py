"""Color strings and flows for cyclic chains of 5-pole clusters.

A cluster is one lifted copy of the pole core together with its w vertex.
Its six boundary edges are the input pair (A, B), the incoming loop edge,
the output pair (A', B') and the outgoing loop edge.  A pattern assignment
is ((x1, x2, x3), (y1, y2, y3)) with x3 and y3 the loop colors.  Strings of
clusters compose by matching outputs to the next inputs; under the beta
wiring the pair is swapped at every junction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .multipole import FivePole, admissible_patterns

Triple = tuple[int, int, int]
Assignment = tuple[Triple, Triple]
FlowSet = frozenset  # of Assignment

PERMUTATIONS = tuple(itertools.permutations((1, 2, 3)))


def as_colors(C: Sequence[int] | str) -> tuple[int, ...]:
    out = tuple(int(c) for c in C)
    if not out or any(c not in (1, 2, 3) for c in out):
        raise ValueError(f"color string must be a nonempty sequence over 1,2,3: {C!r}")
    return out


def to_str(C: Sequence[int]) -> str:
    return "".join(map(str, C))


def permute(C: Sequence[int], perm: Sequence[int]) -> tuple[int, ...]:
    """Apply color map 1->perm[0], 2->perm[1], 3->perm[2]."""
    return tuple(perm[c - 1] for c in C)


def permute_assignment(asg: Assignment, perm: Sequence[int]) -> Assignment:
    return tuple(tuple(perm[c - 1] for c in t) for t in asg)  # type: ignore[return-value]


def junction(out: Triple, conn: str) -> Triple:
    """Input triple seen by the next cluster given this cluster's output."""
    return (out[1], out[0], out[2]) if conn == "beta" else out


@lru_cache(maxsize=None)
def transfer(p: FivePole, spoke: int) -> FlowSet:
    """Single-cluster relation for spoke color `spoke`."""
    rel = set()
    for pat in admissible_patterns(p):
        if pat.spoke != spoke:
            continue
        for x3 in (1, 2, 3):
            if x3 == spoke:
                continue
            y3 = 6 - spoke - x3
            rel.add(((*pat.input, x3), (*pat.output, y3)))
    return frozenset(rel)


def compose(f: Iterable[Assignment], g: Iterable[Assignment], conn: str = "alpha") -> FlowSet:
    """Relational composition: run f, then g on the next clusters."""
    by_in: dict[Triple, list[Triple]] = {}
    for i, o in g:
        by_in.setdefault(i, []).append(o)
    out = set()
    for i, o in f:
        for o2 in by_in.get(junction(o, conn), ()):
            out.add((i, o2))
    return frozenset(out)


def flow(p: FivePole, C: Sequence[int] | str, conn: str = "alpha") -> FlowSet:
    return _flow(p, as_colors(C), conn)


@lru_cache(maxsize=200_000)
def _flow(p: FivePole, C: tuple[int, ...], conn: str) -> FlowSet:
    if len(C) == 1:
        return transfer(p, C[0])
    half = len(C) // 2
    return compose(_flow(p, C[:half], conn), _flow(p, C[half:], conn), conn)


def closes(asg: Assignment, conn: str = "alpha") -> bool:
    """True if the assignment glues back onto itself around a closed cycle."""
    return junction(asg[1], conn) == asg[0]


def string_index(p: FivePole, C: Sequence[int] | str, conn: str = "alpha") -> int:
    """3 if the lift colors with spokes forced to C (one closed cluster-cycle), else 4."""
    return 3 if any(closes(x, conn) for x in flow(p, C, conn)) else 4


def functionally_equivalent(p: FivePole, C1, C2, conn: str = "alpha") -> bool:
    return flow(p, C1, conn) == flow(p, C2, conn)


def format_flow(fs: Iterable[Assignment]) -> str:
    parts = [f"[({a},{b},{c}),({d},{e},{f})]" for (a, b, c), (d, e, f) in sorted(fs)]
    return "{ " + ", ".join(parts) + " }" if parts else "{}"


def symbolic(asg: Assignment, x: int, y: int, z: int) -> str:
    nm = {x: "x", y: "y", z: "z"}
    (a, b, c), (d, e, f) = asg
    return f"[({nm[a]},{nm[b]},{nm[c]}),({nm[d]},{nm[e]},{nm[f]})]"


# ---------------------------------------------------------------------------
# forbidden substrings

@dataclass(frozen=True)
class Violation:
    start: int  # index of the left boundary symbol
    run_length: int
    kind: str  # "xyx" (odd run, equal ends) or "xyyz" (even run, distinct ends)
    text: str


def _runs(seq: Sequence[int]) -> list[tuple[int, int]]:
    out = []
    i = 0
    while i < len(seq):
        j = i
        while j < len(seq) and seq[j] == seq[i]:
            j += 1
        out.append((i, j - i))
        i = j
    return out


def _scan(seq: Sequence[int], cyclic: bool, index_map: Sequence[int] | None = None) -> list[Violation]:
    n = len(seq)
    if n == 0 or len(set(seq)) == 1:
        return []
    idx = list(index_map) if index_map is not None else list(range(n))
    if cyclic:
        shift = next(k for k in range(n) if seq[k] != seq[k - 1])
        seq = list(seq[shift:]) + list(seq[:shift])
        idx = idx[shift:] + idx[:shift]
    runs = _runs(seq)
    out = []
    count = len(runs)
    for r, (start, length) in enumerate(runs):
        if cyclic:
            left, right = runs[(r - 1) % count], runs[(r + 1) % count]
            lpos = (start - 1) % n
            rpos = (start + length) % n
        else:
            if r == 0 or r == count - 1:
                continue
            lpos, rpos = start - 1, start + length
        p, q = seq[lpos], seq[rpos]
        kind = None
        if p == q and length % 2 == 1:
            kind = "xyx"
        elif p != q and length % 2 == 0:
            kind = "xyyz"
        if kind:
            text = to_str([p] + [seq[start]] * length + [q])
            out.append(Violation(idx[lpos], length, kind, text))
    return out


def forbidden_scan(C: Sequence[int] | str, cyclic: bool = False) -> list[Violation]:
    """Occurrences of x y^odd x and x y^even z (even >= 2), by maximal runs."""
    return _scan(as_colors(C), cyclic)


def generalized_forbidden(C: Sequence[int] | str, skip: int) -> list[Violation]:
    """Apply the cyclic scan along each orbit of i -> i + skip."""
    seq = as_colors(C)
    m = len(seq)
    seen = [False] * m
    out = []
    for s in range(m):
        if seen[s]:
            continue
        orbit = []
        i = s
        while not seen[i]:
            seen[i] = True
            orbit.append(i)
            i = (i + skip) % m
        out += _scan([seq[k] for k in orbit], True, orbit)
    return out


# ---------------------------------------------------------------------------
# reductions

REDUCTIONS: tuple[tuple[str, str], ...] = (
    ("xxx", "x"),
    ("xyzzyy", "xyzz"),
    ("xyzxyy", "xyzx"),
    ("xyzzyxx", "xyzzy"),
    ("xyzzyxz", "xyzxy"),
    ("xyzxyzxyzxyz", "xyzxyz"),
)


def _instantiate(pattern: str, perm: Sequence[int]) -> tuple[int, ...]:
    return tuple(perm["xyz".index(ch)] for ch in pattern)


def reduction_rules(include_reversed: bool = False) -> list[tuple[str, str]]:
    rules = list(REDUCTIONS)
    if include_reversed:
        rules += [(lhs[::-1], rhs[::-1]) for lhs, rhs in REDUCTIONS if lhs[::-1] != lhs]
    return rules


def _concrete_rules(include_reversed: bool):
    out = []
    for lhs, rhs in reduction_rules(include_reversed):
        seen = set()
        for perm in PERMUTATIONS:
            pair = (_instantiate(lhs, perm), _instantiate(rhs, perm))
            if pair not in seen:
                seen.add(pair)
                out.append(pair)
    return out


def reduce_once(C: Sequence[int], include_reversed: bool = False) -> tuple[int, ...] | None:
    """Apply the first matching rule at any cyclic position; None if irreducible."""
    C = tuple(C)
    n = len(C)
    for lhs, rhs in _concrete_rules(include_reversed):
        L = len(lhs)
        if L > n:
            continue
        for shift in range(n):
            rot = C[shift:] + C[:shift]
            if rot[:L] == lhs:
                return rhs + rot[L:]
    return None


def canonical(C: Sequence[int]) -> tuple[int, ...]:
    """Least representative under rotation and color permutation."""
    C = tuple(C)
    best = None
    for perm in PERMUTATIONS:
        P = permute(C, perm)
        for s in range(len(P)):
            r = P[s:] + P[:s]
            if best is None or r < best:
                best = r
    return best  # type: ignore[return-value]


def reduce_string(C: Sequence[int] | str, include_reversed: bool = False,
                  canonicalize: bool = False) -> tuple[int, ...]:
    """Rewrite with the six reductions until none applies."""
    cur = as_colors(C)
    while True:
        nxt = reduce_once(cur, include_reversed)
        if nxt is None:
            return canonical(cur) if canonicalize else cur
        cur = nxt


def necklaces(length: int) -> list[tuple[int, ...]]:
    """Color strings of a given length up to rotation and color permutation."""
    out = set()
    for C in itertools.product((1, 2, 3), repeat=length):
        if C[0] != 1:
            continue
        out.add(canonical(C))
    return sorted(out)


def parity_ok(C: Sequence[int]) -> bool:
    """Odd-length strings need every color an odd number of times to be colorable."""
    if len(C) % 2 == 0:
        return True
    return all(C.count(c) % 2 == 1 for c in (1, 2, 3))


@dataclass
class BaseCaseReport:
    max_m: int
    per_length: dict = field(default_factory=dict)
    irreducible: set = field(default_factory=set)
    all_index_four: bool = True
    counterexamples: list = field(default_factory=list)
    lift_checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.all_index_four and not self.counterexamples and all(ok for *_, ok in self.lift_checks)


def verify_theorem_base(p: FivePole, max_m: int = 9, include_reversed: bool = False,
                        lift_sample: Iterable[str] = (), node_budget: int | None = None) -> BaseCaseReport:
    """Enumerate all odd-length strings up to `max_m` (modulo rotation and
    color permutation), eliminate those with forbidden substrings or bad
    parity, reduce the rest, and confirm every string has index 4.

    `lift_sample` lists strings whose index is also confirmed by coloring
    the actual lift with the spoke colors pinned.
    """

    rep = BaseCaseReport(max_m)
    for L in range(1, max_m + 1, 2):
        total = forbidden = parity = 0
        survivors = []
        for C in necklaces(L):
            total += 1
            if string_index(p, C) != 4:
                rep.all_index_four = False
                rep.counterexamples.append(to_str(C))
            if forbidden_scan(C, cyclic=True):
                forbidden += 1
                continue
            if not parity_ok(C):
                parity += 1
                continue
            survivors.append(C)
        reduced = {to_str(reduce_string(C, include_reversed, canonicalize=True)) for C in survivors}
        for r in reduced:
            if string_index(p, r) != 4:
                rep.all_index_four = False
                rep.counterexamples.append(r)
        rep.irreducible |= reduced
        rep.per_length[L] = {"strings": total, "forbidden": forbidden, "parity": parity,
                             "survivors": [to_str(C) for C in survivors], "reduced_to": sorted(reduced)}
    if lift_sample:
        from .coloring import DEFAULT_NODE_BUDGET, color_with_string
        from .graph import EdgeColoring
        from .voltage import alpha_connection

        for s in lift_sample:
            vg = alpha_connection(p, len(s), 1, 1, 1)
            _, res = color_with_string(vg, s, node_budget or DEFAULT_NODE_BUDGET)
            direct = 3 if isinstance(res, EdgeColoring) else 4
            rep.lift_checks.append((s, direct, string_index(p, s), direct == string_index(p, s)))
    return rep


# ---------------------------------------------------------------------------
# cluster-cycles whose loop edges leave the cycle

def pair_flow(p: FivePole, C: Sequence[int] | str, conn: str = "alpha") -> frozenset:
    """Flow on the arrow pairs only, loop colors left free.

    Used when the loop voltage sends loop edges to other cluster-cycles, so
    loop colors impose no constraint inside one cycle.
    """
    cols = as_colors(C)
    rel = None
    for c in cols:
        step = {(pat.input, pat.output) for pat in admissible_patterns(p) if pat.spoke == c}
        if rel is None:
            rel = frozenset(step)
            continue
        by_in: dict = {}
        for i, o in step:
            by_in.setdefault(i, []).append(o)
        rel = frozenset((i, o2) for i, o in rel
                        for o2 in by_in.get((o[1], o[0]) if conn == "beta" else o, ()))
    return rel


def cluster_cycle_admissible(p: FivePole, C: Sequence[int] | str, conn: str = "alpha") -> bool:
    """Can a closed cycle of len(C) clusters take spoke colors C?"""
    for i, o in pair_flow(p, C, conn):
        if ((o[1], o[0]) if conn == "beta" else o) == i:
            return True
    return False
