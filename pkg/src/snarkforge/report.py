"""Per-graph property reports."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from .coloring import DEFAULT_NODE_BUDGET, chromatic_index
from .graph import Graph, girth, is_cubic
from .invariants import automorphism_order, cyclic_edge_connectivity, oddness


def graph_report(g: Graph, name: str = "", node_budget: int = DEFAULT_NODE_BUDGET, k_max: int = 6,
                 timings: bool = False) -> dict:
    """The JSON-able property map {name, n, girth, chromatic_index, oddness,
    cyclic_connectivity, aut_order}, plus timings."""
    spent = {}

    def timed(key, fn):
        t = time.perf_counter()
        val = fn()
        spent[key] = round(time.perf_counter() - t, 4)
        return val

    gi = timed("girth", lambda: girth(g))
    chi = timed("chromatic_index", lambda: chromatic_index(g, node_budget))
    odd = timed("oddness", lambda: oddness(g, node_budget).value) if is_cubic(g) else None
    cc = timed("cyclic_connectivity", lambda: cyclic_edge_connectivity(g, k_max, node_budget))
    aut = timed("aut_order", lambda: automorphism_order(g, node_budget))
    out = {
        "name": name,
        "n": g.n,
        "girth": None if gi == math.inf else gi,
        "chromatic_index": chi,
        "oddness": odd,
        "cyclic_connectivity": cc.value if cc.exact else f">={cc.value}",
        "aut_order": aut,
    }
    if timings:
        out["seconds"] = spent
    return out


@dataclass
class Check:
    """One verified expectation: what was checked, against what, and the outcome."""

    name: str
    expected: object
    actual: object
    source: str
    seconds: float = 0.0
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = self.expected == self.actual

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag}  {self.name}: expected {self.expected}, got {self.actual}  [{self.source}] ({self.seconds:.2f}s)"

    def to_json(self, timings: bool = False) -> dict:
        def plain(x):
            if isinstance(x, (list, tuple)):
                return [plain(y) for y in x]
            if isinstance(x, dict):
                return {str(k): plain(v) for k, v in x.items()}
            if isinstance(x, (set, frozenset)):
                return sorted(plain(y) for y in x)
            return x

        out = {"check": self.name, "expected": plain(self.expected), "actual": plain(self.actual),
                "source": self.source, "passed": self.passed}
        if timings:
            out["seconds"] = round(self.seconds, 3)
        return out
