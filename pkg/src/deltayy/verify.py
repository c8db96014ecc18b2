"""Mechanical checks of the move propositions over a corpus of graphs.

Each suite walks every delta and wye site of every graph, applies the move and
tests one family of statements. A suite result counts checks and keeps a
bounded list of violation messages.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .analysis import (is_bipartite, is_independent, is_planar, max_independent_set,
                       vertex_connectivity)
from .catalog import named_graphs, random_corpus
from .multigraph import Multigraph, connected_components, double, is_connected, stats
from .transform import apply_delta_yy, apply_yy_delta, find_deltas, find_wyes

MAX_MESSAGES = 20


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    violations: int = 0
    messages: list[str] = field(default_factory=list)

    def check(self, ok: bool, msg) -> None:
        self.checks += 1
        if not ok:
            self.violations += 1
            if len(self.messages) < MAX_MESSAGES:
                self.messages.append(msg() if callable(msg) else msg)

    def line(self) -> str:
        return f"suite {self.name} checks={self.checks} violations={self.violations}"


def default_corpus(size: int = 500, seed: int = 0) -> list[tuple[str, Multigraph]]:
    """Named simple graphs, their doubles, and a seeded random 6-regular corpus."""
    out = []
    for name, g in named_graphs().items():
        out.append((name, g))
        out.append(("2" + name, double(g)))
    out.extend((f"random{i}", g) for i, g in enumerate(random_corpus(size, seed)))
    return out


def _moves(g):
    for s in find_deltas(g):
        yield "delta", s, apply_delta_yy(g, s)
    for s in find_wyes(g):
        yield "wye", s, apply_yy_delta(g, s)


def planarity_suite(corpus) -> SuiteResult:
    r = SuiteResult("planarity")
    for name, g in corpus:
        p = is_planar(g)
        for kind, s, h in _moves(g):
            if kind == "wye" and p:
                r.check(is_planar(h), lambda: f"{name} {s.describe()}: planar graph lost planarity")
            if kind == "delta" and not p:
                r.check(not is_planar(h), lambda: f"{name} {s.describe()}: non-planar graph became planar")
    return r


def independent_set_suite(corpus) -> SuiteResult:
    r = SuiteResult("independent-sets")
    for name, g in corpus:
        a, w = max_independent_set(g)
        for kind, s, h in _moves(g):
            if kind == "delta":
                a2, _ = max_independent_set(h)
                r.check(is_independent(h, w), lambda: f"{name} {s.describe()}: independent set broken")
                r.check(a <= a2 <= a + 2, lambda: f"{name} {s.describe()}: alpha {a} -> {a2}")
            else:
                ext = {s.u, s.v, s.w}
                if s.x not in w and len(ext & set(w)) <= 1:
                    shifted = [v - 1 if v > s.x else v for v in w]
                    r.check(is_independent(h, shifted), lambda: f"{name} {s.describe()}: independent set broken")
    return r


def connectivity_suite(corpus) -> SuiteResult:
    r = SuiteResult("connectivity")
    for name, g in corpus:
        comps = len(connected_components(g))
        k = vertex_connectivity(g)
        if find_wyes(g):
            r.check(k <= 3, lambda: f"{name}: has a wye but connectivity {k}")
        for kind, s, h in _moves(g):
            k2 = vertex_connectivity(h)
            r.check(len(connected_components(h)) == comps, lambda: f"{name} {s.describe()}: component count changed")
            if kind == "delta":
                r.check(k2 <= 3, lambda: f"{name} {s.describe()}: connectivity {k2} after delta-YY")
                if k >= 2 and g.n >= 4:
                    r.check(k2 >= 2, lambda: f"{name} {s.describe()}: lost 2-connectivity")
                if k >= 3 and all(len(g.neighbors(x)) >= 4 for x in (s.u, s.v, s.w)):
                    r.check(k2 >= 3, lambda: f"{name} {s.describe()}: lost 3-connectivity")
            else:
                if k >= 2:
                    r.check(k2 >= 2, lambda: f"{name} {s.describe()}: lost 2-connectivity")
                # three vertices can never be 3-connected, so 4 -> 3 is out of range
                if k >= 3 and h.n >= 4:
                    r.check(k2 >= 3, lambda: f"{name} {s.describe()}: lost 3-connectivity")
    return r


def cyclomatic_suite(corpus) -> SuiteResult:
    r = SuiteResult("cyclomatic")
    for name, g in corpus:
        st = stats(g)
        for kind, s, h in _moves(g):
            st2 = stats(h)
            tri = ((s.u, s.v), (s.u, s.w), (s.v, s.w))
            if kind == "delta":
                i = sum(g.mult(a, b) >= 2 for a, b in tri)
                r.check(st2.m_edges == st.m_edges + 3, lambda: f"{name} {s.describe()}: edge count")
                r.check(st2.m_connections == st.m_connections + i, lambda: f"{name} {s.describe()}: connection count")
                if is_connected(g):
                    r.check(st2.cyclomatic == st.cyclomatic + 2, lambda: f"{name} {s.describe()}: c' != c + 2")
                    r.check(st2.cyclomatic_simple == st.cyclomatic_simple - (1 - i),
                            lambda: f"{name} {s.describe()}: simple cyclomatic")
            else:
                i = sum(g.mult(a, b) >= 1 for a, b in tri)
                r.check(st2.m_edges == st.m_edges - 3, lambda: f"{name} {s.describe()}: edge count")
                if is_connected(g):
                    r.check(st2.cyclomatic == st.cyclomatic - 2, lambda: f"{name} {s.describe()}: c' != c - 2")
                    r.check(st2.cyclomatic_simple == st.cyclomatic_simple + (1 - i),
                            lambda: f"{name} {s.describe()}: simple cyclomatic")
    return r


def bipartite_bound_suite(corpus) -> SuiteResult:
    from .explore import bipartite_minimal_bound_check

    r = SuiteResult("bipartite-bound")
    for name, g in corpus:
        if g.is_simple() and g.is_regular(3) and is_connected(g) and is_bipartite(g):
            res = bipartite_minimal_bound_check(g)
            r.check(res.holds, lambda: f"{name}: smallest reached {res.smallest_found} > {g.n // 2}")
    return r


SUITES = (planarity_suite, independent_set_suite, connectivity_suite, cyclomatic_suite, bipartite_bound_suite)


def run_all(corpus=None) -> list[SuiteResult]:
    corpus = default_corpus() if corpus is None else corpus
    return [suite(corpus) for suite in SUITES]
