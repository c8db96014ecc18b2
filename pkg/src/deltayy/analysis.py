"""Structural predicates on the simplified graph and class-level reports."""

from __future__ import annotations

import csv
import io
import json
from collections import deque
from dataclasses import asdict, dataclass
from itertools import combinations

import networkx as nx

from .canonical import canonical_key, graph_from_key
from .classify import Finiteness, find_excluded
from .explore import ClassEnumeration
from .io import FormatError, parse_graph6
from .multigraph import Multigraph, double, is_connected, simplified
from .transform import DeltaSite, apply_delta_yy


def _simple_adj(g: Multigraph) -> list[set[int]]:
    return [set(g.neighbors(v)) for v in range(g.n)]


# -- planarity ---------------------------------------------------------------

def is_planar(g: Multigraph) -> bool:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((u, v) for u, v, _ in g.connections())
    return nx.check_planarity(h)[0]


# -- connectivity ------------------------------------------------------------

def _local_connectivity(adj, s, t, cap):
    """Internally disjoint s-t paths (at most ``cap``) by unit augmenting paths.

    Vertex v is split into v_in = 2v and v_out = 2v + 1 with capacity 1
    between them; s and t are not split.
    """
    n = len(adj)
    res: dict[tuple[int, int], int] = {}
    out_arcs: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a, b, c):
        if (a, b) not in res:
            res[(a, b)] = 0
            res[(b, a)] = res.get((b, a), 0)
            out_arcs[a].append(b)
            out_arcs[b].append(a)
        res[(a, b)] += c

    for v in range(n):
        if v not in (s, t):
            arc(2 * v, 2 * v + 1, 1)
        for w in adj[v]:
            arc(2 * v + 1, 2 * w, 1)
    src, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        prev = {src: None}
        q = deque([src])
        while q and sink not in prev:
            a = q.popleft()
            for b in out_arcs[a]:
                if b not in prev and res[(a, b)] > 0:
                    prev[b] = a
                    q.append(b)
        if sink not in prev:
            break
        b = sink
        while prev[b] is not None:
            a = prev[b]
            res[(a, b)] -= 1
            res[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Multigraph) -> int:
    """Vertex connectivity of the simplified graph (n - 1 for complete graphs)."""
    n = g.n
    if n <= 1:
        return 0
    if not is_connected(g):
        return 0
    adj = _simple_adj(g)
    best = n - 1
    i = 0
    # a minimum separator misses one of the first best + 1 vertices
    while i <= best and i < n:
        for j in range(i + 1, n):
            if j not in adj[i]:
                best = min(best, _local_connectivity(adj, i, j, best))
        i += 1
    return best


# -- independent sets --------------------------------------------------------

def max_independent_set(g: Multigraph) -> tuple[int, tuple[int, ...]]:
    """Exact maximum independent set of the simplified graph.

    Branches on the lowest candidate, include first, so the first maximum
    found is the lexicographically least one.
    """
    n = g.n
    nbr = [0] * n
    for u, v, _ in g.connections():
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    best: list[int] = []

    def bound(cand):
        # greedy clique cover of the candidates: one vertex per clique at most
        k = 0
        while cand:
            v = (cand & -cand).bit_length() - 1
            clique = 1 << v
            rest = cand & nbr[v]
            while rest:
                w = (rest & -rest).bit_length() - 1
                rest &= ~(1 << w)
                if clique & ~nbr[w] == 0:
                    clique |= 1 << w
                    rest &= nbr[w]
            cand &= ~clique
            k += 1
        return k

    def search(chosen, cand):
        nonlocal best
        if not cand:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if len(chosen) + bound(cand) <= len(best):
            return
        v = (cand & -cand).bit_length() - 1
        chosen.append(v)
        search(chosen, cand & ~nbr[v] & ~(1 << v))
        chosen.pop()
        search(chosen, cand & ~(1 << v))

    search([], (1 << n) - 1)
    return len(best), tuple(best)


def is_independent(g: Multigraph, vs) -> bool:
    return all(g.mult(a, b) == 0 for a, b in combinations(vs, 2))


# -- bipartiteness -------------------------------------------------------------

def two_coloring(g: Multigraph) -> list[int] | None:
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.neighbors(u):
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    q.append(w)
                elif colour[w] == colour[u]:
                    return None
    return colour


def is_bipartite(g: Multigraph) -> bool:
    return two_coloring(g) is not None


# -- triangle packings ---------------------------------------------------------

def _triangles(g: Multigraph) -> list[tuple[int, int, int]]:
    out = []
    for u in range(g.n):
        nu = g.neighbors(u)
        for v in sorted(x for x in nu if x > u):
            nv = g.neighbors(v)
            out.extend((u, v, w) for w in sorted(x for x in nu if x > v and x in nv))
    return out


def _edges_of(t):
    a, b, c = t
    return ((a, b), (a, c), (b, c))


def edge_disjoint_triangle_packing(g: Multigraph, target: int) -> list[tuple[int, int, int]] | None:
    """``target`` pairwise edge-disjoint triangles of a simple graph, or None."""
    if not g.is_simple():
        raise ValueError("triangle packing needs a simple graph")
    if target <= 0:
        return []
    tris = _triangles(g)
    if 3 * target > g.m_connections:
        return None
    used: set[tuple[int, int]] = set()
    chosen: list[tuple[int, int, int]] = []

    def search(start):
        if len(chosen) == target:
            return True
        if len(tris) - start < target - len(chosen):
            return False
        if 3 * (target - len(chosen)) > g.m_connections - len(used):
            return False
        for i in range(start, len(tris)):
            es = _edges_of(tris[i])
            if any(e in used for e in es):
                continue
            used.update(es)
            chosen.append(tris[i])
            if search(i + 1):
                return True
            chosen.pop()
            used.difference_update(es)
        return False

    return list(chosen) if search(0) else None


def build_double_edged_from_packing(g: Multigraph, packing) -> Multigraph:
    """Delta-YY on each of ``n`` edge-disjoint triangles of a simple 6-regular graph."""
    if not g.is_simple() or not g.is_regular(6):
        raise ValueError("expected a simple 6-regular graph")
    tris = [tuple(sorted(t)) for t in packing]
    if len(tris) != g.n:
        raise ValueError(f"need {g.n} triangles, got {len(tris)}")
    seen: set[tuple[int, int]] = set()
    for t in tris:
        if len(set(t)) != 3 or any(g.mult(a, b) != 1 for a, b in _edges_of(t)):
            raise ValueError(f"{t} is not a triangle of the graph")
        if seen & set(_edges_of(t)):
            raise ValueError(f"{t} shares an edge with another triangle")
        seen.update(_edges_of(t))
    for t in tris:
        g = apply_delta_yy(g, DeltaSite(*t))
    return g


# -- period table --------------------------------------------------------------

PERIOD_COLUMNS = ("loops", "index", "graph6", "period")


@dataclass(frozen=True)
class PeriodRecord:
    loops: int
    index: int
    graph6: str
    period: str

    def doubled_key(self) -> bytes:
        return canonical_key(double(parse_graph6(self.graph6)))


def parse_periods(text: str) -> tuple[list[PeriodRecord], list[str]]:
    """Parse a period CSV; bad rows are skipped and described in the second list."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise FormatError("period table is empty") from None
    if tuple(h.strip() for h in header) != PERIOD_COLUMNS:
        raise FormatError(f"period table header must be {','.join(PERIOD_COLUMNS)}")
    records: list[PeriodRecord] = []
    errors: list[str] = []
    seen: set[tuple[int, int]] = set()
    for row in reader:
        lineno = reader.line_num
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 4:
            errors.append(f"row {lineno}: expected 4 fields, got {len(row)}")
            continue
        try:
            loops, index = int(row[0]), int(row[1])
        except ValueError:
            errors.append(f"row {lineno}: loops and index must be integers")
            continue
        g6, period = row[2].strip(), row[3].strip()
        try:
            h = parse_graph6(g6)
        except FormatError as exc:
            errors.append(f"row {lineno}: {exc}")
            continue
        if not h.is_regular(3) or not is_connected(h):
            errors.append(f"row {lineno}: graph is not a connected cubic graph")
            continue
        if (loops, index) in seen:
            errors.append(f"row {lineno}: duplicate entry {loops},{index}")
            continue
        if not period:
            errors.append(f"row {lineno}: empty period")
            continue
        seen.add((loops, index))
        records.append(PeriodRecord(loops, index, g6, period))
    return records, errors


# -- class reports ---------------------------------------------------------------

@dataclass(frozen=True)
class ClassReport:
    seed_key: str
    status: str
    members: int
    min_vertices: int
    min_connections: int
    unique_minimal: bool
    finiteness: str
    has_simple: bool
    has_double_edged: bool
    has_doubled_cubic: bool
    loops: int | None = None
    period: str = ""

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, ensure_ascii=False)

    def to_text(self) -> str:
        rows = [
            ("seed", self.seed_key),
            ("status", self.status),
            ("members", str(self.members)),
            ("min vertices", str(self.min_vertices)),
            ("min connections", str(self.min_connections)),
            ("unique minimal", "yes" if self.unique_minimal else "no"),
            ("finiteness", self.finiteness),
            ("simple member", "yes" if self.has_simple else "no"),
            ("double-edged member", "yes" if self.has_double_edged else "no"),
            ("doubled-cubic member", "yes" if self.has_doubled_cubic else "no"),
            ("loops", "" if self.loops is None else str(self.loops)),
            ("period", self.period),
        ]
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k.ljust(width)}  {v}".rstrip() for k, v in rows) + "\n"


def class_report(e: ClassEnumeration, periods: list[PeriodRecord] | None = None) -> ClassReport:
    mins = e.minimal()
    mnm = e.minimum()
    flags = set()
    for m in e.members.values():
        flags.update(m.flags)
    seed = graph_from_key(e.seed_key)
    verdict = Finiteness.INFINITE if find_excluded(seed) else Finiteness.FINITE
    loops, period = None, ""
    if periods and seed.is_double_edged():
        for rec in periods:
            if rec.doubled_key() == e.seed_key:
                loops, period = rec.loops, rec.period
                break
    return ClassReport(
        seed_key=e.seed_key.hex(),
        status=e.status.value,
        members=len(e.members),
        min_vertices=e.members[mins[0]].n,
        min_connections=e.members[mnm[0]].stats.m_connections,
        unique_minimal=len(mins) == 1,
        finiteness=verdict.value,
        has_simple="simple" in flags,
        has_double_edged="double-edged" in flags,
        has_doubled_cubic="doubled-cubic" in flags,
        loops=loops,
        period=period,
    )


def table1_rows(reports) -> list[tuple[int, int, int, str]]:
    """Per period string: least loop order, least vertices, least connections."""
    groups: dict[str, list[ClassReport]] = {}
    for r in reports:
        if r.period:
            groups.setdefault(r.period, []).append(r)
    rows = []
    for period, rs in groups.items():
        rows.append((min(r.loops for r in rs), min(r.min_vertices for r in rs),
                     min(r.min_connections for r in rs), period))
    return sorted(rows)


def format_table1(rows) -> str:
    lines = ["# loops, vertices, connections, period"]
    lines.extend(f"{a}, {b}, {c}, {p}" for a, b, c, p in rows)
    return "\n".join(lines) + "\n"
