"""Equivalence-class enumeration by canonical-key BFS, plus reduction heuristics."""

from __future__ import annotations

import enum
import heapq
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .canonical import canonical_key, graph_from_key
from .classify import find_excluded
from .io import FormatError
from .multigraph import GraphStats, Multigraph, is_connected, simplified, stats
from .transform import (DeltaSite, apply_delta_yy, apply_yy_delta, find_deltas,
                        find_wyes, neighbors, wye_at)

THREADS_ENV = "DELTAYY_THREADS"


@dataclass(frozen=True)
class Budget:
    max_members: int = 5000
    max_vertices: int | None = None  # None: seed vertex count + 8
    time_limit: float | None = None  # seconds

    def __post_init__(self):
        if self.max_members < 1:
            raise ValueError("max_members must be positive")
        if self.max_vertices is not None and self.max_vertices < 1:
            raise ValueError("max_vertices must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")


class Status(str, enum.Enum):
    COMPLETE = "Complete"
    TRUNCATED_BY_BUDGET = "TruncatedByBudget"
    TRUNCATED_BY_VERTEX_BOUND = "TruncatedByVertexBound"


def member_flags(g: Multigraph) -> tuple[str, ...]:
    out = []
    if g.is_simple():
        out.append("simple")
    if g.is_double_edged():
        out.append("double-edged")
        if simplified(g).is_regular(3):
            out.append("doubled-cubic")
    return tuple(out)


@dataclass
class Member:
    key: bytes
    stats: GraphStats
    flags: tuple[str, ...]
    parent: bytes | None = None
    move: str | None = None  # applies to graph_from_key(parent)
    depth: int = 0

    @property
    def graph(self) -> Multigraph:
        return graph_from_key(self.key)

    @property
    def n(self) -> int:
        return self.stats.n


def _member(key, parent=None, move=None, depth=0) -> Member:
    g = graph_from_key(key)
    return Member(key, stats(g), member_flags(g), parent, move, depth)


@dataclass
class ClassEnumeration:
    seed_key: bytes
    status: Status
    members: dict[bytes, Member] = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        return self.status is Status.COMPLETE

    def keys(self) -> list[bytes]:
        return sorted(self.members)

    def counts_by_n(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for m in self.members.values():
            out[m.n] = out.get(m.n, 0) + 1
        return dict(sorted(out.items()))

    def minimal(self) -> list[bytes]:
        lo = min(m.n for m in self.members.values())
        return sorted(k for k, m in self.members.items() if m.n == lo)

    def minimum(self) -> list[bytes]:
        mins = self.minimal()
        lo = min(self.members[k].stats.m_connections for k in mins)
        return [k for k in mins if self.members[k].stats.m_connections == lo]

    def maximal(self) -> list[bytes]:
        """Most-vertex members; only certified when the enumeration is complete."""
        hi = max(m.n for m in self.members.values())
        return sorted(k for k, m in self.members.items() if m.n == hi)

    def path_to(self, key: bytes) -> list[tuple[bytes, str]]:
        """``(parent key, move)`` steps from the seed to ``key``."""
        steps = []
        while key != self.seed_key:
            m = self.members[key]
            if m.parent is None:
                raise ValueError("no derivation recorded for this member")
            steps.append((m.parent, m.move))
            key = m.parent
        return steps[::-1]


def _expand(key: bytes) -> list[tuple[str, bytes, int]]:
    return [(mv, k, h.n) for mv, k, h in neighbors(graph_from_key(key))]


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def enumerate_class(g: Multigraph, budget: Budget | None = None) -> ClassEnumeration:
    """BFS over the class of ``g``, deduplicated by canonical key.

    Each level is expanded (optionally by a process pool sized by
    ``DELTAYY_THREADS``) and then merged in frontier order, so the result does
    not depend on the worker count.
    """
    if not g.is_regular(6):
        raise ValueError("class enumeration needs a 6-regular graph")
    if not is_connected(g):
        raise ValueError("class enumeration needs a connected graph")
    budget = budget or Budget()
    max_v = budget.max_vertices if budget.max_vertices is not None else g.n + 8
    start = time.monotonic()

    seed = canonical_key(g)
    enum_ = ClassEnumeration(seed, Status.COMPLETE, {seed: _member(seed)})
    members = enum_.members
    frontier = [seed]
    vertex_cut = False
    stopped = False
    workers = _thread_count()
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        while frontier and not stopped:
            if pool is not None and len(frontier) > 1:
                expansions = list(pool.map(_expand, frontier, chunksize=max(1, len(frontier) // (4 * workers))))
            else:
                expansions = [_expand(k) for k in frontier]
            nxt = []
            for key, nbrs in zip(frontier, expansions):
                depth = members[key].depth + 1
                for move, k2, n2 in nbrs:
                    if n2 > max_v:
                        vertex_cut = True
                        continue
                    if k2 in members:
                        continue
                    if len(members) >= budget.max_members:
                        stopped = True
                        break
                    members[k2] = _member(k2, key, move, depth)
                    nxt.append(k2)
                if stopped:
                    break
            if budget.time_limit is not None and nxt and time.monotonic() - start > budget.time_limit:
                stopped = True
            frontier = nxt
    finally:
        if pool is not None:
            pool.shutdown()
    if stopped:
        enum_.status = Status.TRUNCATED_BY_BUDGET
    elif vertex_cut:
        enum_.status = Status.TRUNCATED_BY_VERTEX_BOUND
    enum_.members = dict(sorted(members.items()))
    return enum_


def climb(g: Multigraph, max_members: int = 5000) -> tuple[int, list[str]]:
    """Best-first search that always expands the largest graph seen so far.

    Not a class enumeration: it only shows how far up the class reaches
    within ``max_members`` distinct graphs. Returns the largest vertex count
    and a move sequence reaching it (moves apply to canonical graphs).
    """
    seed = canonical_key(g)
    parent: dict[bytes, tuple[bytes | None, str | None]] = {seed: (None, None)}
    heap = [(-g.n, seed)]
    best_n, best = g.n, seed
    while heap and len(parent) < max_members:
        neg_n, key = heapq.heappop(heap)
        for move, k2, h in neighbors(graph_from_key(key)):
            if k2 in parent:
                continue
            parent[k2] = (key, move)
            heapq.heappush(heap, (-h.n, k2))
            if h.n > best_n:
                best_n, best = h.n, k2
            if len(parent) >= max_members:
                break
    path = []
    while parent[best][0] is not None:
        best, move = parent[best]
        path.append(move)
    return best_n, path[::-1]


# -- normalization and reduction -------------------------------------------

def triangle_free_normalize(g: Multigraph) -> Multigraph:
    """Apply delta-YY to single-edge triangles until none are left.

    Refuses graphs with an excluded subgraph, where this need not stop.
    """
    if find_excluded(g) is not None:
        raise ValueError("graph contains an excluded subgraph; normalization need not terminate")
    while True:
        sites = find_deltas(g)
        if not sites:
            return g
        s = sites[0]
        if max(g.mult(s.u, s.v), g.mult(s.u, s.w), g.mult(s.v, s.w)) > 1:
            raise ValueError(f"multi-edged triangle at {s.describe()}")
        g = apply_delta_yy(g, s)


def reduce_trace(g: Multigraph) -> tuple[Multigraph, list[str]]:
    """Smallest graph reachable with YY-delta moves only, and the moves leading to it.

    Every YY-delta sequence is explored (deduplicated by canonical key). Ties
    on vertex count go to the least canonical key.
    """
    seen: dict[bytes, tuple[Multigraph, list[str]]] = {canonical_key(g): (g, [])}
    frontier = [canonical_key(g)]
    while frontier:
        nxt = []
        for key in frontier:
            h, path = seen[key]
            for s in find_wyes(h):
                h2 = apply_yy_delta(h, s)
                k2 = canonical_key(h2)
                if k2 not in seen:
                    seen[k2] = (h2, path + [s.describe()])
                    nxt.append(k2)
        frontier = nxt
    best = min(seen, key=lambda k: (seen[k][0].n, k))
    return seen[best]


def reduce_greedy(g: Multigraph) -> Multigraph:
    return reduce_trace(g)[0]


# -- chain-of-triangles pattern --------------------------------------------

@dataclass(frozen=True)
class TriangleChain:
    triangles: tuple[tuple[int, int, int], ...]
    joints: tuple[int, ...]
    ends: tuple[int, int]

    def describe(self) -> str:
        tris = " ".join("{" + ",".join(map(str, t)) + "}" for t in self.triangles)
        return f"chain len={len(self.triangles)} {tris} joints={list(self.joints)} ends={list(self.ends)}"


def _is_end(g: Multigraph, t: int, others) -> bool:
    nb = g.neighbors(t)
    if len(nb) != 4 or max(nb.values()) > 2:
        return False
    return all(nb.get(o) == 1 for o in others) and sorted(nb.values()) == [1, 1, 2, 2]


def _is_joint(g: Multigraph, j: int, partners) -> bool:
    nb = g.neighbors(j)
    if len(nb) != 5 or any(nb.get(p) != 1 for p in partners):
        return False
    return sorted(nb.values()) == [1, 1, 1, 1, 2]


def _tri_edges(t):
    a, b, c = t
    return {(a, b), (a, c), (b, c)}


def _sites_apart(g: Multigraph, chain: TriangleChain) -> bool:
    # a connection between two sites outside the triangles would spoil the second YY-delta
    sites = sorted(set(chain.joints) | set(chain.ends))
    inside = set().union(*(_tri_edges(tuple(sorted(t))) for t in chain.triangles))
    return all(g.mult(a, b) == 0 or (a, b) in inside for i, a in enumerate(sites) for b in sites[i + 1:])


def find_triangle_chain(g: Multigraph) -> TriangleChain | None:
    """Chain of triangles whose delta-YY moves expose one more wye than they add.

    Consecutive triangles share a joint vertex with four single connections
    into the two triangles and one double connection elsewhere. The first and
    last triangle each have a further vertex with exactly four neighbours,
    single connections into its triangle and no connection above 2. Joints
    and ends must not be connected to each other outside the triangles. Applying
    delta-YY to every triangle and then YY-delta at every joint and end
    lowers the vertex count by one.
    """
    tris = [(s.u, s.v, s.w) for s in find_deltas(g)]
    by_vertex: dict[int, list[tuple[int, int, int]]] = {}
    for t in tris:
        for x in t:
            by_vertex.setdefault(x, []).append(t)

    def ends_of(t, exclude):
        return [x for x in t if x not in exclude and _is_end(g, x, [y for y in t if y != x])]

    for t in tris:
        ends = ends_of(t, ())
        if len(ends) >= 2:
            return TriangleChain((t,), (), (ends[0], ends[1]))

    best = None

    def grow(chain, joints, used_edges, start_end):
        nonlocal best
        last = chain[-1]
        for j in last:
            if j in joints or j == start_end:
                continue
            for t2 in by_vertex.get(j, ()):
                if t2 in chain or _tri_edges(t2) & used_edges:
                    continue
                if any(x in joints or x == start_end for x in t2 if x != j):
                    continue
                partners = [y for y in last if y != j] + [y for y in t2 if y != j]
                if not _is_joint(g, j, partners):
                    continue
                new_chain = chain + [t2]
                new_joints = joints + [j]
                for e in ends_of(t2, set(new_joints) | {start_end}):
                    cand = TriangleChain(tuple(new_chain), tuple(new_joints), (start_end, e))
                    if _sites_apart(g, cand):
                        best = cand
                        return True
                if len(new_chain) < g.n and grow(new_chain, new_joints, used_edges | _tri_edges(t2), start_end):
                    return True
        return False

    for t in tris:
        for e in ends_of(t, ()):
            if grow([t], [], _tri_edges(t), e):
                return best
    return None


def apply_chain_reduction(g: Multigraph, chain: TriangleChain) -> Multigraph:
    """Delta-YY on every chain triangle, then YY-delta at every joint and both ends."""
    for t in chain.triangles:
        g = apply_delta_yy(g, DeltaSite(*sorted(t)))
    for x in sorted(set(chain.joints) | set(chain.ends), reverse=True):
        s = wye_at(g, x)
        if s is None:
            raise ValueError(f"vertex {x} did not become a wye")
        g = apply_yy_delta(g, s)
    return g


@dataclass(frozen=True)
class ProbeReport:
    seed_key: bytes
    seed_n: int
    greedy_n: int
    greedy_key: bytes
    chain: TriangleChain | None
    chain_n: int | None  # vertex count after the chain reduction, when a chain was found
    bfs_n: int
    reference_certified: bool
    status: Status

    @property
    def reference_n(self) -> int:
        """Smallest member known: BFS minimum, or the chain-reduced reduct if smaller."""
        return self.bfs_n if self.chain_n is None else min(self.bfs_n, self.chain_n)

    @property
    def predicted_minimal(self) -> bool:
        return self.chain is None

    @property
    def greedy_is_minimal(self) -> bool:
        return self.greedy_n <= self.reference_n

    @property
    def agree(self) -> bool:
        return self.predicted_minimal == self.greedy_is_minimal


def conjecture51_probe(g_cubic: Multigraph, budget: Budget | None = None) -> ProbeReport:
    """Compare the chain-pattern prediction on the YY-delta reduct with the smallest known member.

    A detected chain is applied, so a "not minimal" prediction is backed by a
    concrete smaller member; BFS supplies the reference otherwise (certified
    only when the class enumeration completes).
    """
    from .multigraph import double

    if not g_cubic.is_simple() or not g_cubic.is_regular(3) or not is_connected(g_cubic):
        raise ValueError("expected a connected simple cubic graph")
    d = double(g_cubic)
    red = reduce_greedy(d)
    chain = find_triangle_chain(red)
    chain_n = apply_chain_reduction(red, chain).n if chain is not None else None
    e = enumerate_class(d, budget)
    ref = min(m.n for m in e.members.values())
    return ProbeReport(e.seed_key, d.n, red.n, canonical_key(red), chain, chain_n, ref, e.complete, e.status)


@dataclass(frozen=True)
class BipartiteBound:
    bipartite: bool
    n: int
    smallest_found: int
    witness_key: bytes

    @property
    def holds(self) -> bool:
        return self.smallest_found <= self.n // 2 if self.bipartite else True


def bipartite_minimal_bound_check(g_cubic: Multigraph, budget: Budget | None = None) -> BipartiteBound:
    """Bipartite input: YY-delta at every vertex of one side and report the size.

    Non-bipartite input: report the smallest member seen by a truncated BFS
    (evidence only).
    """
    from .analysis import is_bipartite, two_coloring
    from .multigraph import double

    if not g_cubic.is_simple() or not g_cubic.is_regular(3) or not is_connected(g_cubic):
        raise ValueError("expected a connected simple cubic graph")
    d = double(g_cubic)
    if is_bipartite(g_cubic):
        colour = two_coloring(g_cubic)
        side = [v for v in range(d.n) if colour[v] == 0]
        h = d
        for x in sorted(side, reverse=True):  # descending keeps lower indices valid
            h = apply_yy_delta(h, wye_at(h, x))
        return BipartiteBound(True, g_cubic.n, h.n, canonical_key(h))
    e = enumerate_class(d, budget or Budget(max_members=2000))
    k = e.minimal()[0]
    return BipartiteBound(False, g_cubic.n, e.members[k].n, k)


# -- dumps ------------------------------------------------------------------

def format_dump(e: ClassEnumeration, with_graphs: bool = False) -> str:
    """Line-oriented report: header, one summary row per member, optional MG blocks."""
    from .io import format_mg

    lines = [
        "# deltayy class dump",
        f"seed {e.seed_key.hex()}",
        f"status {e.status.value}",
        f"members {len(e.members)}",
        "# summary <key> <n> <connections> <singles> <flags>",
    ]
    for k in e.keys():
        m = e.members[k]
        lines.append(f"summary {k.hex()} {m.n} {m.stats.m_connections} {m.stats.singles} {','.join(m.flags) or '-'}")
    if with_graphs:
        for k in e.keys():
            lines.append(f"member {k.hex()}")
            lines.extend(format_mg(e.members[k].graph).splitlines())
            lines.append("end")
    return "\n".join(lines) + "\n"


def parse_dump(text: str) -> ClassEnumeration:
    """Read a dump back; members carry stats but no derivation."""
    seed = status = None
    keys = []
    count = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(" ")
        try:
            if head == "seed":
                seed = bytes.fromhex(rest)
            elif head == "status":
                status = Status(rest)
            elif head == "members":
                count = int(rest)
            elif head == "summary":
                keys.append(bytes.fromhex(rest.split()[0]))
            elif head == "member":
                break
            else:
                raise FormatError(f"line {lineno}: unknown record {head!r}")
        except ValueError as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"line {lineno}: {exc}") from None
    if seed is None or status is None:
        raise FormatError("dump lacks seed or status line")
    if count is not None and count != len(keys):
        raise FormatError(f"dump declares {count} members but lists {len(keys)}")
    if seed not in keys:
        raise FormatError("seed key missing from summary rows")
    return ClassEnumeration(seed, status, {k: _member(k) for k in sorted(keys)})


def read_dump(path: str | Path) -> ClassEnumeration:
    return parse_dump(Path(path).read_text(encoding="utf-8"))
