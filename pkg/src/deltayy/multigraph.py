"""Loopless multigraphs stored as connection multiplicities."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping


class Multigraph:
    """Immutable loopless multigraph on vertices ``0..n-1``.

    A *connection* is the set of parallel edges between one vertex pair; only
    its size (multiplicity) is stored. Absent pairs have multiplicity 0.
    """

    __slots__ = ("n", "_adj", "_key", "_hash")

    def __init__(self, n: int, conn: Mapping[tuple[int, int], int] | Iterable[tuple[int, int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj: list[dict[int, int]] = [dict() for _ in range(n)]
        items = conn.items() if isinstance(conn, Mapping) else (((t[0], t[1]), t[2]) for t in conn)
        for (u, v), m in items:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex out of range in pair ({u}, {v}) for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if m < 0:
                raise ValueError(f"negative multiplicity on ({u}, {v})")
            if m == 0:
                continue
            adj[u][v] = adj[u].get(v, 0) + m
            adj[v][u] = adj[v].get(u, 0) + m
        self.n = n
        self._adj = tuple(adj)
        self._key = None
        self._hash = None

    @classmethod
    def _from_adj(cls, adj: list[dict[int, int]]) -> "Multigraph":
        # trusted constructor: adj must already be symmetric, loop-free, positive
        g = cls.__new__(cls)
        g.n = len(adj)
        g._adj = tuple(adj)
        g._key = None
        g._hash = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Multigraph":
        """Build from a list of (possibly repeated) edges."""
        counts: dict[tuple[int, int], int] = {}
        for u, v in edges:
            p = (u, v) if u < v else (v, u)
            counts[p] = counts.get(p, 0) + 1
        return cls(n, counts)

    # -- structure -----------------------------------------------------

    def mult(self, u: int, v: int) -> int:
        return self._adj[u].get(v, 0)

    def neighbors(self, v: int) -> dict[int, int]:
        """Neighbour -> multiplicity map of ``v`` (do not mutate)."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return degree(self, v)

    def connections(self) -> list[tuple[int, int, int]]:
        """Sorted ``(u, v, m)`` triples with ``u < v``."""
        out = []
        for u, nb in enumerate(self._adj):
            for v, m in nb.items():
                if u < v:
                    out.append((u, v, m))
        out.sort()
        return out

    def adjacency(self) -> list[dict[int, int]]:
        """A mutable copy of the adjacency maps."""
        return [dict(nb) for nb in self._adj]

    @property
    def m_edges(self) -> int:
        return sum(sum(nb.values()) for nb in self._adj) // 2

    @property
    def m_connections(self) -> int:
        return sum(len(nb) for nb in self._adj) // 2

    def is_simple(self) -> bool:
        return all(m == 1 for nb in self._adj for m in nb.values())

    def is_regular(self, k: int) -> bool:
        return all(sum(nb.values()) == k for nb in self._adj)

    def is_double_edged(self) -> bool:
        return self.n > 0 and all(m == 2 for nb in self._adj for m in nb.values()) and self.m_connections > 0

    def has_two_cycle(self) -> bool:
        """True when some connection has multiplicity >= 2."""
        return any(m >= 2 for nb in self._adj for m in nb.values())

    def relabel(self, perm: list[int] | tuple[int, ...]) -> "Multigraph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("relabel needs a permutation of 0..n-1")
        adj: list[dict[int, int]] = [dict() for _ in range(self.n)]
        for u, nb in enumerate(self._adj):
            pu = perm[u]
            for v, m in nb.items():
                adj[pu][perm[v]] = m
        return Multigraph._from_adj(adj)

    # -- value semantics ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, tuple(self.connections())))
        return self._hash

    def __repr__(self):
        conns = " ".join(f"{u}-{v}" + (f"x{m}" if m > 1 else "") for u, v, m in self.connections())
        return f"Multigraph(n={self.n}: {conns})"


@dataclass(frozen=True)
class GraphStats:
    n: int
    m_edges: int
    m_connections: int
    degrees: tuple[int, ...]
    singles: int
    doubles: int
    max_mult: int
    components: int
    cyclomatic: int
    cyclomatic_simple: int


def degree(g: Multigraph, v: int) -> int:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    return sum(g.neighbors(v).values())


def simplified(g: Multigraph) -> Multigraph:
    """The underlying simple graph: every connection collapsed to size 1."""
    return Multigraph._from_adj([{v: 1 for v in nb} for nb in g._adj])


def double(g: Multigraph) -> Multigraph:
    """Duplicate every edge of a simple graph."""
    if not g.is_simple():
        raise ValueError("double() is only defined on simple graphs")
    return Multigraph._from_adj([{v: 2 for v in nb} for nb in g._adj])


def connected_components(g: Multigraph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Multigraph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def girth_simple(g: Multigraph) -> float:
    """Length of the shortest cycle of the simplified graph (``math.inf`` for forests).

    Parallel edges are not 2-cycles here; use :meth:`Multigraph.has_two_cycle`.
    """
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def stats(g: Multigraph) -> GraphStats:
    mults = [m for u, v, m in g.connections()]
    comps = len(connected_components(g))
    m_edges = sum(mults)
    return GraphStats(
        n=g.n,
        m_edges=m_edges,
        m_connections=len(mults),
        degrees=tuple(sum(nb.values()) for nb in g._adj),
        singles=sum(1 for m in mults if m == 1),
        doubles=sum(1 for m in mults if m == 2),
        max_mult=max(mults, default=0),
        components=comps,
        cyclomatic=m_edges - g.n + comps,
        cyclomatic_simple=len(mults) - g.n + comps,
    )
