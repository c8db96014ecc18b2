"""Delta-YY and YY-delta moves.

A delta-YY move deletes one edge from each connection of a triangle
``{u, v, w}`` and adds a new vertex joined to each of ``u, v, w`` by two
edges. The YY-delta move is its inverse: a centre ``x`` whose six edges run
in pairs to three distinct vertices is deleted and one edge is added between
each pair of those vertices. Both moves keep every degree unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import canonical_key
from .multigraph import Multigraph


@dataclass(frozen=True, order=True)
class DeltaSite:
    u: int
    v: int
    w: int

    def __post_init__(self):
        if not self.u < self.v < self.w:
            raise ValueError(f"delta site needs u < v < w, got {self.u} {self.v} {self.w}")

    def describe(self) -> str:
        return f"D {self.u} {self.v} {self.w}"


@dataclass(frozen=True, order=True)
class WyeSite:
    x: int
    u: int
    v: int
    w: int

    def describe(self) -> str:
        return f"Y {self.x}"


def find_deltas(g: Multigraph) -> list[DeltaSite]:
    """Every vertex triple that is pairwise connected, ascending."""
    sites = []
    for u in range(g.n):
        nu = g.neighbors(u)
        for v in sorted(x for x in nu if x > u):
            nv = g.neighbors(v)
            for w in sorted(x for x in nu if x > v and x in nv):
                sites.append(DeltaSite(u, v, w))
    return sites


def wye_at(g: Multigraph, x: int) -> WyeSite | None:
    nb = g.neighbors(x)
    if len(nb) != 3 or any(m != 2 for m in nb.values()):
        return None
    u, v, w = sorted(nb)
    return WyeSite(x, u, v, w)


def find_wyes(g: Multigraph) -> list[WyeSite]:
    return [s for s in (wye_at(g, x) for x in range(g.n)) if s is not None]


def apply_delta_yy(g: Multigraph, s: DeltaSite) -> Multigraph:
    u, v, w = s.u, s.v, s.w
    if w >= g.n or not (g.mult(u, v) and g.mult(u, w) and g.mult(v, w)):
        raise ValueError(f"{s.describe()} is not a delta of this graph")
    adj = g.adjacency()
    for a, b in ((u, v), (u, w), (v, w)):
        m = adj[a][b] - 1
        if m:
            adj[a][b] = adj[b][a] = m
        else:
            del adj[a][b]
            del adj[b][a]
    x = g.n
    adj.append({u: 2, v: 2, w: 2})
    for a in (u, v, w):
        adj[a][x] = 2
    return Multigraph._from_adj(adj)


def apply_yy_delta(g: Multigraph, s: WyeSite) -> Multigraph:
    x = s.x
    if not 0 <= x < g.n or wye_at(g, x) != s:
        raise ValueError(f"{s.describe()} is not a wye of this graph")
    ext = (s.u, s.v, s.w)
    adj = g.adjacency()
    for a in ext:
        del adj[a][x]
    for a, b in ((s.u, s.v), (s.u, s.w), (s.v, s.w)):
        adj[a][b] = adj[a].get(b, 0) + 1
        adj[b][a] = adj[b].get(a, 0) + 1
    del adj[x]

    def shift(y):
        return y - 1 if y > x else y

    return Multigraph._from_adj([{shift(y): m for y, m in nb.items()} for nb in adj])


def neighbors(g: Multigraph) -> list[tuple[str, bytes, Multigraph]]:
    """One ``(move, key, graph)`` per delta site then per wye site."""
    out = []
    for s in find_deltas(g):
        h = apply_delta_yy(g, s)
        out.append((s.describe(), canonical_key(h), h))
    for s in find_wyes(g):
        h = apply_yy_delta(g, s)
        out.append((s.describe(), canonical_key(h), h))
    return out


def parse_move(text: str) -> tuple[str, tuple[int, ...]]:
    parts = text.split()
    if parts and parts[0] == "D" and len(parts) == 4:
        return "D", tuple(int(p) for p in parts[1:])
    if parts and parts[0] == "Y" and len(parts) == 2:
        return "Y", (int(parts[1]),)
    raise ValueError(f"bad move descriptor {text!r}")


def apply_move(g: Multigraph, move: str) -> Multigraph:
    """Apply a ``D u v w`` / ``Y x`` descriptor."""
    kind, args = parse_move(move)
    if kind == "D":
        return apply_delta_yy(g, DeltaSite(*sorted(args)))
    site = wye_at(g, args[0]) if 0 <= args[0] < g.n else None
    if site is None:
        raise ValueError(f"no wye centred at {args[0]}")
    return apply_yy_delta(g, site)
