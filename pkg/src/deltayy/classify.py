"""Finite/infinite classification of delta-YY classes via excluded subgraphs.

Four base shapes, some carrying add-ons, force an infinite class:

* ``S1``: a triangle with a connection of size >= 2.
* ``S2``: a 4-cycle with at least three multi connections and an add-on at a
  vertex between two multi connections.
* ``S3``: a 5-cycle of multi connections with add-ons at two non-adjacent
  cycle vertices.
* ``S4``: a 4-cycle with three multi connections whose fourth connection is
  a single edge lying in a triangle, with add-ons at both of its ends.

An add-on hangs off an *addition vertex*. It is a chain of square links
(``v - a, v - b`` single, ``a - c, b - c`` double, continuing at ``c``)
ending in a double edge or a delta. Addition vertices are saturated: all six
of their edges belong to the pattern, so on a 6-regular graph the base uses
four edges there and the add-on exactly two.

Matching conventions: add-on vertices other than the addition vertex avoid
the base and each other within one chain; different add-ons on one base
must be edge-disjoint but may share vertices.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from .multigraph import Multigraph, girth_simple, is_connected
from .transform import DeltaSite, apply_delta_yy, apply_yy_delta, wye_at


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class AddOnMatch:
    root: int
    links: tuple[tuple[int, int, int], ...]  # (a, c, b) per link, c is the next addition vertex
    terminator: str  # "double" or "delta"
    terminal: tuple[int, ...]  # (end, far) for a double edge, (end, a, b) for a delta
    edges: tuple[tuple[tuple[int, int], int], ...]

    @property
    def length(self) -> int:
        return len(self.links)

    def describe(self) -> str:
        chain = " ".join(f"[{a} {c} {b}]" for a, c, b in self.links)
        term = "-".join(str(t) for t in self.terminal)
        return f"addon@{self.root} len={self.length}{' ' + chain if chain else ''} {self.terminator}({term})"


@dataclass(frozen=True)
class ExcludedWitness:
    kind: str  # S1..S4
    cycle: tuple[int, ...]
    base_edges: tuple[tuple[tuple[int, int], int], ...]
    addons: tuple[AddOnMatch, ...] = ()
    apex: int | None = None  # third triangle vertex on the single connection of S4

    def vertices(self) -> list[int]:
        vs = set(self.cycle)
        if self.apex is not None:
            vs.add(self.apex)
        for a in self.addons:
            for (u, v), _ in a.edges:
                vs.update((u, v))
        return sorted(vs)

    def describe(self) -> str:
        parts = [self.kind, "cycle=" + ",".join(map(str, self.cycle))]
        if self.apex is not None:
            parts.append(f"apex={self.apex}")
        parts.extend(a.describe() for a in self.addons)
        return " ".join(parts)


class Finiteness(str, enum.Enum):
    FINITE = "Finite"
    INFINITE = "Infinite"


@dataclass(frozen=True)
class Classification:
    verdict: Finiteness
    witness: ExcludedWitness | None = field(default=None)


# -- add-ons ------------------------------------------------------------

def iter_addons(g: Multigraph, v: int, reserved: Counter | None = None,
                avoid=frozenset()) -> Iterator[AddOnMatch]:
    """Every add-on rooted at ``v`` that avoids ``reserved`` edges and ``avoid`` vertices.

    Tries, in order, a double-edge end, a delta end, then square links.
    """
    reserved = Counter() if reserved is None else reserved
    limit = g.n

    def free(a, b, used):
        return g.mult(a, b) - used[_pair(a, b)]

    def walk(v, used, avoid, depth):
        if depth > limit:
            return
        targets = []
        for w in sorted(g.neighbors(v)):
            f = free(v, w, used)
            if f > 0:
                targets.extend([w] * f)
        if len(targets) != 2:
            return
        a, b = targets
        if a in avoid or b in avoid:
            return
        if a == b:
            yield (), "double", (v, a), Counter({_pair(v, a): 2})
            return
        step = Counter({_pair(v, a): 1, _pair(v, b): 1})
        used_ab = used + step
        if free(a, b, used_ab) >= 1:
            yield (), "delta", (v, a, b), step + Counter({_pair(a, b): 1})
        inner = avoid | {v, a, b}
        for c in sorted(set(g.neighbors(a)) & set(g.neighbors(b))):
            if c in inner:
                continue
            if free(a, c, used_ab) < 2 or free(b, c, used_ab) < 2:
                continue
            link = step + Counter({_pair(a, c): 2, _pair(b, c): 2})
            for links, term, terminal, rest in walk(c, used + link, inner, depth + 1):
                yield ((a, c, b),) + links, term, terminal, link + rest

    for links, term, terminal, edges in walk(v, reserved, frozenset(avoid), 0):
        yield AddOnMatch(v, links, term, terminal, tuple(sorted(edges.items())))


def match_addon(g: Multigraph, v: int, reserved: Counter | None = None,
                avoid=frozenset()) -> AddOnMatch | None:
    """First add-on rooted at ``v`` disjoint from ``reserved`` edges, or None."""
    return next(iter_addons(g, v, reserved, avoid), None)


# -- cycles of the simplified graph --------------------------------------

def simple_cycles(g: Multigraph, length: int) -> Iterator[tuple[int, ...]]:
    """Cycles of the simplified graph with exactly ``length`` vertices.

    Each cycle is yielded once, starting at its smallest vertex with the
    smaller of the two neighbours second.
    """
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def extend():
            u = path[-1]
            if len(path) == length:
                if s in g.neighbors(u) and path[1] < path[-1]:
                    yield tuple(path)
                return
            for w in sorted(g.neighbors(u)):
                if w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    yield from extend()
                    path.pop()
                    on_path.discard(w)

        yield from extend()


def _base_counter(cycle, mults, cap=2):
    k = len(cycle)
    return Counter({_pair(cycle[i], cycle[(i + 1) % k]): min(mults[i], cap) for i in range(k)})


# -- base shapes ----------------------------------------------------------

def find_subgraph1(g: Multigraph) -> ExcludedWitness | None:
    for u in range(g.n):
        nu = g.neighbors(u)
        for v in sorted(x for x in nu if x > u):
            nv = g.neighbors(v)
            for w in sorted(x for x in nu if x > v and x in nv):
                ms = (nu[v], nv[w], nu[w])
                if max(ms) >= 2:
                    base = Counter({_pair(u, v): min(ms[0], 2), _pair(v, w): min(ms[1], 2),
                                    _pair(u, w): min(ms[2], 2)})
                    return ExcludedWitness("S1", (u, v, w), tuple(sorted(base.items())))
    return None


def find_subgraph2(g: Multigraph) -> ExcludedWitness | None:
    for cyc in simple_cycles(g, 4):
        mults = [g.mult(cyc[i], cyc[(i + 1) % 4]) for i in range(4)]
        if sum(m >= 2 for m in mults) < 3:
            continue
        base = _base_counter(cyc, mults)
        for i in range(4):
            # vertex i sits between connections i-1 and i
            if mults[i - 1] >= 2 and mults[i] >= 2:
                m = match_addon(g, cyc[i], base, frozenset(cyc))
                if m is not None:
                    return ExcludedWitness("S2", cyc, tuple(sorted(base.items())), (m,))
    return None


def find_subgraph4(g: Multigraph) -> ExcludedWitness | None:
    for cyc in simple_cycles(g, 4):
        mults = [g.mult(cyc[i], cyc[(i + 1) % 4]) for i in range(4)]
        for j in range(4):
            # connection j (cyc[j] - cyc[j+1]) is the single one
            if mults[j] != 1 or any(mults[(j + k) % 4] < 2 for k in (1, 2, 3)):
                continue
            p, q = cyc[j], cyc[(j + 1) % 4]
            for r in sorted(set(g.neighbors(p)) & set(g.neighbors(q))):
                if r in cyc:
                    continue
                base = _base_counter(cyc, mults)
                base[_pair(p, r)] += 1
                base[_pair(q, r)] += 1
                avoid = frozenset(cyc) | {r}
                for first in iter_addons(g, p, base, avoid):
                    used = base + Counter(dict(first.edges))
                    second = match_addon(g, q, used, avoid)
                    if second is not None:
                        return ExcludedWitness("S4", cyc, tuple(sorted(base.items())), (first, second), apex=r)
    return None


def find_subgraph3(g: Multigraph) -> ExcludedWitness | None:
    for cyc in simple_cycles(g, 5):
        mults = [g.mult(cyc[i], cyc[(i + 1) % 5]) for i in range(5)]
        if min(mults) < 2:
            continue
        base = _base_counter(cyc, mults)
        avoid = frozenset(cyc)
        for i in range(5):
            j = (i + 2) % 5
            for first in iter_addons(g, cyc[i], base, avoid):
                used = base + Counter(dict(first.edges))
                second = match_addon(g, cyc[j], used, avoid)
                if second is not None:
                    return ExcludedWitness("S3", cyc, tuple(sorted(base.items())), (first, second))
    return None


def find_excluded(g: Multigraph) -> ExcludedWitness | None:
    """Some excluded-subgraph witness, searched S1, S2, S4, S3; None if there is none."""
    for finder in (find_subgraph1, find_subgraph2, find_subgraph4, find_subgraph3):
        w = finder(g)
        if w is not None:
            return w
    return None


def classify_finiteness(g: Multigraph) -> Classification:
    if not g.is_regular(6):
        raise ValueError("classification needs a 6-regular graph")
    if not is_connected(g):
        raise ValueError("classification needs a connected graph")
    w = find_excluded(g)
    return Classification(Finiteness.INFINITE if w else Finiteness.FINITE, w)


def doubled_cubic_finiteness(g_cubic: Multigraph) -> Finiteness:
    """Finite exactly when the cubic graph has girth at least 6."""
    if not g_cubic.is_simple() or not g_cubic.is_regular(3) or not is_connected(g_cubic):
        raise ValueError("expected a connected simple cubic graph")
    return Finiteness.FINITE if girth_simple(g_cubic) >= 6 else Finiteness.INFINITE


# -- add-on reduction -----------------------------------------------------

def _shift_after_delete(x: int):
    return lambda y: y - 1 if y > x else y


def normalize_addon(g: Multigraph, root: int, reserved: Counter | None = None,
                    avoid=frozenset()) -> tuple[Multigraph, list[str]]:
    """Shrink the add-on at ``root`` to a single double edge by alternating moves.

    A delta end is first turned into a double edge; then, from the far end,
    each link is removed by a YY-delta at its inner vertex followed by a
    delta-YY on the triangle this leaves at the previous addition vertex.
    Returns the final graph and the moves applied. Raises ValueError when no
    add-on is rooted at ``root``.
    """
    reserved = Counter() if reserved is None else Counter(reserved)
    avoid = frozenset(avoid)
    moves: list[str] = []
    while True:
        m = match_addon(g, root, reserved, avoid)
        if m is None:
            raise ValueError(f"no add-on rooted at {root}")
        if m.terminator == "delta":
            site = DeltaSite(*sorted(m.terminal))
            g = apply_delta_yy(g, site)
            moves.append(site.describe())
            continue
        if not m.links:
            return g, moves
        a, c, b = m.links[-1]
        prev = m.links[-2][1] if len(m.links) > 1 else root
        site = wye_at(g, c)
        if site is None:
            raise ValueError(f"link vertex {c} is not a wye centre")
        g = apply_yy_delta(g, site)
        moves.append(site.describe())
        sh = _shift_after_delete(c)
        root, prev, a, b = sh(root), sh(prev), sh(a), sh(b)
        reserved = Counter({_pair(sh(u), sh(v)): k for (u, v), k in reserved.items()})
        avoid = frozenset(sh(x) for x in avoid)
        tri = DeltaSite(*sorted((prev, a, b)))
        g = apply_delta_yy(g, tri)
        moves.append(tri.describe())
