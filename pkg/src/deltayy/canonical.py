"""Canonical labelling of multigraphs by partition refinement.

Multiplicities act as edge labels during refinement; graphs are never
expanded into parallel edges. The search individualizes a vertex of the first
smallest non-singleton cell, refines, and recurses. Leaves are compared by
their relabelled connection list; the least one is the canonical form.
Automorphisms discovered at equal leaves prune siblings that lie in the same
orbit of the stabilizer of the current path.
"""

from __future__ import annotations

from .multigraph import Multigraph


def _refine(adj, cells):
    """Refine an ordered partition to the coarsest equitable one below it."""
    while True:
        cell_of = {}
        for i, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = i
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple(sorted([(cell_of[w], m) for w, m in adj[v].items()]))
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
        cells = new_cells
        if not changed:
            return cells


def _initial_cells(adj):
    groups: dict[tuple, list[int]] = {}
    for v, nb in enumerate(adj):
        sig = (sum(nb.values()), tuple(sorted(nb.values())))
        groups.setdefault(sig, []).append(v)
    return [groups[s] for s in sorted(groups)]


def _individualize(cells, idx, v):
    cell = cells[idx]
    rest = [w for w in cell if w != v]
    return cells[:idx] + [[v], rest] + cells[idx + 1:]


class _Find:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def canonical_form(g: Multigraph) -> tuple[tuple[tuple[int, int, int], ...], list[int]]:
    """Return ``(relabelled connection list, order)``.

    ``order[i]`` is the input vertex placed at canonical position ``i``.
    """
    adj = g._adj
    n = g.n
    if n == 0:
        return (), []

    best = None
    best_order = None
    first = None
    first_order = None
    autos: list[list[int]] = []

    def leaf(cells):
        nonlocal best, best_order, first, first_order
        order = [c[0] for c in cells]
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        form = []
        for u in range(n):
            pu = pos[u]
            for w, m in adj[u].items():
                pw = pos[w]
                if pu < pw:
                    form.append((pu, pw, m))
        form.sort()
        form = tuple(form)
        if first is None:
            first, first_order = form, order
        for ref, ref_order in ((first, first_order), (best, best_order)):
            if ref is not None and form == ref and ref_order is not order:
                autos.append([ref_order[pos[v]] for v in range(n)])
                break
        if best is None or form < best:
            best, best_order = form, order

    def search(cells, fixed):
        if len(cells) == n:
            leaf(cells)
            return
        idx = None
        size = n + 1
        for i, c in enumerate(cells):
            if 1 < len(c) < size:
                idx, size = i, len(c)
        target = sorted(cells[idx])
        tried: list[int] = []
        seen_autos = -1
        uf = None
        for v in target:
            if tried:
                if seen_autos != len(autos):
                    uf = _Find(n)
                    for a in autos:
                        if all(a[x] == x for x in fixed):
                            for x in range(n):
                                uf.union(x, a[x])
                    seen_autos = len(autos)
                rv = uf.find(v)
                if any(uf.find(t) == rv for t in tried):
                    continue
            tried.append(v)
            search(_refine(adj, _individualize(cells, idx, v)), fixed + [v])

    search(_refine(adj, _initial_cells(adj)), [])
    return best, best_order


def canonical_key(g: Multigraph) -> bytes:
    """Isomorphism-invariant byte string: ``n`` then the canonical connection list.

    Fields are 2-byte big-endian so byte order equals numeric tuple order.
    """
    if g._key is None:
        form, _ = canonical_form(g)
        out = bytearray(g.n.to_bytes(2, "big"))
        for u, v, m in form:
            out += u.to_bytes(2, "big") + v.to_bytes(2, "big") + m.to_bytes(2, "big")
        g._key = bytes(out)
    return g._key


def canonical_graph(g: Multigraph) -> Multigraph:
    """The canonical representative (vertices renumbered by canonical order)."""
    form, _ = canonical_form(g)
    return Multigraph(g.n, {(u, v): m for u, v, m in form})


def graph_from_key(key: bytes) -> Multigraph:
    n = int.from_bytes(key[:2], "big")
    conn = {}
    for i in range(2, len(key), 6):
        u = int.from_bytes(key[i:i + 2], "big")
        v = int.from_bytes(key[i + 2:i + 4], "big")
        conn[(u, v)] = int.from_bytes(key[i + 4:i + 6], "big")
    return Multigraph(n, conn)


def key_hex(key: bytes) -> str:
    return key.hex()


def is_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    if g.n != h.n or g.m_edges != h.m_edges or g.m_connections != h.m_connections:
        return False
    return canonical_key(g) == canonical_key(h)
