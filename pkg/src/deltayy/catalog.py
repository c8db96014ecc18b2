"""Named graphs, connected cubic graph catalogues, and random 6-regular corpora."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

import networkx as nx

from .canonical import canonical_graph, canonical_key, graph_from_key
from .multigraph import Multigraph, double, is_connected
from .transform import apply_delta_yy, apply_yy_delta, find_deltas, find_wyes

# connected simple cubic graphs on 4, 6, ..., 14 vertices (OEIS A002851)
CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}


def from_networkx(h) -> Multigraph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Multigraph.from_edges(len(idx), ((idx[u], idx[v]) for u, v in h.edges()))


def complete(n: int) -> Multigraph:
    return Multigraph(n, {(u, v): 1 for u, v in combinations(range(n), 2)})


def complete_bipartite(a: int, b: int) -> Multigraph:
    return Multigraph(a + b, {(u, a + v): 1 for u in range(a) for v in range(b)})


def cycle(n: int, mult: int = 1) -> Multigraph:
    return Multigraph(n, {(min(i, (i + 1) % n), max(i, (i + 1) % n)): mult for i in range(n)})


def triple_triangle() -> Multigraph:
    return Multigraph(3, {(0, 1): 3, (0, 2): 3, (1, 2): 3})


def prism() -> Multigraph:
    return from_networkx(nx.circular_ladder_graph(3))


def cube() -> Multigraph:
    return from_networkx(nx.hypercube_graph(3))


def petersen() -> Multigraph:
    return from_networkx(nx.petersen_graph())


def heawood() -> Multigraph:
    return from_networkx(nx.heawood_graph())


def moebius_kantor() -> Multigraph:
    return from_networkx(nx.moebius_kantor_graph())


def named_graphs() -> dict[str, Multigraph]:
    """The simple graphs the proposition suite always covers."""
    return {
        "K4": complete(4),
        "K5": complete(5),
        "K3,3": complete_bipartite(3, 3),
        "prism": prism(),
        "cube": cube(),
        "Petersen": petersen(),
        "Heawood": heawood(),
        "Moebius-Kantor": moebius_kantor(),
        "K7": complete(7),
    }


def named_six_regular() -> dict[str, Multigraph]:
    """6-regular seeds: doubled cubic graphs, K7 and the triple-edged triangle."""
    out = {"triple-triangle": triple_triangle(), "K7": complete(7)}
    for name, g in named_graphs().items():
        if g.is_regular(3):
            out["2" + name] = double(g)
    return out


# -- cubic graphs ---------------------------------------------------------

def _edge_insertions(g: Multigraph):
    """All simple cubic graphs on n+2 vertices made by joining midpoints of two distinct edges."""
    edges = [(u, v) for u, v, _ in g.connections()]
    n = g.n
    a, b = n, n + 1
    for (p, q), (r, s) in combinations(edges, 2):
        new = [e for e in edges if e != (p, q) and e != (r, s)]
        new += [(p, a), (q, a), (r, b), (s, b), (a, b)]
        yield Multigraph.from_edges(n + 2, new)


def _diamond_insertions(g: Multigraph):
    """Replace one edge ``pq`` by ``p - t1 <diamond> t2 - q`` (four new vertices)."""
    edges = [(u, v) for u, v, _ in g.connections()]
    n = g.n
    t1, m1, m2, t2 = n, n + 1, n + 2, n + 3
    gadget = [(t1, m1), (t1, m2), (m1, m2), (m1, t2), (m2, t2)]
    for p, q in edges:
        new = [e for e in edges if e != (p, q)] + gadget + [(p, t1), (t2, q)]
        yield Multigraph.from_edges(n + 4, new)


def _rooted_key(n, edges, root):
    # a pendant vertex marks the root; it is the only degree-1 vertex
    return canonical_key(Multigraph.from_edges(n + 1, edges + [(root, n)]))


@lru_cache(maxsize=None)
def _sides(k: int) -> tuple[tuple[int, tuple, int], ...]:
    """Connected simple graphs on ``k`` vertices, one root of degree 2, all others degree 3.

    Returned as ``(n, edges, root)``. The root's neighbours are either
    non-adjacent (a subdivided edge of a cubic graph), adjacent with distinct
    outer neighbours (a triangle hung on a smaller side) or adjacent with a
    common outer neighbour (a diamond hung on a smaller side).
    """
    if k < 5:
        return ()
    found: dict[bytes, tuple] = {}

    def add(n, edges, root):
        found.setdefault(_rooted_key(n, edges, root), (n, tuple(edges), root))

    r = k - 1
    for h in connected_cubic_graphs(k - 1):
        edges = [(u, v) for u, v, _ in h.connections()]
        for a, b in edges:
            add(k, [e for e in edges if e != (a, b)] + [(a, r), (b, r)], r)
    for n2, edges, root in _sides(k - 2):
        outer = [v for e in edges if root in e for v in e if v != root]
        base = [e for e in edges if root not in e]
        a, b, r = root, n2, n2 + 1
        add(k, base + [(outer[0], a), (outer[1], b), (a, b), (a, r), (b, r)], r)
    for n4, edges, c in _sides(k - 4):
        top, a, b, r = n4, n4 + 1, n4 + 2, n4 + 3
        add(k, list(edges) + [(c, top), (top, a), (top, b), (a, b), (a, r), (b, r)], r)
    return tuple(found[key] for key in sorted(found))


def _bridged(n: int):
    """Cubic graphs on ``n`` vertices with a bridge: two sides joined root to root."""
    for k1 in range(5, n // 2 + 1, 2):
        for n1, e1, r1 in _sides(k1):
            for n2, e2, r2 in _sides(n - k1):
                edges = list(e1) + [(u + n1, v + n1) for u, v in e2] + [(r1, r2 + n1)]
                yield Multigraph.from_edges(n1 + n2, edges)


@lru_cache(maxsize=None)
def _cubic_keys(n: int) -> tuple[bytes, ...]:
    if n < 4 or n % 2:
        return ()
    if n == 4:
        return (canonical_key(complete(4)),)
    seen: dict[bytes, None] = {}
    for h in _cubic_keys(n - 2):
        for g in _edge_insertions(graph_from_key(h)):
            seen.setdefault(canonical_key(g), None)
    for h in _cubic_keys(n - 4):
        for g in _diamond_insertions(graph_from_key(h)):
            seen.setdefault(canonical_key(g), None)
    for g in _bridged(n):
        seen.setdefault(canonical_key(g), None)
    return tuple(sorted(seen))


def connected_cubic_graphs(n: int) -> list[Multigraph]:
    """All connected simple cubic graphs on ``n`` vertices, canonical form, key order.

    Graphs on ``n`` vertices come from those on ``n - 2`` by joining the
    midpoints of two edges, from those on ``n - 4`` by replacing an edge with
    a diamond string, and from bridge joins of two rooted sides. The counts
    are checked against :data:`CUBIC_COUNTS` in the test suite.
    """
    return [graph_from_key(k) for k in _cubic_keys(n)]


# -- random corpora -------------------------------------------------------

def random_regular_multigraph(n: int, rng: random.Random, k: int = 6, max_tries: int = 1000) -> Multigraph:
    """Uniform stub pairing, rejecting self-loops; connectedness not enforced."""
    if n * k % 2 or n < 2:
        raise ValueError(f"no loopless {k}-regular multigraph on {n} vertices")
    for _ in range(max_tries):
        stubs = [v for v in range(n) for _ in range(k)]
        rng.shuffle(stubs)
        pairs = list(zip(stubs[::2], stubs[1::2]))
        if all(u != v for u, v in pairs):
            return Multigraph.from_edges(n, pairs)
    raise RuntimeError("stub pairing kept producing loops")


def random_walk(g: Multigraph, steps: int, rng: random.Random, max_n: int = 12) -> Multigraph:
    """Apply ``steps`` random moves, never exceeding ``max_n`` vertices."""
    for _ in range(steps):
        moves = [("D", s) for s in find_deltas(g)] if g.n < max_n else []
        moves += [("Y", s) for s in find_wyes(g)]
        if not moves:
            break
        kind, s = rng.choice(moves)
        g = apply_delta_yy(g, s) if kind == "D" else apply_yy_delta(g, s)
    return g


def random_corpus(size: int = 500, seed: int = 0, max_n: int = 12, connected: bool = False) -> list[Multigraph]:
    """Randomly grown 6-regular multigraphs on at most ``max_n`` vertices.

    Half come from random move sequences started at the named 6-regular
    seeds, half from stub pairing followed by a short random walk. Vertex
    order is shuffled so labels carry no structure.
    """
    rng = random.Random(seed)
    seeds = [g for g in named_six_regular().values() if g.n <= max_n]
    out = []
    while len(out) < size:
        if len(out) % 2 == 0:
            g = random_walk(rng.choice(seeds), rng.randint(1, 12), rng, max_n)
        else:
            g = random_regular_multigraph(rng.randint(3, max_n), rng)
            g = random_walk(g, rng.randint(0, 4), rng, max_n)
        if connected and not is_connected(g):
            continue
        perm = list(range(g.n))
        rng.shuffle(perm)
        out.append(g.relabel(perm))
    return out


def canonical_named(name: str) -> Multigraph:
    return canonical_graph(named_graphs()[name])
