"""Does a double-edged class member imply n edge-disjoint triangles in the seed?

Walks every simple 6-regular graph on up to ``max_n`` vertices (complements
of the (n-7)-regular graphs), enumerates its class up to 2n vertices and
compares "class has a double-edged member" with "seed has n edge-disjoint
triangles". A graph with the first but not the second contradicts the
converse.
"""

import argparse
from dataclasses import dataclass
from itertools import combinations

from deltayy.analysis import edge_disjoint_triangle_packing
from deltayy.canonical import canonical_key
from deltayy.catalog import complete, complete_bipartite, connected_cubic_graphs, prism
from deltayy.explore import Budget, enumerate_class
from deltayy.io import format_graph6
from deltayy.multigraph import Multigraph


@dataclass
class Config:
    max_n: int = 10
    max_members: int = 20000


def complement(g: Multigraph) -> Multigraph:
    return Multigraph(g.n, {(u, v): 1 for u, v in combinations(range(g.n), 2) if not g.mult(u, v)})


def disjoint_union(*gs) -> Multigraph:
    edges, off = {}, 0
    for g in gs:
        for u, v, m in g.connections():
            edges[(u + off, v + off)] = m
        off += g.n
    return Multigraph(off, edges)


def cycles(*lengths) -> Multigraph:
    return disjoint_union(*(Multigraph(k, {tuple(sorted((i, (i + 1) % k))): 1 for i in range(k)}) for k in lengths))


def simple_six_regular(max_n: int):
    out = [complete(7)]
    if max_n >= 8:
        out.append(complement(disjoint_union(*[complete(2)] * 4)))
    if max_n >= 9:
        out.extend(complement(cycles(*ls)) for ls in ((9,), (6, 3), (5, 4), (3, 3, 3)))
    if max_n >= 10:
        cubic = connected_cubic_graphs(10) + [disjoint_union(complete(4), complete_bipartite(3, 3)),
                                              disjoint_union(complete(4), prism())]
        out.extend(complement(c) for c in cubic)
    seen, res = set(), []
    for g in out:
        k = canonical_key(g)
        if k not in seen:
            seen.add(k)
            res.append(g)
    return res


def run(cfg: Config):
    rows = []
    for g in simple_six_regular(cfg.max_n):
        packed = edge_disjoint_triangle_packing(g, g.n) is not None
        e = enumerate_class(g, Budget(max_members=cfg.max_members, max_vertices=2 * g.n))
        de = any("double-edged" in m.flags for m in e.members.values())
        rows.append((g, packed, de, e))
        tag = "COUNTEREXAMPLE" if de and not packed else ""
        print(f"{format_graph6(g):12s} n={g.n:2d} members={len(e.members):5d} {e.status.value:25s} "
              f"packing={'yes' if packed else 'no '} double-edged={'yes' if de else 'no '} {tag}", flush=True)
    print(f"graphs {len(rows)} counterexamples {sum(de and not p for _, p, de, _ in rows)}")
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--max-members", type=int, default=Config.max_members)
    a = ap.parse_args()
    run(Config(a.max_n, a.max_members))


if __name__ == "__main__":
    main()
