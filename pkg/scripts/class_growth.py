"""How far up an infinite class a search gets within a member budget.

Runs the breadth-first class enumeration (no vertex cap) and a best-first
climb on the same seed, printing members per BFS depth, the largest vertex
count per depth, and the climb result.
"""

import argparse
import time
from collections import defaultdict
from dataclasses import dataclass

from deltayy.catalog import named_graphs
from deltayy.explore import Budget, climb, enumerate_class
from deltayy.multigraph import double


@dataclass
class Config:
    graph: str = "Petersen"
    budget: int = 5000


def run(cfg: Config):
    g = double(named_graphs()[cfg.graph])
    t = time.monotonic()
    e = enumerate_class(g, Budget(max_members=cfg.budget, max_vertices=10 * g.n))
    per_depth = defaultdict(list)
    for m in e.members.values():
        per_depth[m.depth].append(m.n)
    print(f"seed 2{cfg.graph} n={g.n} status={e.status.value} members={len(e.members)} ({time.monotonic() - t:.1f}s)")
    print("depth members max_n")
    for d in sorted(per_depth):
        print(f"{d:5d} {len(per_depth[d]):7d} {max(per_depth[d]):5d}")
    print("by n", e.counts_by_n())
    t = time.monotonic()
    n, path = climb(g, cfg.budget)
    print(f"best-first climb: {n} vertices after {len(path)} moves ({time.monotonic() - t:.1f}s)")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graph", default=Config.graph, help="name from the catalog, doubled before use")
    ap.add_argument("--budget", type=int, default=Config.budget)
    a = ap.parse_args()
    run(Config(a.graph, a.budget))


if __name__ == "__main__":
    main()
