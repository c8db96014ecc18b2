"""Chain-pattern prediction vs BFS minimum for doubled cubic graphs.

For every connected cubic graph up to ``max_n`` vertices: reduce the doubled
graph with YY-delta moves only, look for the chain-of-triangles pattern in the
result, and compare with the smallest member known: the BFS minimum, or the
graph the chain reduction produces when a chain is present.
One line per graph, then a summary.
"""

import argparse
import time
from dataclasses import dataclass

from deltayy.catalog import connected_cubic_graphs
from deltayy.explore import Budget, conjecture51_probe
from deltayy.io import format_graph6


@dataclass
class Config:
    max_n: int = 12
    max_members: int = 2000


def run(cfg: Config):
    rows = []
    for n in range(4, cfg.max_n + 1, 2):
        for c in connected_cubic_graphs(n):
            t = time.monotonic()
            r = conjecture51_probe(c, Budget(max_members=cfg.max_members))
            rows.append((c, r))
            print(f"{format_graph6(c):12s} n={n:2d} greedy={r.greedy_n:2d} bfs={r.bfs_n:2d} "
                  f"{'cert' if r.reference_certified else 'obs '} chain={r.chain_n if r.chain else '-':>2} "
                  f"{'agree' if r.agree else 'DISAGREE'} {time.monotonic() - t:.1f}s", flush=True)
    bad = [c for c, r in rows if not r.agree]
    chains = sum(r.chain is not None for _, r in rows)
    below = sum(r.greedy_n < r.bfs_n for _, r in rows)
    print(f"graphs {len(rows)} disagreements {len(bad)} chains {chains} reduct below BFS minimum {below}")
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--max-members", type=int, default=Config.max_members)
    a = ap.parse_args()
    rows = run(Config(a.max_n, a.max_members))
    return 1 if any(not r.agree for _, r in rows) else 0


if __name__ == "__main__":
    raise SystemExit(main())
