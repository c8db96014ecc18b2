"""Regenerate the class dumps and period CSV used by the table1 tests.

Period assignments:
  * "1" for every graph whose doubled class reaches the triple-edged triangle;
  * "ζ(3)" for the Wagner graph, the only 8-vertex cubic graph whose class
    minimum is 5 vertices / 10 connections;
  * "ζ(5)" for one 10-vertex cubic graph whose class minimum is
    6 vertices / 12 connections.
Loop order is n/2 - 1 for a cubic graph on n vertices.
"""

import argparse
from dataclasses import dataclass
from pathlib import Path

from deltayy.explore import Budget, enumerate_class, format_dump
from deltayy.io import parse_graph6
from deltayy.multigraph import double

ENTRIES = [  # (name, graph6, period)
    ("k4", "C~", "1"),
    ("prism", "Es\\o", "1"),
    ("g8_3", "GsXP_[", "1"),
    ("wagner", "GsXPGs", "ζ(3)"),
    ("g10_14", "IsXP?cI@W", "ζ(5)"),
]


@dataclass
class Config:
    out: Path = Path(__file__).resolve().parent.parent / "tests" / "data" / "table1"
    max_members: int = 500


def run(cfg: Config):
    out = cfg.out
    (out / "classes").mkdir(parents=True, exist_ok=True)
    rows = ["loops,index,graph6,period"]
    for i, (name, g6, period) in enumerate(ENTRIES, 1):
        h = parse_graph6(g6)
        e = enumerate_class(double(h), Budget(max_members=cfg.max_members))
        (out / "classes" / f"{name}.dump").write_text(format_dump(e), encoding="utf-8")
        rows.append(f"{h.n // 2 - 1},{i},{g6},{period}")
        print(name, e.status.value, len(e.members))
    (out / "periods.csv").write_text("\n".join(rows) + "\n", encoding="utf-8")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Config.out)
    ap.add_argument("--max-members", type=int, default=Config.max_members)
    a = ap.parse_args()
    run(Config(a.out, a.max_members))


if __name__ == "__main__":
    main()
