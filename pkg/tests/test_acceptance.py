"""Acceptance criteria, one PASS/FAIL line each.

Run under pytest (the lines are gathered into an "acceptance criteria"
section of the terminal summary) or as a script:
``python tests/test_acceptance.py``. All tolerances are exact.
"""

import io
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from deltayy.canonical import canonical_key, graph_from_key  # noqa: E402
from deltayy.catalog import (CUBIC_COUNTS, complete, complete_bipartite, connected_cubic_graphs,  # noqa: E402
                             heawood, moebius_kantor, petersen, random_corpus, random_regular_multigraph,
                             triple_triangle)
from deltayy.classify import Finiteness, classify_finiteness, doubled_cubic_finiteness  # noqa: E402
from deltayy.cli import main as cli_main  # noqa: E402
from deltayy.explore import Budget, climb, enumerate_class, reduce_trace  # noqa: E402
from deltayy.multigraph import Multigraph, double, stats  # noqa: E402
from deltayy.transform import DeltaSite, apply_delta_yy, apply_yy_delta, find_deltas, find_wyes, wye_at  # noqa: E402
from deltayy.verify import default_corpus, run_all  # noqa: E402
from oracles import brute_isomorphic_perm  # noqa: E402

DATA = Path(__file__).resolve().parent / "data" / "table1"

CORPUS_SIZE = 500
CORPUS_MAX_N = 12
CUBIC_MAX_N = 14
K7_CONNECTIONS = 21
K7_MAX_MULT = 2
MK_BUDGET = 5000
TT_REDUCTION_MOVES = 3
GROWTH_BUDGET = 5000
GROWTH_TARGET_N = 20
PAIRS = 2000
PAIR_MAX_N = 7
TABLE1_EXPECTED = "# loops, vertices, connections, period\n1, 3, 3, 1\n3, 5, 10, ζ(3)\n4, 6, 12, ζ(5)\n"

_corpus = None
REPORTED: list[str] = []


def corpus():
    global _corpus
    if _corpus is None:
        _corpus = random_corpus(CORPUS_SIZE, seed=0, max_n=CORPUS_MAX_N)
    return _corpus


def report(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}"
    REPORTED.append(line)
    print(line, flush=True)
    return line


def criterion_1():
    sites = bad = 0
    for g in corpus():
        key = canonical_key(g)
        for s in find_deltas(g):
            h = apply_delta_yy(g, s)
            sites += 1
            bad += canonical_key(apply_yy_delta(h, wye_at(h, h.n - 1))) != key
        for s in find_wyes(g):
            h = apply_yy_delta(g, s)
            sh = [y - 1 if y > s.x else y for y in (s.u, s.v, s.w)]
            sites += 1
            bad += canonical_key(apply_delta_yy(h, DeltaSite(*sorted(sh)))) != key
    return bad == 0 and sites > 0, f"round trips over {len(corpus())} graphs, {sites} sites, {bad} mismatches"


def criterion_2():
    checks = bad = 0
    for g in corpus():
        st = stats(g)
        for s in find_deltas(g):
            h = apply_delta_yy(g, s)
            t = stats(h)
            checks += 1
            bad += not (h.is_regular(6) and t.m_edges == st.m_edges + 3 and t.cyclomatic == st.cyclomatic + 2)
        for s in find_wyes(g):
            h = apply_yy_delta(g, s)
            t = stats(h)
            checks += 1
            bad += not (h.is_regular(6) and t.m_edges == st.m_edges - 3 and t.cyclomatic == st.cyclomatic - 2)
    return bad == 0 and checks > 0, f"{checks} neighbours checked, {bad} violations"


def criterion_3():
    total = bad = 0
    counts = {}
    for n in range(4, CUBIC_MAX_N + 1, 2):
        graphs = connected_cubic_graphs(n)
        counts[n] = len(graphs)
        for c in graphs:
            total += 1
            bad += doubled_cubic_finiteness(c) != classify_finiteness(double(c)).verdict
    counts_ok = counts == {n: CUBIC_COUNTS[n] for n in counts}
    return bad == 0 and counts_ok, f"{total} cubic graphs (counts {counts}), {bad} disagreements"


def criterion_4():
    e = enumerate_class(complete(7), Budget(max_members=5000))
    i, c = 7, stats(complete(7)).cyclomatic
    problems = []
    for m in e.members.values():
        st = m.stats
        if st.m_connections != K7_CONNECTIONS:
            problems.append("connections")
        if st.max_mult > K7_MAX_MULT:
            problems.append("multiplicity")
        if st.singles != 6 * i - 3 * st.n:
            problems.append("singles")
        if st.cyclomatic_simple != c + i - st.n:
            problems.append("c_simple")
    mins = e.minimal()
    if min(e.members[k].n for k in mins) != 7 or canonical_key(complete(7)) not in mins:
        problems.append("minimum")
    hk = canonical_key(double(heawood()))
    if hk not in e.members or e.members[hk].n != 14 or "double-edged" not in e.members[hk].flags:
        problems.append("double(Heawood)")
    ok = e.complete and not problems
    return ok, f"status {e.status.value}, {len(e.members)} members, by n {e.counts_by_n()}, problems {sorted(set(problems))}"


def criterion_5():
    seed = double(moebius_kantor())
    e = enumerate_class(seed, Budget(max_members=MK_BUDGET))
    mx, mn = e.maximal(), e.minimal()
    simple = len(mn) == 1 and graph_from_key(mn[0]).is_simple()
    ok = e.complete and mx == [canonical_key(seed)] and simple
    n_min = e.members[mn[0]].n
    return ok, (f"status {e.status.value}, {len(e.members)} members, maximal {len(mx)} (seed), "
                f"minimal {len(mn)} on {n_min} vertices, simple {simple}")


def criterion_6():
    g = double(complete_bipartite(3, 3))
    h, moves = reduce_trace(g)
    replay = g
    for x in (2, 1, 0):
        replay = apply_yy_delta(replay, wye_at(replay, x))
    tt = canonical_key(triple_triangle())
    same = canonical_key(h) == canonical_key(replay) == tt
    verdicts = (classify_finiteness(g).verdict, classify_finiteness(triple_triangle()).verdict)
    ok = same and len(moves) == TT_REDUCTION_MOVES and verdicts == (Finiteness.INFINITE, Finiteness.INFINITE)
    return ok, f"moves {moves}, reaches triple triangle {same}, verdicts {[v.value for v in verdicts]}"


def criterion_7():
    g = double(petersen())
    e = enumerate_class(g, Budget(max_members=GROWTH_BUDGET, max_vertices=10 * g.n))
    best = max(m.n for m in e.members.values())
    t = time.monotonic()
    climb_n, _ = climb(g, max_members=GROWTH_BUDGET)
    return best >= GROWTH_TARGET_N, (
        f"BFS budget {GROWTH_BUDGET} reaches {best} vertices (target {GROWTH_TARGET_N}), status {e.status.value}; "
        f"best-first search with the same budget reaches {climb_n} ({time.monotonic() - t:.1f}s)")


def criterion_8():
    results = run_all(default_corpus())
    bad = sum(r.violations for r in results)
    detail = "; ".join(f"{r.name} {r.checks}/{r.violations}" for r in results)
    return bad == 0 and all(r.checks for r in results), f"checks/violations: {detail}"


def criterion_9():
    out = io.StringIO()
    code = cli_main(["table1", "--classes", str(DATA / "classes"), "--periods", str(DATA / "periods.csv")], out)
    text = out.getvalue()
    return code == 0 and text == TABLE1_EXPECTED, f"exit {code}, output {text.splitlines()[1:]!r}"


def pair_corpus(count=PAIRS, seed=0):
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < count:
        n = rng.randint(1, PAIR_MAX_N)
        kind = len(pairs) % 4
        if kind in (0, 1):
            g = _random_multigraph(n, rng) if kind == 0 or n < 2 else random_regular_multigraph(max(n, 2), rng)
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = g.relabel(perm)
            if kind == 1:
                h = _switch(h, rng) if rng.random() < 0.5 else h
        elif kind == 2:
            n = max(n, 2)
            g, h = random_regular_multigraph(n, rng), random_regular_multigraph(n, rng)
        else:
            g = _random_multigraph(n, rng)
            h = _random_multigraph(n, rng)
        pairs.append((g, h))
    return pairs


def _random_multigraph(n, rng):
    return Multigraph(n, {(u, v): m for u in range(n) for v in range(u + 1, n) if (m := rng.choice((0, 0, 1, 2, 3)))})


def _switch(g, rng):
    """Degree-preserving double edge swap, when one is available."""
    edges = [(u, v) for u, v, m in g.connections() for _ in range(m)]
    for _ in range(20):
        if len(edges) < 2:
            return g
        (a, b), (c, d) = rng.sample(edges, 2)
        if len({a, b, c, d}) == 4:
            e = dict(((u, v), m) for u, v, m in g.connections())
            for p in ((a, b), (c, d)):
                e[p] -= 1
            for p in (tuple(sorted((a, d))), tuple(sorted((c, b)))):
                e[p] = e.get(p, 0) + 1
            return Multigraph(g.n, {p: m for p, m in e.items() if m})
    return g


def criterion_10():
    pairs = pair_corpus()
    bad = iso = 0
    for g, h in pairs:
        truth = brute_isomorphic_perm(g, h)
        iso += truth
        bad += (canonical_key(g) == canonical_key(h)) != truth
    return bad == 0, f"{len(pairs)} pairs ({iso} isomorphic), {bad} disagreements"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number):
    ok, detail = CRITERIA[number - 1]()
    report(number, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for i, crit in enumerate(CRITERIA, 1):
        t = time.monotonic()
        ok, detail = crit()
        report(i, ok, f"{detail} [{time.monotonic() - t:.1f}s]")
        failed += not ok
    sys.exit(1 if failed else 0)
