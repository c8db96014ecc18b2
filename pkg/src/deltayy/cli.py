"""Command-line front end.

Exit status: 0 on success, 1 when the input is refused (wrong degree,
disconnected, excluded subgraph present, failed verification), 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import analysis, classify, explore, io
from .canonical import canonical_key, graph_from_key, key_hex
from .multigraph import double, girth_simple, stats
from .transform import find_deltas, find_wyes

GRAPH_SUFFIXES = (".mg", ".g6", ".txt")


class UsageError(Exception):
    pass


def _budget(args) -> explore.Budget:
    try:
        return explore.Budget(max_members=args.max_members, max_vertices=args.max_vertices)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_props(args, out):
    g = io.read_graph(args.file)
    st = stats(g)
    k, _ = analysis.max_independent_set(g)
    girth = girth_simple(g)
    rows = [
        ("n", st.n), ("edges", st.m_edges), ("connections", st.m_connections),
        ("degrees", " ".join(map(str, st.degrees))), ("singles", st.singles), ("doubles", st.doubles),
        ("max multiplicity", st.max_mult), ("components", st.components),
        ("cyclomatic", st.cyclomatic), ("cyclomatic simple", st.cyclomatic_simple),
        ("6-regular", g.is_regular(6)), ("simple", g.is_simple()), ("double-edged", g.is_double_edged()),
        ("girth", "inf" if girth == float("inf") else girth), ("planar", analysis.is_planar(g)),
        ("vertex connectivity", analysis.vertex_connectivity(g)), ("independence number", k),
        ("bipartite", analysis.is_bipartite(g)), ("deltas", len(find_deltas(g))), ("wyes", len(find_wyes(g))),
        ("key", key_hex(canonical_key(g))),
    ]
    width = max(len(name) for name, _ in rows)
    for name, val in rows:
        if isinstance(val, bool):
            val = "yes" if val else "no"
        out.write(f"{name.ljust(width)}  {val}\n")
    return 0


def cmd_double(args, out):
    out.write(io.format_mg(double(io.read_graph(args.file))))
    return 0


def cmd_classify(args, out):
    res = classify.classify_finiteness(io.read_graph(args.file))
    out.write(f"verdict {res.verdict.value}\n")
    if res.witness is not None:
        w = res.witness
        out.write(f"witness {w.describe()}\n")
        out.write("vertices " + " ".join(map(str, w.vertices())) + "\n")
    return 0


def cmd_explore(args, out):
    e = explore.enumerate_class(io.read_graph(args.file), _budget(args))
    out.write(explore.format_dump(e, with_graphs=args.graphs))
    return 0


def cmd_minimal(args, out):
    e = explore.enumerate_class(io.read_graph(args.file), _budget(args))
    rep = analysis.class_report(e)
    out.write(rep.to_text())
    if not e.complete:
        out.write("note  extrema observed, not certified\n")
    mins = e.minimum()
    for k in e.minimal():
        tag = "minimum" if k in mins else "minimal"
        out.write(f"{tag} {k.hex()}\n")
        out.write(io.format_mg(graph_from_key(k)))
    return 0


def cmd_reduce(args, out):
    g = io.read_graph(args.file)
    h, moves = explore.reduce_trace(g)
    for m in moves:
        out.write(f"move {m}\n")
    out.write(f"# {g.n} -> {h.n} vertices\n")
    out.write(io.format_mg(h))
    return 0


def cmd_normalize(args, out):
    out.write(io.format_mg(explore.triangle_free_normalize(io.read_graph(args.file))))
    return 0


def _graph_files(directory: Path):
    return sorted(p for p in directory.iterdir() if p.is_file() and p.suffix in GRAPH_SUFFIXES)


def cmd_verify(args, out):
    from . import verify

    corpus = None
    if args.corpus:
        d = Path(args.corpus)
        if not d.is_dir():
            raise io.FormatError(f"{d}: not a directory")
        corpus = [(p.name, io.read_graph(p)) for p in _graph_files(d)]
    results = verify.run_all(corpus)
    bad = 0
    for r in results:
        out.write(r.line() + "\n")
        for msg in r.messages:
            out.write(f"  violation {msg}\n")
        bad += r.violations
    return 1 if bad else 0


def cmd_table1(args, out):
    d = Path(args.classes)
    if not d.is_dir():
        raise io.FormatError(f"{d}: not a directory")
    try:
        text = Path(args.periods).read_text(encoding="utf-8")
    except UnicodeDecodeError:
        raise io.FormatError(f"{args.periods}: not UTF-8 text") from None
    records, errors = analysis.parse_periods(text)
    for err in errors:
        sys.stderr.write(f"periods: {err}\n")
    reports = []
    for p in sorted(d.iterdir()):
        if p.suffix == ".dump":
            e = explore.read_dump(p)
        elif p.suffix in GRAPH_SUFFIXES:
            e = explore.enumerate_class(io.read_graph(p), _budget(args))
        else:
            continue
        reports.append(analysis.class_report(e, records))
    out.write(analysis.format_table1(analysis.table1_rows(reports)))
    return 0


def cmd_export_dot(args, out):
    out.write(io.format_dot(io.read_graph(args.file)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="deltayy", description="Delta-YY equivalence classes of 6-regular multigraphs")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="MG or graph6 file")
        sp.set_defaults(func=func)
        return sp

    def with_budget(sp):
        sp.add_argument("--max-members", type=int, default=5000)
        sp.add_argument("--max-vertices", type=int, default=None, help="default: seed vertex count + 8")

    with_file("props", cmd_props, "structural summary")
    with_file("double", cmd_double, "double every edge of a simple graph")
    with_file("classify", cmd_classify, "finite or infinite class, with witness")
    sp = with_file("explore", cmd_explore, "enumerate the class by BFS")
    with_budget(sp)
    sp.add_argument("--graphs", action="store_true", help="append an MG block per member")
    with_budget(with_file("minimal", cmd_minimal, "minimal and minimum members"))
    with_file("reduce", cmd_reduce, "YY-delta-only reduction with trace")
    with_file("normalize", cmd_normalize, "delta-YY every triangle")
    sp = sub.add_parser("verify", help="run the proposition suites")
    sp.add_argument("--corpus", help="directory of MG/graph6 files (default: built-in corpus)")
    sp.set_defaults(func=cmd_verify)
    sp = sub.add_parser("table1", help="aggregate class minima per period term")
    sp.add_argument("--classes", required=True, help="directory of .dump files or graph files")
    sp.add_argument("--periods", required=True, help="CSV with columns loops,index,graph6,period")
    with_budget(sp)
    sp.set_defaults(func=cmd_table1)
    with_file("export-dot", cmd_export_dot, "DOT drawing, one line per parallel edge")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (io.FormatError, UsageError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"refused: {exc}\n")
        return 1


run = main

if __name__ == "__main__":
    sys.exit(main())
