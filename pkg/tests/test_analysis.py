import json
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import given, settings

from deltayy.analysis import (build_double_edged_from_packing, class_report, edge_disjoint_triangle_packing,
                              format_table1, is_bipartite, is_independent, is_planar, max_independent_set,
                              parse_periods, table1_rows, vertex_connectivity)
from deltayy.canonical import canonical_key
from deltayy.catalog import (complete, complete_bipartite, connected_cubic_graphs, cube, heawood,
                             moebius_kantor, petersen, prism, triple_triangle)
from deltayy.explore import Budget, enumerate_class, read_dump
from deltayy.io import FormatError
from deltayy.multigraph import Multigraph, double
from oracles import (brute_bipartite, brute_connectivity, brute_mis, has_kuratowski_subdivision)
from strategies import multigraphs, six_regular

DATA = Path(__file__).parent / "data" / "table1"
FANO = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]


def test_planarity_examples():
    assert not is_planar(complete(5))
    assert is_planar(double(complete(4)))
    assert not is_planar(petersen())
    assert has_kuratowski_subdivision(petersen())
    assert is_planar(cube()) and is_planar(prism())


@settings(max_examples=60)
@given(multigraphs(min_n=1, max_n=8))
def test_planarity_matches_kuratowski_search(g):
    assert is_planar(g) == (not has_kuratowski_subdivision(g))


def test_planarity_cubic_oracle():
    for n in (4, 6, 8):
        for c in connected_cubic_graphs(n):
            assert is_planar(c) == (not has_kuratowski_subdivision(c))


def test_connectivity_examples():
    assert vertex_connectivity(complete(7)) == 6
    assert vertex_connectivity(Multigraph(3, {(0, 1): 2, (1, 2): 1})) == 1
    assert vertex_connectivity(petersen()) == 3
    assert vertex_connectivity(double(complete_bipartite(3, 3))) == 3


@given(multigraphs(min_n=1, max_n=8))
def test_connectivity_matches_brute_force(g):
    assert vertex_connectivity(g) == brute_connectivity(g)


def test_mis_examples():
    assert max_independent_set(double(complete_bipartite(3, 3))) == (3, (0, 1, 2))
    assert max_independent_set(complete(7))[0] == 1
    k, w = max_independent_set(petersen())
    assert k == 4 == brute_mis(petersen()) and is_independent(petersen(), w)
    assert max_independent_set(heawood())[0] == 7


@given(multigraphs(min_n=0, max_n=9))
def test_mis_matches_brute_force(g):
    k, w = max_independent_set(g)
    assert k == brute_mis(g) and len(w) == k and is_independent(g, w)
    # least witness in lexicographic order
    best = next(s for s in combinations(range(g.n), k) if is_independent(g, s)) if g.n else ()
    assert w == best


def test_bipartite_examples():
    assert is_bipartite(complete_bipartite(3, 3))
    assert not is_bipartite(complete(4))
    assert is_bipartite(heawood()) and brute_bipartite(heawood())


@given(multigraphs(min_n=1, max_n=9))
def test_bipartite_matches_brute_force(g):
    assert is_bipartite(g) == brute_bipartite(g)


def _check_packing(g, packing, k):
    assert len(packing) == k
    used = set()
    for a, b, c in packing:
        es = {(a, b), (a, c), (b, c)}
        assert all(g.mult(*e) for e in es)
        assert not used & es
        used |= es


def test_packing_examples():
    p = edge_disjoint_triangle_packing(complete(7), 7)
    _check_packing(complete(7), p, 7)
    assert edge_disjoint_triangle_packing(complete(4), 4) is None
    assert edge_disjoint_triangle_packing(complete(4), 1) is not None
    assert edge_disjoint_triangle_packing(heawood(), 1) is None
    assert edge_disjoint_triangle_packing(cube(), 0) == []
    with pytest.raises(ValueError):
        edge_disjoint_triangle_packing(double(complete(4)), 1)


def test_build_from_fano_packing():
    h = build_double_edged_from_packing(complete(7), FANO)
    assert h.n == 14 and h.is_double_edged()
    assert canonical_key(h) == canonical_key(double(heawood()))
    found = build_double_edged_from_packing(complete(7), edge_disjoint_triangle_packing(complete(7), 7))
    assert canonical_key(found) == canonical_key(h)
    assert sum(1 for _, _, m in found.connections() if m == 1) == 0


def test_build_from_packing_errors():
    with pytest.raises(ValueError):
        build_double_edged_from_packing(complete(7), FANO[:6])
    with pytest.raises(ValueError):
        build_double_edged_from_packing(complete(7), FANO[:6] + [(0, 1, 3)])
    with pytest.raises(ValueError):
        build_double_edged_from_packing(double(complete(4)), FANO)


def test_build_from_packing_in_class():
    e = enumerate_class(complete(7), Budget(max_members=5000))
    assert canonical_key(build_double_edged_from_packing(complete(7), FANO)) in e.members


def test_parse_periods_good():
    records, errors = parse_periods((DATA / "periods.csv").read_text(encoding="utf-8"))
    assert not errors
    assert [r.period for r in records] == ["1", "1", "1", "ζ(3)", "ζ(5)"]
    assert records[0].doubled_key() == canonical_key(double(complete(4)))


def test_parse_periods_diagnostics():
    text = "\n".join([
        "loops,index,graph6,period",
        "1,1,C~,1",
        "1,1,C~,1",
        "x,2,C~,1",
        "2,3,C~",
        "2,4,Bw,1",
        "2,5,@@@,1",
        "2,6,C~,",
        "",
    ])
    records, errors = parse_periods(text)
    assert len(records) == 1
    assert len(errors) == 6
    assert "duplicate" in errors[0] and "integers" in errors[1] and "4 fields" in errors[2]
    assert "cubic" in errors[3] and "empty period" in errors[5]


@pytest.mark.parametrize("text", ["", "a,b,c,d\n1,1,C~,1\n"])
def test_parse_periods_bad_header(text):
    with pytest.raises(FormatError):
        parse_periods(text)


def test_class_report_examples():
    records, _ = parse_periods("loops,index,graph6,period\n1,1,C~,1\n")
    e = enumerate_class(triple_triangle(), Budget(max_members=100))
    rep = class_report(e)
    assert (rep.min_vertices, rep.min_connections, rep.period) == (3, 3, "")
    assert rep.finiteness == "Infinite"
    e = enumerate_class(double(complete(4)), Budget(max_members=500))
    rep = class_report(e, records)
    assert (rep.loops, rep.min_vertices, rep.min_connections, rep.period) == (1, 3, 3, "1")
    assert rep.has_double_edged and rep.has_doubled_cubic
    assert json.loads(rep.to_json())["period"] == "1"
    assert "period" in rep.to_text()


def test_class_report_mk():
    rep = class_report(enumerate_class(double(moebius_kantor()), Budget(max_members=5000)))
    assert rep.status == "Complete" and rep.finiteness == "Finite"
    assert rep.unique_minimal and rep.has_simple and rep.min_vertices == 8 and rep.min_connections == 24


def test_table1_rows_from_fixture():
    records, _ = parse_periods((DATA / "periods.csv").read_text(encoding="utf-8"))
    reports = [class_report(read_dump(p), records) for p in sorted((DATA / "classes").glob("*.dump"))]
    rows = table1_rows(reports)
    assert rows == [(1, 3, 3, "1"), (3, 5, 10, "ζ(3)"), (4, 6, 12, "ζ(5)")]
    assert format_table1(rows) == "# loops, vertices, connections, period\n1, 3, 3, 1\n3, 5, 10, ζ(3)\n4, 6, 12, ζ(5)\n"


@settings(max_examples=30)
@given(six_regular(max_n=9))
def test_wye_caps_connectivity(g):
    from deltayy.transform import find_wyes
    if find_wyes(g):
        assert vertex_connectivity(g) <= 3


def test_packing_converse_small_simple_graphs():
    # recorded search: a double-edged class member coincides with n edge-disjoint triangles
    k8_minus_matching = Multigraph(8, {(u, v): 1 for u, v in combinations(range(8), 2) if v != u + 4})
    for g in (complete(7), k8_minus_matching):
        assert g.is_regular(6)
        packed = edge_disjoint_triangle_packing(g, g.n) is not None
        e = enumerate_class(g, Budget(max_members=5000, max_vertices=2 * g.n))
        assert e.complete
        assert packed == any("double-edged" in m.flags for m in e.members.values())
