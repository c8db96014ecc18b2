import random

from hypothesis import given, settings, strategies as st

from deltayy.canonical import (canonical_form, canonical_graph, canonical_key, graph_from_key,
                               is_isomorphic, key_hex)
from deltayy.catalog import complete, complete_bipartite, heawood, prism
from deltayy.multigraph import Multigraph, double
from deltayy.transform import DeltaSite, apply_delta_yy
from oracles import brute_isomorphic, brute_isomorphic_perm
from strategies import multigraphs, six_regular

# the Fano plane's lines
FANO = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]


def test_relabel_invariance_example():
    g = double(complete_bipartite(3, 3))
    h = g.relabel([5, 3, 1, 0, 2, 4])
    assert canonical_key(g) == canonical_key(h)


def test_different_graphs_differ():
    assert canonical_key(double(complete(4))) != canonical_key(double(complete_bipartite(3, 3)))
    c5 = Multigraph(5, {(0, 1): 2, (1, 2): 2, (2, 3): 2, (3, 4): 2, (0, 4): 2})
    c5b = Multigraph(5, {(0, 1): 3, (1, 2): 2, (2, 3): 2, (3, 4): 2, (0, 4): 1})
    assert not is_isomorphic(c5, c5b)


def test_fano_sequence_gives_doubled_heawood():
    g = complete(7)
    for t in FANO:
        g = apply_delta_yy(g, DeltaSite(*t))
    target = double(heawood())
    assert canonical_key(g) == canonical_key(target)
    assert brute_isomorphic(g, target)


def test_doubled_six_vertex_cubics():
    a, b = double(complete_bipartite(3, 3)), double(prism())
    assert not is_isomorphic(a, b)
    assert not brute_isomorphic_perm(a, b)
    assert is_isomorphic(a, a) and is_isomorphic(b, b)


def test_key_format():
    g = complete(3)
    k = canonical_key(g)
    assert k[:2] == (3).to_bytes(2, "big")
    assert len(k) == 2 + 6 * 3
    assert key_hex(k) == k.hex() == key_hex(k).lower()
    assert graph_from_key(k) == canonical_graph(g)


def test_empty_and_tiny():
    assert canonical_form(Multigraph(0)) == ((), [])
    assert canonical_key(Multigraph(1)) == (1).to_bytes(2, "big")


@given(multigraphs(max_n=8), st.data())
def test_key_relabel_invariant(g, data):
    perm = data.draw(st.permutations(list(range(g.n))))
    assert canonical_key(g.relabel(list(perm))) == canonical_key(g)


@given(six_regular(max_n=12), st.data())
def test_key_relabel_invariant_six_regular(g, data):
    perm = data.draw(st.permutations(list(range(g.n))))
    assert canonical_key(g.relabel(list(perm))) == canonical_key(g)


@given(multigraphs(max_n=8))
def test_canonical_graph_is_isomorphic(g):
    c = canonical_graph(g)
    assert brute_isomorphic(g, c)
    assert canonical_key(c) == canonical_key(g)


@settings(max_examples=300)
@given(multigraphs(min_n=2, max_n=6, max_mult=2), multigraphs(min_n=2, max_n=6, max_mult=2))
def test_key_equality_matches_oracle(g, h):
    assert (canonical_key(g) == canonical_key(h)) == brute_isomorphic(g, h)


def test_oracles_agree_small():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(2, 5)
        g = Multigraph(n, {(u, v): rng.randint(0, 2) for u in range(n) for v in range(u + 1, n)})
        h = g.relabel(rng.sample(range(n), n)) if rng.random() < 0.5 else \
            Multigraph(n, {(u, v): rng.randint(0, 2) for u in range(n) for v in range(u + 1, n)})
        assert brute_isomorphic(g, h) == brute_isomorphic_perm(g, h)
