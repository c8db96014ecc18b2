"""Hypothesis strategies for multigraphs."""

import random

from hypothesis import strategies as st

from deltayy.catalog import named_six_regular, random_regular_multigraph, random_walk
from deltayy.multigraph import Multigraph


@st.composite
def multigraphs(draw, min_n=1, max_n=7, max_mult=3):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mults = draw(st.lists(st.integers(0, max_mult), min_size=len(pairs), max_size=len(pairs)))
    return Multigraph(n, {p: m for p, m in zip(pairs, mults) if m})


@st.composite
def six_regular(draw, max_n=10, connected=False):
    """Stub pairings or random move walks from the named seeds."""
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    if draw(st.booleans()):
        g = random_regular_multigraph(draw(st.integers(2, max_n)), rng)
    else:
        seeds = [g for g in named_six_regular().values() if g.n <= max_n]
        g = draw(st.sampled_from(seeds))
    g = random_walk(g, draw(st.integers(0, 8)), rng, max_n)
    if connected:
        from deltayy.multigraph import is_connected
        from hypothesis import assume
        assume(is_connected(g))
    return g


@st.composite
def relabelled(draw, g):
    perm = draw(st.permutations(list(range(g.n))))
    return g.relabel(list(perm))
