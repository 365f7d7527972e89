from itertools import combinations

import pytest
from hypothesis import strategies as st

from matchcert.graph import Graph


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def pairings(vertices):
    """All partitions of ``vertices`` into unordered pairs (plain recursion)."""
    vertices = list(vertices)
    if not vertices:
        yield []
        return
    first, rest = vertices[0], vertices[1:]
    for i, other in enumerate(rest):
        for tail in pairings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + tail


def perfect_matchings_by_pairing(g):
    """Perfect matchings of ``g`` as frozensets of pairs, by filtering all pairings."""
    if g.n % 2:
        return []
    return [frozenset(p) for p in pairings(range(g.n)) if all(g.adj(u, v) for u, v in p)]


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, chosen) if keep])


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def k4():
    return Graph.complete(4)


@pytest.fixture
def s3():
    return star(3)
