from hypothesis import given, strategies as st

from matchcert.graph import Graph, Subgraph, delete_verts
from matchcert.representatives import choose_representatives, represents, represents_exactly_once
from matchcert.walks import ComponentPartition, connected_components

from .conftest import graphs


def partition_of(n, edges, verts=None):
    g = Graph(n, edges)
    if verts is None:
        return connected_components(Subgraph.full(g))
    return connected_components(delete_verts(g, set(range(n)) - set(verts)))


def test_represents_examples():
    p = partition_of(6, [(1, 2), (4, 5)], verts=[1, 2, 4, 5])
    assert p.components == (frozenset({1, 2}), frozenset({4, 5}))
    assert represents({1, 4}, {0, 1}, p)
    assert not represents({1, 2}, {0, 1}, p)
    assert not represents({1, 2}, {0}, p)
    assert represents(set(), set(), p)
    assert not represents({1}, {0, 1}, p)


def test_choose_representatives_examples():
    p = partition_of(5, [(0, 3), (1, 2), (2, 4)])
    assert p.components == (frozenset({0, 3}), frozenset({1, 2, 4}))
    assert choose_representatives({0, 1}, p) == {0, 1}
    assert choose_representatives(set(), p) == frozenset()
    singles = partition_of(7, [], verts=[5, 6])
    assert choose_representatives({0}, singles) == {5}


@given(graphs(), st.data())
def test_chosen_representatives_represent(g, data):
    p = connected_components(Subgraph.full(g))
    chosen = data.draw(st.sets(st.integers(0, max(len(p.components) - 1, 0)))) if p.components else set()
    reps = choose_representatives(chosen, p)
    assert represents(reps, chosen, p)
    assert represents_exactly_once(reps, chosen, p)


@given(graphs(max_n=8), st.data())
def test_two_formulations_agree(g, data):
    p = connected_components(Subgraph.full(g))
    reps = data.draw(st.sets(st.integers(0, g.n - 1))) if g.n else set()
    target = data.draw(st.sets(st.integers(0, len(p.components) - 1))) if p.components else set()
    assert represents(reps, target, p) == represents_exactly_once(reps, target, p)


def test_partition_type():
    p = partition_of(3, [(0, 1)])
    assert isinstance(p, ComponentPartition)
    assert p.component_of == {0: 0, 1: 0, 2: 1}
