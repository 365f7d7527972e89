import json
import random
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from matchcert.errors import PreconditionViolated
from matchcert.graph import Graph, Subgraph, add_edge, is_clique
from matchcert.matching import Matching, verify_perfect_matching
from matchcert.oracle import brute_force_violator, iter_perfect_matchings
from matchcert.sweep import all_graphs, random_graph
from matchcert.tutte import (
    NearMatchingBranch,
    NearMatchingWitness,
    PerfectMatchingCertificate,
    TutteViolatorCertificate,
    certify,
    clique_components_matching,
    combine_near_matchings,
    combine_near_matchings_traced,
    delete_universal_verts,
    empty_violator_if_odd,
    find_non_clique_witness,
    is_tutte_violator,
    universal_verts,
    verify_certificate,
)

from .conftest import cycle, graphs, path, perfect_matchings_by_pairing, petersen, star

FIXTURES = json.loads((Path(__file__).parent / "fixtures" / "combine_branches.json").read_text())


def test_universal_verts():
    assert universal_verts(Graph.complete(4)) == {0, 1, 2, 3}
    assert universal_verts(star(3)) == {0}
    assert universal_verts(Graph.empty(2)) == frozenset()
    assert universal_verts(Graph.empty(1)) == {0}


def test_delete_universal_verts():
    s = delete_universal_verts(star(3))
    assert s.verts == {1, 2, 3} and not s.edges
    assert delete_universal_verts(Graph.complete(4)).verts == frozenset()
    assert delete_universal_verts(cycle(4)) == Subgraph.full(cycle(4))


def test_is_tutte_violator():
    assert is_tutte_violator(star(3), {0})
    assert is_tutte_violator(path(3), set())
    assert not is_tutte_violator(cycle(4), set())


def test_empty_violator_if_odd():
    assert empty_violator_if_odd(cycle(5)) == frozenset()
    assert is_tutte_violator(cycle(5), empty_violator_if_odd(cycle(5)))
    assert empty_violator_if_odd(cycle(4)) is None
    assert empty_violator_if_odd(Graph.empty(0)) is None


def join(universal, cliques):
    """``universal`` vertices adjacent to everything, plus disjoint cliques."""
    n = universal + sum(cliques)
    edges = [(u, v) for u in range(universal) for v in range(n) if u != v]
    start = universal
    for size in cliques:
        edges += combinations(range(start, start + size), 2)
        start += size
    return Graph(n, edges)


def test_clique_components_matching_k4():
    m = clique_components_matching(Graph.complete(4))
    assert verify_perfect_matching(m)
    assert m.pairs() == [(0, 1), (2, 3)]


def test_clique_components_matching_six_vertices():
    g = join(2, [3, 1])
    assert universal_verts(g) == {0, 1}
    m = clique_components_matching(g)
    assert verify_perfect_matching(m)
    assert m.pairs() == [(0, 2), (1, 5), (3, 4)]
    assert perfect_matchings_by_pairing(g)


def test_clique_components_matching_preconditions():
    with pytest.raises(PreconditionViolated, match="odd"):
        clique_components_matching(path(3))
    with pytest.raises(PreconditionViolated, match="violator"):
        clique_components_matching(star(3))
    with pytest.raises(PreconditionViolated, match="clique"):
        clique_components_matching(path(4))


def _witness_clauses(g, w):
    x, a, b, c = w.x, w.a, w.b, w.c
    return [g.adj(x, a), g.adj(a, b), not g.adj(x, b), not g.adj(a, c), x != b, x != c, a != c, b != c]


def test_find_non_clique_witness_examples():
    p4 = path(4)
    w = find_non_clique_witness(p4)
    assert w == NearMatchingWitness(0, 1, 2, 3)
    assert all(_witness_clauses(p4, w))
    assert find_non_clique_witness(Graph.complete(4)) is None
    w = find_non_clique_witness(cycle(4))
    assert w == NearMatchingWitness(0, 1, 2, 3)
    assert all(_witness_clauses(cycle(4), w))


@given(graphs(max_n=9))
def test_witness_exists_iff_some_component_is_not_a_clique(g):
    w = find_non_clique_witness(g)
    s = delete_universal_verts(g)
    from matchcert.walks import connected_components

    all_cliques = all(is_clique(g, comp) for comp in connected_components(s).components)
    assert (w is None) == all_cliques
    if w is not None:
        assert all(_witness_clauses(g, w)) and w.holds_in(g)
        assert {w.x, w.a, w.b} <= s.verts


def _fixture_case(name):
    case = FIXTURES[name]
    g = Graph(case["n"], map(tuple, case["edges"]))
    w = NearMatchingWitness(*case["witness"])
    m1 = Matching.from_pairs(add_edge(g, w.x, w.b), map(tuple, case["m1"]))
    m2 = Matching.from_pairs(add_edge(g, w.a, w.c), map(tuple, case["m2"]))
    return g, w, m1, m2


@pytest.mark.parametrize("branch", list(NearMatchingBranch), ids=lambda b: b.name)
def test_combine_branch_fixtures(branch):
    g, w, m1, m2 = _fixture_case(branch.name)
    result, taken = combine_near_matchings_traced(g, w, m1, m2)
    assert taken is branch
    assert verify_perfect_matching(result)
    assert result.host == g
    assert all(g.adj(u, v) for u, v in result.pairs())


def test_combine_early_exit_returns_first_matching():
    g, w, m1, m2 = _fixture_case("FIRST_UNUSED")
    assert combine_near_matchings(g, w, m1, m2).pairs() == m1.pairs()


def test_combine_on_p4_all_matching_pairs():
    g = path(4)
    w = find_non_clique_witness(g)
    g1, g2 = add_edge(g, w.x, w.b), add_edge(g, w.a, w.c)
    for p1 in iter_perfect_matchings(g1):
        for p2 in iter_perfect_matchings(g2):
            result = combine_near_matchings(g, w, Matching.from_pairs(g1, p1), Matching.from_pairs(g2, p2))
            assert result.pairs() == [(0, 1), (2, 3)]


def test_combine_preconditions():
    g, w, m1, m2 = _fixture_case("SURGERY_AT_X")
    with pytest.raises(PreconditionViolated):
        combine_near_matchings(g, NearMatchingWitness(0, 0, 0, 0), m1, m2)
    with pytest.raises(PreconditionViolated):
        combine_near_matchings(g, w, m2, m1)


def test_random_search_reaches_every_branch():
    seen = set()
    rng = random.Random(5)
    for _ in range(300):
        g = random_graph(rng.choice([6, 8]), rng, rng.uniform(0.3, 0.8))
        w = find_non_clique_witness(g)
        if w is None:
            continue
        g1, g2 = add_edge(g, w.x, w.b), add_edge(g, w.a, w.c)
        for p1 in iter_perfect_matchings(g1):
            for p2 in iter_perfect_matchings(g2):
                result, branch = combine_near_matchings_traced(
                    g, w, Matching.from_pairs(g1, p1), Matching.from_pairs(g2, p2)
                )
                assert verify_perfect_matching(result)
                seen.add(branch)
    assert seen == set(NearMatchingBranch)


def test_certify_examples():
    assert certify(path(3)) == TutteViolatorCertificate(frozenset())
    assert certify(star(3)) == TutteViolatorCertificate(frozenset({0}))
    c4 = certify(cycle(4))
    assert isinstance(c4, PerfectMatchingCertificate)
    assert frozenset(c4.matching.pairs()) in perfect_matchings_by_pairing(cycle(4))
    pet = certify(petersen())
    assert isinstance(pet, PerfectMatchingCertificate)
    assert verify_certificate(petersen(), pet)
    assert certify(Graph.empty(0)) == PerfectMatchingCertificate(Matching(Graph.empty(0), {}))


def test_certify_is_deterministic_and_memo_free_agrees():
    rng = random.Random(9)
    for _ in range(30):
        g = random_graph(8, rng, 0.4)
        a, b = certify(g), certify(g, memo=False)
        assert a == b == certify(g)


def test_verify_certificate_examples():
    c4 = cycle(4)
    assert verify_certificate(c4, PerfectMatchingCertificate(Matching.from_pairs(c4, [(0, 1), (2, 3)])))
    assert verify_certificate(star(3), TutteViolatorCertificate(frozenset({0})))
    assert not verify_certificate(c4, TutteViolatorCertificate(frozenset()))
    assert not verify_certificate(c4, PerfectMatchingCertificate(Matching.from_pairs(c4, [(0, 2), (1, 3)])))
    assert not verify_certificate(c4, TutteViolatorCertificate(frozenset({9})))


def test_necessity_exhaustive_small():
    for n in range(0, 7, 2):
        for g in all_graphs(n):
            if perfect_matchings_by_pairing(g):
                for k in range(n + 1):
                    for u in combinations(range(n), k):
                        assert not is_tutte_violator(g, set(u))


@settings(max_examples=200)
@given(graphs(max_n=10))
def test_certify_sound_and_agrees_with_oracle(g):
    cert = certify(g)
    assert verify_certificate(g, cert)
    has_violator = brute_force_violator(g) is not None
    assert isinstance(cert, TutteViolatorCertificate) == has_violator


@given(graphs(min_n=2, max_n=10), st.data())
def test_violator_lifting(g, data):
    non_edges = [(u, v) for u, v in combinations(range(g.n), 2) if not g.adj(u, v)]
    if not non_edges:
        return
    e = data.draw(st.sampled_from(non_edges))
    u = data.draw(st.sets(st.integers(0, g.n - 1)))
    if is_tutte_violator(add_edge(g, *e), u):
        assert is_tutte_violator(g, u)
