"""
Moving between perfect matchings
================================

The symmetric difference of two perfect matchings is a disjoint union of
even cycles whose edges alternate between the two.  Flipping one matching
along those cycles produces the other.
"""

from matchcert import Graph, Matching, is_alternating, is_cycles_graph, matching_symm_diff, symm_diff_augment
from matchcert.matching import cycle_through_edge
from matchcert.oracle import iter_perfect_matchings

# A 3-dimensional cube has 9 perfect matchings
cube = Graph(8, [(u, u ^ (1 << k)) for u in range(8) for k in range(3) if u < u ^ (1 << k)])
matchings = [Matching.from_pairs(cube, p) for p in iter_perfect_matchings(cube)]
print(len(matchings), "perfect matchings of the cube")

first, last = matchings[0], matchings[-1]
d = matching_symm_diff(first, last)
print("symmetric difference:", d.edges())
print("degrees 0 or 2:", is_cycles_graph(d), "| alternating:", is_alternating(d, first.as_graph()))

start = d.edges()[0]
print("one of its cycles:", cycle_through_edge(d, start).vertices)

flipped = symm_diff_augment(first, d)
print("flip reaches the other matching:", flipped == last)
