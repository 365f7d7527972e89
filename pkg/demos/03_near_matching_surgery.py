"""
Two near matchings make a matching
==================================

When the graph left after deleting universal vertices has a non-clique
component, there are vertices x~a~b with x, b non-adjacent and a vertex
c not adjacent to a.  Given perfect matchings of G+{x,b} and G+{a,c},
one can always build a perfect matching of G itself.  This script walks
through the stored instances, one per case of the construction.
"""

import json
from pathlib import Path

from matchcert import Graph, Matching, NearMatchingWitness
from matchcert.graph import add_edge
from matchcert.tutte import combine_near_matchings_traced

cases = json.loads((Path(__file__).parents[1] / "tests" / "fixtures" / "combine_branches.json").read_text())

for name, case in cases.items():
    g = Graph(case["n"], map(tuple, case["edges"]))
    w = NearMatchingWitness(*case["witness"])
    m1 = Matching.from_pairs(add_edge(g, w.x, w.b), map(tuple, case["m1"]))
    m2 = Matching.from_pairs(add_edge(g, w.a, w.c), map(tuple, case["m2"]))
    result, branch = combine_near_matchings_traced(g, w, m1, m2)
    print(f"{name:>14}  x,a,b,c = {w.x},{w.a},{w.b},{w.c}")
    print(f"{'':>14}  m1 {m1.pairs()}")
    print(f"{'':>14}  m2 {m2.pairs()}")
    print(f"{'':>14}  -> {result.pairs()}  ({branch.value})")
