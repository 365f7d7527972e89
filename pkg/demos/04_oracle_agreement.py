"""
Checking the certifier against brute force
==========================================

For every labeled graph on up to six vertices, compare ``certify`` with
an exhaustive perfect-matching search and an exhaustive sweep over all
vertex subsets.
"""

import time
from collections import Counter

from matchcert.sweep import all_graphs, check_graph
from matchcert.tutte import certify

print(f"{'n':>2} {'graphs':>7} {'matching':>9} {'violator':>9} {'problems':>9} {'seconds':>8}")
for n in range(7):
    start = time.perf_counter()
    kinds = Counter()
    problems = 0
    for g in all_graphs(n):
        kinds[certify(g).kind] += 1
        problems += bool(check_graph(g))
    total = sum(kinds.values())
    elapsed = time.perf_counter() - start
    print(f"{n:>2} {total:>7} {kinds['perfect_matching']:>9} {kinds['tutte_violator']:>9} {problems:>9} {elapsed:>8.2f}")
