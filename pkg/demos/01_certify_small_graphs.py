"""
Perfect matching or Tutte violator
==================================

Every finite graph has exactly one of two checkable witnesses: a perfect
matching, or a vertex set U whose removal leaves more than |U| odd
components.  ``certify`` returns whichever one applies.
"""

from matchcert import Graph, certify, verify_certificate
from matchcert.graph import delete_verts
from matchcert.walks import odd_components

# The Petersen graph: outer 5-cycle, inner pentagram, five spokes
petersen = Graph(
    10,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)],
)
cert = certify(petersen)
print("Petersen:", cert.kind, cert.matching.pairs())

# A claw: the centre can be matched to only one of three leaves
claw = Graph(4, [(0, 1), (0, 2), (0, 3)])
cert = certify(claw)
print("claw:", cert.kind, sorted(cert.vertices))
left = delete_verts(claw, cert.vertices)
print("  removing it leaves odd components", [sorted(c) for c in odd_components(left)])

# Odd vertex count: the empty set is already a violator
print("5-cycle:", certify(Graph(5, [(i, (i + 1) % 5) for i in range(5)])))

# Certificates are checked independently of how they were found
for g in (petersen, claw):
    assert verify_certificate(g, certify(g))
