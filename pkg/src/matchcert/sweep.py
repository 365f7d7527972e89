"""Graph corpora and the end-to-end consistency check used by ``selftest``."""

from __future__ import annotations

import random
from collections.abc import Iterator
from itertools import combinations

from .graph import Graph
from .oracle import brute_force_perfect_matching, brute_force_violator, count_perfect_matchings
from .tutte import PerfectMatchingCertificate, certify, verify_certificate


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices (``2**(n*(n-1)/2)`` of them)."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph(n, (p for k, p in enumerate(pairs) if code >> k & 1))


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """G(n, p); with the default ``p`` every labeled graph is equally likely."""
    return Graph(n, ((u, v) for u, v in combinations(range(n), 2) if rng.random() < p))


def check_graph(g: Graph, *, theorem: bool = True) -> list[str]:
    """Run certify against the oracle; return a list of problems (empty if fine)."""
    problems = []
    cert = certify(g)
    if not verify_certificate(g, cert):
        problems.append("certificate does not verify")
    has_pm = brute_force_perfect_matching(g) is not None
    if isinstance(cert, PerfectMatchingCertificate) != has_pm:
        problems.append(f"certify returned {cert.kind}, oracle says matching={has_pm}")
    if has_pm and count_perfect_matchings(g) < 1:
        problems.append("oracle count disagrees with oracle search")
    if theorem:
        has_violator = brute_force_violator(g) is not None
        if has_pm == has_violator:
            problems.append(f"matching={has_pm} and violator={has_violator}")
    return problems


def selftest_corpus(max_n: int, samples: int, seed: int = 0) -> Iterator[Graph]:
    """Exhaustive for ``n <= 5``, ``samples`` uniform graphs per larger ``n``."""
    rng = random.Random(seed)
    for n in range(max_n + 1):
        if n <= 5:
            yield from all_graphs(n)
        else:
            for _ in range(samples):
                yield random_graph(n, rng)
