"""Brute-force ground truth: exhaustive matching and violator search.

Nothing here calls into the certifier.  Odd components are counted with
a separate breadth-first search so that the violator sweep does not share
code with :func:`matchcert.tutte.is_tutte_violator`.
"""

from __future__ import annotations

import os
from collections import deque
from collections.abc import Iterator
from itertools import combinations

from .errors import LimitExceeded
from .graph import Graph
from .matching import Matching

ENV_MAX_N = "MATCHCERT_MAX_N"
DEFAULT_MATCHING_LIMIT = 16
DEFAULT_VIOLATOR_LIMIT = 12


def _limit(default: int, limit: int | None) -> int:
    if limit is not None:
        return limit
    env = os.environ.get(ENV_MAX_N)
    return int(env) if env else default


def _check(g: Graph, default: int, limit: int | None) -> None:
    cap = _limit(default, limit)
    if g.n > cap:
        raise LimitExceeded(f"graph has {g.n} vertices, oracle limit is {cap}")


def iter_perfect_matchings(g: Graph, *, limit: int | None = None) -> Iterator[list[tuple[int, int]]]:
    """Yield every perfect matching of ``g`` as a sorted list of pairs.

    Always branches on the lowest unmatched vertex.
    """
    _check(g, DEFAULT_MATCHING_LIMIT, limit)
    if g.n % 2:
        return
    nbrs = [sorted(g.neighbors(v)) for v in g.vertices()]
    matched = [False] * g.n
    pairs: list[tuple[int, int]] = []

    def search(start: int) -> Iterator[list[tuple[int, int]]]:
        v = start
        while v < g.n and matched[v]:
            v += 1
        if v == g.n:
            yield list(pairs)
            return
        matched[v] = True
        for w in nbrs[v]:
            if not matched[w]:
                matched[w] = True
                pairs.append((v, w))
                yield from search(v + 1)
                pairs.pop()
                matched[w] = False
        matched[v] = False

    yield from search(0)


def brute_force_perfect_matching(g: Graph, *, limit: int | None = None) -> Matching | None:
    for pairs in iter_perfect_matchings(g, limit=limit):
        return Matching.from_pairs(g, pairs)
    return None


def count_perfect_matchings(g: Graph, *, limit: int | None = None) -> int:
    return sum(1 for _ in iter_perfect_matchings(g, limit=limit))


def _odd_components_after_deleting(g: Graph, removed: set[int]) -> int:
    seen = set(removed)
    odd = 0
    for s in g.vertices():
        if s in seen:
            continue
        seen.add(s)
        size = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            size += 1
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        odd += size % 2
    return odd


def brute_force_violator(g: Graph, *, limit: int | None = None) -> frozenset[int] | None:
    """Smallest Tutte violator (by size, then lexicographically), if any."""
    _check(g, DEFAULT_VIOLATOR_LIMIT, limit)
    for k in range(g.n + 1):
        for u in combinations(range(g.n), k):
            if k < _odd_components_after_deleting(g, set(u)):
                return frozenset(u)
    return None


def tutte_equivalence_holds(g: Graph, *, limit: int | None = None) -> bool:
    """Exactly one of "has a perfect matching" and "has a violator" holds."""
    has_matching = brute_force_perfect_matching(g, limit=limit) is not None
    has_violator = brute_force_violator(g, limit=limit) is not None
    return has_matching != has_violator
