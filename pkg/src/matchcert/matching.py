"""Matchings as partner maps, and augmentation along alternating cycles."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from types import MappingProxyType

from .errors import EdgeAbsent, InternalInvariantBroken, PreconditionViolated, SizeMismatch
from .graph import Edge, Graph, iter_bits, symm_diff
from .walks import Walk


@dataclass(frozen=True, eq=False)
class Matching:
    """A partner map over the covered vertices of ``host``.

    Construction does not validate; use :func:`verify_matching`.
    """

    host: Graph
    partner: Mapping[int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "partner", MappingProxyType(dict(self.partner)))

    @classmethod
    def from_pairs(cls, host: Graph, pairs: Iterable[tuple[int, int]]) -> Matching:
        partner: dict[int, int] = {}
        for u, v in pairs:
            if u in partner or v in partner:
                raise ValueError(f"vertex of pair {(u, v)} is already matched")
            partner[u] = v
            partner[v] = u
        return cls(host, partner)

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(self.partner)

    def pairs(self) -> list[Edge]:
        """Matched pairs as sorted ``(u, v)`` with ``u < v``."""
        return sorted({(min(u, v), max(u, v)) for u, v in self.partner.items()})

    def as_graph(self) -> Graph:
        """The matched pairs as a graph on all ``host`` vertices."""
        return Graph(self.host.n, self.pairs())

    def with_host(self, host: Graph) -> Matching:
        return Matching(host, self.partner)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self.host == other.host and dict(self.partner) == dict(other.partner)

    def __hash__(self) -> int:
        return hash((self.host, frozenset(self.partner.items())))

    def __repr__(self) -> str:
        return f"Matching({self.pairs()!r})"


def verify_matching(m: Matching) -> bool:
    n = m.host.n
    for v, w in m.partner.items():
        if not (0 <= v < n and 0 <= w < n):
            return False
        if v == w or m.partner.get(w) != v:
            return False
        if not m.host.adj(v, w):
            return False
    return True


def verify_perfect_matching(m: Matching) -> bool:
    return verify_matching(m) and len(m.partner) == m.host.n


def is_cycles_graph(g: Graph) -> bool:
    """True iff every vertex has degree 0 or 2."""
    return all(g.degree(v) in (0, 2) for v in g.vertices())


def is_alternating(g: Graph, m: Graph) -> bool:
    """True iff any two edges of ``g`` sharing a vertex have exactly one in ``m``."""
    if g.n != m.n:
        raise SizeMismatch(f"vertex counts differ: {g.n} != {m.n}")
    for v in g.vertices():
        nbrs = list(iter_bits(g.mask(v)))
        for i, w in enumerate(nbrs):
            for w2 in nbrs[i + 1:]:
                if m.adj(v, w) == m.adj(v, w2):
                    return False
    return True


def symm_diff_augment(m: Matching, d: Graph) -> Matching:
    """Flip ``m`` along the alternating cycles of ``d``.

    The result is a perfect matching of ``m.host`` with edge set
    ``edges(m) ^ edges(d)``.
    """
    if not verify_perfect_matching(m):
        raise PreconditionViolated("m is not a perfect matching of its host")
    if d.n != m.host.n:
        raise PreconditionViolated(f"vertex counts differ: {d.n} != {m.host.n}")
    if not is_cycles_graph(d):
        raise PreconditionViolated("d has a vertex of degree other than 0 or 2")
    if not is_alternating(d, m.as_graph()):
        raise PreconditionViolated("d is not alternating with respect to m")
    flipped = symm_diff(m.as_graph(), d)
    partner = {v: next(iter_bits(flipped.mask(v))) for v in flipped.vertices() if flipped.mask(v)}
    result = Matching(m.host, partner)
    if not verify_perfect_matching(result):
        raise InternalInvariantBroken(f"augmenting {m!r} along {d!r} gave {result!r}")
    return result


def cycle_through_edge(d: Graph, e: tuple[int, int]) -> Walk:
    """The cycle of the 2-regular part of ``d`` containing ``e``.

    The walk starts ``e[0], e[1], ...`` and returns to ``e[0]``.
    """
    if not is_cycles_graph(d):
        raise PreconditionViolated("d has a vertex of degree other than 0 or 2")
    u, v = e
    if not (0 <= u < d.n and 0 <= v < d.n) or u == v or not d.adj(u, v):
        raise EdgeAbsent(f"{e} is not an edge of d")
    seq = [u, v]
    prev, cur = u, v
    while cur != u:
        nxt = next(w for w in iter_bits(d.mask(cur)) if w != prev)
        seq.append(nxt)
        prev, cur = cur, nxt
    return Walk(d, seq)


def matching_symm_diff(m1: Matching, m2: Matching) -> Graph:
    if m1.host.n != m2.host.n:
        raise SizeMismatch(f"vertex counts differ: {m1.host.n} != {m2.host.n}")
    d = Graph(m1.host.n, set(m1.pairs()) ^ set(m2.pairs()))
    if verify_perfect_matching(m1) and verify_perfect_matching(m2):
        if not is_cycles_graph(d):
            raise InternalInvariantBroken("symmetric difference of perfect matchings is not a union of cycles")
    return d

