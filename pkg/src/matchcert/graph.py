"""Finite simple graphs over dense vertex ids, and subgraphs of them.

Adjacency is kept as one integer bitmask per vertex: bit ``w`` of
``mask(v)`` is set iff ``v`` and ``w`` are adjacent.  All values are
immutable; every operation returns a new object.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property

from .errors import LoopEdge, SizeMismatch, VertexOutOfRange

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Canonical ``(min, max)`` form of the unordered pair ``{u, v}``."""
    if u == v:
        raise LoopEdge(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """A finite simple graph on vertices ``0..n-1``.

    ``Graph(n, edges)`` symmetrizes and deduplicates the given pairs.
    Loops raise :class:`LoopEdge`, ids outside ``range(n)`` raise
    :class:`VertexOutOfRange`.
    """

    __slots__ = ("_n", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise VertexOutOfRange(f"vertex count must be nonnegative, got {n}")
        adj = [0] * n
        for u, v in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)
        self._hash: int | None = None

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> Graph:
        """Build from per-vertex neighbor bitmasks. The masks are validated."""
        adj = tuple(masks)
        n = len(adj)
        full = (1 << n) - 1
        for v, m in enumerate(adj):
            if m & ~full:
                raise VertexOutOfRange(f"neighbor of {v} outside range({n})")
            if m >> v & 1:
                raise LoopEdge(f"loop at vertex {v}")
            for w in iter_bits(m):
                if not adj[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
        return cls._trusted(adj)

    @classmethod
    def _trusted(cls, adj: tuple[int, ...]) -> Graph:
        g = cls.__new__(cls)
        g._n = len(adj)
        g._adj = adj
        g._hash = None
        return g

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls._trusted((0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls._trusted(tuple(full & ~(1 << v) for v in range(n)))

    @property
    def n(self) -> int:
        return self._n

    @property
    def masks(self) -> tuple[int, ...]:
        return self._adj

    def mask(self, v: int) -> int:
        return self._adj[v]

    def adj(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def vertices(self) -> range:
        return range(self._n)

    def edges(self) -> list[Edge]:
        """All edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, w) for u in range(self._n) for w in iter_bits(self._adj[u] >> (u + 1) << (u + 1))]

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges())

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def non_edge_count(self) -> int:
        return self._n * (self._n - 1) // 2 - self.edge_count

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._adj)
        return self._hash

    def __le__(self, other: Graph) -> bool:
        return subgraph_le(self, other)

    def __repr__(self) -> str:
        return f"Graph({self._n}, {self.edges()!r})"


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise VertexOutOfRange(f"vertex {v} not in range({n})")


def mk_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return ``g`` with the edge ``{u, v}`` present."""
    _check_vertex(g.n, u)
    _check_vertex(g.n, v)
    if u == v:
        raise LoopEdge(f"loop at vertex {u}")
    if g.adj(u, v):
        return g
    adj = list(g.masks)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph._trusted(tuple(adj))


def symm_diff(g: Graph, h: Graph) -> Graph:
    """Graph whose edges lie in exactly one of ``g`` and ``h``."""
    if g.n != h.n:
        raise SizeMismatch(f"vertex counts differ: {g.n} != {h.n}")
    return Graph._trusted(tuple(a ^ b for a, b in zip(g.masks, h.masks)))


def subgraph_le(h: Graph, g: Graph) -> bool:
    """True iff every edge of ``h`` is an edge of ``g``."""
    if h.n != g.n:
        raise SizeMismatch(f"vertex counts differ: {h.n} != {g.n}")
    return all(a & ~b == 0 for a, b in zip(h.masks, g.masks))


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    s = to_mask(vertices)
    return all(s & ~(1 << v) & ~g.mask(v) == 0 for v in iter_bits(s))


@dataclass(frozen=True)
class Subgraph:
    """A set of active vertices plus a set of edges of an ambient graph.

    Vertex ids stay those of the ambient graph.  Vertices in ``verts``
    may be isolated.
    """

    ambient: Graph
    verts: frozenset[int]
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        n = self.ambient.n
        for v in self.verts:
            _check_vertex(n, v)
        for u, v in self.edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if not self.ambient.adj(u, v):
                raise ValueError(f"edge {(u, v)} is not an edge of the ambient graph")
            if u not in self.verts or v not in self.verts:
                raise ValueError(f"edge {(u, v)} has an endpoint outside verts")

    @classmethod
    def full(cls, g: Graph) -> Subgraph:
        return cls(g, frozenset(g.vertices()), g.edge_set())

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks using only ``self.edges``."""
        adj = [0] * self.ambient.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def verts_mask(self) -> int:
        return to_mask(self.verts)

    def support(self) -> frozenset[int]:
        """Vertices incident to at least one edge."""
        return frozenset(v for e in self.edges for v in e)


def delete_verts(g: Graph, removed: Iterable[int]) -> Subgraph:
    """The subgraph of ``g`` induced on the vertices outside ``removed``."""
    gone = to_mask(removed)
    if gone >> g.n:
        raise VertexOutOfRange(f"deleted vertex outside range({g.n})")
    keep = ((1 << g.n) - 1) & ~gone
    edges = frozenset(
        (u, w) for u in iter_bits(keep) for w in iter_bits(g.mask(u) & keep) if u < w
    )
    return Subgraph(g, frozenset(iter_bits(keep)), edges)


def spanning_coe(s: Subgraph) -> Graph:
    """The subgraph's edges as a graph on all ambient vertices."""
    return Graph._trusted(s.masks)


def coe(s: Subgraph) -> tuple[Graph, tuple[int, ...]]:
    """Reindex the subgraph onto ``0..len(verts)-1``.

    Returns the graph and the map from new ids to ambient ids (as a
    tuple: ``ids[i]`` is the ambient id of new vertex ``i``), in
    ascending ambient order.
    """
    ids = tuple(sorted(s.verts))
    new_id = {v: i for i, v in enumerate(ids)}
    return Graph(len(ids), ((new_id[u], new_id[v]) for u, v in s.edges)), ids
