"""Walks, reachability and connected components."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import NamedTuple

from .errors import VertexNotInSubgraph
from .graph import Edge, Graph, Subgraph, edge, iter_bits


@dataclass(frozen=True)
class Walk:
    """A nonempty vertex sequence in which consecutive vertices are adjacent."""

    host: Graph
    vertices: tuple[int, ...]

    def __init__(self, host: Graph, vertices: Sequence[int]) -> None:
        vertices = tuple(vertices)
        if not vertices:
            raise ValueError("a walk has at least one vertex")
        for v in vertices:
            if not 0 <= v < host.n:
                raise ValueError(f"vertex {v} not in range({host.n})")
        for u, v in zip(vertices, vertices[1:]):
            if not host.adj(u, v):
                raise ValueError(f"{u} and {v} are not adjacent")
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "vertices", vertices)

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        """Number of edges traversed."""
        return len(self.vertices) - 1


def walk_edges(w: Walk) -> list[Edge]:
    return [edge(u, v) for u, v in zip(w.vertices, w.vertices[1:])]


class WalkKind(NamedTuple):
    is_trail: bool
    is_path: bool
    is_circuit: bool
    is_cycle: bool


def classify_walk(w: Walk) -> WalkKind:
    es = walk_edges(w)
    trail = len(set(es)) == len(es)
    path = trail and len(set(w.vertices)) == len(w.vertices)
    circuit = trail and w.start == w.end and len(es) > 0
    tail = w.vertices[1:]
    cycle = circuit and len(set(tail)) == len(tail)
    return WalkKind(trail, path, circuit, cycle)


def _closure(masks: Sequence[int], start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= masks[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def reachable(s: Subgraph, u: int, v: int) -> bool:
    """True iff ``v`` can be reached from ``u`` along edges of ``s``."""
    for x in (u, v):
        if x not in s.verts:
            raise VertexNotInSubgraph(f"vertex {x} is not in the subgraph")
    return bool(_closure(s.masks, u, s.verts_mask) >> v & 1)


class ComponentPartition(NamedTuple):
    """Components ordered by their smallest vertex."""

    component_of: dict[int, int]
    components: tuple[frozenset[int], ...]


def component_masks(masks: Sequence[int], verts_mask: int) -> list[int]:
    """Connected components of the graph ``masks`` restricted to ``verts_mask``.

    Each component is returned as a bitmask, ordered by lowest member.
    """
    comps = []
    rest = verts_mask
    while rest:
        low = (rest & -rest).bit_length() - 1
        comp = _closure(masks, low, verts_mask)
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(s: Subgraph) -> ComponentPartition:
    comps = tuple(frozenset(iter_bits(c)) for c in component_masks(s.masks, s.verts_mask))
    component_of = {v: i for i, comp in enumerate(comps) for v in comp}
    return ComponentPartition(component_of, comps)


def odd_components(s: Subgraph) -> list[frozenset[int]]:
    return [c for c in connected_components(s).components if len(c) % 2 == 1]


def count_odd_components(g: Graph, removed_mask: int) -> int:
    """Number of odd components of ``g`` minus the vertices in ``removed_mask``.

    Same quantity as ``len(odd_components(delete_verts(g, removed)))``
    without materializing the subgraph.
    """
    keep = ((1 << g.n) - 1) & ~removed_mask
    return sum(c.bit_count() & 1 for c in component_masks(g.masks, keep))
