"""Perfect matching or Tutte violator: the certificate dichotomy.

:func:`certify` decides, for any finite simple graph, whether it has a
perfect matching and returns a witness either way.  It works by
recursion over edge additions:

* an odd vertex count makes the empty set a violator;
* if the universal vertices ``U`` leave more than ``|U|`` odd components,
  ``U`` is a violator;
* if every component left after deleting ``U`` is a clique, a matching
  is assembled directly (:func:`clique_components_matching`);
* otherwise a non-clique component yields vertices ``x, a, b, c`` with
  ``x~a~b``, ``x!~b`` and ``a!~c``.  The graph plus ``{x, b}`` and the
  graph plus ``{a, c}`` are certified recursively.  A violator of either
  extension is a violator of the original, since adding an edge never
  increases the number of odd components.  Two perfect matchings are
  merged into one of the original graph (:func:`combine_near_matchings`).

Every edge addition removes a non-edge, so the recursion terminates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import ClassVar, Union

from .errors import InternalInvariantBroken, PreconditionViolated, VertexOutOfRange
from .graph import Graph, Subgraph, add_edge, delete_verts, is_clique, iter_bits, to_mask
from .matching import (
    Matching,
    cycle_through_edge,
    matching_symm_diff,
    symm_diff_augment,
    verify_perfect_matching,
)
from .representatives import choose_representatives
from .walks import connected_components, count_odd_components, walk_edges


@dataclass(frozen=True)
class PerfectMatchingCertificate:
    matching: Matching
    kind: ClassVar[str] = "perfect_matching"


@dataclass(frozen=True)
class TutteViolatorCertificate:
    vertices: frozenset[int]
    kind: ClassVar[str] = "tutte_violator"


Certificate = Union[PerfectMatchingCertificate, TutteViolatorCertificate]


@dataclass(frozen=True)
class NearMatchingWitness:
    x: int
    a: int
    b: int
    c: int

    def holds_in(self, g: Graph) -> bool:
        x, a, b, c = self.x, self.a, self.b, self.c
        if not all(0 <= v < g.n for v in (x, a, b, c)):
            return False
        return (
            x != b and x != c and a != c and b != c
            and g.adj(x, a) and g.adj(a, b)
            and not g.adj(x, b) and not g.adj(a, c)
        )


class NearMatchingBranch(enum.Enum):
    """How :func:`combine_near_matchings` produced its result."""

    FIRST_UNUSED = "first matching avoids {x,b}"
    SECOND_UNUSED = "second matching avoids {a,c}"
    DISJOINT_CYCLE = "{x,b} off the cycle through {a,c}"
    SURGERY_AT_X = "cycle cut at x and closed with {x,a}"
    SURGERY_AT_B = "cycle cut at b and closed with {a,b}"


def universal_verts(g: Graph) -> frozenset[int]:
    full = (1 << g.n) - 1
    return frozenset(v for v in g.vertices() if g.mask(v) == full & ~(1 << v))


def delete_universal_verts(g: Graph) -> Subgraph:
    return delete_verts(g, universal_verts(g))


def is_tutte_violator(g: Graph, u: frozenset[int] | set[int]) -> bool:
    """True iff deleting ``u`` leaves more than ``len(u)`` odd components."""
    mask = to_mask(u)
    if mask >> g.n:
        raise VertexOutOfRange(f"violator candidate has a vertex outside range({g.n})")
    return len(u) < count_odd_components(g, mask)


def empty_violator_if_odd(g: Graph) -> frozenset[int] | None:
    return frozenset() if g.n % 2 else None


def clique_components_matching(g: Graph) -> Matching:
    """Perfect matching of a graph whose non-universal part is a union of cliques.

    One vertex of each odd clique is matched to its own universal vertex,
    the rest of each clique is paired internally and the leftover
    universal vertices are paired with each other.
    """
    if g.n % 2:
        raise PreconditionViolated("vertex count is odd")
    univ = universal_verts(g)
    if is_tutte_violator(g, univ):
        raise PreconditionViolated("the universal vertices form a Tutte violator")
    partition = connected_components(delete_universal_verts(g))
    for comp in partition.components:
        if not is_clique(g, comp):
            raise PreconditionViolated(f"component {sorted(comp)} is not a clique")

    odd = [cid for cid, comp in enumerate(partition.components) if len(comp) % 2]
    reps = sorted(choose_representatives(odd, partition))
    free_univ = sorted(univ)
    pairs = list(zip(reps, free_univ))
    leftover = free_univ[len(reps):]
    rep_set = set(reps)
    for comp in partition.components:
        rest = sorted(comp - rep_set)
        pairs.extend(zip(rest[::2], rest[1::2]))
    pairs.extend(zip(leftover[::2], leftover[1::2]))

    m = Matching.from_pairs(g, pairs)
    if not verify_perfect_matching(m):
        raise InternalInvariantBroken(f"clique case produced {m!r}")
    return m


def find_non_clique_witness(g: Graph) -> NearMatchingWitness | None:
    """Lexicographically smallest ``(x, a, b, c)`` from a non-clique component.

    ``x, a, b`` is an induced path inside the graph left after deleting the
    universal vertices and ``c`` is the smallest non-neighbor of ``a``.
    Returns None when every such component is a clique.
    """
    full = (1 << g.n) - 1
    rest = full & ~to_mask(universal_verts(g))
    for x in iter_bits(rest):
        for a in iter_bits(g.mask(x) & rest):
            for b in iter_bits(g.mask(a) & rest & ~g.mask(x) & ~(1 << x)):
                c = next(iter_bits(full & ~g.mask(a) & ~(1 << a)))
                return NearMatchingWitness(x, a, b, c)
    return None


def _uses(m: Matching, u: int, v: int) -> bool:
    return m.partner.get(u) == v


def combine_near_matchings_traced(
    g: Graph, w: NearMatchingWitness, m1: Matching, m2: Matching
) -> tuple[Matching, NearMatchingBranch]:
    """Like :func:`combine_near_matchings`, also reporting the branch taken."""
    if not w.holds_in(g):
        raise PreconditionViolated(f"{w} is not a near-matching witness in this graph")
    x, a, b, c = w.x, w.a, w.b, w.c
    g1 = add_edge(g, x, b)
    g2 = add_edge(g, a, c)
    m1 = m1.with_host(g1)
    m2 = m2.with_host(g2)
    if not verify_perfect_matching(m1):
        raise PreconditionViolated("m1 is not a perfect matching of the graph plus {x,b}")
    if not verify_perfect_matching(m2):
        raise PreconditionViolated("m2 is not a perfect matching of the graph plus {a,c}")

    if not _uses(m1, x, b):
        result, branch = m1, NearMatchingBranch.FIRST_UNUSED
    elif not _uses(m2, a, c):
        result, branch = m2, NearMatchingBranch.SECOND_UNUSED
    else:
        d = matching_symm_diff(m1, m2)
        cycle = cycle_through_edge(d, (a, c))
        if (min(x, b), max(x, b)) not in walk_edges(cycle):
            flip = Graph(g.n, walk_edges(cycle))
            branch = NearMatchingBranch.DISJOINT_CYCLE
        else:
            # first arrival at x or b comes through an m2 edge, so closing
            # back to a with a non-m2 edge keeps the cycle alternating
            verts = cycle.vertices
            end = next(i for i in range(1, len(verts)) if verts[i] in (x, b))
            closed = list(verts[: end + 1]) + [a]
            flip = Graph(g.n, zip(closed, closed[1:]))
            branch = NearMatchingBranch.SURGERY_AT_X if verts[end] == x else NearMatchingBranch.SURGERY_AT_B
        result = symm_diff_augment(m2, flip)

    result = result.with_host(g)
    if not verify_perfect_matching(result):
        raise InternalInvariantBroken(f"combining near matchings ({branch.name}) gave {result!r}")
    return result, branch


def combine_near_matchings(g: Graph, w: NearMatchingWitness, m1: Matching, m2: Matching) -> Matching:
    """Perfect matching of ``g`` from perfect matchings of ``g + {x,b}`` and ``g + {a,c}``."""
    return combine_near_matchings_traced(g, w, m1, m2)[0]


def verify_certificate(g: Graph, cert: Certificate) -> bool:
    if isinstance(cert, PerfectMatchingCertificate):
        return verify_perfect_matching(cert.matching.with_host(g))
    if isinstance(cert, TutteViolatorCertificate):
        if not all(0 <= v < g.n for v in cert.vertices):
            return False
        return is_tutte_violator(g, cert.vertices)
    return False


def certify(g: Graph, *, memo: bool = True) -> Certificate:
    """Return a perfect matching of ``g`` or a Tutte violator for it.

    ``memo`` caches sub-results per graph within this call.
    """
    cache: dict[Graph, Certificate] | None = {} if memo else None
    cert = _certify(g, cache)
    if not verify_certificate(g, cert):
        raise InternalInvariantBroken(f"certify produced an invalid certificate {cert!r}")
    return cert


def _certify(g: Graph, cache: dict[Graph, Certificate] | None) -> Certificate:
    if cache is not None:
        hit = cache.get(g)
        if hit is not None:
            return hit
    cert = _certify_step(g, cache)
    if cache is not None:
        cache[g] = cert
    return cert


def _certify_step(g: Graph, cache: dict[Graph, Certificate] | None) -> Certificate:
    empty = empty_violator_if_odd(g)
    if empty is not None:
        return TutteViolatorCertificate(empty)
    univ = universal_verts(g)
    if is_tutte_violator(g, univ):
        return TutteViolatorCertificate(univ)
    w = find_non_clique_witness(g)
    if w is None:
        return PerfectMatchingCertificate(clique_components_matching(g))

    # the second extension is only needed when the first matching uses {x,b}
    first = _certify(add_edge(g, w.x, w.b), cache)
    if isinstance(first, TutteViolatorCertificate):
        return _lift(g, first)
    if not _uses(first.matching, w.x, w.b):
        return PerfectMatchingCertificate(first.matching.with_host(g))
    second = _certify(add_edge(g, w.a, w.c), cache)
    if isinstance(second, TutteViolatorCertificate):
        return _lift(g, second)
    return PerfectMatchingCertificate(combine_near_matchings(g, w, first.matching, second.matching))


def _lift(g: Graph, cert: TutteViolatorCertificate) -> TutteViolatorCertificate:
    if not is_tutte_violator(g, cert.vertices):
        raise InternalInvariantBroken(f"violator {sorted(cert.vertices)} of a supergraph does not lift")
    return cert
