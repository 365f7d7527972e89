"""One vertex per component: choosing and checking representative sets."""

from __future__ import annotations

from collections.abc import Iterable

from .walks import ComponentPartition


def represents(reps: Iterable[int], components: Iterable[int], partition: ComponentPartition) -> bool:
    """True iff the component map sends ``reps`` bijectively onto ``components``."""
    reps = set(reps)
    target = set(components)
    images = [partition.component_of[v] for v in reps]
    return len(set(images)) == len(images) and set(images) == target


def represents_exactly_once(reps: Iterable[int], components: Iterable[int], partition: ComponentPartition) -> bool:
    """Per-component form of :func:`represents`.

    Every targeted component holds exactly one element of ``reps`` and
    every other component holds none.
    """
    reps = set(reps)
    target = set(components)
    if not reps <= partition.component_of.keys():
        return False
    for cid, comp in enumerate(partition.components):
        hits = len(reps & comp)
        if hits != (1 if cid in target else 0):
            return False
    return True


def choose_representatives(components: Iterable[int], partition: ComponentPartition) -> frozenset[int]:
    """The smallest vertex of each requested component."""
    return frozenset(min(partition.components[cid]) for cid in components)
