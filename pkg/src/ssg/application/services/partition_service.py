"""Clopen-partition calculus: complements, refinement and the mod-(d-1) rule."""

from __future__ import annotations

from collections.abc import Iterable

import structlog

from ...core.exceptions import PartitionError
from ...domain.value_objects.cone import Cone, ConePartition, are_disjoint, as_cones

logger = structlog.get_logger(__name__)


def complement_partition(d: int, cones: Iterable[Cone | str]) -> list[Cone]:
    """Disjoint cones covering the complement of a disjoint family.

    Walks the prefix tree of the input addresses depth-first in letter
    order and emits every child that is neither an input cone nor on the
    way to one.
    """
    given = as_cones(cones)
    for cone in given:
        cone.check_letters(d)
    if not are_disjoint(given):
        msg = f"Overlapping input cones: {[str(c) for c in given]}"
        raise PartitionError(msg)

    targets = {cone.address for cone in given}
    if not targets:
        return [Cone("")]
    if "" in targets:
        return []
    internal = {address[:k] for address in targets for k in range(len(address))}

    result: list[Cone] = []

    def walk(node: str) -> None:
        for x in range(d):
            child = node + str(x)
            if child in targets:
                continue
            if child in internal:
                walk(child)
            else:
                result.append(Cone(child))

    walk("")
    return result


def refine_to_count(d: int, cones: Iterable[Cone | str], target: int) -> list[Cone]:
    """Split the lexicographically last cone until there are ``target`` cones.

    Each split adds ``d - 1`` cones, so ``target`` must not be below the
    current count and must agree with it mod ``d - 1``.
    """
    current = sorted(as_cones(cones))
    if not current:
        if target > 0:
            msg = "Cannot refine an empty family to a positive count"
            raise PartitionError(msg)
        return []
    if target < len(current) or (target - len(current)) % (d - 1) != 0:
        msg = f"Cannot refine {len(current)} cones to {target} with alphabet size {d}"
        raise PartitionError(msg)
    while len(current) < target:
        last = current.pop()
        current.extend(last.children(d))
        current.sort()
    return current


def standard_partition(d: int, k: int) -> ConePartition:
    """Complete partition into ``k`` cones by last-address splitting."""
    if k < 1 or (k - 1) % (d - 1) != 0:
        msg = f"No partition into {k} cones exists for alphabet size {d}"
        raise PartitionError(msg)
    return ConePartition(d, tuple(refine_to_count(d, [Cone("")], k)))


def common_refinement(first: ConePartition, second: ConePartition) -> ConePartition:
    """Coarsest partition refining both: the longer of each intersecting pair."""
    cones = {
        (a if len(a) >= len(b) else b)
        for a in first.cones
        for b in second.cones
        if a.comparable(b)
    }
    return ConePartition(first.d, tuple(sorted(cones)))


def partition_with(d: int, cones: Iterable[Cone | str]) -> ConePartition:
    """The family together with its complement, as a complete partition."""
    given = as_cones(cones)
    return ConePartition(d, tuple(sorted(given + complement_partition(d, given))))
