"""Explicit witnesses: tuple transporters, the contraction element f, E′, φ and π."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import structlog

from ...core.config import get_settings
from ...core.exceptions import (
    FixedPointViolation,
    InvalidPointError,
    InvariantViolation,
    MismatchedGroupsError,
    MoverContractError,
)
from ...domain.entities.automaton_group import AutomatonGroup
from ...domain.entities.rn_element import RNElement, RNRow
from ...domain.value_objects.cone import Cone, ConePartition, are_disjoint, covers
from ...domain.value_objects.rational_point import RationalPoint
from .germ_service import GermSignature, germ_signature, periodic_nucleus
from .nucleus_service import nucleus
from .partition_service import common_refinement, complement_partition, standard_partition
from .rn_service import (
    evaluate,
    expand,
    make_element,
    regular_cone,
    restriction_at,
    split_ranges,
)

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class SeparatedSystem:
    """Points ``p_i = α_i β̄_i`` with pairwise disjoint cones ``α_i`` not covering."""

    d: int
    points: tuple[RationalPoint, ...]
    cones: tuple[Cone, ...]

    def __post_init__(self) -> None:
        """Validate disjointness, non-covering and tails."""
        if not are_disjoint(self.cones) or covers(self.cones, self.d):
            msg = f"Cones {[str(c) for c in self.cones]} must be disjoint and not cover"
            raise InvalidPointError(msg)
        for point, cone in zip(self.points, self.cones, strict=True):
            if not point.in_cone(cone) or point.tail(cone) != RationalPoint.canonicalize(
                self.d, "", point.period
            ):
                msg = f"Point {point} does not continue as its period after {cone}"
                raise InvalidPointError(msg)

    def periods(self) -> tuple[str, ...]:
        """``β_i`` for each point."""
        return tuple(point.period for point in self.points)


@dataclass(frozen=True)
class EPrimeData:
    """Cones ``γ_i`` outside ``E′``, the standard partition ``δ_i``, and ``E′`` itself."""

    d: int
    gamma: tuple[Cone, ...]
    delta: tuple[Cone, ...]
    e_prime: tuple[Cone, ...]
    extra: int

    @property
    def m(self) -> int:
        """Number of cones in the complement of ``E``."""
        return len(self.gamma) - self.extra

    def zmap(self) -> list[tuple[Cone, Cone]]:
        """The pairing ``γ_i ↔ δ_i``."""
        return list(zip(self.gamma, self.delta, strict=True))

    def to_dict(self) -> dict[str, object]:
        """Cone lists as addresses."""
        return {
            "gamma": [str(c) for c in self.gamma],
            "delta": [str(c) for c in self.delta],
            "e_prime": [str(c) for c in self.e_prime],
            "m": self.m,
            "k": self.extra,
        }


def separate_points(points: Sequence[RationalPoint]) -> SeparatedSystem:
    """Extend every adjusted preperiod by whole periods until the cones separate.

    All points are extended by the same number of periods, the least one
    for which the cones are pairwise disjoint and miss part of the space.
    """
    if not points:
        msg = "At least one point is required"
        raise InvalidPointError(msg)
    d = points[0].d
    if any(point.d != d for point in points):
        msg = "Points over different alphabets"
        raise InvalidPointError(msg)
    if len(set(points)) != len(points):
        msg = f"Duplicate points in {[str(p) for p in points]}"
        raise InvalidPointError(msg)

    bases = [point.adjusted_preperiod() for point in points]
    cap = get_settings().transporter_cap
    for k in range(cap + 1):
        cones = tuple(
            Cone(base + point.period * k) for base, point in zip(bases, points, strict=True)
        )
        if are_disjoint(cones) and not covers(cones, d):
            logger.debug("Points separated", periods=k, cones=[str(c) for c in cones])
            return SeparatedSystem(d, tuple(points), cones)
    msg = f"Could not separate points within {cap} period extensions"
    raise InvariantViolation(msg)


def tuple_transporter(
    pairs: Sequence[tuple[RationalPoint, RationalPoint]],
    movers: Sequence[RNElement],
    cap: int | None = None,
) -> RNElement:
    """One element sending every ``p_i`` to ``q_i``, given movers ``h_i(p_i) = q_i``.

    Each mover's regular cone at ``p_i`` is shrunk along ``p_i`` until the
    sources and their images are both disjoint and non-covering; the
    movers' local actions are then glued by ``make_element``.
    """
    cap = cap or get_settings().transporter_cap
    if not pairs or len(pairs) != len(movers):
        msg = "Need one mover per (p, q) pair"
        raise MoverContractError(msg)
    group = movers[0].group
    if any(mover.group != group for mover in movers):
        msg = "Movers over different groups"
        raise MismatchedGroupsError(msg)
    sources = [p for p, _ in pairs]
    targets = [q for _, q in pairs]
    if len(set(sources)) != len(sources) or len(set(targets)) != len(targets):
        msg = "Source points and target points must each be distinct"
        raise InvalidPointError(msg)
    for (p, q), mover in zip(pairs, movers, strict=True):
        image = evaluate(mover, p)
        if image != q:
            msg = f"Mover sends {p} to {image}, expected {q}"
            raise MoverContractError(msg)

    depths = [len(regular_cone(mover, p)[0]) for p, mover in zip(sources, movers, strict=True)]
    for extra in range(cap + 1):
        rows = [
            row
            for p, mover, depth in zip(sources, movers, depths, strict=True)
            if (row := restriction_at(mover, p.prefix(depth + extra))) is not None
        ]
        domains = [row.domain for row in rows]
        ranges = [row.range for row in rows]
        if (
            are_disjoint(domains)
            and not covers(domains, group.d)
            and are_disjoint(ranges)
            and not covers(ranges, group.d)
        ):
            logger.debug("Transporter cones found", extra_letters=extra)
            return make_element(group, [(row.domain, row.range, row.action) for row in rows])
    msg = f"Cones did not separate within {cap} extra letters"
    raise InvariantViolation(msg)


def build_f(group: AutomatonGroup, system: SeparatedSystem) -> RNElement:
    """``f(α_i ψ) = α_i β_i ψ`` with trivial local actions."""
    return make_element(
        group,
        [
            (cone, Cone(cone.address + point.period), group.identity())
            for cone, point in zip(system.cones, system.points, strict=True)
        ],
    )


def build_e_prime(system: SeparatedSystem) -> EPrimeData:
    """Complement cones of ``E`` plus ``k`` extra cones inside ``E`` avoiding ``S``.

    ``k`` is the least with ``m + k ≡ 1 (mod d - 1)``. Extra cones are the
    children of each ``α_i`` off ``p_i``'s next letter, taken in order.
    """
    d = system.d
    outside = complement_partition(d, system.cones)
    k = (1 - len(outside)) % (d - 1)
    extra: list[Cone] = []
    for cone, point in zip(system.cones, system.points, strict=True):
        avoid = point.prefix(len(cone) + 1)[-1]
        for x in range(d):
            if len(extra) < k and str(x) != avoid:
                extra.append(cone.child(x))
    if len(extra) < k:
        msg = f"Could not place {k} extra cones"
        raise InvariantViolation(msg)

    gamma = tuple(outside + extra)
    delta = standard_partition(d, len(gamma)).cones
    e_prime = tuple(complement_partition(d, gamma))
    for point in system.points:
        if not any(point.in_cone(cone) for cone in e_prime):
            msg = f"{point} fell outside E′"
            raise InvariantViolation(msg)
    return EPrimeData(d, gamma, delta, e_prime, len(extra))


def phi(h: RNElement, data: EPrimeData) -> RNElement:
    """Identity on ``E′`` and ``z⁻¹ h z`` on the ``γ`` cones, ``z: γ_i ψ ↦ δ_i ψ``."""
    deltas = ConePartition(data.d, data.delta)
    refined = expand(h, common_refinement(h.domain_partition(), deltas))
    to_gamma = {delta.address: gamma for gamma, delta in data.zmap()}

    def pull_back(cone: Cone) -> Cone:
        delta = deltas.locate(cone.address)
        if delta is None:
            msg = f"Cone {cone} is not inside a δ cone"
            raise InvariantViolation(msg)
        return Cone(to_gamma[delta.address].address + cone.address[len(delta) :])

    rows = [
        RNRow(pull_back(row.domain), pull_back(row.range), row.action)
        for row in split_ranges(refined.rows, deltas)
    ]
    rows += [RNRow(cone, cone, h.group.identity()) for cone in data.e_prime]
    return RNElement(h.group, tuple(rows))


def induced_permutation(h: RNElement, points: Sequence[RationalPoint]) -> tuple[int, ...]:
    """Index of ``h(p_i)`` in ``points`` for each ``i``; ``h`` must preserve the set."""
    images = [evaluate(h, p) for p in points]
    try:
        return tuple(points.index(image) for image in images)
    except ValueError:
        msg = f"Element does not preserve {[str(p) for p in points]}"
        raise FixedPointViolation(msg) from None


def pi(
    h: RNElement, points: Sequence[RationalPoint], cap: int | None = None
) -> tuple[GermSignature, ...]:
    """Germs of ``h`` at every point, for ``h`` fixing the points one by one.

    The kernel is the set of elements that are the identity near each
    point; ``f`` maps to ``(1, |β_i|)`` at every ``p_i``.
    """
    if induced_permutation(h, points) != tuple(range(len(points))):
        msg = f"Element permutes {[str(p) for p in points]} instead of fixing them"
        raise FixedPointViolation(msg)
    result = nucleus(h.group)
    return tuple(
        germ_signature(h, p, periodic_nucleus(result, p.period), cap) for p in points
    )
