"""Germs of RN elements at rational points.

A germ at ``p = αβ̄`` is summarized by where the cone ``αβ^{Mi}`` goes
once ``i`` is large: the local action settles into a periodic nucleus
element ``n`` and the image address is a prefix of ``p`` that is ``δ``
letters longer than the source address.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import networkx
import structlog

from ...core.config import get_settings
from ...core.exceptions import (
    FixedPointViolation,
    InvalidPointError,
    InvariantViolation,
    NotStabilized,
)
from ...domain.entities.group_word import GroupWord
from ...domain.entities.rn_element import RNElement
from ...domain.value_objects.rational_point import RationalPoint, primitive_root
from .nucleus_service import NucleusResult, find_equal
from .rn_service import compose, evaluate, power, restriction_at
from .word_problem import equal, is_trivial

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class PeriodicNucleusData:
    """Periodic part of the nucleus under ``g ↦ g|_β`` and the lcm of its periods."""

    beta: str
    n_beta: tuple[GroupWord, ...]
    M: int

    def index_of(self, w: GroupWord) -> int | None:
        """Index of the periodic element equal to ``w``, if any."""
        return find_equal(w, self.n_beta)

    def __str__(self) -> str:
        names = ", ".join(str(n) for n in self.n_beta)
        return f"N_{self.beta} = {{{names}}}, M = {self.M}"


@dataclass(frozen=True)
class GermSignature:
    """Stabilized invariant ``(n, δ)`` of a germ at a rational point."""

    point: RationalPoint
    alpha: str
    nucleus_component: GroupWord
    delta: int
    stabilized_at: int
    source_length: int

    def __str__(self) -> str:
        return (
            f"germ(point={self.alpha}({self.point.period}), n={self.nucleus_component}, "
            f"delta={self.delta}, depth={self.source_length})"
        )

    def to_dict(self) -> dict[str, object]:
        """Machine-readable fields mirroring the rendering."""
        return {
            "point": f"{self.alpha}({self.point.period})",
            "n": self.nucleus_component.to_text(),
            "delta": self.delta,
            "depth": self.source_length,
            "stabilized_at": self.stabilized_at,
        }

    def is_trivial(self) -> bool:
        """Whether the germ is that of the identity: no displacement, trivial component."""
        return self.delta == 0 and is_trivial(self.nucleus_component)


def periodic_nucleus(nucleus: NucleusResult, beta: str) -> PeriodicNucleusData:
    """Cycle elements of ``g ↦ g|_β`` on the nucleus, with ``M`` the lcm of cycle lengths."""
    if not beta or primitive_root(beta) != beta:
        msg = f"Period {beta!r} must be a nonempty primitive word"
        raise InvalidPointError(msg)

    graph = networkx.DiGraph()
    for index, element in enumerate(nucleus.elements):
        image = nucleus.index_of(element.restrict(beta))
        if image is None:
            msg = f"{element}|_{beta} left the nucleus; the nucleus is not restriction-closed"
            raise InvariantViolation(msg)
        graph.add_edge(index, image)

    periodic: set[int] = set()
    lengths: list[int] = []
    for cycle in networkx.simple_cycles(graph):
        periodic.update(cycle)
        lengths.append(len(cycle))
    n_beta = tuple(nucleus.elements[i] for i in sorted(periodic))
    return PeriodicNucleusData(beta, n_beta, math.lcm(*lengths) if lengths else 1)


def _signature_at(
    h: RNElement, p: RationalPoint, alpha: str, data: PeriodicNucleusData, i: int
) -> tuple[int, int] | None:
    """``(n index, δ)`` at block index ``i``, or ``None`` if not yet settled."""
    source = alpha + data.beta * (data.M * i)
    row = restriction_at(h, source)
    if row is None:
        return None
    index = data.index_of(row.action)
    if index is None:
        return None
    image = row.range.address
    if p.prefix(len(image)) != image:
        msg = f"Image cone {row.range} of a fixed point's neighbourhood misses {p}"
        raise InvariantViolation(msg)
    return index, len(image) - len(source)


def germ_signature(
    h: RNElement, p: RationalPoint, data: PeriodicNucleusData, cap: int | None = None
) -> GermSignature:
    """Least block index whose signature is reproduced one block deeper."""
    cap = cap or get_settings().germ_cap
    if evaluate(h, p) != p:
        msg = f"Element does not fix {p}"
        raise FixedPointViolation(msg)
    if data.beta != p.period:
        msg = f"Periodic data is for period {data.beta!r}, point {p} has period {p.period!r}"
        raise InvalidPointError(msg)

    alpha = p.adjusted_preperiod()
    current = _signature_at(h, p, alpha, data, 0)
    for i in range(cap + 1):
        following = _signature_at(h, p, alpha, data, i + 1)
        if current is not None and current == following:
            index, delta = current
            logger.debug("Germ stabilized", point=str(p), block=i, delta=delta)
            return GermSignature(
                point=p,
                alpha=alpha,
                nucleus_component=data.n_beta[index],
                delta=delta,
                stabilized_at=i,
                source_length=len(alpha) + data.M * i * len(data.beta),
            )
        current = following
    raise NotStabilized(cap)


def germ_equal(
    h1: RNElement,
    h2: RNElement,
    p: RationalPoint,
    data: PeriodicNucleusData,
    cap: int | None = None,
) -> bool:
    """Whether ``h1`` and ``h2`` agree on a neighbourhood of ``p``."""
    first = germ_signature(h1, p, data, cap)
    second = germ_signature(h2, p, data, cap)
    i = max(first.stabilized_at, second.stabilized_at)
    source = first.alpha + data.beta * (data.M * i)
    row1 = restriction_at(h1, source)
    row2 = restriction_at(h2, source)
    if row1 is None or row2 is None:
        msg = f"Cone {source} is not regular at a stabilized depth"
        raise InvariantViolation(msg)
    return row1.range == row2.range and equal(row1.action, row2.action)


def coset_witness(
    h1: RNElement,
    h2: RNElement,
    p: RationalPoint,
    f: RNElement,
    data: PeriodicNucleusData,
    cap: int | None = None,
) -> int | None:
    """``k`` with ``(h2)_p = (f)_p^k (h1)_p``, or ``None`` for different fibers.

    Divisibility of the displacement gap by ``|β|`` and the final germ
    equality are both verified; a failure raises ``InvariantViolation``.
    """
    first = germ_signature(h1, p, data, cap)
    second = germ_signature(h2, p, data, cap)
    if not equal(first.nucleus_component, second.nucleus_component):
        return None
    gap = second.delta - first.delta
    if gap % len(data.beta) != 0:
        msg = f"Displacement gap {gap} is not a multiple of |β| = {len(data.beta)}"
        raise InvariantViolation(msg)
    k = gap // len(data.beta)
    if not germ_equal(h2, compose(power(f, k), h1), p, data, cap):
        msg = f"Germs differ after translating by f^{k}"
        raise InvariantViolation(msg)
    return k
