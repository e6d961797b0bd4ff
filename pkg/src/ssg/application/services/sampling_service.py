"""Seeded random generators for elements, points and stabilizer samples.

Every function takes an explicit ``random.Random`` so suites stay
reproducible under a fixed seed.
"""

from __future__ import annotations

import random

import structlog

from ...domain.entities.automaton_group import AutomatonGroup
from ...domain.entities.group_word import GroupWord
from ...domain.entities.rn_element import RNElement
from ...domain.value_objects.cone import Cone
from ...domain.value_objects.rational_point import RationalPoint
from .partition_service import complement_partition
from .rn_service import act_on_point, from_group_element, make_element
from .witness_service import SeparatedSystem

logger = structlog.get_logger(__name__)

_WORD_ATTEMPTS = 32


def random_word(group: AutomatonGroup, rng: random.Random, max_length: int = 4) -> GroupWord:
    """Uniform length in ``[0, max_length]``, uniform signed letters."""
    if not group.states:
        return group.identity()
    length = rng.randint(0, max_length)
    letters = tuple(
        (rng.choice(group.state_names), rng.choice((1, -1))) for _ in range(length)
    )
    return GroupWord(group, letters)


def random_complete_partition(
    d: int, rng: random.Random, min_size: int = 2, max_depth: int = 4
) -> list[Cone]:
    """Split random cones of ``{ε}`` until at least ``min_size`` cones exist."""
    cones = [Cone("")]
    while len(cones) < min_size:
        candidates = [c for c in cones if len(c) < max_depth] or cones
        victim = rng.choice(candidates)
        cones.remove(victim)
        cones.extend(victim.children(d))
    if rng.random() < 0.5:
        victim = rng.choice([c for c in cones if len(c) < max_depth] or cones)
        cones.remove(victim)
        cones.extend(victim.children(d))
    return sorted(cones)


def random_disjoint_family(d: int, rng: random.Random, size: int) -> list[Cone]:
    """``size`` pairwise disjoint cones whose union is not everything."""
    partition = random_complete_partition(d, rng, min_size=size + 1)
    return rng.sample(partition, size)


def random_pairs(
    group: AutomatonGroup, rng: random.Random, max_pairs: int = 2, max_word: int = 3
) -> list[tuple[Cone, Cone, GroupWord]]:
    """Admissible input for ``make_element``."""
    n = rng.randint(1, max_pairs)
    domains = random_disjoint_family(group.d, rng, n)
    ranges = random_disjoint_family(group.d, rng, n)
    return [
        (alpha, beta, random_word(group, rng, max_word))
        for alpha, beta in zip(domains, ranges, strict=True)
    ]


def random_element(
    group: AutomatonGroup, rng: random.Random, max_pairs: int = 2, max_word: int = 3
) -> RNElement:
    """``make_element`` over random admissible pairs."""
    return make_element(group, random_pairs(group, rng, max_pairs, max_word))


def random_point(
    d: int, rng: random.Random, max_preperiod: int = 3, max_period: int = 3
) -> RationalPoint:
    """Random digits for both parts, then canonicalized."""
    preperiod = "".join(str(rng.randrange(d)) for _ in range(rng.randint(0, max_preperiod)))
    period = "".join(str(rng.randrange(d)) for _ in range(rng.randint(1, max_period)))
    return RationalPoint.canonicalize(d, preperiod, period)


def random_distinct_points(d: int, rng: random.Random, n: int) -> list[RationalPoint]:
    """``n`` pairwise distinct random points."""
    points: list[RationalPoint] = []
    while len(points) < n:
        point = random_point(d, rng)
        if point not in points:
            points.append(point)
    return points


def _realignments(p: RationalPoint, q: RationalPoint, window: int) -> list[int]:
    """Shifts ``j`` in ``[1, window]`` with ``p`` shifted by ``j`` equal to ``q``."""
    return [j for j in range(1, window + 1) if p.shift(j) == q]


def sample_stabilizer(
    group: AutomatonGroup,
    p: RationalPoint,
    rng: random.Random,
    pure_thompson: bool = False,
    max_word: int = 3,
) -> RNElement:
    """Random element fixing ``p`` built from one pair ``(p[:L], p[:j], g)``.

    ``g`` moves the tail after ``L`` letters onto the tail after ``j``
    letters. With ``pure_thompson`` the local action is the identity.
    """
    span = len(p.preperiod) + len(p.period)
    window = span + 3 * len(p.period)
    for _ in range(_WORD_ATTEMPTS):
        source_length = rng.randint(1, span + len(p.period))
        g = group.identity() if pure_thompson else random_word(group, rng, max_word)
        image = act_on_point(g, p.shift(source_length))
        choices = _realignments(p, image, window)
        if choices:
            target_length = rng.choice(choices)
            return make_element(
                group, [(p.prefix(source_length), p.prefix(target_length), g)]
            )
    logger.debug("Falling back to an identity-action stabilizer", point=str(p))
    return sample_stabilizer(group, p, rng, pure_thompson=True)


def sample_group_stabilizer(
    group: AutomatonGroup, p: RationalPoint, rng: random.Random, max_word: int = 4
) -> RNElement:
    """Global element ``(ε, ε, g)`` with ``g(p) = p``; the identity if none is drawn."""
    for _ in range(_WORD_ATTEMPTS):
        g = random_word(group, rng, max_word)
        if act_on_point(g, p) == p:
            return from_group_element(g)
    return from_group_element(group.identity())


def plant_identity_near(
    group: AutomatonGroup, system: SeparatedSystem, rng: random.Random, max_depth: int = 3
) -> tuple[RNElement, int]:
    """Element that is the identity on the cones ``α_i β_i^depth``.

    Returns the element and the depth used. Outside those cones one
    random cone is moved onto another with a random local action.
    """
    depth = rng.randint(0, max_depth)
    near = [
        Cone(cone.address + point.period * depth)
        for cone, point in zip(system.cones, system.points, strict=True)
    ]
    outside = complement_partition(group.d, near)
    if len(outside) < 2:
        victim = outside.pop()
        outside.extend(victim.children(group.d))
    source, target = rng.sample(outside, 2)
    pairs: list[tuple[Cone, Cone, GroupWord | None]] = [(c, c, None) for c in near]
    pairs.append((source, target, random_word(group, rng)))
    return make_element(group, pairs), depth
