"""Operations on Röver–Nekrashevych group elements."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import structlog

from ...core.exceptions import InvariantViolation, MismatchedGroupsError, PartitionError
from ...domain.entities.automaton_group import AutomatonGroup
from ...domain.entities.group_word import GroupWord
from ...domain.entities.rn_element import RNElement, RNRow
from ...domain.value_objects.cone import Cone, ConePartition, are_disjoint, as_cones, covers
from ...domain.value_objects.rational_point import RationalPoint
from .partition_service import (
    common_refinement,
    complement_partition,
    partition_with,
    refine_to_count,
)
from .word_problem import equal, is_trivial

logger = structlog.get_logger(__name__)

Pair = tuple[Cone | str, Cone | str, GroupWord | None]


def identity_rn(group: AutomatonGroup) -> RNElement:
    """Single row ``(ε, ε, id)``."""
    return RNElement(group, (RNRow(Cone(""), Cone(""), group.identity()),))


def from_group_element(g: GroupWord) -> RNElement:
    """The tree automorphism ``g`` as the global element ``(ε, ε, g)``."""
    return RNElement(g.automaton, (RNRow(Cone(""), Cone(""), g),))


def expand_row(row: RNRow, suffix: str) -> RNRow:
    """Restrict a row to the sub-cone ``domain + suffix``."""
    image, below = row.action.apply_and_restrict(suffix)
    return RNRow(
        Cone(row.domain.address + suffix), Cone(row.range.address + image), below
    )


def expand(h: RNElement, finer: ConePartition | Iterable[Cone | str]) -> RNElement:
    """Same homeomorphism over a finer domain partition."""
    if not isinstance(finer, ConePartition):
        finer = ConePartition.of(h.d, finer)
    if not finer.is_complete:
        msg = f"{finer} is not a complete partition"
        raise PartitionError(msg)
    rows = []
    for cone in finer.cones:
        row = h.row_at(cone.address)
        if row is None:
            msg = f"Cone {cone} does not refine the domain partition of the element"
            raise PartitionError(msg)
        rows.append(expand_row(row, cone.address[len(row.domain) :]))
    return RNElement(h.group, tuple(rows))


def split_ranges(rows: Iterable[RNRow], targets: ConePartition) -> list[RNRow]:
    """Split rows until every range cone lies inside a member of ``targets``.

    ``targets`` must be complete, so each range either lies inside one
    member or is a proper prefix of several.
    """
    done: list[RNRow] = []
    pending = list(rows)
    while pending:
        row = pending.pop()
        if targets.locate(row.range.address) is not None:
            done.append(row)
            continue
        for x in range(targets.d):
            pending.append(expand_row(row, str(x)))
    return done


def _check_same(h1: RNElement, h2: RNElement) -> None:
    if h1.group != h2.group:
        msg = f"Elements over different groups: {h1.group.name} and {h2.group.name}"
        raise MismatchedGroupsError(msg)


def compose(h1: RNElement, h2: RNElement) -> RNElement:
    """``h1 ∘ h2``: apply ``h2`` first."""
    _check_same(h1, h2)
    rows = []
    for row in split_ranges(h2.rows, h1.domain_partition()):
        outer = h1.row_at(row.range.address)
        if outer is None:
            msg = f"Range {row.range} is not covered by the outer domain"
            raise InvariantViolation(msg)
        image, below = outer.action.apply_and_restrict(
            row.range.address[len(outer.domain) :]
        )
        rows.append(
            RNRow(row.domain, Cone(outer.range.address + image), below * row.action)
        )
    return RNElement(h1.group, tuple(rows))


def invert(h: RNElement) -> RNElement:
    """Rows ``(β_i, α_i, g_i^-1)``."""
    return RNElement(
        h.group,
        tuple(RNRow(row.range, row.domain, row.action.inverse()) for row in h.rows),
    )


def power(h: RNElement, k: int) -> RNElement:
    """``h^k`` for any integer ``k``."""
    base = h if k >= 0 else invert(h)
    result = identity_rn(h.group)
    for _ in range(abs(k)):
        result = compose(base, result)
    return result


def equal_rn(h1: RNElement, h2: RNElement) -> bool:
    """Equality via the common refinement of both domains and the word problem."""
    _check_same(h1, h2)
    common = common_refinement(h1.domain_partition(), h2.domain_partition())
    left = expand(h1, common)
    right = expand(h2, common)
    return all(
        a.range == b.range and equal(a.action, b.action)
        for a, b in zip(left.rows, right.rows, strict=True)
    )


def act_on_point(g: GroupWord, point: RationalPoint) -> RationalPoint:
    """Image of a rational point under a tree automorphism.

    After the preperiod, the restriction word is tracked at period
    boundaries; the first repeated word closes the output cycle.
    """
    head, word = g.apply_and_restrict(point.preperiod)
    blocks: list[str] = []
    seen: dict[tuple[tuple[str, int], ...], int] = {}
    while word.letters not in seen:
        seen[word.letters] = len(blocks)
        block, word = word.apply_and_restrict(point.period)
        blocks.append(block)
    start = seen[word.letters]
    return RationalPoint.canonicalize(
        point.d, head + "".join(blocks[:start]), "".join(blocks[start:])
    )


def _row_containing(h: RNElement, p: RationalPoint) -> RNRow:
    for row in h.rows:
        if p.in_cone(row.domain):
            return row
    msg = f"No domain cone contains {p}"
    raise InvariantViolation(msg)


def evaluate(h: RNElement, p: RationalPoint) -> RationalPoint:
    """``h(α·ψ) = β·g(ψ)`` for the row whose domain contains ``p``."""
    row = _row_containing(h, p)
    image = act_on_point(row.action, p.tail(row.domain))
    return RationalPoint.canonicalize(
        p.d, row.range.address + image.preperiod, image.period
    )


def regular_cone(h: RNElement, p: RationalPoint) -> tuple[Cone, GroupWord]:
    """The table row whose domain contains ``p``, as ``(cone, action)``."""
    row = _row_containing(h, p)
    return row.domain, row.action


def image_cone(h: RNElement, cone: Cone | str) -> Cone | None:
    """Image address of ``cone`` when it is regular for ``h``, else ``None``."""
    address = cone.address if isinstance(cone, Cone) else cone
    row = h.row_at(address)
    if row is None:
        return None
    return expand_row(row, address[len(row.domain) :]).range


def restriction_at(h: RNElement, cone: Cone | str) -> RNRow | None:
    """The row ``(cone, image, local action)`` when ``cone`` is regular."""
    address = cone.address if isinstance(cone, Cone) else cone
    row = h.row_at(address)
    if row is None:
        return None
    return expand_row(row, address[len(row.domain) :])


def fixes_cones(h: RNElement, cones: Iterable[Cone | str]) -> bool:
    """``h`` is the identity on the union of the given disjoint cones."""
    given = as_cones(cones)
    if not given:
        return True
    region = partition_with(h.d, given)
    refined = expand(h, common_refinement(h.domain_partition(), region))
    for row in refined.rows:
        if any(cone.contains(row.domain) for cone in given) and (
            row.range != row.domain or not is_trivial(row.action)
        ):
            return False
    return True


def _validate_family(d: int, cones: Sequence[Cone], side: str) -> None:
    for cone in cones:
        cone.check_letters(d)
    if not are_disjoint(cones):
        msg = f"{side} cones overlap: {[str(c) for c in cones]}"
        raise PartitionError(msg)
    if covers(cones, d):
        msg = f"{side} cones cover Cantor space: {[str(c) for c in cones]}"
        raise PartitionError(msg)


def make_element(group: AutomatonGroup, pairs: Sequence[Pair]) -> RNElement:
    """Element mapping each ``α_i𝔠`` onto ``β_i𝔠`` with local action ``g_i``.

    Both complements are partitioned, the smaller one is refined to the
    size of the larger (the counts agree mod ``d - 1``), and the padding
    cones are paired in lexicographic order with identity actions.
    """
    if not pairs:
        return identity_rn(group)
    d = group.d
    domains = as_cones(alpha for alpha, _, _ in pairs)
    ranges = as_cones(beta for _, beta, _ in pairs)
    _validate_family(d, domains, "Domain")
    _validate_family(d, ranges, "Range")

    source = complement_partition(d, domains)
    target = complement_partition(d, ranges)
    if (len(source) - len(target)) % (d - 1) != 0:
        msg = f"Complement sizes {len(source)} and {len(target)} disagree mod {d - 1}"
        raise InvariantViolation(msg)
    size = max(len(source), len(target))
    source = refine_to_count(d, source, size)
    target = refine_to_count(d, target, size)

    rows = [
        RNRow(alpha, beta, g if g is not None else group.identity())
        for alpha, beta, (_, _, g) in zip(domains, ranges, pairs, strict=True)
    ]
    rows += [
        RNRow(alpha, beta, group.identity())
        for alpha, beta in zip(sorted(source), sorted(target), strict=True)
    ]
    logger.debug("Built element", group=group.name, pairs=len(pairs), rows=len(rows))
    return RNElement(group, tuple(rows))
