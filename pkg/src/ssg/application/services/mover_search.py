"""Best-effort search for an element sending one rational point to another.

Orbit membership is only semi-decidable, so the search is bounded and may
come back empty even when a mover exists.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import product

import structlog

from ...core.config import get_settings
from ...domain.entities.automaton_group import AutomatonGroup
from ...domain.entities.group_word import GroupWord
from ...domain.entities.rn_element import RNElement
from ...domain.value_objects.rational_point import RationalPoint
from .rn_service import act_on_point, from_group_element, make_element

logger = structlog.get_logger(__name__)


def bounded_words(group: AutomatonGroup, max_length: int) -> Iterator[GroupWord]:
    """Distinct reduced words of length at most ``max_length``, shortest first."""
    letters = [(name, sign) for name in group.state_names for sign in (1, -1)]
    seen: set[tuple[tuple[str, int], ...]] = set()
    for length in range(max_length + 1):
        for combo in product(letters, repeat=length):
            word = GroupWord(group, combo)
            if word.letters not in seen:
                seen.add(word.letters)
                yield word


def find_mover(
    group: AutomatonGroup,
    p: RationalPoint,
    q: RationalPoint,
    max_word_length: int | None = None,
    max_prefix_length: int | None = None,
) -> RNElement | None:
    """An element ``h`` with ``h(p) = q``, or ``None`` when the bounded search fails.

    Global words are tried first, then single prefix swaps
    ``p[:a] ↦ q[:b]`` decorated with a bounded word.
    """
    settings = get_settings()
    max_word_length = max_word_length or settings.mover_word_length
    max_prefix_length = max_prefix_length or settings.mover_prefix_length
    words = list(bounded_words(group, max_word_length))

    for g in words:
        if act_on_point(g, p) == q:
            logger.debug("Global mover found", word=g.to_text())
            return from_group_element(g)

    for a in range(1, max_prefix_length + 1):
        for b in range(1, max_prefix_length + 1):
            tail = q.shift(b)
            for g in words:
                if act_on_point(g, p.shift(a)) == tail:
                    logger.debug("Prefix-swap mover found", source=a, target=b, word=g.to_text())
                    return make_element(group, [(p.prefix(a), q.prefix(b), g)])

    logger.warning(
        "Best-effort mover search found nothing",
        source=str(p),
        target=str(q),
        max_word_length=max_word_length,
        max_prefix_length=max_prefix_length,
    )
    return None
