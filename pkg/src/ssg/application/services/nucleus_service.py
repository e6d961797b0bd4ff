"""Nucleus computation and contraction depth for automaton groups."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import networkx
import structlog

from ...core.config import get_settings
from ...core.exceptions import BoundExceededError, NotContractingWithinBounds
from ...domain.entities.automaton_group import AutomatonGroup
from ...domain.entities.group_word import GroupWord, Letter
from .word_problem import equal

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class NucleusResult:
    """Pairwise inequivalent nucleus representatives and a depth certificate.

    Every restriction of a product of two elements at depth
    ``depth_certificate`` or deeper equals one of ``elements``.
    """

    group: AutomatonGroup
    elements: tuple[GroupWord, ...]
    depth_certificate: int

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, w: GroupWord) -> int | None:
        """Index of the element equal to ``w``, if any."""
        return find_equal(w, self.elements)

    def contains(self, w: GroupWord) -> bool:
        """Membership up to equality."""
        return self.index_of(w) is not None

    def __str__(self) -> str:
        names = ", ".join(str(w) for w in self.elements)
        return f"{{{names}}} (depth {self.depth_certificate})"


def find_equal(w: GroupWord, candidates: Sequence[GroupWord]) -> int | None:
    """Index of the first candidate equal to ``w``."""
    for index, candidate in enumerate(candidates):
        if candidate.letters == w.letters:
            return index
    for index, candidate in enumerate(candidates):
        if equal(candidate, w):
            return index
    return None


class _Representatives:
    """Candidate set with shortlex-least representatives."""

    def __init__(self, words: Iterable[GroupWord]) -> None:
        self.words: list[GroupWord] = []
        for word in words:
            self.add(word)

    def add(self, word: GroupWord) -> bool:
        """Insert unless an equal element is present; return whether it was new."""
        index = find_equal(word, self.words)
        if index is None:
            self.words.append(word)
            return True
        if word.sort_key() < self.words[index].sort_key():
            self.words[index] = word
        return False


def restriction_graph(
    w: GroupWord, known: Sequence[GroupWord], max_depth: int
) -> tuple[networkx.DiGraph, dict[int, GroupWord]]:
    """Graph of ``w``'s restrictions, nodes identified up to equality.

    Nodes are integers; ``known`` words are tried first so that nodes
    reuse existing representatives.
    """
    d = w.automaton.d
    nodes: list[GroupWord] = []
    by_letters: dict[tuple[Letter, ...], int] = {}
    graph = networkx.DiGraph()

    def node_for(word: GroupWord) -> tuple[int, bool]:
        if word.letters in by_letters:
            return by_letters[word.letters], False
        index = find_equal(word, nodes)
        if index is None:
            match = find_equal(word, known)
            nodes.append(known[match] if match is not None else word)
            index = len(nodes) - 1
            graph.add_node(index)
            by_letters[word.letters] = index
            return index, True
        by_letters[word.letters] = index
        return index, False

    root, _ = node_for(w)
    frontier = deque([(root, 0)])
    while frontier:
        index, depth = frontier.popleft()
        for x in range(d):
            _, below = nodes[index].step(x)
            child, new = node_for(below)
            graph.add_edge(index, child)
            if new:
                if depth + 1 > max_depth:
                    msg = f"Restriction graph of {w} deeper than {max_depth}"
                    raise NotContractingWithinBounds(
                        msg, bound=max_depth, size=len(nodes), depth=depth + 1
                    )
                frontier.append((child, depth + 1))
    return graph, dict(enumerate(nodes))


def recurrent_part(graph: networkx.DiGraph) -> set[int]:
    """Nodes lying on a cycle or reachable from one."""
    on_cycle: set[int] = set()
    for component in networkx.strongly_connected_components(graph):
        node = next(iter(component))
        if len(component) > 1 or graph.has_edge(node, node):
            on_cycle |= component
    reachable = set(on_cycle)
    for node in on_cycle:
        reachable |= networkx.descendants(graph, node)
    return reachable


def nucleus(
    group: AutomatonGroup, max_size: int | None = None, max_depth: int | None = None
) -> NucleusResult:
    """Semi-algorithm for the nucleus of a contracting group.

    Starts from the identity, the states and their inverses, then adds the
    recurrent part of every pairwise product's restriction graph until a
    fixed point. Raises ``NotContractingWithinBounds`` when a cap is hit;
    that is a diagnostic, not a proof of non-contraction.
    """
    settings = get_settings()
    max_size = max_size or settings.nucleus_max_size
    max_depth = max_depth or settings.nucleus_max_depth

    candidates = _Representatives(
        [group.identity(), *group.generators(with_inverses=True)]
    )
    if len(candidates.words) > max_size:
        msg = f"Generators of {group.name} already exceed {max_size} candidates"
        raise NotContractingWithinBounds(
            msg, bound=max_size, size=len(candidates.words), depth=0
        )
    rounds = 0
    changed = True
    while changed:
        changed = False
        rounds += 1
        snapshot = list(candidates.words)
        for first in snapshot:
            for second in snapshot:
                graph, nodes = restriction_graph(first * second, candidates.words, max_depth)
                for index in sorted(recurrent_part(graph)):
                    if candidates.add(nodes[index]):
                        changed = True
                        if len(candidates.words) > max_size:
                            msg = f"Candidate nucleus of {group.name} exceeded {max_size} elements"
                            raise NotContractingWithinBounds(
                                msg, bound=max_size, size=len(candidates.words), depth=0
                            )
        logger.debug(
            "Nucleus iteration", group=group.name, round=rounds, size=len(candidates.words)
        )

    elements = tuple(sorted(candidates.words, key=GroupWord.sort_key))
    certificate = 0
    for first in elements:
        for second in elements:
            certificate = max(
                certificate, _depth_into(first * second, elements, max_depth)
            )
    logger.info(
        "Nucleus computed", group=group.name, size=len(elements), depth=certificate
    )
    return NucleusResult(group, elements, certificate)


def _depth_into(w: GroupWord, elements: Sequence[GroupWord], cap: int) -> int:
    """Least ``M`` with every depth-``M`` restriction of ``w`` in ``elements``."""
    level: dict[tuple[Letter, ...], GroupWord] = {w.letters: w}
    depth = 0
    while True:
        if all(find_equal(word, elements) is not None for word in level.values()):
            return depth
        if depth >= cap:
            msg = f"Restrictions of {w} did not enter the nucleus within depth {cap}"
            raise BoundExceededError(msg, cap)
        following: dict[tuple[Letter, ...], GroupWord] = {}
        for word in level.values():
            for x in range(w.automaton.d):
                _, below = word.step(x)
                following.setdefault(below.letters, below)
        level = following
        depth += 1


def contraction_depth(w: GroupWord, n: NucleusResult, cap: int | None = None) -> int:
    """Least ``M >= 0`` such that all restrictions of ``w`` at depth ``M`` lie in ``n``."""
    cap = cap or get_settings().contraction_cap
    return _depth_into(w, n.elements, cap)
