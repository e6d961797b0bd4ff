"""Word problem for automaton groups by breadth-first bisimulation."""

from __future__ import annotations

from collections import deque

from ...core.exceptions import MismatchedGroupsError
from ...domain.entities.group_word import GroupWord, Letter, step_letters


def restrict(w: GroupWord, path: str) -> GroupWord:
    """Local action ``w|_path``."""
    return w.restrict(path)


def apply(w: GroupWord, path: str) -> str:
    """Image of a finite path under ``w``."""
    return w.apply(path)


def is_trivial(w: GroupWord) -> bool:
    """Whether ``w`` acts as the identity on the whole tree.

    ``w`` is trivial iff its root permutation is the identity and every
    single-letter restriction is trivial. Restrictions of a word of length
    ``k`` are reduced words of length at most ``k``, so the search is finite.
    """
    automaton = w.automaton
    d = automaton.d
    seen: set[tuple[Letter, ...]] = {w.letters}
    queue: deque[tuple[Letter, ...]] = deque([w.letters])
    while queue:
        letters = queue.popleft()
        if not letters:
            continue
        below = []
        for x in range(d):
            y, restricted = step_letters(automaton, letters, x)
            if y != x:
                return False
            below.append(restricted)
        for restricted in below:
            if restricted not in seen:
                seen.add(restricted)
                queue.append(restricted)
    return True


def equal(w1: GroupWord, w2: GroupWord) -> bool:
    """Equality as tree automorphisms."""
    if w1.automaton != w2.automaton:
        msg = f"Cannot compare words over {w1.automaton.name} and {w2.automaton.name}"
        raise MismatchedGroupsError(msg)
    if w1.letters == w2.letters:
        return True
    return is_trivial(w1 * w2.inverse())
