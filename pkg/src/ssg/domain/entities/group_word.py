"""Group words: elements of an automaton group as reduced words."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from ...core.exceptions import InvalidWordError, MismatchedGroupsError
from .automaton_group import IDENTITY

if TYPE_CHECKING:
    from .automaton_group import AutomatonGroup

Letter = tuple[str, int]


def free_reduce(letters: tuple[Letter, ...] | list[Letter]) -> tuple[Letter, ...]:
    """Cancel adjacent ``s s'`` and ``s' s`` pairs."""
    stack: list[Letter] = []
    for name, sign in letters:
        if stack and stack[-1][0] == name and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((name, sign))
    return tuple(stack)


def step_letters(
    automaton: AutomatonGroup, letters: tuple[Letter, ...], x: int
) -> tuple[int, tuple[Letter, ...]]:
    """Act on one letter: return the image letter and the reduced restriction.

    The rightmost letter acts first. ``(s, -1)|_x`` is ``(s|_{s^-1(x)})^-1``.
    """
    table = automaton.table
    restricted: list[Letter] = []
    for name, sign in reversed(letters):
        entry = table[name]
        if sign > 0:
            below = entry.trans[x]
            x = entry.perm[x]
        else:
            x = entry.inverse_perm[x]
            below = entry.trans[x]
        if below != IDENTITY:
            restricted.append((below, sign))
    restricted.reverse()
    return x, free_reduce(restricted)


@dataclass(frozen=True)
class GroupWord:
    """Element of an automaton group as a freely reduced word.

    ``letters`` is a sequence of ``(state, ±1)`` pairs; the empty sequence
    is the identity. Words act right to left: ``apply(u*v, w) ==
    apply(u, apply(v, w))``.
    """

    automaton: AutomatonGroup
    letters: tuple[Letter, ...]

    def __post_init__(self) -> None:
        """Validate states and reduce eagerly."""
        for name, sign in self.letters:
            if sign not in (1, -1):
                msg = f"Letter sign must be +1 or -1, got {sign}"
                raise InvalidWordError(msg)
            if not self.automaton.has_state(name):
                msg = f"Unknown state {name!r} in group {self.automaton.name!r}"
                raise InvalidWordError(msg)
        object.__setattr__(self, "letters", free_reduce(tuple(self.letters)))

    @classmethod
    def from_text(cls, automaton: AutomatonGroup, text: str) -> GroupWord:
        """Parse ``a.b'.c``; ``id`` (or an empty string) is the identity."""
        letters: list[Letter] = []
        stripped = text.strip()
        if not stripped:
            return cls(automaton, ())
        for token in stripped.split("."):
            token = token.strip()
            sign = 1
            while token.endswith("'"):
                token = token[:-1]
                sign = -sign
            if token == IDENTITY:
                continue
            if not token:
                msg = f"Empty factor in word {text!r}"
                raise InvalidWordError(msg)
            letters.append((token, sign))
        return cls(automaton, tuple(letters))

    def to_text(self) -> str:
        """Render as ``a.b'.c`` (``id`` for the identity)."""
        if not self.letters:
            return IDENTITY
        return ".".join(name if sign > 0 else f"{name}'" for name, sign in self.letters)

    def __str__(self) -> str:
        return self.to_text()

    def __len__(self) -> int:
        return len(self.letters)

    def is_empty(self) -> bool:
        """Syntactic identity (the empty word)."""
        return not self.letters

    def sort_key(self) -> tuple[int, tuple[tuple[int, int], ...]]:
        """Shortlex key used to pick canonical representatives.

        Generators come before inverses, each in declaration order.
        """
        order = self.automaton.state_order
        return (
            len(self.letters),
            tuple((0 if sign > 0 else 1, order[name]) for name, sign in self.letters),
        )

    def _check_same(self, other: GroupWord) -> None:
        if self.automaton != other.automaton:
            msg = f"Words over different groups: {self.automaton.name} and {other.automaton.name}"
            raise MismatchedGroupsError(msg)

    def __mul__(self, other: GroupWord) -> GroupWord:
        """Product; the right factor acts first."""
        self._check_same(other)
        return GroupWord(self.automaton, self.letters + other.letters)

    def inverse(self) -> GroupWord:
        """Formal inverse."""
        return GroupWord(
            self.automaton, tuple((name, -sign) for name, sign in reversed(self.letters))
        )

    def __pow__(self, n: int) -> GroupWord:
        if n < 0:
            return self.inverse() ** (-n)
        return GroupWord(self.automaton, self.letters * n)

    def step(self, x: int) -> tuple[int, GroupWord]:
        """Image of a single letter and the restriction below it."""
        if not 0 <= x < self.automaton.d:
            msg = f"Letter {x} out of range for alphabet size {self.automaton.d}"
            raise InvalidWordError(msg)
        y, letters = step_letters(self.automaton, self.letters, x)
        return y, GroupWord(self.automaton, letters)

    def apply(self, path: str) -> str:
        """Image of a finite path; length and prefixes are preserved."""
        self.automaton.check_path(path)
        out: list[str] = []
        letters = self.letters
        for ch in path:
            y, letters = step_letters(self.automaton, letters, int(ch))
            out.append(str(y))
        return "".join(out)

    def restrict(self, path: str) -> GroupWord:
        """Local action ``w|_path``, computed letter by letter."""
        self.automaton.check_path(path)
        letters = self.letters
        for ch in path:
            _, letters = step_letters(self.automaton, letters, int(ch))
        return GroupWord(self.automaton, letters)

    def apply_and_restrict(self, path: str) -> tuple[str, GroupWord]:
        """``(w(path), w|_path)`` in a single pass."""
        self.automaton.check_path(path)
        out: list[str] = []
        letters = self.letters
        for ch in path:
            y, letters = step_letters(self.automaton, letters, int(ch))
            out.append(str(y))
        return "".join(out), GroupWord(self.automaton, letters)
