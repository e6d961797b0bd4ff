"""Automaton group entity: a finite invertible letter-transducer."""

from __future__ import annotations

import string
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING

from ...core.exceptions import InvalidAutomatonError

if TYPE_CHECKING:
    from .group_word import GroupWord

IDENTITY = "id"

# Letters are written as single digits, so the alphabet stops at 10.
MAX_ALPHABET = 10

# Characters with a meaning in word and file syntax.
NAME_FORBIDDEN = "'.#"


@dataclass(frozen=True)
class StateSpec:
    """One state: its root permutation and the states acting below each letter."""

    name: str
    perm: tuple[int, ...]
    trans: tuple[str, ...]

    def inverse_perm(self) -> tuple[int, ...]:
        """Inverse of the root permutation, as an image list."""
        inverse = [0] * len(self.perm)
        for x, y in enumerate(self.perm):
            inverse[y] = x
        return tuple(inverse)


@dataclass(frozen=True)
class StateTable:
    """Lookup tables for one state, including its derived inverse."""

    perm: tuple[int, ...]
    inverse_perm: tuple[int, ...]
    trans: tuple[str, ...]


@dataclass(frozen=True)
class AutomatonGroup:
    """Self-similar group presented by an invertible Mealy automaton.

    The identity state ``id`` is implicit and never listed in ``states``.
    Inverse states are not stored; they are derived on demand from
    ``perm`` and ``trans``.
    """

    name: str
    d: int
    states: tuple[StateSpec, ...]

    def __post_init__(self) -> None:
        """Validate automaton invariants."""
        if not 2 <= self.d <= MAX_ALPHABET:
            msg = f"Alphabet size must be between 2 and {MAX_ALPHABET}, got {self.d}"
            raise InvalidAutomatonError(msg)

        names = [state.name for state in self.states]
        if len(set(names)) != len(names):
            msg = f"Duplicate state names in group {self.name!r}"
            raise InvalidAutomatonError(msg)
        if IDENTITY in names:
            msg = f"State name {IDENTITY!r} is reserved for the identity"
            raise InvalidAutomatonError(msg)
        for name in names:
            if not name or any(ch.isspace() or ch in NAME_FORBIDDEN for ch in name):
                msg = f"State name {name!r} must be nonempty, without spaces or {NAME_FORBIDDEN!r}"
                raise InvalidAutomatonError(msg)

        known = set(names) | {IDENTITY}
        for state in self.states:
            if sorted(state.perm) != list(range(self.d)):
                msg = f"State {state.name!r}: perm {list(state.perm)} is not a bijection of 0..{self.d - 1}"
                raise InvalidAutomatonError(msg)
            if len(state.trans) != self.d:
                msg = f"State {state.name!r}: expected {self.d} transitions, got {len(state.trans)}"
                raise InvalidAutomatonError(msg)
            for target in state.trans:
                if target not in known:
                    msg = f"State {state.name!r}: transition to unknown state {target!r}"
                    raise InvalidAutomatonError(msg)

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.name, self.d, self.states))

    @cached_property
    def table(self) -> dict[str, StateTable]:
        """State name to lookup tables."""
        return {
            state.name: StateTable(state.perm, state.inverse_perm(), state.trans)
            for state in self.states
        }

    @property
    def state_names(self) -> tuple[str, ...]:
        """State names in declaration order."""
        return tuple(state.name for state in self.states)

    @cached_property
    def state_order(self) -> dict[str, int]:
        """Declaration index of each state."""
        return {state.name: index for index, state in enumerate(self.states)}

    def has_state(self, name: str) -> bool:
        """Check if a (non-identity) state exists."""
        return name in self.table

    def identity(self) -> GroupWord:
        """The empty word."""
        from .group_word import GroupWord

        return GroupWord(self, ())

    def generators(self, with_inverses: bool = False) -> list[GroupWord]:
        """Single-state words, optionally followed by their formal inverses."""
        from .group_word import GroupWord

        words = [GroupWord(self, ((name, 1),)) for name in self.state_names]
        if with_inverses:
            words += [GroupWord(self, ((name, -1),)) for name in self.state_names]
        return words

    def word(self, text: str) -> GroupWord:
        """Parse ``a.b'.c`` notation into a reduced word."""
        from .group_word import GroupWord

        return GroupWord.from_text(self, text)

    def check_path(self, path: str) -> None:
        """Raise if ``path`` is not a word over ``{0, ..., d-1}``."""
        from ...core.exceptions import InvalidWordError

        for ch in path:
            if ch not in string.digits or int(ch) >= self.d:
                msg = f"Letter {ch!r} out of range for alphabet size {self.d}"
                raise InvalidWordError(msg)

    def __str__(self) -> str:
        return f"{self.name} (d={self.d}, {len(self.states)} states)"
