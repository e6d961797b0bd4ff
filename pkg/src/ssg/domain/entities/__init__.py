"""Domain entities."""

from .automaton_group import IDENTITY, AutomatonGroup, StateSpec
from .group_word import GroupWord
from .rn_element import RNElement, RNRow

__all__ = [
    "IDENTITY",
    "AutomatonGroup",
    "GroupWord",
    "RNElement",
    "RNRow",
    "StateSpec",
]
