"""Compiled-in example groups and elements."""

from .builtin import (
    BUILTIN_ELEMENTS,
    COMPANION_GROUPS,
    EXPECTED_NUCLEUS_SIZES,
    GROUP_TEXTS,
    SUITE_DEFAULTS,
    builtin_group,
    index_two_element,
)

__all__ = [
    "BUILTIN_ELEMENTS",
    "COMPANION_GROUPS",
    "EXPECTED_NUCLEUS_SIZES",
    "GROUP_TEXTS",
    "SUITE_DEFAULTS",
    "builtin_group",
    "index_two_element",
]
