"""Text formats for groups and RN elements."""

from .group_parser import format_group, parse_group
from .rn_parser import NamedElement, format_rn, parse_rn

__all__ = [
    "NamedElement",
    "format_group",
    "format_rn",
    "parse_group",
    "parse_rn",
]
