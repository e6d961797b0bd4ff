"""Resolve a built-in name or a file path to a parsed group or element."""

from __future__ import annotations

from pathlib import Path

import structlog

from ..application.services.verification_service import SuiteDefaults
from ..core.exceptions import ParseError
from ..domain.entities.automaton_group import AutomatonGroup
from ..domain.entities.rn_element import RNElement
from .fixtures.builtin import (
    BUILTIN_ELEMENTS,
    COMPANION_GROUPS,
    EXPECTED_NUCLEUS_SIZES,
    GROUP_TEXTS,
    SUITE_DEFAULTS,
    builtin_group,
)
from .parsers.group_parser import parse_group
from .parsers.rn_parser import parse_rn

logger = structlog.get_logger(__name__)


def _read(reference: str, kind: str) -> str:
    path = Path(reference)
    if not path.is_file():
        msg = f"{reference!r} is neither a built-in {kind} nor a readable file"
        raise ParseError(msg, 1)
    logger.debug("Reading file", path=str(path), kind=kind)
    return path.read_text(encoding="utf-8")


def load_group(reference: str) -> AutomatonGroup:
    """Built-in group name or group-definition file."""
    if reference in GROUP_TEXTS:
        return builtin_group(reference)
    return parse_group(_read(reference, "group"))


def load_element(reference: str, group: AutomatonGroup) -> RNElement:
    """Built-in element name or RN-element file over ``group``."""
    if reference in BUILTIN_ELEMENTS:
        group_name, build = BUILTIN_ELEMENTS[reference]
        if group_name != group.name:
            msg = f"built-in element {reference!r} is over {group_name!r}, not {group.name!r}"
            raise ParseError(msg, 1)
        return build()
    return parse_rn(_read(reference, "element"), group).element


class FixtureResolver:
    """Resolves command references against the built-in fixtures and the filesystem."""

    def group(self, reference: str) -> AutomatonGroup:
        """Built-in group name or group-definition file."""
        return load_group(reference)

    def element(self, reference: str, group: AutomatonGroup) -> RNElement:
        """Built-in element name or RN-element file."""
        return load_element(reference, group)

    def suite_defaults(self, suite: str) -> SuiteDefaults | None:
        """Default group, points and element for a suite."""
        return SUITE_DEFAULTS.get(suite)

    def expected_nucleus_size(self, group: AutomatonGroup) -> int | None:
        """Known nucleus size of a built-in group."""
        if group.name not in GROUP_TEXTS or builtin_group(group.name) != group:
            return None
        return EXPECTED_NUCLEUS_SIZES.get(group.name)

    def companion_group(self, group: AutomatonGroup) -> AutomatonGroup | None:
        """A built-in group over the other tested alphabet size."""
        name = COMPANION_GROUPS.get(group.d)
        return builtin_group(name) if name else None
