"""RN-element text format.

::

    rn <name> over <groupname>
    row <alpha> -> <beta> act <word>

Addresses are digit strings with ``^`` for the empty address.
"""

from __future__ import annotations

from dataclasses import dataclass

from ...core.exceptions import InvalidWordError, ParseError, SSGError
from ...domain.entities.automaton_group import AutomatonGroup
from ...domain.entities.group_word import GroupWord
from ...domain.entities.rn_element import RNElement, RNRow
from ...domain.value_objects.cone import Cone
from .tokens import Token, check_arity, expect, take, tokenize


@dataclass(frozen=True)
class NamedElement:
    """An element together with the name it was declared under."""

    name: str
    element: RNElement


def _cone(token: Token, d: int) -> Cone:
    try:
        cone = Cone.parse(token.text)
        cone.check_letters(d)
    except SSGError as exc:
        raise ParseError(str(exc), token.line, token.column) from exc
    return cone


def _word(token: Token, group: AutomatonGroup) -> GroupWord:
    try:
        return GroupWord.from_text(group, token.text)
    except InvalidWordError as exc:
        raise ParseError(str(exc), token.line, token.column) from exc


def parse_rn(text: str, group: AutomatonGroup) -> NamedElement:
    """Parse an element over ``group``; the header must name that group."""
    name: str | None = None
    header: Token | None = None
    rows: list[RNRow] = []
    for tokens in tokenize(text):
        head = tokens[0]
        if head.text == "rn":
            name = take(tokens, 1, "element name").text
            expect(tokens, 2, "over")
            declared = take(tokens, 3, "group name")
            check_arity(tokens, 4)
            if declared.text != group.name:
                msg = f"element is over {declared.text!r}, expected {group.name!r}"
                raise ParseError(msg, declared.line, declared.column)
            header = head
        elif head.text == "row":
            if header is None:
                msg = "row before the 'rn <name> over <group>' header"
                raise ParseError(msg, head.line, head.column)
            domain = _cone(take(tokens, 1, "domain address"), group.d)
            expect(tokens, 2, "->")
            image = _cone(take(tokens, 3, "range address"), group.d)
            expect(tokens, 4, "act")
            action = _word(take(tokens, 5, "local action"), group)
            check_arity(tokens, 6)
            rows.append(RNRow(domain, image, action))
        else:
            msg = f"unknown directive {head.text!r}"
            raise ParseError(msg, head.line, head.column)

    if name is None or header is None:
        msg = "missing 'rn <name> over <group>' line"
        raise ParseError(msg, 1)
    try:
        element = RNElement(group, tuple(rows))
    except SSGError as exc:
        raise ParseError(str(exc), header.line, header.column) from exc
    return NamedElement(name, element)


def format_rn(element: RNElement, name: str = "h") -> str:
    """Inverse of ``parse_rn``."""
    lines = [f"rn {name} over {element.group.name}"]
    for row in element.rows:
        lines.append(f"row {row.domain} -> {row.range} act {row.action.to_text()}")
    return "\n".join(lines) + "\n"
