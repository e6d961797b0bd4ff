"""Group-definition text format.

::

    group <name>
    alphabet <d>
    state <name> perm <i0> ... <i(d-1)> -> <t0> ... <t(d-1)>
"""

from __future__ import annotations

import re

import structlog

from ...core.exceptions import InvalidAutomatonError, ParseError
from ...domain.entities.automaton_group import AutomatonGroup, StateSpec
from .tokens import Token, check_arity, expect, take, tokenize

logger = structlog.get_logger(__name__)


def _integer(token: Token, what: str) -> int:
    if re.fullmatch(r"-?[0-9]+", token.text):
        return int(token.text)
    msg = f"{what} must be an integer, found {token.text!r}"
    raise ParseError(msg, token.line, token.column)


def _state(tokens: list[Token], d: int) -> StateSpec:
    name = take(tokens, 1, "state name").text
    expect(tokens, 2, "perm")
    perm = tuple(_integer(take(tokens, 3 + x, f"image of {x}"), "perm entry") for x in range(d))
    expect(tokens, 3 + d, "->")
    trans = tuple(take(tokens, 4 + d + x, f"target below {x}").text for x in range(d))
    check_arity(tokens, 4 + 2 * d)
    return StateSpec(name, perm, trans)


def parse_group(text: str) -> AutomatonGroup:
    """Parse a group definition; errors carry line and column."""
    name: str | None = None
    d: int | None = None
    states: list[StateSpec] = []
    header = Token("", 1, 1)
    for tokens in tokenize(text):
        head = tokens[0]
        if head.text == "group":
            name = take(tokens, 1, "group name").text
            check_arity(tokens, 2)
            header = head
        elif head.text == "alphabet":
            if states:
                msg = "alphabet must precede the states"
                raise ParseError(msg, head.line, head.column)
            d = _integer(take(tokens, 1, "alphabet size"), "alphabet size")
            check_arity(tokens, 2)
        elif head.text == "state":
            if d is None:
                msg = "state declared before alphabet"
                raise ParseError(msg, head.line, head.column)
            states.append(_state(tokens, d))
        else:
            msg = f"unknown directive {head.text!r}"
            raise ParseError(msg, head.line, head.column)

    if name is None:
        msg = "missing 'group <name>' line"
        raise ParseError(msg, 1)
    if d is None:
        msg = "missing 'alphabet <d>' line"
        raise ParseError(msg, header.line)
    try:
        group = AutomatonGroup(name, d, tuple(states))
    except InvalidAutomatonError as exc:
        raise ParseError(str(exc), header.line, header.column) from exc
    logger.debug("Parsed group", name=name, d=d, states=len(states))
    return group


def format_group(group: AutomatonGroup) -> str:
    """Inverse of ``parse_group``."""
    lines = [f"group {group.name}", f"alphabet {group.d}"]
    for state in group.states:
        perm = " ".join(str(y) for y in state.perm)
        trans = " ".join(state.trans)
        lines.append(f"state {state.name} perm {perm} -> {trans}")
    return "\n".join(lines) + "\n"
