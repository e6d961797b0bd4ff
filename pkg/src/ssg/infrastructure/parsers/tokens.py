"""Line tokenizer shared by the text formats."""

from __future__ import annotations

import re
from collections.abc import Iterator
from dataclasses import dataclass

from ...core.exceptions import ParseError

_TOKEN = re.compile(r"\S+")


@dataclass(frozen=True)
class Token:
    """A whitespace-delimited token with its 1-based position."""

    text: str
    line: int
    column: int


def tokenize(text: str) -> Iterator[list[Token]]:
    """Non-empty lines as token lists; ``#`` starts a comment."""
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = [
            Token(match.group(), number, match.start() + 1)
            for match in _TOKEN.finditer(content)
        ]
        if tokens:
            yield tokens


def expect(tokens: list[Token], index: int, keyword: str) -> None:
    """Require ``keyword`` at ``tokens[index]``."""
    if index >= len(tokens):
        last = tokens[-1]
        msg = f"expected {keyword!r} after {last.text!r}"
        raise ParseError(msg, last.line, last.column + len(last.text))
    if tokens[index].text != keyword:
        token = tokens[index]
        msg = f"expected {keyword!r}, found {token.text!r}"
        raise ParseError(msg, token.line, token.column)


def take(tokens: list[Token], index: int, what: str) -> Token:
    """``tokens[index]`` or a parse error naming what was missing."""
    if index >= len(tokens):
        last = tokens[-1]
        msg = f"missing {what}"
        raise ParseError(msg, last.line, last.column + len(last.text))
    return tokens[index]


def check_arity(tokens: list[Token], count: int) -> None:
    """Reject trailing tokens."""
    if len(tokens) > count:
        token = tokens[count]
        msg = f"unexpected token {token.text!r}"
        raise ParseError(msg, token.line, token.column)
