"""Rational point value object: an eventually periodic sequence αβ̄."""

from __future__ import annotations

import re
import string
from dataclasses import dataclass
from typing import TYPE_CHECKING

from ...core.exceptions import InvalidPointError

if TYPE_CHECKING:
    from .cone import Cone

_POINT_PATTERN = re.compile(r"^\s*([0-9]*)\(([0-9]+)\)\s*$")


def primitive_root(word: str) -> str:
    """Shortest ``r`` with ``word == r * k``."""
    n = len(word)
    for p in range(1, n + 1):
        if n % p == 0 and word[:p] * (n // p) == word:
            return word[:p]
    return word


@dataclass(frozen=True)
class RationalPoint:
    """Eventually periodic point of Cantor space, always stored canonically.

    Canonical means the period is primitive and the preperiod is as short
    as possible (its last letter differs from the period's last letter).
    Build instances through :meth:`canonicalize` or :meth:`parse`.
    """

    d: int
    preperiod: str
    period: str

    def __post_init__(self) -> None:
        """Validate canonical form and letters."""
        if not self.period:
            msg = "Rational point needs a nonempty period"
            raise InvalidPointError(msg)
        for ch in self.preperiod + self.period:
            if ch not in string.digits or int(ch) >= self.d:
                msg = f"Letter {ch!r} out of range for alphabet size {self.d}"
                raise InvalidPointError(msg)
        if primitive_root(self.period) != self.period:
            msg = f"Period {self.period!r} is a power of a shorter word"
            raise InvalidPointError(msg)
        if self.preperiod and self.preperiod[-1] == self.period[-1]:
            msg = f"Preperiod {self.preperiod!r} can be absorbed into the period"
            raise InvalidPointError(msg)

    @classmethod
    def canonicalize(cls, d: int, alpha: str, beta: str) -> RationalPoint:
        """Canonical representation of ``alpha beta beta ...``."""
        if not beta:
            msg = "Rational point needs a nonempty period"
            raise InvalidPointError(msg)
        beta = primitive_root(beta)
        while alpha and alpha[-1] == beta[-1]:
            alpha = alpha[:-1]
            beta = beta[-1] + beta[:-1]
        return cls(d, alpha, beta)

    @classmethod
    def parse(cls, d: int, text: str) -> RationalPoint:
        """Parse ``alpha(beta)`` syntax, e.g. ``0(01)`` or ``(1)``."""
        match = _POINT_PATTERN.match(text)
        if match is None:
            msg = f"Malformed rational point {text!r}; expected alpha(beta)"
            raise InvalidPointError(msg)
        return cls.canonicalize(d, match.group(1), match.group(2))

    def __str__(self) -> str:
        return f"{self.preperiod}({self.period})"

    def prefix(self, n: int) -> str:
        """First ``n`` letters of the expansion."""
        if n <= len(self.preperiod):
            return self.preperiod[:n]
        rest = n - len(self.preperiod)
        reps = rest // len(self.period) + 1
        return (self.preperiod + self.period * reps)[:n]

    def shift(self, n: int) -> RationalPoint:
        """The point with its first ``n`` letters removed."""
        if n <= len(self.preperiod):
            return RationalPoint.canonicalize(self.d, self.preperiod[n:], self.period)
        k = (n - len(self.preperiod)) % len(self.period)
        return RationalPoint.canonicalize(
            self.d, "", self.period[k:] + self.period[:k]
        )

    def adjusted_preperiod(self) -> str:
        """Preperiod made nonempty by absorbing one period copy if needed."""
        return self.preperiod or self.period

    def in_cone(self, cone: Cone) -> bool:
        """Prefix test against the expansion."""
        return self.prefix(len(cone.address)) == cone.address

    def tail(self, cone: Cone) -> RationalPoint:
        """Canonical suffix after the cone address; the point must lie in the cone."""
        if not self.in_cone(cone):
            msg = f"Point {self} does not lie in cone {cone}"
            raise InvalidPointError(msg)
        return self.shift(len(cone.address))


def point_in_cone(p: RationalPoint, c: Cone) -> bool:
    """Membership of a rational point in a cone."""
    return p.in_cone(c)


def tail(p: RationalPoint, c: Cone) -> RationalPoint:
    """Suffix of ``p`` after ``c``'s address."""
    return p.tail(c)
