"""Cone and cone-partition value objects for clopen subsets of Cantor space."""

from __future__ import annotations

import string
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ...core.exceptions import PartitionError

EMPTY_ADDRESS = "^"


@dataclass(frozen=True, order=True)
class Cone:
    """The cone ``α𝔠_d`` of sequences with prefix ``address``."""

    address: str

    def __post_init__(self) -> None:
        """Addresses are digit strings."""
        if any(ch not in string.digits for ch in self.address):
            msg = f"Cone address must be a digit string, got {self.address!r}"
            raise PartitionError(msg)

    @classmethod
    def parse(cls, text: str) -> Cone:
        """``^`` is the empty address."""
        text = text.strip()
        return cls("" if text == EMPTY_ADDRESS else text)

    def __str__(self) -> str:
        return self.address or EMPTY_ADDRESS

    def __len__(self) -> int:
        return len(self.address)

    def contains(self, other: Cone) -> bool:
        """``other`` lies inside this cone."""
        return other.address.startswith(self.address)

    def comparable(self, other: Cone) -> bool:
        """One cone contains the other, i.e. they intersect."""
        return self.contains(other) or other.contains(self)

    def child(self, x: int) -> Cone:
        """Sub-cone one letter deeper."""
        return Cone(self.address + str(x))

    def children(self, d: int) -> list[Cone]:
        """All ``d`` sub-cones one letter deeper, in letter order."""
        return [self.child(x) for x in range(d)]

    def measure(self, d: int) -> Fraction:
        """Uniform measure ``d^-|address|``, used for Kraft sums."""
        return Fraction(1, d ** len(self.address))

    def check_letters(self, d: int) -> None:
        """Raise if a letter is ``>= d``."""
        for ch in self.address:
            if int(ch) >= d:
                msg = f"Letter {ch!r} in cone {self} out of range for alphabet size {d}"
                raise PartitionError(msg)


def as_cones(items: Iterable[Cone | str]) -> list[Cone]:
    """Accept cones or raw addresses."""
    return [item if isinstance(item, Cone) else Cone(item) for item in items]


def are_disjoint(cones: Iterable[Cone]) -> bool:
    """Pairwise prefix-incomparable."""
    return not any(a.comparable(b) for a, b in combinations(list(cones), 2))


def kraft_sum(cones: Iterable[Cone], d: int) -> Fraction:
    """Exact measure of a disjoint union of cones."""
    return sum((cone.measure(d) for cone in cones), Fraction(0))


def covers(cones: Iterable[Cone], d: int) -> bool:
    """A disjoint family covers Cantor space iff its Kraft sum is 1."""
    return kraft_sum(cones, d) == 1


@dataclass(frozen=True)
class ConePartition:
    """Ordered family of pairwise disjoint cones."""

    d: int
    cones: tuple[Cone, ...]

    def __post_init__(self) -> None:
        """Validate letters and disjointness."""
        for cone in self.cones:
            cone.check_letters(self.d)
        if not are_disjoint(self.cones):
            msg = f"Cones overlap: {[str(c) for c in self.cones]}"
            raise PartitionError(msg)

    @classmethod
    def of(cls, d: int, items: Iterable[Cone | str]) -> ConePartition:
        """Build from cones or raw addresses."""
        return cls(d, tuple(as_cones(items)))

    @property
    def is_complete(self) -> bool:
        """The union is all of Cantor space."""
        return covers(self.cones, self.d)

    def __iter__(self) -> Iterator[Cone]:
        return iter(self.cones)

    def __len__(self) -> int:
        return len(self.cones)

    def addresses(self) -> list[str]:
        """Raw addresses in stored order."""
        return [cone.address for cone in self.cones]

    def locate(self, address: str) -> Cone | None:
        """The member cone that is a prefix of ``address``, if any."""
        for cone in self.cones:
            if address.startswith(cone.address):
                return cone
        return None

    def __str__(self) -> str:
        return "{" + ", ".join(str(cone) for cone in self.cones) + "}"
