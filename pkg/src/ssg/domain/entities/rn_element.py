"""Röver–Nekrashevych group element entity."""

from __future__ import annotations

from dataclasses import dataclass

from ...core.exceptions import MismatchedGroupsError, PartitionError
from ..value_objects.cone import Cone, ConePartition
from .automaton_group import AutomatonGroup
from .group_word import GroupWord


@dataclass(frozen=True)
class RNRow:
    """``α_i ψ ↦ β_i · g_i(ψ)``."""

    domain: Cone
    range: Cone
    action: GroupWord

    def __str__(self) -> str:
        return f"{self.domain} -> {self.range} act {self.action}"


@dataclass(frozen=True)
class RNElement:
    """Bijection of cone partitions decorated with local actions.

    Rows are kept sorted by domain address. There is no minimal normal
    form: two tables may describe the same homeomorphism, compare with
    ``equal_rn``.
    """

    group: AutomatonGroup
    rows: tuple[RNRow, ...]

    def __post_init__(self) -> None:
        """Sort rows and validate both partitions."""
        rows = tuple(sorted(self.rows, key=lambda row: row.domain.address))
        object.__setattr__(self, "rows", rows)

        for row in rows:
            if row.action.automaton != self.group:
                msg = f"Row {row} acts by a word of group {row.action.automaton.name}, expected {self.group.name}"
                raise MismatchedGroupsError(msg)

        domain = ConePartition(self.group.d, tuple(row.domain for row in rows))
        if not domain.is_complete:
            msg = f"Domain cones {domain} do not partition Cantor space"
            raise PartitionError(msg)
        image = ConePartition(self.group.d, tuple(row.range for row in rows))
        if not image.is_complete:
            msg = f"Range cones {image} do not partition Cantor space"
            raise PartitionError(msg)

    @property
    def d(self) -> int:
        """Alphabet size."""
        return self.group.d

    def domain_partition(self) -> ConePartition:
        """Domain cones in row order."""
        return ConePartition(self.d, tuple(row.domain for row in self.rows))

    def range_partition(self) -> ConePartition:
        """Range cones in row order."""
        return ConePartition(self.d, tuple(row.range for row in self.rows))

    def row_at(self, address: str) -> RNRow | None:
        """Row whose domain is a prefix of ``address``."""
        for row in self.rows:
            if address.startswith(row.domain.address):
                return row
        return None

    def __len__(self) -> int:
        return len(self.rows)

    def __str__(self) -> str:
        return "; ".join(str(row) for row in self.rows)
