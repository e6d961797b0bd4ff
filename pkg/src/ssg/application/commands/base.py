"""Command, handler and result types shared by every subcommand."""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Generic, TypeVar

TCommand = TypeVar("TCommand", bound="Command")
TResult = TypeVar("TResult")


@dataclass(frozen=True)
class Command(ABC):
    """
    Immutable request for one subcommand.

    Group and element references stay unresolved (built-in names or
    file paths) until a handler asks its resolver for them.
    """

    @abstractmethod
    def validate(self) -> None:
        """
        Check arguments that need no group to validate.

        Raises:
            ValueError: On inconsistent or out-of-range arguments
        """


class CommandHandler(ABC, Generic[TCommand, TResult]):
    """
    Runs one kind of command against the services.

    Toolkit errors are not caught here; the front end turns them into
    exit codes.
    """

    @abstractmethod
    def handle(self, command: TCommand) -> TResult:
        """
        Validate, resolve references and compute.

        Args:
            command: Request to run

        Returns:
            Rendered text plus the machine-readable document
        """


@dataclass(frozen=True)
class CommandResult:
    """Text rendering, ``--format json`` document and exit code of one run."""

    success: bool
    text: str
    data: dict[str, Any] = field(default_factory=dict)
    exit_code: int = 0

    @classmethod
    def success_result(cls, text: str, data: dict[str, Any]) -> CommandResult:
        """Result that exits 0."""
        return cls(success=True, text=text, data=data)

    @classmethod
    def failure_result(cls, text: str, data: dict[str, Any], exit_code: int = 1) -> CommandResult:
        """Result carrying a nonzero exit code, e.g. a failed suite."""
        return cls(success=False, text=text, data=data, exit_code=exit_code)

    def is_success(self) -> bool:
        """Whether the run exits 0."""
        return self.success

    def is_failure(self) -> bool:
        """Whether the run exits nonzero."""
        return not self.success
