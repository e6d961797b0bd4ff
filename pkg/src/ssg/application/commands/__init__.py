"""Command objects and handlers for the CLI."""

from .base import Command, CommandHandler, CommandResult
from .ssg_commands import (
    EvaluateCommand,
    EvaluateCommandHandler,
    GermCommand,
    GermCommandHandler,
    NucleusCommand,
    NucleusCommandHandler,
    PhiCommand,
    PhiCommandHandler,
    Resolver,
    TransportCommand,
    TransportCommandHandler,
    VerifyCommand,
    VerifyCommandHandler,
    WordProblemCommand,
    WordProblemCommandHandler,
)

__all__ = [
    "Command",
    "CommandHandler",
    "CommandResult",
    "EvaluateCommand",
    "EvaluateCommandHandler",
    "GermCommand",
    "GermCommandHandler",
    "NucleusCommand",
    "NucleusCommandHandler",
    "PhiCommand",
    "PhiCommandHandler",
    "Resolver",
    "TransportCommand",
    "TransportCommandHandler",
    "VerifyCommand",
    "VerifyCommandHandler",
    "WordProblemCommand",
    "WordProblemCommandHandler",
]
