"""Report schemas shared by the verification suites and the CLI."""

from .report import CheckResult, CheckStatus, SuiteReport

__all__ = ["CheckResult", "CheckStatus", "SuiteReport"]
