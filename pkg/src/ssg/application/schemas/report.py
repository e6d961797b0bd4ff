"""Verification report models."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, Field


class CheckStatus(str, Enum):
    """Outcome of a single check."""

    PASS = "pass"
    FAIL = "fail"
    NOT_STABILIZED = "not-stabilized"
    SKIP = "skip"


class CheckResult(BaseModel):
    """One named check and what it observed."""

    check_id: str = Field(description="Dotted check identifier", examples=["stab.nesting"])
    status: CheckStatus = Field(description="Check outcome")
    detail: str = Field(default="", description="Human-readable observation")


class SuiteReport(BaseModel):
    """All checks of a suite run, sorted by id, with the summary exit code."""

    suite: str = Field(description="Suite name", examples=["oligo", "germ", "stab"])
    group: str = Field(description="Group the suite ran over")
    seed: int = Field(description="Seed used for sampling")
    cases: int = Field(ge=1, description="Cases per sampled check")
    checks: list[CheckResult] = Field(default_factory=list)
    exit_code: int = Field(default=0, description="0 all pass or skipped, 1 failure, 2 not stabilized")

    @classmethod
    def from_checks(
        cls, suite: str, group: str, seed: int, cases: int, checks: list[CheckResult]
    ) -> SuiteReport:
        """Sort checks and derive the exit code."""
        ordered = sorted(checks, key=lambda check: check.check_id)
        statuses = {check.status for check in ordered}
        if CheckStatus.FAIL in statuses:
            code = 1
        elif CheckStatus.NOT_STABILIZED in statuses:
            code = 2
        else:
            code = 0
        return cls(suite=suite, group=group, seed=seed, cases=cases, checks=ordered, exit_code=code)

    @property
    def passed(self) -> bool:
        """Every check passed."""
        return self.exit_code == 0

    def render_text(self) -> str:
        """Stable tabular rendering."""
        width = max((len(check.check_id) for check in self.checks), default=8)
        lines = [f"suite {self.suite} over {self.group} (seed={self.seed}, cases={self.cases})"]
        for check in self.checks:
            lines.append(f"  {check.check_id:<{width}}  {check.status.value:<14}  {check.detail}")
        verdict = {0: "PASS", 1: "FAIL", 2: "NOT STABILIZED"}[self.exit_code]
        lines.append(f"result: {verdict}")
        return "\n".join(lines)
