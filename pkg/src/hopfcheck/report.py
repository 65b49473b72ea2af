"""Structured results for axiom checks.

Every verifier in this package returns a Report: an ordered list of named
CheckResults, each either passing or carrying a witness (the basis tuple
where the identity first broke, and both evaluated sides, pretty-printed).
Reports serialize to plain dicts so the CLI can emit them as JSON.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    """Outcome of a single named identity check."""

    name: str
    passed: bool
    at: tuple | None = None  # basis labels where the first failure occurred
    lhs: str | None = None  # pretty-printed left side at the witness
    rhs: str | None = None  # pretty-printed right side at the witness
    detail: str | None = None  # free-form context (counts, dimensions, ...)
    failures: int = 0  # total number of failing basis tuples

    def to_dict(self) -> dict:
        out: dict = {"name": self.name, "passed": self.passed}
        if self.at is not None:
            out["at"] = list(self.at)
        if self.lhs is not None:
            out["lhs"] = self.lhs
        if self.rhs is not None:
            out["rhs"] = self.rhs
        if self.detail is not None:
            out["detail"] = self.detail
        if self.failures:
            out["failures"] = self.failures
        return out

    @staticmethod
    def from_dict(data: dict) -> "CheckResult":
        return CheckResult(
            name=data["name"],
            passed=data["passed"],
            at=tuple(data["at"]) if "at" in data else None,
            lhs=data.get("lhs"),
            rhs=data.get("rhs"),
            detail=data.get("detail"),
            failures=data.get("failures", 0),
        )


@dataclass
class Report:
    """An ordered collection of check results for one verification run."""

    subject: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> CheckResult | None:
        for c in self.checks:
            if not c.passed:
                return c
        return None

    def add(self, result: CheckResult) -> None:
        self.checks.append(result)

    def record(self, name: str, passed: bool, **kw) -> CheckResult:
        result = CheckResult(name=name, passed=passed, **kw)
        self.checks.append(result)
        return result

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            copied = CheckResult(
                name=prefix + c.name if prefix else c.name,
                passed=c.passed,
                at=c.at,
                lhs=c.lhs,
                rhs=c.rhs,
                detail=c.detail,
                failures=c.failures,
            )
            self.checks.append(copied)

    def require(self) -> "Report":
        """Raise CheckFailure on the first failed check; return self if clean."""
        bad = self.first_failure
        if bad is not None:
            raise CheckFailure(self, bad)
        return self

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }

    @staticmethod
    def from_dict(data: dict) -> "Report":
        rep = Report(subject=data["subject"])
        for c in data["checks"]:
            rep.add(CheckResult.from_dict(c))
        return rep

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status}  {c.name}"
            if not c.passed and c.at is not None:
                line += f"  at {c.at}"
            lines.append(line)
        return lines


class CheckFailure(Exception):
    """A verification that was required to pass did not."""

    def __init__(self, report: Report, result: CheckResult) -> None:
        self.report = report
        self.result = result
        at = f" at {result.at}" if result.at is not None else ""
        super().__init__(f"{report.subject}: check '{result.name}' failed{at}")
