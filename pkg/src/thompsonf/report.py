"""Pass/fail reports produced by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool) -> None:
        self.checks.append(Check(name, passed))

    def merge(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> list[Check]:
        return [check for check in self.checks if not check.passed]

    def lines(self) -> list[str]:
        out = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}" for c in self.checks]
        verdict = "all passed" if self.passed else f"{len(self.failures())} FAILED"
        out.append(f"{self.title}: {len(self.checks)} checks, {verdict}")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())
