"""Shared pass/fail report records used by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "PASS"
FAIL = "FAIL"
UNDECIDED = "UNDECIDED"

MAX_WITNESSES = 10


@dataclass
class Check:
    """One verified relation family: counts plus the first few witnesses."""

    suite: str
    status: str
    checked: int
    failed: int
    escaped: int = 0
    witnesses: list = field(default_factory=list)

    def line(self):
        parts = [
            "RESULT",
            self.status,
            self.suite,
            f"checked={self.checked}",
            f"failed={self.failed}",
        ]
        if self.escaped:
            parts.append(f"escaped={self.escaped}")
        parts.extend(self.witnesses[:MAX_WITNESSES])
        return " ".join(parts)


@dataclass
class Report:
    checks: list = field(default_factory=list)

    def add(self, suite, checked, witnesses, escaped=0, undecided=False):
        witnesses = list(witnesses)
        if undecided:
            status = UNDECIDED
        else:
            status = FAIL if witnesses else PASS
        self.checks.append(
            Check(suite, status, checked, len(witnesses), escaped, witnesses)
        )

    def extend(self, other):
        self.checks.extend(other.checks)

    @property
    def ok(self):
        return all(c.status == PASS for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

    def lines(self):
        return [c.line() for c in sorted(self.checks, key=lambda c: c.suite)]

    def __str__(self):
        return "\n".join(self.lines())
