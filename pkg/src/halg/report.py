"""Uniform pass/fail reporting for axiom and theorem checks.

A Report is a list of named check results.  A check that finds violations
records a bounded number of witnesses (which basis element or pair broke,
and how); "empty" means no failures.
"""

from __future__ import annotations

from dataclasses import dataclass, field

MAX_WITNESSES = 8


@dataclass
class CheckResult:
    check_id: str
    status: str  # "pass" | "fail" | "skip"
    witnesses: list[str] = field(default_factory=list)
    note: str = ""

    def describe(self) -> str:
        head = "%s: %s" % (self.check_id, self.status)
        if self.note:
            head += " (%s)" % self.note
        for w in self.witnesses:
            head += "\n  witness: %s" % w
        return head


@dataclass
class Report:
    title: str = ""
    checks: list[CheckResult] = field(default_factory=list)

    def add_pass(self, check_id: str, note: str = "") -> None:
        self.checks.append(CheckResult(check_id, "pass", note=note))

    def add_fail(self, check_id: str, witnesses, note: str = "") -> None:
        ws = [str(w) for w in witnesses][:MAX_WITNESSES]
        self.checks.append(CheckResult(check_id, "fail", witnesses=ws, note=note))

    def add_skip(self, check_id: str, reason: str) -> None:
        self.checks.append(CheckResult(check_id, "skip", note=reason))

    def record(self, check_id: str, witnesses, note: str = "") -> None:
        """Pass when the witness list is empty, fail otherwise."""
        ws = list(witnesses)
        if ws:
            self.add_fail(check_id, ws, note=note)
        else:
            self.add_pass(check_id, note=note)

    def extend(self, other: "Report", tag: str = "") -> None:
        """Append another report's entries, optionally tagging their ids."""
        if not tag:
            self.checks.extend(other.checks)
            return
        for c in other.checks:
            self.checks.append(CheckResult("%s[%s]" % (c.check_id, tag),
                                           c.status, list(c.witnesses), c.note))

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def ok(self) -> bool:
        """True when no check failed (an 'empty report' in contract terms)."""
        return not self.failures

    def failed_ids(self) -> list[str]:
        return [c.check_id for c in self.failures]

    def describe(self) -> str:
        lines = []
        if self.title:
            lines.append(self.title)
        for c in self.checks:
            lines.append(c.describe())
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [
                {
                    "id": c.check_id,
                    "status": c.status,
                    "witnesses": list(c.witnesses),
                    "note": c.note,
                }
                for c in self.checks
            ],
        }
