"""Uniform result record for every checker."""
from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
BUDGET = "budget"
INADMISSIBLE = "inadmissible"


@dataclass
class Verdict:
    name: str
    status: str
    witness: object = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def __bool__(self):
        return self.passed

    @classmethod
    def ok(cls, name: str, **details) -> "Verdict":
        return cls(name, PASS, None, details)

    @classmethod
    def fail(cls, name: str, witness=None, **details) -> "Verdict":
        return cls(name, FAIL, witness, details)

    @classmethod
    def check(cls, name: str, ok: bool, witness=None, **details) -> "Verdict":
        return cls(name, PASS if ok else FAIL, None if ok else witness, details)


def all_passed(verdicts) -> bool:
    return all(v.passed for v in verdicts)
