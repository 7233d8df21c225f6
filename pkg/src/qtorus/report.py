"""Verification reports: ordered lists of checked identities with witnesses."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Check:
    identity: str
    params: dict
    passed: bool
    witness: str | None = None
    informational: bool = False

    def as_dict(self) -> dict:
        out = {"identity": self.identity, "params": self.params, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.informational:
            out["informational"] = True
        return out


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def add(self, identity: str, params: dict, passed: bool, witness=None, informational=False) -> Check:
        c = Check(identity, _plain(params), bool(passed), None if witness is None else str(witness), informational)
        self.checks.append(c)
        return c

    def expect_zero(self, identity: str, params: dict, diff) -> Check:
        """Record ``diff == 0``; the witness is the full nonzero difference."""
        ok = not diff
        return self.add(identity, params, ok, None if ok else diff)

    def extend(self, other: Report):
        self.checks.extend(other.checks)
        for k, v in other.notes.items():
            self.notes[f"{other.suite}.{k}"] = v

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.informational)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed and not c.informational]

    def summary(self) -> dict:
        counted = [c for c in self.checks if not c.informational]
        return {
            "total": len(counted),
            "passed": sum(c.passed for c in counted),
            "failed": sum(not c.passed for c in counted),
            "informational": len(self.checks) - len(counted),
        }

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "summary": self.summary(),
            "notes": _plain(self.notes),
            "checks": [c.as_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)


def _plain(obj):
    """Make params JSON-friendly and deterministic (tuples -> lists, keys -> str)."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (bool, int, float)) or obj is None:
        return obj
    return str(obj)
