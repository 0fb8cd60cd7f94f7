"""Structured pass/fail reports shared by all verification routines."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

STATUSES = ("pass", "fail", "recorded", "unsupported")


@dataclass
class Check:
    name: str
    status: str
    mode: str = "symbolic"
    witness: Any = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status in ("pass", "recorded")

    def to_json(self) -> dict:
        return {"name": self.name, "mode": self.mode, "status": self.status,
                "witness": self.witness}


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool | None, mode: str = "symbolic", witness=None,
            status: str | None = None) -> Check:
        if status is None:
            status = "pass" if passed else "fail"
        chk = Check(name, status, mode, witness)
        self.checks.append(chk)
        return chk

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.mode, c.witness))
        return self

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"title": self.title, "checks": [c.to_json() for c in self.checks]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def summary(self) -> str:
        lines = [self.title]
        for c in self.checks:
            lines.append(f"  [{c.status:>10}] {c.name} ({c.mode})")
        return "\n".join(lines)
