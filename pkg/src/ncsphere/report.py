"""Structured verification results."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

STATUSES = ("pass", "fail", "inconclusive")


@dataclass
class Report:
    check: str
    params: dict
    status: str
    dims: dict | None = None
    counterexample: str | None = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        out = {"check": self.check, "params": self.params, "status": self.status}
        if self.dims is not None:
            out["dims"] = self.dims
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        out.update(self.extra)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def summary(self) -> str:
        line = f"{self.check}: {self.status.upper()}"
        if self.dims:
            line += " " + " ".join(f"{k}={v}" for k, v in self.dims.items())
        for k, v in self.extra.items():
            line += f" {k}={v}"
        if self.counterexample:
            line += f" counterexample: {self.counterexample}"
        return line
