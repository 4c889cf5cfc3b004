"""Verification reports: named clauses with sorted witness lists."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Clause:
    clause: str
    witnesses: list = field(default_factory=list)
    checked: int = 0

    @property
    def status(self) -> str:
        return "pass" if not self.witnesses else "fail"

    def fail(self, witness):
        self.witnesses.append(witness)

    def to_json_obj(self) -> dict:
        return {
            "clause": self.clause,
            "status": self.status,
            "checked": self.checked,
            "witnesses": sorted(self.witnesses, key=str),
        }


@dataclass
class Report:
    suite: str
    level: int
    clauses: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def clause(self, name: str) -> Clause:
        c = Clause(name)
        self.clauses.append(c)
        return c

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.clauses)

    def first_failure(self):
        for c in self.clauses:
            if c.witnesses:
                return c.clause, sorted(c.witnesses, key=str)[0]
        return None

    def to_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "level": self.level,
            "status": "pass" if self.passed else "fail",
            "clauses": [c.to_json_obj() for c in self.clauses],
            **({"notes": self.notes} if self.notes else {}),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, indent=2, default=str) + "\n"
