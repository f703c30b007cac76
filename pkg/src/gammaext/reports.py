"""Verdict records produced by the law checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable

PASS = "pass"
FAIL = "fail"
UNMET = "precondition-unmet"
VERDICTS = (PASS, FAIL, UNMET)


@dataclass(frozen=True)
class LawReport:
    law_id: str
    instance: str
    verdict: str
    counterexample: Any = None
    notes: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict == FAIL and self.counterexample is None:
            raise ValueError("a failing report needs a counterexample")

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_line(self) -> str:
        cex = "-" if self.counterexample is None else json.dumps(self.counterexample, sort_keys=True)
        return "\t".join((self.law_id, self.instance, self.verdict, cex))

    def to_dict(self) -> dict:
        return {
            "law_id": self.law_id,
            "instance": self.instance,
            "verdict": self.verdict,
            "counterexample": self.counterexample,
        }


def summarize(reports: Iterable[LawReport]) -> dict[str, int]:
    counts = {v: 0 for v in VERDICTS}
    for r in reports:
        counts[r.verdict] += 1
    return counts
