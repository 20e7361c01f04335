"""Per-check verdicts and their JSON / table renderings."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

SCHEMA = "hs-report/1"

PASS, FAIL, SKIP, INFO = "pass", "fail", "skip", "info"
ARITHMETIC = "arithmetic identity"
ON_GRAPH = "checked on candidate graph"


@dataclass
class ReportEntry:
    lemma: str
    params: Dict[str, Any]
    verdict: str
    evidence: str
    detail: str = ""
    witness: Optional[Any] = None
    ms: Optional[float] = None

    @property
    def ok(self) -> bool:
        return self.verdict != FAIL

    def to_json(self, timings: bool = False) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "lemma": self.lemma,
            "params": self.params,
            "verdict": self.verdict,
            "evidence": self.evidence,
            "detail": self.detail,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if timings and self.ms is not None:
            out["ms"] = round(self.ms, 3)
        return out


@dataclass
class VerificationReport:
    t: int
    candidate: str
    entries: List[ReportEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)

    def failures(self) -> List[ReportEntry]:
        return [e for e in self.entries if not e.ok]

    def entry(self, lemma: str) -> ReportEntry:
        for e in self.entries:
            if e.lemma == lemma:
                return e
        raise KeyError(lemma)

    def to_json(self, timings: bool = False) -> Dict[str, Any]:
        return {
            "schema": SCHEMA,
            "t": self.t,
            "candidate": self.candidate,
            "passed": self.passed,
            "entries": [e.to_json(timings) for e in self.entries],
        }

    def dumps(self, timings: bool = False) -> str:
        return json.dumps(self.to_json(timings), indent=2, sort_keys=False) + "\n"

    def table(self, timings: bool = False) -> str:
        width = max([len(e.lemma) for e in self.entries] + [5])
        lines = [f"t={self.t} candidate={self.candidate}"]
        for e in self.entries:
            row = f"{e.verdict.upper():4}  {e.lemma:<{width}}  {e.detail}"
            if timings and e.ms is not None:
                row += f"  [{e.ms:.0f} ms]"
            lines.append(row.rstrip())
        total = len(self.entries)
        failed = len(self.failures())
        lines.append(f"{total - failed}/{total} entries without failure")
        return "\n".join(lines) + "\n"
