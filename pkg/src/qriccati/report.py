"""Verification reports and their JSON, CSV and plain-text renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class SampleResult:
    q: float
    x: float
    params: dict
    residual: Optional[float]  # None when evaluation raised
    terms: Optional[int] = None  # sum mode only
    tail: Optional[float] = None  # scale-normalized tail bound, sum mode only
    error: Optional[str] = None

    def to_dict(self) -> dict:
        d = {"q": self.q, "x": self.x, "params": self.params, "residual": self.residual}
        if self.terms is not None:
            d["terms"] = self.terms
            d["tail"] = self.tail
        if self.error is not None:
            d["error"] = self.error
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SampleResult":
        return cls(d["q"], d["x"], d["params"], d["residual"], d.get("terms"), d.get("tail"), d.get("error"))


@dataclass(frozen=True)
class CaseReport:
    id: str
    label: str
    mode: str
    params: dict
    samples: list
    max_residual: float
    passed: bool
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "label": self.label,
            "mode": self.mode,
            "params": self.params,
            "samples": [s.to_dict() for s in self.samples],
            "max_residual": self.max_residual,
            "pass": self.passed,
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CaseReport":
        return cls(
            d["id"], d["label"], d["mode"], d["params"], [SampleResult.from_dict(s) for s in d["samples"]],
            d["max_residual"], d["pass"], list(d["notes"]),
        )


@dataclass(frozen=True)
class SuiteReport:
    config: dict
    cases: list
    summary: dict

    @classmethod
    def from_cases(cls, cases: list, config: dict) -> "SuiteReport":
        cases = sorted(cases, key=lambda c: c.id)
        passed = sum(c.passed for c in cases)
        summary = {
            "cases": len(cases),
            "passed": passed,
            "failed": len(cases) - passed,
            "samples": sum(len(c.samples) for c in cases),
        }
        return cls(dict(config), cases, summary)

    @property
    def failing(self) -> list:
        return [c.id for c in self.cases if not c.passed]

    @property
    def all_passed(self) -> bool:
        return not self.failing

    def to_dict(self) -> dict:
        return {"config": self.config, "cases": [c.to_dict() for c in self.cases], "summary": self.summary}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SuiteReport":
        d = json.loads(text)
        return cls(d["config"], [CaseReport.from_dict(c) for c in d["cases"]], d["summary"])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "mode", "pass", "q", "x", "params", "residual", "terms", "tail", "error"])
        for c in self.cases:
            for s in c.samples:
                w.writerow([
                    c.id, c.mode, c.passed, repr(s.q), repr(s.x), json.dumps(s.params, sort_keys=True),
                    "" if s.residual is None else repr(s.residual),
                    "" if s.terms is None else s.terms,
                    "" if s.tail is None else repr(s.tail),
                    s.error or "",
                ])
        return buf.getvalue()

    def to_human(self) -> str:
        lines = []
        for c in self.cases:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"{status}  {c.id:<16} {c.mode:<18} n={len(c.samples):<4} max residual {c.max_residual:.3e}")
            for note in c.notes:
                lines.append(f"      {note}")
        s = self.summary
        lines.append(f"{s['passed']}/{s['cases']} cases passed ({s['samples']} samples)")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        return self.to_human()
