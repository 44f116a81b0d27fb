"""Suite reports: one record per law, plus displayed-value checks for witnesses."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass
class FailureWitness:
    bindings: dict[str, str]
    lhs: str
    rhs: str
    universe: list[str]


@dataclass
class LawRecord:
    id: str
    anchor: str
    polarity: str
    mode: str
    samples: int = 0
    failures: int = 0
    nonvacuous: int | None = None
    witness: FailureWitness | None = None
    paper_discrepancy: str | None = None

    @property
    def ok(self) -> bool:
        if self.polarity == "expected-valid":
            return self.failures == 0
        return self.failures > 0

    def line(self) -> str:
        verdict = "ok" if self.ok else "FAIL"
        if self.polarity == "expected-valid":
            extra = f"{self.samples} envs, {self.failures} failures"
            if self.nonvacuous is not None:
                extra += f", {self.nonvacuous} with premise"
        else:
            extra = "refuted by stored witness" if self.ok else "NOT refuted"
        note = "  [paper_discrepancy]" if self.paper_discrepancy else ""
        return f"{verdict:4} {self.id:36} {self.mode:10} {extra}{note}"


@dataclass
class DisplayRecord:
    entry: str
    label: str
    expected: str | None
    observed: str
    ok: bool
    source: str  # "shown", "computed" or "relation"
    paper_discrepancy: str | None = None

    def line(self) -> str:
        verdict = "ok" if self.ok else "FAIL"
        note = "  [paper_discrepancy]" if self.paper_discrepancy else ""
        text = f"{verdict:4}   {self.label} = {self.observed}" if self.source != "relation" else \
            f"{verdict:4}   {self.label}"
        if not self.ok and self.expected is not None:
            text += f"   (expected {self.expected})"
        return text + note


@dataclass
class SuiteReport:
    config: dict[str, Any]
    records: list[LawRecord] = field(default_factory=list)
    displays: list[DisplayRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.records) and all(d.ok for d in self.displays)

    def failures(self) -> list[LawRecord]:
        return [r for r in self.records if not r.ok]

    def to_text(self) -> str:
        cfg = " ".join(f"{k}={v}" for k, v in self.config.items())
        lines = [f"# suite {cfg}"]
        entry = None
        for d in self.displays:
            if d.entry != entry:
                entry = d.entry
                lines.append(f"== {entry}")
            lines.append(d.line())
        for r in self.records:
            lines.append(r.line())
            if r.witness is not None and not r.ok:
                w = r.witness
                binds = ", ".join(f"{k}={v}" for k, v in sorted(w.bindings.items()))
                lines.append(f"       universe {' '.join(w.universe)}; {binds}")
                lines.append(f"       lhs = {w.lhs}")
                lines.append(f"       rhs = {w.rhs}")
        passed = sum(r.ok for r in self.records)
        shown = sum(d.ok for d in self.displays)
        summary = f"# {passed}/{len(self.records)} laws as expected"
        if self.displays:
            summary += f", {shown}/{len(self.displays)} displayed values reproduced"
        lines.append(f"{summary}: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "config": self.config,
            "verdict": "PASS" if self.ok else "FAIL",
            "laws": [asdict(r) | {"ok": r.ok} for r in self.records],
            "displays": [asdict(d) for d in self.displays],
        }
        return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
