"""Report data model and the two emitters (human text, canonical JSON)."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

PASS = "PASS"
FAIL = "FAIL"
TRUNCATED = "TRUNCATED"
NOT_EVALUATED = "NOT-EVALUATED"

_ORDER = {PASS: 0, FAIL: 1, TRUNCATED: 2, NOT_EVALUATED: 3}


@dataclass
class ReportEntry:
    suite: str
    check: str
    anchor: str
    status: str
    witness: str | None = None
    ms: int = 0

    def __post_init__(self):
        if self.status == FAIL and self.witness is None:
            raise ValueError("FAIL entries must carry a witness")


def combine(suite, check, anchor, failures, truncated=0, total=None, ms=0):
    """Fold per-element outcomes into one entry.

    failures is a list of witness strings (empty means no failure); truncated
    counts boundary elements that could not be evaluated inside the window.
    """
    if failures:
        w = failures[0]
        if total is not None:
            w = "%s  [%d/%d failed]" % (w, len(failures), total)
        return ReportEntry(suite, check, anchor, FAIL, w)
    if truncated:
        w = "%d element(s) beyond the degree window" % truncated
        return ReportEntry(suite, check, anchor, TRUNCATED, w)
    return ReportEntry(suite, check, anchor, PASS)


@dataclass
class Report:
    version: str
    config: dict
    timestamp: str | None
    entries: list[ReportEntry] = field(default_factory=list)

    def extend(self, entries):
        self.entries.extend(entries)

    def summary(self) -> dict:
        out = {PASS: 0, FAIL: 0, TRUNCATED: 0, NOT_EVALUATED: 0}
        for e in self.entries:
            out[e.status] += 1
        return out

    @property
    def failed(self) -> bool:
        return any(e.status == FAIL for e in self.entries)


def emit_text(report: Report) -> str:
    lines = []
    lines.append("qpb %s" % report.version)
    if report.timestamp:
        lines.append("run at %s" % report.timestamp)
    for k in sorted(report.config):
        lines.append("config %s = %s" % (k, report.config[k]))
    lines.append("")
    width = max((len(e.status) for e in report.entries), default=4)
    for e in report.entries:
        lines.append("%-*s  %s/%s  [%s]  (%d ms)"
                     % (width, e.status, e.suite, e.check, e.anchor, e.ms))
        if e.witness:
            lines.append("    %s" % e.witness)
    lines.append("")
    s = report.summary()
    lines.append("summary: %d PASS, %d FAIL, %d TRUNCATED, %d NOT-EVALUATED"
                 % (s[PASS], s[FAIL], s[TRUNCATED], s[NOT_EVALUATED]))
    return "\n".join(lines) + "\n"


def emit_structured(report: Report) -> bytes:
    """Canonical JSON: identical configs give byte-identical output.

    Wall-clock fields (timestamp, per-entry ms) are pinned to constants so
    the serialization is diffable across runs.
    """
    doc = {
        "header": {
            "version": report.version,
            "config": {k: report.config[k] for k in sorted(report.config)},
            "timestamp": None,
        },
        "entries": [
            {
                "suite": e.suite,
                "check": e.check,
                "anchor": e.anchor,
                "status": e.status,
                "witness": e.witness,
                "ms": 0,
            }
            for e in report.entries
        ],
        "summary": report.summary(),
    }
    return (json.dumps(doc, sort_keys=True, separators=(",", ":"),
                       ensure_ascii=False) + "\n").encode("utf-8")


def now_stamp() -> str:
    return time.strftime("%Y-%m-%dT%H:%M:%S", time.gmtime())
