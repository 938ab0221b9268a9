"""Resumable JSONL cache of classification results.

One JSON object per line, UTF-8, LF.  Appends are atomic enough under the
single-writer rule the sweep runner follows; on replay the last record for
an (n, m) pair wins, and records written by a different tool version are
ignored.
"""

import json
from dataclasses import asdict, dataclass
from pathlib import Path

from ducci.closure import HClosureReport
from ducci.core import RingParams


@dataclass(frozen=True)
class CacheRecord:
    n: int
    m: int
    L: int
    P: int
    classification: str
    alpha: int | None
    betas_raw: list
    beta_canonical: int | None
    gamma: int | None
    anomalies: list
    steps: int
    wall_ms: int
    tool_version: str


def record_from_report(report: HClosureReport, wall_ms: int,
                       tool_version: str) -> CacheRecord:
    return CacheRecord(
        n=report.params.n, m=report.params.m, L=report.L, P=report.P,
        classification=report.classification, alpha=report.alpha,
        betas_raw=list(report.betas_raw),
        beta_canonical=report.beta_canonical, gamma=report.gamma,
        anomalies=list(report.anomalies), steps=report.steps,
        wall_ms=wall_ms, tool_version=tool_version)


def report_from_record(rec: CacheRecord) -> HClosureReport:
    return HClosureReport(
        params=RingParams(rec.n, rec.m), L=rec.L, P=rec.P,
        classification=rec.classification, alpha=rec.alpha,
        betas_raw=tuple(rec.betas_raw), beta_canonical=rec.beta_canonical,
        gamma=rec.gamma, anomalies=tuple(rec.anomalies), steps=rec.steps)


def load_cache(path, tool_version: str) -> dict[tuple[int, int], CacheRecord]:
    """Replay a cache file; skips malformed lines and foreign tool versions."""
    out: dict[tuple[int, int], CacheRecord] = {}
    p = Path(path)
    if not p.exists():
        return out
    with p.open("r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
                rec = CacheRecord(**obj)
            except (json.JSONDecodeError, TypeError):
                continue
            if rec.tool_version != tool_version:
                continue
            out[(rec.n, rec.m)] = rec
    return out


def append_record(path, rec: CacheRecord) -> None:
    with Path(path).open("a", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps(asdict(rec), separators=(",", ":")) + "\n")
