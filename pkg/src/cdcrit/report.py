"""Run reports: one line per check, timings kept in a separate trailing block."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field

VERDICTS = ("pass", "fail", "skipped")
TIMINGS_MARKER = "# --- timings (excluded from comparisons) ---"


@dataclass
class Check:
    name: str
    verdict: str
    details: dict[str, object] = field(default_factory=dict)
    reason: str = ""

    def __post_init__(self) -> None:
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if not self.name or any(ch.isspace() for ch in self.name):
            raise ValueError(f"check name must be a single token: {self.name!r}")

    def line(self) -> str:
        parts = [f"CHECK {self.name} {self.verdict}"]
        parts.extend(f"{k}={_fmt(v)}" for k, v in self.details.items())
        if self.reason:
            parts.append(f"reason={self.reason!r}")
        return " ".join(parts)

    def record(self) -> dict[str, object]:
        rec: dict[str, object] = {"check": self.name, "verdict": self.verdict}
        rec["details"] = {k: _jsonable(v) for k, v in self.details.items()}
        if self.reason:
            rec["reason"] = self.reason
        return rec


def _fmt(value: object) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (tuple, list)):
        return "[" + ",".join(_fmt(v) for v in value) + "]"
    return str(value)


def _jsonable(value: object) -> object:
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    return value


@dataclass
class RunReport:
    command: str
    checks: list[Check] = field(default_factory=list)
    timings: list[tuple[str, float]] = field(default_factory=list)

    def add(self, name: str, verdict: str, reason: str = "", **details: object) -> Check:
        check = Check(name, verdict, dict(details), reason)
        self.checks.append(check)
        return check

    def expect(self, name: str, ok: bool, reason: str = "", **details: object) -> Check:
        return self.add(name, "pass" if ok else "fail", "" if ok else reason, **details)

    @contextmanager
    def timed(self, label: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timings.append((label, time.perf_counter() - start))

    def extend(self, other: RunReport) -> None:
        self.checks.extend(other.checks)
        self.timings.extend(other.timings)

    @property
    def failed(self) -> list[Check]:
        return [c for c in self.checks if c.verdict == "fail"]

    @property
    def passed(self) -> list[Check]:
        return [c for c in self.checks if c.verdict == "pass"]

    def assertion_exit_code(self) -> int:
        """0 iff nothing failed and at least one check passed."""
        return 0 if not self.failed and self.passed else 1

    def render(self, fmt: str = "text", timings: bool = True) -> str:
        if fmt == "structured":
            lines = [json.dumps({"command": self.command}, sort_keys=True)]
            lines.extend(json.dumps(c.record(), sort_keys=True) for c in self.checks)
        else:
            lines = [f"# {self.command}"]
            lines.extend(c.line() for c in self.checks)
            lines.append(
                f"SUMMARY pass={len(self.passed)} fail={len(self.failed)} "
                f"skipped={len(self.checks) - len(self.passed) - len(self.failed)}"
            )
        if timings and self.timings:
            lines.append(TIMINGS_MARKER)
            lines.extend(f"TIME {label} {secs:.3f}s" for label, secs in self.timings)
        return "\n".join(lines) + "\n"


def strip_timings(text: str) -> str:
    head, _, _ = text.partition(TIMINGS_MARKER)
    return head
