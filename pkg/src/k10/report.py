"""Check reports shared by every verification routine and the CLI."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Detail:
    item: str
    expected: Any
    actual: Any
    ok: bool

    def to_json(self) -> dict:
        return {"item": self.item, "expected": _plain(self.expected),
                "actual": _plain(self.actual), "ok": self.ok}


@dataclass
class Report:
    """Outcome of one named check; ``status`` is pass iff no detail failed."""

    check_name: str
    details: list[Detail] = field(default_factory=list)
    elapsed_ms: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if all(d.ok for d in self.details) else "fail"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def __bool__(self) -> bool:
        return self.passed

    def record(self, item: str, expected: Any, actual: Any, ok: bool | None = None) -> bool:
        if ok is None:
            ok = expected == actual
        self.details.append(Detail(item, expected, actual, bool(ok)))
        return bool(ok)

    def failures(self) -> list[Detail]:
        return [d for d in self.details if not d.ok]

    def merge(self, other: "Report", prefix: str = "") -> None:
        for d in other.details:
            self.details.append(Detail(prefix + d.item, d.expected, d.actual, d.ok))
        self.notes.extend(other.notes)

    @contextmanager
    def timed(self):
        start = time.perf_counter()
        try:
            yield self
        finally:
            self.elapsed_ms = (time.perf_counter() - start) * 1000.0

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "check_name": self.check_name,
            "status": self.status,
            "details": [d.to_json() for d in self.details],
        }
        if self.notes:
            out["notes"] = list(self.notes)
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    def summary_line(self) -> str:
        n = len(self.details)
        bad = len(self.failures())
        tail = f"{n} checks" if not bad else f"{bad}/{n} failed"
        return f"[{self.status.upper()}] {self.check_name}: {tail}"


def _plain(x: Any) -> Any:
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return str(x)
