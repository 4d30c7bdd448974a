"""Verification reports shared by the module verifiers and the suite runner."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class SuiteReport:
    """Outcome of one verification run.

    ``failures`` holds JSON-ready witness records; the run passed exactly
    when it is empty. ``seed`` is recorded whenever the run drew samples.
    """

    suite: str
    params: dict = field(default_factory=dict)
    checked: int = 0
    failures: list = field(default_factory=list)
    elapsed_ms: float = 0.0
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "checked": self.checked,
            "status": "pass" if self.passed else "fail",
            "failures": self.failures,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "seed": self.seed,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{self.suite}: {status} checked={self.checked} elapsed={self.elapsed_ms:.0f}ms"
