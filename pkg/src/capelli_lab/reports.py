"""Uniform result records for the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    check: str
    irrep: str
    status: str  # pass | fail | measured | skipped
    detail: str = ""

    def to_dict(self) -> dict:
        return {"check": self.check, "irrep": self.irrep, "status": self.status, "detail": self.detail}


@dataclass
class Report:
    results: list[CheckResult] = field(default_factory=list)

    def add(self, check, irrep, ok, detail="") -> CheckResult:
        result = CheckResult(check, irrep, "pass" if ok else "fail", detail)
        self.results.append(result)
        return result

    def measure(self, check, irrep, detail) -> CheckResult:
        result = CheckResult(check, irrep, "measured", detail)
        self.results.append(result)
        return result

    def extend(self, other: "Report") -> "Report":
        self.results.extend(other.results)
        return self

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == "fail"]

    def __str__(self):
        lines = [f"[{r.status:>8}] {r.check} ({r.irrep})" + (f": {r.detail}" if r.detail else "") for r in self.results]
        return "\n".join(lines)
