"""
Check reports shared by the validators and the certificate verifier.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class CheckResult(BaseModel):
    """Outcome of a single named check."""

    name: str = Field(description="Check name")
    passed: bool = Field(description="Whether the check passed")
    detail: Optional[str] = Field(default=None, description="Witness or explanation")


class Report(BaseModel):
    """Ordered list of check outcomes about one subject."""

    subject: str = Field(description="What was checked")
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: Optional[str] = None) -> None:
        self.checks.append(CheckResult(name=name, passed=passed, detail=detail))

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def get(self, name: str) -> Optional[CheckResult]:
        return next((c for c in self.checks if c.name == name), None)

    def as_dict(self) -> Dict[str, bool]:
        return {c.name: c.passed for c in self.checks}

    def summary(self) -> str:
        lines = [f"{self.subject}: {'ok' if self.ok else 'FAILED'}"]
        for c in self.checks:
            mark = "pass" if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name}" + (f" - {c.detail}" if c.detail else ""))
        return "\n".join(lines)
