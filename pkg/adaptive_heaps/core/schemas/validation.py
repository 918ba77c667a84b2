from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class Violation(BaseModel):
    """A single broken invariant"""
    rule: str = Field(..., description="Short name of the invariant, e.g. child-degree")
    message: str = Field(..., description="Human readable description")
    path: List[int] = Field(default_factory=list, description="Keys from the root down to the offending node")


class ValidationReport(BaseModel):
    """Result of a validator run. Violations are data, never exceptions."""
    check: str = Field(..., description="Validator that produced this report")
    passed: bool = True
    violations: List[Violation] = Field(default_factory=list)
    observations: Dict[str, Any] = Field(default_factory=dict, description="Measured values, e.g. max degree")

    def fail(self, rule: str, message: str, path: Optional[List[int]] = None) -> None:
        self.passed = False
        self.violations.append(Violation(rule=rule, message=message, path=list(path or [])))

    @property
    def first_violation(self) -> Optional[Violation]:
        return self.violations[0] if self.violations else None

    def merge(self, other: "ValidationReport") -> "ValidationReport":
        self.passed = self.passed and other.passed
        self.violations.extend(other.violations)
        self.observations.update(other.observations)
        return self

    def __bool__(self) -> bool:
        return self.passed

    def summary(self) -> str:
        if self.passed:
            return f"{self.check}: pass"
        v = self.violations[0]
        where = "/".join(str(k) for k in v.path)
        return f"{self.check}: FAIL [{v.rule}] {v.message}" + (f" at {where}" if where else "")
