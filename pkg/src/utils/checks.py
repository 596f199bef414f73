"""
Check Reports

검증 함수들이 공통으로 반환하는 통과/실패 보고서
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass(frozen=True)
class CheckResult:
    """개별 공리/항등식 검증 결과"""
    name: str
    passed: bool
    witness: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "witness": self.witness}


@dataclass
class CheckReport:
    """검증 보고서 (실패는 예외가 아니라 보고서 내용)"""
    subject: str
    results: List[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: Optional[str] = None) -> None:
        self.results.append(CheckResult(name, passed, None if passed else witness))

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def result(self, name: str) -> CheckResult:
        for item in self.results:
            if item.name == name:
                return item
        raise KeyError(name)

    def first_failure(self) -> Optional[CheckResult]:
        return next((item for item in self.results if not item.passed), None)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "results": [item.to_dict() for item in self.results],
        }
