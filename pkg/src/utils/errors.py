"""
Error Types

엔진 전체에서 사용하는 예외 계층
"""

from typing import Any, Dict, List, Optional


class G2AcmsError(Exception):
    """모든 엔진 예외의 기반 클래스"""


class AlgebraError(G2AcmsError):
    """차수 초과, 인자 개수 불일치 등 다중선형대수 오류"""


class NonUnitVectorError(G2AcmsError):
    """단위 벡터가 아닌 ξ"""

    def __init__(self, norm2: Any):
        self.norm2 = norm2
        super().__init__(f"ξ는 단위 벡터여야 합니다: g(ξ,ξ) = {norm2}")


class SpecValidationError(G2AcmsError):
    """매니폴드 명세 검증 실패 (위치와 반례 포함)"""

    def __init__(self, message: str, location: Optional[str] = None, witness: Optional[str] = None):
        self.location = location
        self.witness = witness
        parts = [message]
        if location:
            parts.append(f"위치: {location}")
        if witness:
            parts.append(f"반례: {witness}")
        super().__init__(" | ".join(parts))


class InternalConsistencyError(G2AcmsError):
    """정리 감사(audit)가 분류 결과와 모순됨 (구현 버그)"""

    def __init__(self, failures: List[str], reproduction: Optional[Dict[str, Any]] = None):
        self.failures = failures
        self.reproduction = reproduction or {}
        detail = "; ".join(failures)
        if self.reproduction:
            detail += f" | 재현 정보: {self.reproduction}"
        super().__init__(f"내부 일관성 위반: {detail}")
