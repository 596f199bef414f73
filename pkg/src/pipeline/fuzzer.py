"""
Property Fuzzer

시드 고정 유리수 단위 벡터 ξ를 뽑아 분석과 정리 감사를 반복 실행
"""

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from ..acms.basis import rational_unit_vector
from ..exterior.forms import DIM, format_vector
from ..exterior.scalar import random_rational
from ..utils.config import config
from ..utils.errors import InternalConsistencyError
from ..utils.logger import LoggerMixin
from .analyzer import ManifoldAnalyzer
from .spec_loader import Manifold

# trial RNG 시드 = seed·SEED_STRIDE + t
SEED_STRIDE = 1000003


def trial_rng(seed: int, trial: int) -> random.Random:
    """시행마다 독립적인 난수 생성기 (평가 순서와 무관)"""
    return random.Random(seed * SEED_STRIDE + trial)


def draw_u(seed: int, trial: int, bound: Optional[int] = None) -> List:
    bound = bound or config.numerics.fuzz_bound
    rng = trial_rng(seed, trial)
    return [random_rational(rng, bound) for _ in range(DIM - 1)]


@dataclass
class FuzzSummary:
    """
    Attributes:
        trials: 시행 횟수
        passed: 감사를 통과한 시행 수
        trivial: α = 0 인 시행 수
        items: 감사 항목 → {"applicable", "passed"} 횟수
        xis: 시행별 ξ 표기
    """
    manifold: str
    trials: int
    seed: int
    passed: int = 0
    trivial: int = 0
    items: Dict[str, Dict[str, int]] = field(default_factory=dict)
    xis: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "manifold": self.manifold,
            "trials": self.trials,
            "seed": self.seed,
            "passed": self.passed,
            "trivial": self.trivial,
            "items": self.items,
            "xis": self.xis,
        }


class PropertyFuzzer(LoggerMixin):
    """속성 퍼징 클래스"""

    def __init__(self, analyzer: Optional[ManifoldAnalyzer] = None):
        self.analyzer = analyzer or ManifoldAnalyzer()

    def fuzz(
        self,
        manifold: Manifold,
        trials: int,
        seed: int = 0,
        on_trial: Optional[Callable[[int], None]] = None,
    ) -> FuzzSummary:
        """
        무작위 ξ에 대한 분석 반복

        Args:
            manifold: 검증된 매니폴드
            trials: 시행 횟수 (1 이상)
            seed: 시드
            on_trial: 시행마다 호출되는 콜백 (진행 표시용)

        Returns:
            FuzzSummary

        Raises:
            ValueError: trials < 1
            InternalConsistencyError: 감사 실패 (시드, 시행 번호, ξ 포함)
        """
        if trials < 1:
            raise ValueError(f"시행 횟수는 1 이상이어야 합니다: {trials}")

        f = manifold.field
        summary = FuzzSummary(manifold.name, trials, seed)
        self.log_info(f"퍼징 시작: {manifold.name}, {trials}회, 시드 {seed}")

        for t in range(trials):
            xi = rational_unit_vector(draw_u(seed, t), f)
            label = format_vector(xi, f)
            try:
                report = self.analyzer.analyze(manifold, xi, with_tables=False)
            except InternalConsistencyError as e:
                reproduction = {**e.reproduction, "seed": seed, "trial": t, "xi": label}
                self.log_error(f"감사 실패: 시행 {t}, ξ = {label}")
                raise InternalConsistencyError(e.failures, reproduction) from e

            summary.passed += 1
            summary.trivial += int(report.membership.trivial)
            summary.xis.append(label)
            for item in report.audit.items:
                counts = summary.items.setdefault(item.name, {"applicable": 0, "passed": 0})
                counts["applicable"] += int(item.applicable)
                counts["passed"] += int(item.applicable and item.passed)
            if on_trial is not None:
                on_trial(t)

        if summary.trivial == trials:
            self.log_warning(f"모든 시행이 자명 클래스 (∇Φ = 0): {manifold.name}")
        self.log_info(f"퍼징 완료: {summary.passed}/{trials} 통과")
        return summary
