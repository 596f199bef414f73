"""
Built-in Manifolds

내장 예제: 3-사사키안 sasakian3 (점별 프레임), 가환 flat, 비단봉 hyperbolic
"""

from typing import Dict, List, Optional

from ..g2.structure import STANDARD_PHI_TERMS
from .spec_loader import ManifoldSpec

# [e_i,e_j] = value·e_k, 1-기반, i < j
SASAKIAN3_BRACKETS = (
    (1, 2, 3, "2"), (2, 3, 1, "2"), (1, 3, 2, "-2"),
    (4, 5, 1, "2"), (6, 7, 1, "2"),
    (4, 6, 2, "2"), (5, 7, 2, "-2"),
    (4, 7, 3, "2"), (5, 6, 3, "2"),
)

SASAKIAN3_PHI = {
    "123": 1, "145": -1, "167": -1, "246": 1, "257": -1, "347": 1, "356": 1,
}


def _phi_records(terms: Dict[str, int]) -> List[dict]:
    return [
        {"i": int(label[0]), "j": int(label[1]), "k": int(label[2]), "coeff": str(value)}
        for label, value in terms.items()
    ]


def _bracket_records(brackets) -> List[dict]:
    return [{"i": i, "j": j, "k": k, "value": value} for i, j, k, value in brackets]


def sasakian3() -> ManifoldSpec:
    return ManifoldSpec(
        name="sasakian3",
        description="3-사사키안 7-다양체의 한 점에서 본 프레임 괄호와 G2 형식",
        brackets=_bracket_records(SASAKIAN3_BRACKETS),
        phi=_phi_records(SASAKIAN3_PHI),
        xi=["1", "0", "0", "0", "0", "0", "0"],
        frame="pointwise",
    )


def flat() -> ManifoldSpec:
    return ManifoldSpec(
        name="flat",
        description="가환 리 대수와 표준 형식 φ₀ (평행 G2 구조)",
        brackets=[],
        phi=_phi_records(STANDARD_PHI_TERMS),
    )


def hyperbolic() -> ManifoldSpec:
    """[e_i, e_7] = -e_i (i = 1..6), ξ = e7에서 div ξ ≠ 0"""
    return ManifoldSpec(
        name="hyperbolic",
        description="[e_i,e_7] = -e_i 인 비단봉 리 대수와 φ₀",
        brackets=_bracket_records((i, 7, i, "-1") for i in range(1, 7)),
        phi=_phi_records(STANDARD_PHI_TERMS),
    )


def builtin_examples() -> List[ManifoldSpec]:
    """내장 예제 명세 목록"""
    return [sasakian3(), flat(), hyperbolic()]


def get_builtin(name: str) -> Optional[ManifoldSpec]:
    for spec in builtin_examples():
        if spec.name == name:
            return spec
    return None
