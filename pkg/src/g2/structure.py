"""
G2 Structure

프레임 좌표의 3-형식 φ와 φ(x,y,z) = g(x×y, z)로 정의되는 2-겹 벡터 외적
"""

import itertools
import random
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from ..exterior.forms import DIM, KForm, Vector7, basis_vector, format_vector, inner, norm2, permutation_sign
from ..exterior.scalar import EXACT, ScalarField, random_rational
from ..utils.checks import CheckReport
from ..utils.config import config
from ..utils.logger import get_logger

logger = get_logger("g2acms.g2")

# e^{123}+e^{145}+e^{167}+e^{246}-e^{257}-e^{347}-e^{356}
STANDARD_PHI_TERMS = {
    "123": 1, "145": 1, "167": 1, "246": 1, "257": -1, "347": -1, "356": -1,
}

CROSS_AXIOMS = (
    "antisymmetry",
    "form_agreement",
    "orthogonality",
    "norm_identity",
    "double_cross",
    "reconstruction",
)


@dataclass(frozen=True)
class G2Structure:
    """
    3-형식과 그로부터 유도된 외적 테이블

    Attributes:
        phi: 3-형식
        table: table[i][j][k] = φ(e_i, e_j, e_k), 즉 g(e_i×e_j, e_k)
    """
    phi: KForm
    table: np.ndarray = field(repr=False, compare=False)

    @classmethod
    def from_form(cls, phi: KForm) -> "G2Structure":
        if phi.degree != 3:
            raise ValueError(f"G2 구조는 3-형식이 필요합니다: degree={phi.degree}")
        table = phi.field.zeros((DIM, DIM, DIM))
        for index, value in phi.coeffs.items():
            for perm in itertools.permutations(index):
                table[perm] = permutation_sign(perm) * value
        return cls(phi, table)

    @property
    def field(self) -> ScalarField:
        return self.phi.field

    def cross(self, x: Vector7, y: Vector7) -> Vector7:
        """x×y = Σ x_i y_j table[i][j][:]"""
        return np.tensordot(y, np.tensordot(x, self.table, axes=(0, 0)), axes=(0, 0))

    def cross_matrix(self, x: Vector7) -> np.ndarray:
        """M @ y = x×y 인 7×7 행렬 (열 j = x×e_j)"""
        return np.tensordot(x, self.table, axes=(0, 0)).T

    def frame_cross(self, i: int, j: int) -> Vector7:
        return self.table[i, j, :].copy()


def cross(structure: G2Structure, x: Vector7, y: Vector7) -> Vector7:
    return structure.cross(x, y)


def standard_phi(field_: ScalarField = EXACT) -> G2Structure:
    """표준 G2 형식 φ₀"""
    return G2Structure.from_form(KForm.from_monomials(3, STANDARD_PHI_TERMS, field_))


def _random_vector(rng: random.Random, field_: ScalarField, bound: int) -> Vector7:
    return field_.asarray(random_rational(rng, bound) for _ in range(DIM))


def _frame_label(i: int) -> str:
    return f"e{i + 1}"


def validate_cross_axioms(
    structure: G2Structure,
    trials: Optional[int] = None,
    seed: int = 0,
) -> CheckReport:
    """
    외적 공리 검증

    프레임의 모든 쌍/삼중쌍과 시드 고정 무작위 유리수 벡터에서
    반대칭성, 직교성, 노름 항등식, 이중 외적 항등식, φ와의 일치, φ 재구성을 확인한다.

    Args:
        structure: 검증할 G2 구조
        trials: 무작위 벡터 쌍 개수 (None이면 G2C_CROSS_TRIALS)
        seed: 난수 시드

    Returns:
        공리별 통과/실패와 첫 반례를 담은 보고서
    """
    field_ = structure.field
    trials = config.numerics.cross_trials if trials is None else trials
    frame = [basis_vector(i, field_) for i in range(DIM)]
    rng = random.Random(seed)
    bound = config.numerics.fuzz_bound

    pairs: List[Tuple[str, Vector7, Vector7]] = [
        (f"({_frame_label(i)},{_frame_label(j)})", frame[i], frame[j])
        for i in range(DIM) for j in range(DIM)
    ]
    for t in range(trials):
        x = _random_vector(rng, field_, bound)
        y = _random_vector(rng, field_, bound)
        pairs.append((f"(x={format_vector(x, field_)}, y={format_vector(y, field_)})", x, y))

    failures = {name: None for name in CROSS_AXIOMS}

    def fail(name: str, witness: str) -> None:
        if failures[name] is None:
            failures[name] = witness

    for label, x, y in pairs:
        xy = structure.cross(x, y)
        yx = structure.cross(y, x)
        if not field_.all_zero(xy + yx):
            fail("antisymmetry", f"{label}: x×y + y×x = {format_vector(xy + yx, field_)}")

        scale = norm2(x) * norm2(y)
        if not (field_.is_zero(inner(xy, x), scale) and field_.is_zero(inner(xy, y), scale)):
            fail("orthogonality", f"{label}: g(x×y,x) = {field_.format(inner(xy, x))}, "
                                  f"g(x×y,y) = {field_.format(inner(xy, y))}")

        lhs = norm2(xy)
        rhs = norm2(x) * norm2(y) - inner(x, y) ** 2
        if not field_.equal(lhs, rhs, scale):
            fail("norm_identity", f"{label}: |x×y|² = {field_.format(lhs)}, "
                                  f"|x|²|y|²-g(x,y)² = {field_.format(rhs)}")

        residual = structure.cross(x, xy) + norm2(x) * y - inner(x, y) * x
        if not field_.all_zero(residual, scale):
            fail("double_cross", f"{label}: x×(x×y)+g(x,x)y-g(x,y)x = {format_vector(residual, field_)}")

    for i, j, k in itertools.product(range(DIM), repeat=3):
        lhs = inner(structure.cross(frame[i], frame[j]), frame[k])
        rhs = structure.phi(frame[i], frame[j], frame[k])
        if not field_.equal(lhs, rhs):
            fail("form_agreement", f"({_frame_label(i)},{_frame_label(j)},{_frame_label(k)}): "
                                   f"g(x×y,z) = {field_.format(lhs)}, φ(x,y,z) = {field_.format(rhs)}")
            break

    rebuilt = KForm.from_evaluator(
        3, lambda index: inner(structure.cross(frame[index[0]], frame[index[1]]), frame[index[2]]), field_
    )
    if not rebuilt.is_close(structure.phi):
        fail("reconstruction", f"외적 테이블로 재구성한 형식 {rebuilt.label()} ≠ φ = {structure.phi.label()}")

    report = CheckReport("cross_axioms")
    for name in CROSS_AXIOMS:
        report.add(name, failures[name] is None, failures[name])
    logger.debug(f"외적 공리 검증: {'통과' if report.passed else '실패'} ({len(pairs)}개 벡터 쌍)")
    return report


def cross_table(structure: G2Structure) -> List[Tuple[int, int, Vector7]]:
    """
    프레임 쌍 외적 테이블

    Returns:
        21개 비순서쌍 (i, j, e_i×e_j), i < j, 0-기반 인덱스
    """
    return [
        (i, j, structure.frame_cross(i, j))
        for i, j in itertools.combinations(range(DIM), 2)
    ]
