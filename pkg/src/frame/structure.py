"""
Structure Constants

불변 정규직교 프레임의 괄호 [e_i, e_j] = Σ_k c[i][j][k] e_k
"""

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Tuple

import numpy as np

from ..exterior.forms import DIM, Vector7, format_vector
from ..exterior.scalar import EXACT, ScalarField
from ..utils.checks import CheckReport
from ..utils.errors import AlgebraError

Bracket = Tuple[int, int, int, object]


@dataclass(frozen=True)
class StructureConstants:
    """c[i][j][k] 배열 (0-기반)"""
    c: np.ndarray = field(repr=False, compare=False)
    field: ScalarField = EXACT

    @classmethod
    def from_brackets(cls, brackets: Iterable[Bracket], field_: ScalarField = EXACT) -> "StructureConstants":
        """
        (i, j, k, value) 레코드로 생성: [e_i,e_j]의 e_k 성분, 반대칭 짝은 자동으로 채움

        Args:
            brackets: 0-기반 인덱스 레코드
            field_: 스칼라 백엔드
        """
        c = field_.zeros((DIM, DIM, DIM))
        for i, j, k, value in brackets:
            if i == j:
                raise AlgebraError(f"[e{i + 1},e{j + 1}] 자기 괄호는 지정할 수 없습니다")
            value = field_.coerce(value)
            c[i, j, k] = c[i, j, k] + value
            c[j, i, k] = c[j, i, k] - value
        return cls(c, field_)

    @classmethod
    def abelian(cls, field_: ScalarField = EXACT) -> "StructureConstants":
        return cls(field_.zeros((DIM, DIM, DIM)), field_)

    def bracket(self, x: Vector7, y: Vector7) -> Vector7:
        return np.tensordot(y, np.tensordot(x, self.c, axes=(0, 0)), axes=(0, 0))

    def frame_bracket(self, i: int, j: int) -> Vector7:
        return self.c[i, j, :].copy()

    def nonzero_brackets(self) -> list:
        """i < j 인 0이 아닌 괄호 (i, j, [e_i,e_j])"""
        return [
            (i, j, self.frame_bracket(i, j))
            for i, j in itertools.combinations(range(DIM), 2)
            if not self.field.all_zero(self.c[i, j, :])
        ]

    @property
    def is_abelian(self) -> bool:
        return self.field.all_zero(self.c)


def validate_structure(constants: StructureConstants) -> CheckReport:
    """
    괄호의 반대칭성과 야코비 항등식 검증

    Returns:
        "antisymmetry", "jacobi" 항목과 첫 실패 삼중쌍(1-기반)
    """
    field_ = constants.field
    c = constants.c
    report = CheckReport("structure_constants")

    witness = None
    for i, j, k in itertools.product(range(DIM), repeat=3):
        if not field_.is_zero(c[i, j, k] + c[j, i, k]):
            witness = (f"c[{i + 1}][{j + 1}][{k + 1}] = {field_.format(c[i, j, k])}, "
                       f"c[{j + 1}][{i + 1}][{k + 1}] = {field_.format(c[j, i, k])}")
            break
    report.add("antisymmetry", witness is None, witness)

    # nested[i][j][k][l] = ([[e_i,e_j],e_k])_l
    nested = np.tensordot(c, c, axes=(2, 0))
    witness = None
    for i, j, k in itertools.combinations(range(DIM), 3):
        cyclic = nested[i, j, k] + nested[j, k, i] + nested[k, i, j]
        if not field_.all_zero(cyclic):
            witness = (f"({i + 1},{j + 1},{k + 1}): [[e{i + 1},e{j + 1}],e{k + 1}] + 순환 = "
                       f"{format_vector(cyclic, field_)}")
            break
    report.add("jacobi", witness is None, witness)
    return report
