"""
Levi-Civita Connection

코쥘 공식으로 얻는 정규직교 불변 프레임의 레비-치비타 접속과
상수 계수 벡터/형식의 공변미분
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from ..exterior.forms import DIM, KForm, Vector7
from ..exterior.scalar import Scalar, ScalarField
from ..utils.checks import CheckReport
from ..utils.logger import get_logger
from .structure import StructureConstants

logger = get_logger("g2acms.frame")


@dataclass(frozen=True)
class Connection:
    """
    gamma[i][j][k] = g(∇_{e_i} e_j, e_k)
    """
    gamma: np.ndarray = field(repr=False, compare=False)
    field: ScalarField

    def christoffel_matrix(self, x: Vector7) -> np.ndarray:
        """G[m][k] = g(∇_x e_m, e_k)"""
        return np.tensordot(x, self.gamma, axes=(0, 0))

    def derivative_matrix(self, x: Vector7) -> np.ndarray:
        """
        상수 계수 벡터 x의 공변미분

        Returns:
            D[i][k] = g(∇_{e_i} x, e_k)
        """
        return np.tensordot(self.gamma, x, axes=(1, 0))

    def covariant(self, x: Vector7, y: Vector7) -> Vector7:
        """∇_x y (x, y 모두 상수 계수)"""
        return np.tensordot(x, self.derivative_matrix(y), axes=(0, 0))

    def frame_covariant(self, i: int, j: int) -> Vector7:
        return self.gamma[i, j, :].copy()

    def nonzero_entries(self) -> List[Tuple[int, int, Vector7]]:
        """0이 아닌 ∇_{e_i} e_j (0-기반)"""
        return [
            (i, j, self.frame_covariant(i, j))
            for i, j in itertools.product(range(DIM), repeat=2)
            if not self.field.all_zero(self.gamma[i, j, :])
        ]


def levi_civita(constants: StructureConstants) -> Connection:
    """
    코쥘 공식 2Γ[i][j][k] = c[i][j][k] - c[j][k][i] + c[k][i][j]

    Args:
        constants: 검증된 구조 상수

    Returns:
        계량 호환, 비틀림 없는 접속
    """
    field_ = constants.field
    c = constants.c
    half = field_.coerce(Fraction(1, 2))
    gamma = (c - np.transpose(c, (2, 0, 1)) + np.transpose(c, (1, 2, 0))) * half
    connection = Connection(gamma, field_)
    logger.debug(f"레비-치비타 접속 계산: 0이 아닌 성분 {len(connection.nonzero_entries())}개")
    return connection


def validate_connection(connection: Connection, constants: StructureConstants) -> CheckReport:
    """계량 호환성 Γ[i][j][k] = -Γ[i][k][j], 비틀림 Γ[i][j][k] - Γ[j][i][k] = c[i][j][k]"""
    field_ = connection.field
    gamma = connection.gamma
    report = CheckReport("connection")

    metric = gamma + np.transpose(gamma, (0, 2, 1))
    report.add("metric_compatible", field_.all_zero(metric), _first_nonzero(metric, field_))

    torsion = gamma - np.transpose(gamma, (1, 0, 2)) - constants.c
    report.add("torsion_free", field_.all_zero(torsion), _first_nonzero(torsion, field_))
    return report


def _first_nonzero(array: np.ndarray, field_: ScalarField) -> Optional[str]:
    for index in itertools.product(*(range(n) for n in array.shape)):
        if not field_.is_zero(array[index]):
            label = ",".join(str(i + 1) for i in index)
            return f"[{label}] = {field_.format(array[index])}"
    return None


def nabla_form(connection: Connection, form: KForm, i: int) -> KForm:
    """
    불변 형식의 공변미분 ∇_{e_i} w

    (∇_{e_i} w)(e_J) = -Σ_m w(e_{J_1}, …, ∇_{e_i} e_{J_m}, …, e_{J_k})
    """
    gamma_i = connection.gamma[i]
    field_ = form.field

    def component(index: Tuple[int, ...]) -> Scalar:
        total = field_.zero
        for position, slot in enumerate(index):
            for k in range(DIM):
                if field_.is_zero(gamma_i[slot, k]):
                    continue
                replaced = index[:position] + (k,) + index[position + 1:]
                total = total - gamma_i[slot, k] * form.coefficient(replaced)
        return total

    return KForm.from_evaluator(form.degree, component, field_)


def antisymmetrized_nabla(connection: Connection, form: KForm) -> KForm:
    """
    Alt(∇w)(x_0..x_k) = Σ_m (-1)^m (∇_{x_m} w)(x_0..x̂_m..x_k)

    비틀림 없는 접속에서는 외미분 dw와 같아야 한다.
    """
    field_ = form.field
    derivatives = [nabla_form(connection, form, i) for i in range(DIM)]

    def component(index: Tuple[int, ...]) -> Scalar:
        total = field_.zero
        for position, slot in enumerate(index):
            rest = index[:position] + index[position + 1:]
            sign = -1 if position % 2 else 1
            total = total + sign * derivatives[slot].coefficient(rest)
        return total

    return KForm.from_evaluator(form.degree + 1, component, field_)


def divergence(connection: Connection, x: Vector7) -> Scalar:
    """div x = Σ_i g(∇_{e_i} x, e_i)"""
    return np.trace(connection.derivative_matrix(x))
