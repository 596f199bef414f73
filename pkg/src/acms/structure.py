"""
Almost Contact Metric Structure

G2 구조와 단위 벡터 ξ가 유도하는 (φ, ξ, η, g): φ(x) = ξ×x, η(x) = g(ξ,x)
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..exterior.forms import DIM, KForm, Vector7, format_vector, interior_product, norm2
from ..exterior.scalar import ScalarField
from ..g2.structure import G2Structure
from ..utils.checks import CheckReport
from ..utils.errors import NonUnitVectorError


@dataclass(frozen=True)
class ACMS:
    """
    유도된 거의 접촉 계량 구조

    Attributes:
        xi: 단위 벡터장 ξ
        eta: 1-형식 η
        phi_endo: φ의 행렬 (열 j = φ(e_j))
        Phi: 기본 2-형식 Φ(x,y) = g(x, φy)
    """
    xi: Vector7 = field(compare=False)
    eta: KForm
    phi_endo: np.ndarray = field(repr=False, compare=False)
    Phi: KForm
    field: ScalarField

    def phi(self, x: Vector7) -> Vector7:
        return self.phi_endo.dot(x)

    def fundamental_matrix(self) -> np.ndarray:
        """Φ(e_i, e_j) 행렬"""
        matrix = self.field.zeros((DIM, DIM))
        for (i, j), value in self.Phi.coeffs.items():
            matrix[i, j] = value
            matrix[j, i] = -value
        return matrix


def induce_acms(structure: G2Structure, xi: Vector7) -> ACMS:
    """
    φ(x) := ξ×x, η(x) := g(ξ,x), Φ = -i_ξ φ

    Args:
        structure: G2 구조
        xi: 단위 벡터

    Returns:
        유도된 구조

    Raises:
        NonUnitVectorError: g(ξ,ξ) ≠ 1
    """
    field_ = structure.field
    xi = field_.asarray(xi)
    measured = norm2(xi)
    if not field_.equal(measured, field_.one):
        raise NonUnitVectorError(field_.format(measured))
    eta = KForm.covector(xi, field_)
    phi_endo = structure.cross_matrix(xi)
    Phi = -interior_product(xi, structure.phi)
    return ACMS(xi, eta, phi_endo, Phi, field_)


def _label(i: int) -> str:
    return f"e{i + 1}"


def validate_acms(acms: ACMS) -> CheckReport:
    """
    거의 접촉 계량 구조 공리를 모든 프레임 쌍에서 검증

    Returns:
        unit, eta_xi, phi_xi, eta_phi, phi_squared, compatible_metric, fundamental_form 항목
    """
    field_ = acms.field
    xi = acms.xi
    F = acms.phi_endo
    identity = field_.zeros((DIM, DIM))
    for i in range(DIM):
        identity[i, i] = field_.one
    projector = np.outer(xi, xi)
    report = CheckReport("acms")

    measured = norm2(xi)
    report.add("unit", field_.equal(measured, field_.one), f"g(ξ,ξ) = {field_.format(measured)}")

    eta_xi = acms.eta(xi)
    report.add("eta_xi", field_.equal(eta_xi, field_.one), f"η(ξ) = {field_.format(eta_xi)}")

    phi_xi = acms.phi(xi)
    report.add("phi_xi", field_.all_zero(phi_xi), f"φ(ξ) = {format_vector(phi_xi, field_)}")

    eta_phi = xi.dot(F)
    report.add("eta_phi", field_.all_zero(eta_phi), _first_column(eta_phi, field_, "η(φ({})) = {}"))

    squared = F.dot(F) - (projector - identity)
    report.add("phi_squared", field_.all_zero(squared), _first_bad_column(squared, field_, "φ²({}) - (-{} + η({})ξ) = {}"))

    compatible = F.T.dot(F) - (identity - projector)
    report.add("compatible_metric", field_.all_zero(compatible), _first_bad_entry(compatible, field_, "g(φ{},φ{}) - (g - η⊗η) = {}"))

    fundamental = acms.fundamental_matrix() - F
    report.add("fundamental_form", field_.all_zero(fundamental), _first_bad_entry(fundamental, field_, "Φ({},{}) - g(·,φ·) = {}"))
    return report


def _first_column(values: np.ndarray, field_: ScalarField, template: str) -> Optional[str]:
    for j, value in enumerate(values):
        if not field_.is_zero(value):
            return template.format(_label(j), field_.format(value))
    return None


def _first_bad_column(matrix: np.ndarray, field_: ScalarField, template: str) -> Optional[str]:
    for j in range(DIM):
        column = matrix[:, j]
        if not field_.all_zero(column):
            return template.format(_label(j), _label(j), _label(j), format_vector(column, field_))
    return None


def _first_bad_entry(matrix: np.ndarray, field_: ScalarField, template: str) -> Optional[str]:
    for i in range(DIM):
        for j in range(DIM):
            if not field_.is_zero(matrix[i, j]):
                return template.format(_label(i), _label(j), field_.format(matrix[i, j]))
    return None
