"""
Named Classes

코심플렉틱, 거의 K-접촉, 반코심플렉틱, 사사키안, 트랜스-사사키안 필요조건,
준 K-코심플렉틱 장애 판정
"""

import itertools
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ..acms.structure import ACMS
from ..exterior.forms import DIM, basis_vector, format_vector
from ..frame.connection import Connection
from ..g2.structure import G2Structure
from ..nablaphi.diagnostics import XiDiagnostics, nabla_phi_endomorphism
from ..nablaphi.tensor import CovDerivTensor

NAMED_CLASSES = (
    "cosymplectic",
    "almost_k_contact",
    "semi_cosymplectic",
    "sasakian",
    "trans_sasakian_necessary",
    "nearly_k_cosymplectic_obstruction",
)


@dataclass(frozen=True)
class NamedResult:
    """
    Attributes:
        holds: 판정 (None이면 indeterminate)
        witness: 실패 반례 또는 설명
        values: 반례의 (좌변, 우변) 값
    """
    holds: Optional[bool]
    witness: Optional[str] = None
    values: Optional[Tuple[Any, Any]] = None


def _frame_triple(i: int, j: int, k: int) -> str:
    return f"(e{i + 1},e{j + 1},e{k + 1})"


def sasakian_relation(connection: Connection, structure: G2Structure, acms: ACMS) -> NamedResult:
    """(∇_xφ)(y) = g(x,y)ξ - η(y)x 를 모든 프레임 쌍에서 검사"""
    field_ = acms.field
    xi = acms.xi
    for i in range(DIM):
        x = basis_vector(i, field_)
        derivative = nabla_phi_endomorphism(connection, structure, acms, x)
        for j in range(DIM):
            expected = (xi if i == j else field_.zeros(DIM)) - xi[j] * x
            residual = derivative[:, j] - expected
            if not field_.all_zero(residual):
                return NamedResult(
                    False,
                    f"(e{i + 1},e{j + 1}): (∇_xφ)(y) - g(x,y)ξ + η(y)x = {format_vector(residual, field_)}",
                )
    return NamedResult(True)


def trans_sasakian_necessary(tensor: CovDerivTensor, acms: ACMS, delta_phi_xi, delta_eta) -> NamedResult:
    """
    δη = 0일 때만 α(x,y,z) = (δΦ(ξ)/6)(g(x,z)η(y) - g(x,y)η(z)) 를 모든 프레임 삼중쌍에서 검사
    """
    field_ = acms.field
    if not field_.is_zero(delta_eta):
        return NamedResult(None, "δη ≠ 0: 일반 관계식이 없어 판정 불가")
    xi = acms.xi
    factor = delta_phi_xi / field_.coerce(6)
    for i, j, k in itertools.product(range(DIM), repeat=3):
        expected = factor * ((1 if i == k else 0) * xi[j] - (1 if i == j else 0) * xi[k])
        actual = tensor.frame[i, j, k]
        if not field_.equal(actual, expected):
            return NamedResult(
                False,
                f"α{_frame_triple(i, j, k)} = {field_.format(actual)}, 기대값 {field_.format(expected)}",
                (actual, expected),
            )
    return NamedResult(True)


def named_checks(
    tensor: CovDerivTensor,
    acms: ACMS,
    diagnostics: XiDiagnostics,
    delta_phi: np.ndarray,
    connection: Connection,
    structure: G2Structure,
) -> Dict[str, NamedResult]:
    """
    이름 있는 클래스 판정

    Args:
        tensor: ∇Φ
        acms: 유도된 구조
        diagnostics: ξ 진단값
        delta_phi: δΦ 코벡터 (프레임 좌표)
        connection: 레비-치비타 접속
        structure: G2 구조

    Returns:
        클래스 이름 → NamedResult
    """
    field_ = acms.field
    results: Dict[str, NamedResult] = {}

    results["cosymplectic"] = NamedResult(tensor.is_zero(), None if tensor.is_zero() else "∇Φ ≠ 0")

    k_contact = field_.all_zero(diagnostics.nabla_xi_phi)
    results["almost_k_contact"] = NamedResult(
        k_contact, None if k_contact else f"∇_ξξ = {format_vector(diagnostics.nabla_xi_xi, field_)}, ∇_ξφ ≠ 0"
    )

    delta_phi_zero = field_.all_zero(delta_phi)
    delta_eta_zero = field_.is_zero(diagnostics.delta_eta)
    semi = delta_phi_zero and delta_eta_zero
    witness = None
    if not semi:
        witness = f"δΦ = {format_vector(delta_phi, field_, [f'e^{i + 1}' for i in range(DIM)])}, δη = {field_.format(diagnostics.delta_eta)}"
    results["semi_cosymplectic"] = NamedResult(semi, witness)

    results["sasakian"] = sasakian_relation(connection, structure, acms)

    delta_phi_xi = delta_phi.dot(acms.xi)
    results["trans_sasakian_necessary"] = trans_sasakian_necessary(tensor, acms, delta_phi_xi, diagnostics.delta_eta)

    obstructed = diagnostics.is_killing and not diagnostics.xi_parallel
    results["nearly_k_cosymplectic_obstruction"] = NamedResult(
        obstructed, "킬링 벡터장이지만 평행하지 않음: C1 불가" if obstructed else None
    )
    return results
