"""
Quadratic Invariants

∇Φ의 18개 이차 불변량 i1..i18, 축약 c12(α), ‖α‖²

로마자 인덱스 i, j, k는 ξ가 아닌 여섯 기저 벡터 f1..f6 위를 돌고,
ξ 슬롯은 표에 적힌 그대로 둔다. 정규화되지 않은 기저 벡터 b_a에 대해서는
각 로마자 인덱스가 정확히 두 번 나타나므로 인덱스마다 w_a = 1/n_a를 곱한다.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, Tuple

import numpy as np

from ..acms.basis import XI_SLOT
from ..acms.structure import ACMS
from ..exterior.scalar import Scalar, ScalarField
from ..nablaphi.tensor import CovDerivTensor, phi_in_basis

INVARIANT_COUNT = 18
R = slice(0, XI_SLOT)
X = XI_SLOT


@dataclass(frozen=True)
class InvariantVector:
    """
    Attributes:
        values: m → i_m(α), m = 1..18
        norm2: 전체 적응 기저 위의 ‖α‖²
        c12: c12(α)(e_k), 프레임 좌표 코벡터
        c12_norm2: Σ_k c12(α)(f_k)², 프레임 좌표 ∇Φ에서 축약한 i4의 다른 계산
    """
    values: Dict[int, Scalar]
    norm2: Scalar
    c12: np.ndarray = field(repr=False, compare=False)
    c12_norm2: Scalar
    field: ScalarField

    def __getitem__(self, m: int) -> Scalar:
        return self.values[m]

    def items(self) -> Iterator[Tuple[int, Scalar]]:
        return iter(sorted(self.values.items()))

    def is_zero(self, m: int) -> bool:
        return self.field.is_zero(self.values[m], self.scale)

    @property
    def scale(self) -> Scalar:
        """float 백엔드 영 판정 기준 max(1, ‖α‖²)"""
        return self.norm2 if self.norm2 > 1 else 1

    def all_zero(self) -> bool:
        return all(self.is_zero(m) for m in self.values) and self.field.is_zero(self.norm2)


def _total(array: np.ndarray, field_: ScalarField) -> Scalar:
    return field_.coerce(array.sum()) if array.size else field_.zero


def contraction_c12(tensor: CovDerivTensor) -> np.ndarray:
    """
    c12(α)(z) = Σ_{i≤6} α(f_i, f_i, z)

    Returns:
        프레임 좌표 코벡터 (z = e_k 값)
    """
    weights = tensor.basis.weights
    B = tensor.basis.vectors
    partial = np.tensordot(B, tensor.frame, axes=(1, 0))
    partial = np.tensordot(B, partial, axes=(1, 1))
    total = tensor.field.zeros(tensor.frame.shape[2])
    for a in range(XI_SLOT):
        total = total + weights[a] * partial[a, a]
    return total


def alpha_norm2(tensor: CovDerivTensor) -> Scalar:
    """‖α‖² = Σ_{a,b,c} w_a w_b w_c α(b_a,b_b,b_c)², 343개 삼중쌍 전체"""
    w = tensor.basis.weights
    W3 = np.multiply.outer(np.multiply.outer(w, w), w)
    return _total(W3 * tensor.alpha * tensor.alpha, tensor.field)


def quadratic_invariants(tensor: CovDerivTensor, acms: ACMS) -> InvariantVector:
    """
    18개 이차 불변량 계산

    Args:
        tensor: 적응 기저 성분을 가진 ∇Φ
        acms: φ를 제공하는 구조

    Returns:
        InvariantVector
    """
    field_ = tensor.field
    alpha = tensor.alpha
    P = phi_in_basis(acms, tensor.basis)
    w = tensor.basis.weights
    wR = w[R]
    W2 = np.multiply.outer(wR, wR)
    W3 = np.multiply.outer(W2, wR)

    def total(array: np.ndarray) -> Scalar:
        return _total(array, field_)

    # α(φb_i, φb_j, b_k)
    phiphi = np.tensordot(P, np.tensordot(P, alpha, axes=(1, 0)), axes=(1, 1)).transpose(1, 0, 2)
    aR = alpha[R, R, R]
    diag = np.array([alpha[a, a, :] for a in range(XI_SLOT)], dtype=alpha.dtype)
    diagR = diag[:, R]
    A_xi = alpha[R, R, X]
    xi_first = alpha[X, R, R]
    xi_second = alpha[R, X, R]
    xi_xi = alpha[X, X, R]
    trace_xi = total(wR * diag[:, X])
    phi_trace_xi = total(wR * (P * alpha[:, :, X])[R, :].sum(axis=1))

    values = {
        1: total(W3 * aR * aR),
        2: total(W3 * aR * aR.transpose(1, 0, 2)),
        3: total(W3 * aR * phiphi[R, R, R]),
        4: total(W3 * diagR[:, np.newaxis, :] * diagR[np.newaxis, :, :]),
        5: total(W2 * xi_first * xi_first),
        6: total(W2 * xi_second * xi_second),
        7: total(W2 * xi_first * xi_second),
        8: total(W2 * A_xi * A_xi.T),
        9: total(W2 * A_xi * phiphi[R, R, X]),
        10: trace_xi * trace_xi,
        # α(b_j, φb_i, ξ) = Σ_p P[i][p] α[j][p][ξ]
        11: total(W2 * A_xi * alpha[:, :, X].dot(P.T).T[R, R]),
        12: total(W2 * A_xi * phiphi[R, R, X].T),
        # α(φb_j, ξ, b_k) = Σ_p P[j][p] α[p][ξ][k]
        13: total(W2 * xi_first * P.dot(alpha[:, X, :])[R, R]),
        14: phi_trace_xi * phi_trace_xi,
        15: phi_trace_xi * trace_xi,
        16: total(wR * xi_xi * xi_xi),
        17: total(W2 * diagR * xi_xi[np.newaxis, :]),
        # α(b_i, b_i, φb_k) = Σ_p P[k][p] α[i][i][p]
        18: total(W2 * diag.dot(P.T)[:, R] * xi_xi[np.newaxis, :]),
    }

    c12 = contraction_c12(tensor)
    # c12(b_k) = Σ_l B[k][l] c12(e_l)
    c12_on_basis = tensor.basis.vectors.dot(c12)
    c12_norm2 = total(wR * c12_on_basis[R] * c12_on_basis[R])
    return InvariantVector(values, alpha_norm2(tensor), c12, c12_norm2, field_)
