"""
Covariant Derivative of the Fundamental Form

α(x,y,z) = (∇_xΦ)(y,z) = g(y, ∇_x(ξ×z)) + g(∇_x z, ξ×y)
"""

from dataclasses import dataclass, field

import numpy as np

from ..acms.basis import AdaptedBasis
from ..acms.structure import ACMS
from ..exterior.forms import Vector7
from ..exterior.scalar import Scalar, ScalarField
from ..frame.connection import Connection


def to_basis(tensor: np.ndarray, basis: AdaptedBasis) -> np.ndarray:
    """프레임 성분 3-텐서를 적응 기저 성분 T[a][b][c] = T(b_a, b_b, b_c)로 변환"""
    B = basis.vectors
    result = np.tensordot(B, tensor, axes=(1, 0))
    result = np.tensordot(result, B, axes=(2, 1))
    result = np.tensordot(result, B, axes=(1, 1))
    return result.transpose(0, 2, 1)


def phi_in_basis(acms: ACMS, basis: AdaptedBasis) -> np.ndarray:
    """
    φ b_a = Σ_c P[a][c] b_c 인 계수 행렬

    P[a][c] = g(φ b_a, b_c) / n_c
    """
    B = basis.vectors
    images = B.dot(acms.phi_endo.T)
    return images.dot(B.T) * basis.weights[np.newaxis, :]


@dataclass(frozen=True)
class CovDerivTensor:
    """
    ∇Φ 텐서

    Attributes:
        frame: frame[i][j][k] = (∇_{e_i}Φ)(e_j, e_k)
        alpha: alpha[a][b][c] = (∇_{b_a}Φ)(b_b, b_c), 적응 기저 성분
        phi_basis: 적응 기저에서 φ의 계수 행렬
        basis: 적응 기저
    """
    frame: np.ndarray = field(repr=False, compare=False)
    alpha: np.ndarray = field(repr=False, compare=False)
    phi_basis: np.ndarray = field(repr=False, compare=False)
    basis: AdaptedBasis
    field: ScalarField

    def at(self, x: Vector7, y: Vector7, z: Vector7) -> Scalar:
        """α(x,y,z) (프레임 좌표 벡터)"""
        return y.dot(self.along(x).dot(z))

    def along(self, x: Vector7) -> np.ndarray:
        """(∇_xΦ)(e_j, e_k) 행렬"""
        return np.tensordot(x, self.frame, axes=(0, 0))

    def is_zero(self) -> bool:
        return self.field.all_zero(self.frame)


def nabla_phi_tensor(connection: Connection, acms: ACMS, basis: AdaptedBasis) -> CovDerivTensor:
    """
    ∇Φ 계산

    프레임 성분은
        α(e_i,e_j,e_k) = g(e_j, ∇_{e_i}(ξ×e_k)) + g(∇_{e_i}e_k, ξ×e_j)
    이고, 적응 기저 성분은 한 번의 기저 변환으로 얻는다.

    Args:
        connection: 레비-치비타 접속
        acms: 유도된 구조
        basis: ξ에 적응된 기저

    Returns:
        프레임/기저 성분을 모두 담은 텐서
    """
    gamma = connection.gamma
    F = acms.phi_endo
    # g(e_j, ∇_{e_i}(ξ×e_k)) = Σ_m F[m][k] Γ[i][m][j]
    first = np.tensordot(gamma, F, axes=(1, 0))
    # g(∇_{e_i}e_k, ξ×e_j) = Σ_m Γ[i][k][m] F[m][j]
    second = np.tensordot(gamma, F, axes=(2, 0)).transpose(0, 2, 1)
    frame = first + second
    return CovDerivTensor(frame, to_basis(frame, basis), phi_in_basis(acms, basis), basis, acms.field)


def phi_derivative_tensor(connection: Connection, acms: ACMS) -> np.ndarray:
    """(∇_{e_i}Φ)(e_j,e_k) = -Φ(∇_{e_i}e_j, e_k) - Φ(e_j, ∇_{e_i}e_k), 위 공식과의 교차 검증용"""
    gamma = connection.gamma
    Phi = acms.fundamental_matrix()
    first = np.tensordot(gamma, Phi, axes=(2, 0))
    second = np.tensordot(gamma, Phi, axes=(2, 1)).transpose(0, 2, 1)
    return -first - second


def codifferential_phi(tensor: CovDerivTensor) -> np.ndarray:
    """
    δΦ(x) = -Σ_b (∇_bΦ)(b, x), 적응 기저 전체에 대한 합

    Returns:
        프레임 좌표 코벡터 δΦ(e_k)
    """
    weights = tensor.basis.weights
    B = tensor.basis.vectors
    # Σ_a w_a (∇_{b_a}Φ)(b_a, e_k)
    partial = np.tensordot(B, tensor.frame, axes=(1, 0))
    partial = np.tensordot(B, partial, axes=(1, 1))
    trace = sum((weights[a] * partial[a, a] for a in range(len(weights))), tensor.field.zeros(len(weights)))
    return -trace
