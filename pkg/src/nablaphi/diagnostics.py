"""
Reeb Field Diagnostics

∇ξ, ∇_ξξ, div ξ, v = Σ f_j×∇_{f_j}ξ, δη, 킬링 판정, ∇_xφ
"""

from dataclasses import dataclass, field

import numpy as np

from ..acms.basis import XI_SLOT, AdaptedBasis
from ..acms.structure import ACMS
from ..exterior.forms import Vector7
from ..exterior.scalar import Scalar, ScalarField
from ..frame.connection import Connection
from ..g2.structure import G2Structure


def nabla_phi_endomorphism(connection: Connection, structure: G2Structure, acms: ACMS, x: Vector7) -> np.ndarray:
    """
    (∇_xφ)(y) = ∇_x(ξ×y) - ξ×∇_x y

    Returns:
        열 j = (∇_xφ)(e_j) 인 7×7 행렬
    """
    G = connection.christoffel_matrix(x)
    F = acms.phi_endo
    return G.T.dot(F) - F.dot(G.T)


def nabla_xi_phi(connection: Connection, structure: G2Structure, acms: ACMS) -> np.ndarray:
    """∇_ξφ 행렬 (거의 K-접촉 판정)"""
    return nabla_phi_endomorphism(connection, structure, acms, acms.xi)


def nabla_eta_matrix(connection: Connection, acms: ACMS) -> np.ndarray:
    """(∇_{e_i}η)(e_j) = -η(∇_{e_i}e_j)"""
    return -np.tensordot(connection.gamma, acms.xi, axes=(2, 0))


@dataclass(frozen=True)
class XiDiagnostics:
    """
    ξ 관련 진단값

    Attributes:
        nabla_xi: nabla_xi[i][k] = g(∇_{e_i}ξ, e_k)
        nabla_xi_xi: ∇_ξξ
        div_xi: div ξ
        v: Σ_{j≤6} f_j × ∇_{f_j}ξ
        delta_eta: δη = -Σ_{j≤6} (∇_{f_j}η)(f_j)
        is_killing: g(∇_xξ,y) + g(∇_yξ,x) = 0
        nabla_xi_phi: ∇_ξφ 행렬
        nabla_xi_Phi: (∇_ξΦ)(e_j,e_k) 행렬
    """
    nabla_xi: np.ndarray = field(repr=False, compare=False)
    nabla_xi_xi: Vector7 = field(compare=False)
    div_xi: Scalar
    v: Vector7 = field(compare=False)
    delta_eta: Scalar
    is_killing: bool
    nabla_xi_phi: np.ndarray = field(repr=False, compare=False)
    nabla_xi_Phi: np.ndarray = field(repr=False, compare=False)
    field: ScalarField

    @property
    def xi_parallel(self) -> bool:
        """∇ξ = 0"""
        return self.field.all_zero(self.nabla_xi)

    @property
    def geodesic(self) -> bool:
        """∇_ξξ = 0"""
        return self.field.all_zero(self.nabla_xi_xi)


def xi_diagnostics(
    connection: Connection,
    structure: G2Structure,
    acms: ACMS,
    basis: AdaptedBasis,
    nabla_xi_Phi: np.ndarray,
) -> XiDiagnostics:
    """
    ξ 진단값 계산

    Args:
        connection: 레비-치비타 접속
        structure: G2 구조
        acms: 유도된 구조
        basis: ξ에 적응된 기저
        nabla_xi_Phi: (∇_ξΦ) 행렬 (CovDerivTensor.along(ξ))

    Returns:
        XiDiagnostics
    """
    field_ = acms.field
    xi = acms.xi
    D = connection.derivative_matrix(xi)
    nabla_xi_xi = xi.dot(D)
    div_xi = np.trace(D)

    B = basis.vectors
    weights = basis.weights
    # ∇_{b_a}ξ = Σ_i B[a][i] D[i]
    along_basis = B.dot(D)
    v = field_.zeros(len(xi))
    for a in range(XI_SLOT):
        v = v + weights[a] * structure.cross(B[a], along_basis[a])

    N = B.dot(nabla_eta_matrix(connection, acms)).dot(B.T)
    delta_eta = -sum((weights[a] * N[a, a] for a in range(XI_SLOT)), field_.zero)

    is_killing = field_.all_zero(D + D.T)
    return XiDiagnostics(
        nabla_xi=D,
        nabla_xi_xi=nabla_xi_xi,
        div_xi=div_xi,
        v=v,
        delta_eta=delta_eta,
        is_killing=is_killing,
        nabla_xi_phi=nabla_xi_phi(connection, structure, acms),
        nabla_xi_Phi=nabla_xi_Phi,
        field=field_,
    )
