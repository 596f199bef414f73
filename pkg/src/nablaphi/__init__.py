"""
Nabla Phi Module

기본 2-형식의 공변미분 α = ∇Φ, 공미분 δΦ/δη, ξ 진단값
"""

from .tensor import (
    CovDerivTensor,
    codifferential_phi,
    nabla_phi_tensor,
    phi_derivative_tensor,
    phi_in_basis,
    to_basis,
)
from .diagnostics import (
    XiDiagnostics,
    nabla_eta_matrix,
    nabla_phi_endomorphism,
    nabla_xi_phi,
    xi_diagnostics,
)

__all__ = [
    "CovDerivTensor", "codifferential_phi", "nabla_phi_tensor", "phi_derivative_tensor", "phi_in_basis", "to_basis",
    "XiDiagnostics", "nabla_eta_matrix", "nabla_phi_endomorphism", "nabla_xi_phi", "xi_diagnostics",
]
