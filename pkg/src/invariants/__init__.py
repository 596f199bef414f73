"""
Invariants Module

∇Φ의 이차 불변량, c12 축약, ‖α‖²
"""

from .quadratic import INVARIANT_COUNT, InvariantVector, alpha_norm2, contraction_c12, quadratic_invariants

__all__ = ["INVARIANT_COUNT", "InvariantVector", "alpha_norm2", "contraction_c12", "quadratic_invariants"]
