"""
G2 Module

3-형식으로 주어진 G2 구조와 2-겹 벡터 외적
"""

from .structure import (
    STANDARD_PHI_TERMS,
    G2Structure,
    cross,
    cross_table,
    standard_phi,
    validate_cross_axioms,
)

__all__ = [
    "STANDARD_PHI_TERMS", "G2Structure", "cross", "cross_table", "standard_phi", "validate_cross_axioms",
]
