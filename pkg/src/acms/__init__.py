"""
ACMS Module

G2 구조가 유도하는 거의 접촉 계량 구조, 적응 기저, 유리수 단위 벡터
"""

from .structure import ACMS, induce_acms, validate_acms
from .basis import XI_SLOT, AdaptedBasis, adapted_basis, rational_unit_vector, rotate_pair

__all__ = [
    "ACMS", "induce_acms", "validate_acms",
    "XI_SLOT", "AdaptedBasis", "adapted_basis", "rational_unit_vector", "rotate_pair",
]
