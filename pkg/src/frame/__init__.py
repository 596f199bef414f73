"""
Frame Module

동차 프레임 다양체: 구조 상수, 레비-치비타 접속, CE 외미분, 발산, G2 평행/준평행 판정
"""

from .structure import StructureConstants, validate_structure
from .connection import (
    Connection,
    antisymmetrized_nabla,
    divergence,
    levi_civita,
    nabla_form,
    validate_connection,
)
from .differential import G2ClassProbe, ce_differential, g2_class_probe, half_convention

__all__ = [
    "StructureConstants", "validate_structure",
    "Connection", "antisymmetrized_nabla", "divergence", "levi_civita", "nabla_form", "validate_connection",
    "G2ClassProbe", "ce_differential", "g2_class_probe", "half_convention",
]
