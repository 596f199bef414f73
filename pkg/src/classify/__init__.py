"""
Classify Module

D1/D2/C12-공간 소속 판정, C1..C12 필요조건 소거, 이름 있는 클래스 판정, 정리 감사
"""

from .relations import (
    CLASS_NAMES,
    RELATIONS,
    ClassElimination,
    ClassRelation,
    ClassVerdict,
    SpaceMembership,
    c_space_symmetry,
    class_elimination,
    space_membership,
)
from .named import NAMED_CLASSES, NamedResult, named_checks, sasakian_relation, trans_sasakian_necessary
from .audit import AuditInput, AuditItem, AuditReport, theorem_audit

__all__ = [
    "CLASS_NAMES", "RELATIONS", "ClassElimination", "ClassRelation", "ClassVerdict",
    "SpaceMembership", "c_space_symmetry", "class_elimination", "space_membership",
    "NAMED_CLASSES", "NamedResult", "named_checks", "sasakian_relation", "trans_sasakian_necessary",
    "AuditInput", "AuditItem", "AuditReport", "theorem_audit",
]
