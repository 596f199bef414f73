"""
Exterior Algebra Module

7차원 유클리드 공간 위의 스칼라 백엔드, 벡터, 교대 k-형식 연산
"""

from .scalar import EXACT, FloatField, RationalField, ScalarField, get_field, parse_rational, random_rational
from .forms import (
    DIM,
    KForm,
    basis_vector,
    evaluate,
    format_vector,
    hodge_star,
    inner,
    interior_product,
    make_vector,
    norm2,
    permutation_sign,
    volume_form,
    wedge,
)

__all__ = [
    "EXACT", "FloatField", "RationalField", "ScalarField", "get_field", "parse_rational", "random_rational",
    "DIM", "KForm", "basis_vector", "evaluate", "format_vector", "hodge_star", "inner",
    "interior_product", "make_vector", "norm2", "permutation_sign", "volume_form", "wedge",
]
