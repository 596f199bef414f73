"""
Chevalley-Eilenberg Differential

불변 형식의 외미분 (1/2 인자 없는 규약)과 G2 구조의 평행/준평행 판정
"""

import itertools
from dataclasses import dataclass
from typing import Optional, Tuple

from ..exterior.forms import DIM, KForm, hodge_star
from ..exterior.scalar import Scalar
from ..g2.structure import G2Structure
from ..utils.logger import get_logger
from .connection import Connection, nabla_form
from .structure import StructureConstants

logger = get_logger("g2acms.frame")


def ce_differential(constants: StructureConstants, form: KForm) -> KForm:
    """
    불변 k-형식의 외미분

    dw(x_0..x_k) = Σ_{i<j} (-1)^{i+j} w([x_i,x_j], x_0..x̂_i..x̂_j..x_k)

    Args:
        constants: 구조 상수
        form: 상수 계수 k-형식

    Returns:
        (k+1)-형식 (1-형식에서 dη(x,y) = -η([x,y]))
    """
    field_ = form.field
    c = constants.c
    if form.degree == DIM:
        return KForm.zero(DIM, field_)

    def component(index: Tuple[int, ...]) -> Scalar:
        total = field_.zero
        if form.degree == 0:
            return total
        for a, b in itertools.combinations(range(len(index)), 2):
            rest = tuple(slot for position, slot in enumerate(index) if position not in (a, b))
            sign = -1 if (a + b) % 2 else 1
            bracket = c[index[a], index[b]]
            for m in range(DIM):
                if field_.is_zero(bracket[m]):
                    continue
                total = total + sign * bracket[m] * form.coefficient((m,) + rest)
        return total

    return KForm.from_evaluator(form.degree + 1, component, field_)


def half_convention(form: KForm) -> KForm:
    """dη(x,y) = ½{(∇_xη)(y) - (∇_yη)(x)} 규약으로 환산한 값"""
    return form.scale(form.field.coerce("1/2"))


@dataclass(frozen=True)
class G2ClassProbe:
    """
    G2 구조 판정 결과

    Attributes:
        parallel: 모든 i에 대해 ∇_{e_i}φ = 0
        nearly_parallel: dφ = k⋆φ 인 상수 k (없으면 None). k = 0은 평행일 때만
        dphi: dφ
        star_phi: ⋆φ
    """
    parallel: bool
    nearly_parallel: Optional[Scalar]
    dphi: KForm
    star_phi: KForm

    @property
    def is_nearly_parallel(self) -> bool:
        return self.nearly_parallel is not None

    @property
    def closed(self) -> bool:
        return self.dphi.is_zero()


def g2_class_probe(constants: StructureConstants, connection: Connection, structure: G2Structure) -> G2ClassProbe:
    """
    평행(∇φ = 0) 및 준평행(dφ = k⋆φ) 판정

    준평행 상수 k는 성분별 정확한 비례로만 인정한다. dφ = 0 이지만 ∇φ ≠ 0 인
    닫힌 구조는 준평행이 아니다.
    """
    field_ = structure.field
    phi = structure.phi
    parallel = all(nabla_form(connection, phi, i).is_zero() for i in range(DIM))

    dphi = ce_differential(constants, phi)
    star_phi = hodge_star(phi)
    k = None
    if star_phi.coeffs:
        pivot = max(star_phi.coeffs, key=lambda index: abs(star_phi.coeffs[index]))
        candidate = dphi.coefficient(pivot) / star_phi.coeffs[pivot]
        scale = field_.exact_sqrt(star_phi.norm2()) if not field_.exact else 1
        if (dphi - star_phi.scale(candidate)).is_zero(scale):
            k = candidate
    elif dphi.is_zero():
        k = field_.zero
    if k is not None and field_.is_zero(k) and not parallel:
        k = None

    logger.debug(f"G2 판정: parallel={parallel}, k={None if k is None else field_.format(k)}")
    return G2ClassProbe(parallel, k, dphi, star_phi)
