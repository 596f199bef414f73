"""
Adapted Bases

ξ로 끝나는 직교 기저 (f1..f6, ξ)와 유리수 단위 벡터 생성기
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from ..exterior.forms import DIM, Vector7, basis_vector, format_vector, inner, norm2
from ..exterior.scalar import EXACT, Scalar, ScalarField
from ..utils.errors import AlgebraError

XI_SLOT = DIM - 1


@dataclass(frozen=True)
class AdaptedBasis:
    """
    (b_1..b_6, ξ) 직교 기저

    정확한 백엔드에서는 제곱 노름이 유리수의 제곱일 때만 정규화하므로
    b_a는 직교하지만 단위가 아닐 수 있다. 정규직교 기저 f_a = b_a/√n_a 위의 합은
    가중치 w_a = 1/n_a로 계산한다.

    Attributes:
        vectors: 행 a = b_a의 프레임 좌표
        norms2: n_a = g(b_a, b_a)
        dropped: 제외된 프레임 인덱스 (0-기반)
    """
    vectors: np.ndarray = field(repr=False, compare=False)
    norms2: np.ndarray = field(repr=False, compare=False)
    dropped: int
    field: ScalarField

    @property
    def xi(self) -> Vector7:
        return self.vectors[XI_SLOT]

    @property
    def weights(self) -> np.ndarray:
        return self.field.asarray(self.field.one / n for n in self.norms2)

    @property
    def orthonormal(self) -> bool:
        return all(self.field.equal(n, self.field.one) for n in self.norms2)

    def label(self, a: int) -> str:
        return "ξ" if a == XI_SLOT else f"f{a + 1}"

    def describe(self, a: int) -> str:
        """"f1 = e2" 형태 (정규화되지 않은 경우 √n 표기)"""
        text = format_vector(self.vectors[a], self.field)
        if not self.field.equal(self.norms2[a], self.field.one):
            text = f"({text})/√{self.field.format(self.norms2[a])}"
        return f"{self.label(a)} = {text}"

    def gram(self) -> np.ndarray:
        return self.vectors.dot(self.vectors.T)


def _normalize(vector: Vector7, field_: ScalarField):
    n = norm2(vector)
    root = field_.exact_sqrt(n)
    if root is not None and not field_.is_zero(root):
        return vector * (field_.one / root), field_.one
    return vector, n


def adapted_basis(xi: Vector7, field_: ScalarField = EXACT, order: Optional[Sequence[int]] = None) -> AdaptedBasis:
    """
    ξ에 적응된 기저 생성

    |g(e_i, ξ)|가 가장 큰 프레임 벡터(동률이면 낮은 인덱스)를 제외하고
    나머지 6개의 ξ-수직 사영을 순서대로 그람-슈미트 직교화한다.

    Args:
        xi: 단위 벡터
        field_: 스칼라 백엔드
        order: 남은 프레임 인덱스의 처리 순서 (None이면 인덱스 순)

    Returns:
        (b_1..b_6, ξ)
    """
    xi = field_.asarray(xi)
    magnitudes = [abs(value) for value in xi]
    dropped = magnitudes.index(max(magnitudes))
    remaining = [i for i in range(DIM) if i != dropped]
    if order is not None:
        if sorted(order) != remaining:
            raise AlgebraError(f"처리 순서는 {[i + 1 for i in remaining]}의 순열이어야 합니다")
        remaining = list(order)

    vectors: List[Vector7] = []
    norms: List[Scalar] = []
    for i in remaining:
        b = basis_vector(i, field_) - xi * xi[i]
        for previous, n in zip(vectors, norms):
            b = b - previous * (inner(b, previous) / n)
        b, n = _normalize(b, field_)
        vectors.append(b)
        norms.append(n)
    vectors.append(xi)
    norms.append(field_.one)
    return AdaptedBasis(np.array(vectors, dtype=field_.dtype), field_.asarray(norms), dropped, field_)


def rotate_pair(basis: AdaptedBasis, a: int, b: int, cos: Scalar, sin: Scalar) -> AdaptedBasis:
    """
    같은 노름의 두 기저 벡터 b_a, b_b를 회전 (cos² + sin² = 1)

    Raises:
        AlgebraError: ξ 슬롯, 노름이 다른 쌍, 회전이 아닌 계수
    """
    field_ = basis.field
    cos, sin = field_.coerce(cos), field_.coerce(sin)
    if XI_SLOT in (a, b) or a == b:
        raise AlgebraError("ξ가 아닌 서로 다른 두 기저 벡터만 회전할 수 있습니다")
    if not field_.equal(basis.norms2[a], basis.norms2[b]):
        raise AlgebraError(f"노름이 다른 쌍은 회전할 수 없습니다: {basis.label(a)}, {basis.label(b)}")
    if not field_.equal(cos * cos + sin * sin, field_.one):
        raise AlgebraError("cos² + sin² ≠ 1")
    vectors = basis.vectors.copy()
    vectors[a] = basis.vectors[a] * cos + basis.vectors[b] * sin
    vectors[b] = basis.vectors[b] * cos - basis.vectors[a] * sin
    return AdaptedBasis(vectors, basis.norms2.copy(), basis.dropped, field_)


def rational_unit_vector(u: Sequence, field_: ScalarField = EXACT) -> Vector7:
    """
    입체 사영의 역: ξ = (2u_1..2u_6, 1-|u|²) / (1+|u|²)

    Args:
        u: 유리수 6개

    Returns:
        정확히 단위인 벡터
    """
    if len(u) != DIM - 1:
        raise AlgebraError(f"u는 {DIM - 1}개 성분이어야 합니다: {len(u)}")
    u = [field_.coerce(value) for value in u]
    size = sum((value * value for value in u), field_.zero)
    denominator = field_.one + size
    coords = [2 * value / denominator for value in u] + [(field_.one - size) / denominator]
    return field_.asarray(coords)
