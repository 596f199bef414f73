"""
Exterior Algebra on R^7

고정된 정규직교 프레임 e1..e7 위의 벡터와 교대 k-형식:
쐐기곱, 내적(interior product), 호지 스타, 평가
"""

import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Mapping, Sequence, Tuple

import numpy as np

from ..utils.errors import AlgebraError
from .scalar import EXACT, Scalar, ScalarField

DIM = 7
Index = Tuple[int, ...]
Vector7 = np.ndarray

# 방향: e^{1234567} 양수
VOLUME_INDEX: Index = tuple(range(DIM))


def permutation_sign(sequence: Sequence[int]) -> int:
    """반복 원소가 있으면 0, 아니면 정렬 순열의 부호"""
    if len(set(sequence)) != len(sequence):
        return 0
    inversions = sum(
        1 for a, b in itertools.combinations(range(len(sequence)), 2) if sequence[a] > sequence[b]
    )
    return -1 if inversions % 2 else 1


def basis_vector(index: int, field_: ScalarField = EXACT) -> Vector7:
    """프레임 벡터 e_{index+1}"""
    vector = field_.zeros(DIM)
    vector[index] = field_.one
    return vector


def make_vector(values: Iterable, field_: ScalarField = EXACT) -> Vector7:
    vector = field_.asarray(values)
    if vector.shape != (DIM,):
        raise AlgebraError(f"7차원 벡터가 필요합니다: shape={vector.shape}")
    return vector


def inner(x: Vector7, y: Vector7) -> Scalar:
    """프레임이 정규직교이므로 표준 유클리드 내적"""
    return np.dot(x, y)


def norm2(x: Vector7) -> Scalar:
    return np.dot(x, x)


def format_vector(vector: Vector7, field_: ScalarField = EXACT, labels: Sequence[str] = ()) -> str:
    """벡터를 "-e1 + 3/5e2" 형태의 문자열로 변환"""
    labels = labels or [f"e{i + 1}" for i in range(DIM)]
    terms: List[str] = []
    for coefficient, label in zip(vector, labels):
        if field_.is_zero(coefficient):
            continue
        text = field_.format(coefficient)
        if text == "1":
            term = label
        elif text == "-1":
            term = f"-{label}"
        else:
            term = f"{text}{label}"
        if terms and not term.startswith("-"):
            term = "+" + term
        terms.append(term)
    return "".join(terms) if terms else "0"


def _canonical(indices: Sequence[int]) -> Tuple[int, Index]:
    return permutation_sign(indices), tuple(sorted(indices))


def parse_monomial(label: str) -> Index:
    """1-기반 문자열 "257"을 0-기반 인덱스 (1, 4, 6)으로"""
    indices = tuple(int(char) - 1 for char in label)
    if any(not 0 <= i < DIM for i in indices):
        raise AlgebraError(f"프레임 인덱스 범위 밖: {label}")
    return indices


@dataclass(frozen=True)
class KForm:
    """
    상수 계수 교대 k-형식

    Attributes:
        degree: 차수 (0..7)
        coeffs: 순증가 인덱스 튜플 → 계수 (없는 튜플은 0)
        field: 스칼라 백엔드
    """
    degree: int
    coeffs: Mapping[Index, Scalar]
    field: ScalarField = field(default=EXACT, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.degree <= DIM:
            raise AlgebraError(f"차수 범위 밖: {self.degree}")
        for index in self.coeffs:
            if len(index) != self.degree or list(index) != sorted(set(index)):
                raise AlgebraError(f"순증가 인덱스가 아님: {index}")

    @classmethod
    def from_terms(cls, degree: int, terms: Mapping[Index, object], field_: ScalarField = EXACT) -> "KForm":
        """임의 순서 인덱스 항들을 부호를 반영해 정규화"""
        coeffs: Dict[Index, Scalar] = {}
        for indices, value in terms.items():
            if len(indices) != degree or any(not 0 <= i < DIM for i in indices):
                raise AlgebraError(f"잘못된 인덱스: {indices}")
            sign, key = _canonical(indices)
            if sign == 0:
                continue
            coeffs[key] = coeffs.get(key, field_.zero) + sign * field_.coerce(value)
        return cls(degree, _prune(coeffs, field_), field_)

    @classmethod
    def from_monomials(cls, degree: int, terms: Mapping[str, object], field_: ScalarField = EXACT) -> "KForm":
        """{"123": 1, "257": -1} 같은 1-기반 표기로 생성"""
        return cls.from_terms(degree, {parse_monomial(label): value for label, value in terms.items()}, field_)

    @classmethod
    def from_evaluator(cls, degree: int, evaluator: Callable[[Index], Scalar], field_: ScalarField = EXACT) -> "KForm":
        """모든 순증가 튜플 J에 대해 계수 = evaluator(J) (행렬식 규약)"""
        coeffs = {index: evaluator(index) for index in itertools.combinations(range(DIM), degree)}
        return cls(degree, _prune(coeffs, field_), field_)

    @classmethod
    def zero(cls, degree: int, field_: ScalarField = EXACT) -> "KForm":
        return cls(degree, {}, field_)

    @classmethod
    def covector(cls, vector: Vector7, field_: ScalarField = EXACT) -> "KForm":
        """계량으로 벡터에 대응하는 1-형식"""
        return cls.from_terms(1, {(i,): vector[i] for i in range(DIM)}, field_)

    def coefficient(self, indices: Sequence[int]) -> Scalar:
        sign, key = _canonical(indices)
        if sign == 0:
            return self.field.zero
        return sign * self.coeffs.get(key, self.field.zero)

    def __add__(self, other: "KForm") -> "KForm":
        _check_same_degree(self, other)
        coeffs = dict(self.coeffs)
        for key, value in other.coeffs.items():
            coeffs[key] = coeffs.get(key, self.field.zero) + value
        return KForm(self.degree, _prune(coeffs, self.field), self.field)

    def __neg__(self) -> "KForm":
        return self.scale(-1)

    def __sub__(self, other: "KForm") -> "KForm":
        return self + (-other)

    def scale(self, factor) -> "KForm":
        factor = self.field.coerce(factor) if not isinstance(factor, float) else factor
        return KForm(self.degree, _prune({k: factor * v for k, v in self.coeffs.items()}, self.field), self.field)

    def is_zero(self, scale: Scalar = 1) -> bool:
        return all(self.field.is_zero(value, scale) for value in self.coeffs.values())

    def is_close(self, other: "KForm", scale: Scalar = 1) -> bool:
        return self.degree == other.degree and (self - other).is_zero(scale)

    def norm2(self) -> Scalar:
        """계수 제곱합 (행렬식 규약에서 기저 형식은 단위 노름)"""
        return sum((value * value for value in self.coeffs.values()), self.field.zero)

    def __call__(self, *vectors: Vector7) -> Scalar:
        return evaluate(self, vectors)

    def label(self, prefix: str = "e") -> str:
        """"e^{123}-e^{257}" 형태 표기"""
        if not self.coeffs:
            return "0"
        parts: List[str] = []
        for index in sorted(self.coeffs):
            value = self.field.format(self.coeffs[index])
            monomial = f"{prefix}^{{{''.join(str(i + 1) for i in index)}}}" if index else "1"
            if value == "1":
                term = monomial
            elif value == "-1":
                term = f"-{monomial}"
            else:
                term = f"{value}{monomial}"
            if parts and not term.startswith("-"):
                term = "+" + term
            parts.append(term)
        return "".join(parts)


def _prune(coeffs: Mapping[Index, Scalar], field_: ScalarField) -> Dict[Index, Scalar]:
    return {key: value for key, value in sorted(coeffs.items()) if not field_.is_zero(value)}


def _check_same_degree(a: KForm, b: KForm) -> None:
    if a.degree != b.degree:
        raise AlgebraError(f"차수가 다른 형식의 합: {a.degree} != {b.degree}")


def wedge(a: KForm, b: KForm) -> KForm:
    """
    쐐기곱 a∧b

    Args:
        a: j-형식
        b: k-형식

    Returns:
        (j+k)-형식 (j+k > 7이면 AlgebraError)
    """
    degree = a.degree + b.degree
    if degree > DIM:
        raise AlgebraError(f"쐐기곱 차수 초과: {a.degree} + {b.degree} > {DIM}")
    field_ = a.field
    coeffs: Dict[Index, Scalar] = {}
    for left, x in a.coeffs.items():
        for right, y in b.coeffs.items():
            sign, key = _canonical(left + right)
            if sign == 0:
                continue
            coeffs[key] = coeffs.get(key, field_.zero) + sign * x * y
    return KForm(degree, _prune(coeffs, field_), field_)


def hodge_star(a: KForm) -> KForm:
    """⋆(e^I) = sign(I, I^c)·e^{I^c}, 방향 e^{1234567}"""
    coeffs: Dict[Index, Scalar] = {}
    for index, value in a.coeffs.items():
        complement = tuple(i for i in range(DIM) if i not in index)
        coeffs[complement] = permutation_sign(index + complement) * value
    return KForm(DIM - a.degree, _prune(coeffs, a.field), a.field)


def interior_product(x: Vector7, a: KForm) -> KForm:
    """(i_x a)(y1..y_{k-1}) = a(x, y1..y_{k-1})"""
    if a.degree == 0:
        raise AlgebraError("0-형식에는 내부곱을 적용할 수 없습니다")
    field_ = a.field
    coeffs: Dict[Index, Scalar] = {}
    for index, value in a.coeffs.items():
        for position, slot in enumerate(index):
            if field_.is_zero(x[slot]):
                continue
            rest = index[:position] + index[position + 1:]
            sign = -1 if position % 2 else 1
            coeffs[rest] = coeffs.get(rest, field_.zero) + sign * x[slot] * value
    return KForm(a.degree - 1, _prune(coeffs, field_), field_)


def _determinant(rows: List[List[Scalar]], zero: Scalar) -> Scalar:
    size = len(rows)
    total = zero
    for perm in itertools.permutations(range(size)):
        product = permutation_sign(perm)
        for row, column in enumerate(perm):
            product = product * rows[row][column]
            if product == 0:
                break
        total = total + product
    return total


def evaluate(a: KForm, vectors: Sequence[Vector7]) -> Scalar:
    """
    행렬식 규약의 완전 반대칭 다중선형 평가

    Args:
        a: k-형식
        vectors: 정확히 k개의 벡터

    Returns:
        a(x1..xk)
    """
    if len(vectors) != a.degree:
        raise AlgebraError(f"{a.degree}-형식에 {len(vectors)}개 인자")
    field_ = a.field
    if a.degree == 0:
        return a.coeffs.get((), field_.zero)
    total = field_.zero
    for index, value in a.coeffs.items():
        minor = [[vector[column] for column in index] for vector in vectors]
        total = total + value * _determinant(minor, field_.zero)
    return total


def volume_form(field_: ScalarField = EXACT) -> KForm:
    return KForm(DIM, {VOLUME_INDEX: field_.one}, field_)
