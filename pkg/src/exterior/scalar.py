"""
Scalar Backends

정확한 유리수(Fraction) 또는 부동소수점 스칼라를 하나의 필드 인터페이스로 제공
"""

import math
import random
import re
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Iterable, Optional, Tuple, Union

import numpy as np

from ..utils.config import config

Scalar = Union[Fraction, float]

_RATIONAL_PATTERN = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def parse_rational(text: str) -> Fraction:
    """
    "p/q" 형식 문자열을 손실 없이 Fraction으로 변환

    Args:
        text: 유리수 문자열 (정수 또는 p/q, 부동소수 표기는 거부)

    Returns:
        기약분수
    """
    if not isinstance(text, str) or not _RATIONAL_PATTERN.match(text):
        raise ValueError(f"잘못된 유리수 표기: {text!r}")
    numerator, _, denominator = text.replace(" ", "").partition("/")
    if denominator and int(denominator) == 0:
        raise ValueError(f"분모가 0인 유리수: {text!r}")
    return Fraction(int(numerator), int(denominator) if denominator else 1)


class ScalarField(ABC):
    """스칼라 백엔드 공통 인터페이스"""

    name: str = ""
    dtype: Any = object

    @property
    @abstractmethod
    def zero(self) -> Scalar:
        ...

    @property
    @abstractmethod
    def one(self) -> Scalar:
        ...

    @abstractmethod
    def coerce(self, value: Any) -> Scalar:
        """정수/Fraction/문자열을 백엔드 스칼라로 변환"""

    @abstractmethod
    def is_zero(self, value: Scalar, scale: Scalar = 1) -> bool:
        """영 판정 (float 백엔드는 τ·max(1, scale) 기준)"""

    @abstractmethod
    def exact_sqrt(self, value: Scalar) -> Optional[Scalar]:
        """백엔드 안에서 표현 가능한 제곱근 (없으면 None)"""

    @abstractmethod
    def format(self, value: Scalar) -> str:
        ...

    @property
    def exact(self) -> bool:
        return self.name == "exact"

    def equal(self, a: Scalar, b: Scalar, scale: Scalar = 1) -> bool:
        return self.is_zero(a - b, scale)

    def zeros(self, shape: Union[int, Tuple[int, ...]]) -> np.ndarray:
        return np.full(shape, self.zero, dtype=self.dtype)

    def asarray(self, values: Iterable[Any]) -> np.ndarray:
        array = np.array(list(values), dtype=object)
        flat = [self.coerce(item) for item in array.ravel()]
        return np.array(flat, dtype=self.dtype).reshape(array.shape)

    def all_zero(self, array: np.ndarray, scale: Scalar = 1) -> bool:
        return all(self.is_zero(item, scale) for item in np.asarray(array).ravel())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name})"


class RationalField(ScalarField):
    """정확한 유리수 백엔드 (기약분수 표현, 같음은 구조적 비교)"""

    name = "exact"
    dtype = object

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, np.integer)):
            return Fraction(int(value))
        if isinstance(value, str):
            return parse_rational(value)
        raise TypeError(f"정확한 백엔드는 {type(value).__name__} 값을 받을 수 없습니다: {value!r}")

    def is_zero(self, value: Scalar, scale: Scalar = 1) -> bool:
        return value == 0

    def exact_sqrt(self, value: Scalar) -> Optional[Fraction]:
        value = self.coerce(value)
        if value < 0:
            return None
        num_root = math.isqrt(value.numerator)
        den_root = math.isqrt(value.denominator)
        if num_root * num_root == value.numerator and den_root * den_root == value.denominator:
            return Fraction(num_root, den_root)
        return None

    def format(self, value: Scalar) -> str:
        return str(self.coerce(value))


class FloatField(ScalarField):
    """부동소수점 백엔드 (무리수 단위 벡터용)"""

    name = "float"
    dtype = float

    def __init__(self, tolerance: float):
        self.tolerance = tolerance

    @property
    def zero(self) -> float:
        return 0.0

    @property
    def one(self) -> float:
        return 1.0

    def coerce(self, value: Any) -> float:
        if isinstance(value, str):
            return float(parse_rational(value))
        return float(value)

    def is_zero(self, value: Scalar, scale: Scalar = 1) -> bool:
        return abs(float(value)) <= self.tolerance * max(1.0, abs(float(scale)))

    def exact_sqrt(self, value: Scalar) -> Optional[float]:
        value = float(value)
        if value < -self.tolerance:
            return None
        return math.sqrt(max(value, 0.0))

    def format(self, value: Scalar) -> str:
        value = float(value)
        if value == 0:
            value = 0.0
        return f"{value:.12g}"


EXACT = RationalField()


def get_field(backend: Optional[str] = None, tolerance: Optional[float] = None) -> ScalarField:
    """
    이름으로 스칼라 백엔드 반환

    Args:
        backend: "exact" 또는 "float" (None이면 설정값)
        tolerance: float 백엔드 τ (None이면 G2C_TOLERANCE 설정값)

    Returns:
        스칼라 필드
    """
    backend = backend or config.numerics.backend
    if backend == "exact":
        return EXACT
    if backend == "float":
        return FloatField(tolerance if tolerance is not None else config.numerics.tolerance)
    raise ValueError(f"지원하지 않는 백엔드: {backend}")


def random_rational(rng: random.Random, bound: int) -> Fraction:
    """분자 |p| ≤ bound, 분모 1 ≤ q ≤ bound인 유리수 추출"""
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
