"""
Manifold Spec Loader

JSON 매니폴드 명세 스키마, 파싱/직렬화, 검증 게이트를 통과한 Manifold 생성
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Literal, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from ..acms.basis import rational_unit_vector
from ..exterior.forms import DIM, KForm, Vector7, norm2
from ..exterior.scalar import ScalarField, get_field, parse_rational
from ..frame.connection import Connection, levi_civita, validate_connection
from ..frame.differential import G2ClassProbe, g2_class_probe
from ..frame.structure import StructureConstants, validate_structure
from ..g2.structure import G2Structure, validate_cross_axioms
from ..utils.checks import CheckReport
from ..utils.errors import AlgebraError, SpecValidationError
from ..utils.logger import get_logger, log_check_report

logger = get_logger("g2acms.pipeline")


def _check_index(value: int) -> int:
    if not 1 <= value <= DIM:
        raise ValueError(f"인덱스는 1..{DIM} 범위여야 합니다: {value}")
    return value


def _check_rational(value: str) -> str:
    parse_rational(value)
    return value


class BracketRecord(BaseModel):
    """[e_i, e_j]의 e_k 성분 (1-기반, i < j)"""
    i: int
    j: int
    k: int
    value: str

    @field_validator("i", "j", "k")
    @classmethod
    def _index(cls, value: int) -> int:
        return _check_index(value)

    @field_validator("value")
    @classmethod
    def _value(cls, value: str) -> str:
        return _check_rational(value)

    @model_validator(mode="after")
    def _ordered(self) -> "BracketRecord":
        if not self.i < self.j:
            raise ValueError(f"괄호 레코드는 i < j 여야 합니다: ({self.i},{self.j})")
        return self


class PhiRecord(BaseModel):
    """φ의 e^{ijk} 계수 (1-기반, i < j < k)"""
    i: int
    j: int
    k: int
    coeff: str

    @field_validator("i", "j", "k")
    @classmethod
    def _index(cls, value: int) -> int:
        return _check_index(value)

    @field_validator("coeff")
    @classmethod
    def _coeff(cls, value: str) -> str:
        return _check_rational(value)

    @model_validator(mode="after")
    def _ordered(self) -> "PhiRecord":
        if not self.i < self.j < self.k:
            raise ValueError(f"φ 레코드는 i < j < k 여야 합니다: ({self.i},{self.j},{self.k})")
        return self


class ManifoldSpec(BaseModel):
    """매니폴드 명세 (유리수는 항상 "p/q" 문자열)"""
    version: Literal[1] = 1
    name: str
    description: str = ""
    brackets: List[BracketRecord] = Field(default_factory=list)
    phi: List[PhiRecord]
    xi: Optional[List[str]] = None
    u: Optional[List[str]] = None
    backend: Literal["exact", "float"] = "exact"
    # invariant: 불변 프레임, 야코비 항등식 강제
    # pointwise: 한 점에서의 프레임 괄호 값, 야코비 실패는 보고만 함
    frame: Literal["invariant", "pointwise"] = "invariant"

    @field_validator("xi")
    @classmethod
    def _xi(cls, value: Optional[List[str]]) -> Optional[List[str]]:
        if value is not None:
            if len(value) != DIM:
                raise ValueError(f"xi는 {DIM}개 성분이어야 합니다: {len(value)}")
            for entry in value:
                _check_rational(entry)
        return value

    @field_validator("u")
    @classmethod
    def _u(cls, value: Optional[List[str]]) -> Optional[List[str]]:
        if value is not None:
            if len(value) != DIM - 1:
                raise ValueError(f"u는 {DIM - 1}개 성분이어야 합니다: {len(value)}")
            for entry in value:
                _check_rational(entry)
        return value

    @model_validator(mode="after")
    def _consistent(self) -> "ManifoldSpec":
        if self.xi is not None and self.u is not None:
            raise ValueError("xi와 u는 동시에 지정할 수 없습니다")
        seen = set()
        for record in self.brackets:
            key = (record.i, record.j, record.k)
            if key in seen:
                raise ValueError(f"중복된 괄호 레코드: {key}")
            seen.add(key)
        seen = set()
        for record in self.phi:
            key = (record.i, record.j, record.k)
            if key in seen:
                raise ValueError(f"중복된 φ 레코드: {key}")
            seen.add(key)
        return self


@dataclass(frozen=True)
class Manifold:
    """
    검증 게이트를 통과한 균질 프레임 매니폴드

    Attributes:
        spec: 원본 명세
        constants: 구조 상수
        connection: 레비-치비타 접속
        structure: G2 구조
        probe: 평행/준평행 판정
        checks: 구조 상수, 외적 공리, 접속 검증 보고서
    """
    spec: ManifoldSpec = field(repr=False)
    field: ScalarField
    constants: StructureConstants = field(repr=False)
    connection: Connection = field(repr=False)
    structure: G2Structure = field(repr=False)
    probe: G2ClassProbe = field(repr=False)
    checks: Tuple[CheckReport, ...] = field(default=(), repr=False)

    @property
    def name(self) -> str:
        return self.spec.name


def _location(error: dict) -> str:
    return ".".join(str(part) for part in error.get("loc", ())) or "spec"


def load_spec(data: Union[dict, str]) -> ManifoldSpec:
    """
    dict 또는 JSON 문자열을 ManifoldSpec으로 변환

    Raises:
        SpecValidationError: JSON 형식 오류나 스키마 위반 (위치 포함)
    """
    try:
        if isinstance(data, str):
            data = json.loads(data)
        return ManifoldSpec.model_validate(data)
    except json.JSONDecodeError as e:
        raise SpecValidationError(f"JSON 파싱 실패: {e.msg}", location=f"line {e.lineno}, column {e.colno}")
    except ValidationError as e:
        first = e.errors()[0]
        raise SpecValidationError(first.get("msg", "스키마 위반"), location=_location(first))


def parse_spec(path: Union[str, Path], validate: bool = True) -> ManifoldSpec:
    """
    매니폴드 명세 파일 읽기

    파일이 없고 이름이 내장 예제와 같으면 내장 예제를 사용한다.

    Args:
        path: JSON 파일 경로 또는 내장 예제 이름
        validate: 야코비/외적 공리/ξ 단위성 게이트 실행 여부

    Returns:
        ManifoldSpec

    Raises:
        SpecValidationError: 파일 없음, 스키마 위반, 게이트 실패
    """
    from .builtin import get_builtin

    path = Path(path)
    if path.exists():
        spec = load_spec(path.read_text(encoding="utf-8"))
    else:
        spec = get_builtin(str(path))
        if spec is None:
            raise SpecValidationError("명세 파일을 찾을 수 없습니다", location=str(path))

    if validate:
        manifold = build_manifold(spec)
        resolve_xi(spec, manifold.field)
    logger.debug(f"명세 로드: {spec.name}")
    return spec


def serialize_spec(spec: ManifoldSpec) -> str:
    """유리수 문자열을 그대로 보존하는 JSON 직렬화"""
    return json.dumps(spec.model_dump(exclude_none=True), indent=2, ensure_ascii=False)


def _brackets(spec: ManifoldSpec) -> List[Tuple[int, int, int, str]]:
    return [(record.i - 1, record.j - 1, record.k - 1, record.value) for record in spec.brackets]


def build_manifold(spec: ManifoldSpec, backend: Optional[str] = None) -> Manifold:
    """
    명세로부터 구조 상수, 접속, G2 구조를 만들고 검증 게이트를 실행

    Args:
        spec: 매니폴드 명세
        backend: 백엔드 강제 지정 (None이면 명세 값)

    Returns:
        Manifold

    Raises:
        SpecValidationError: 야코비 항등식 또는 외적 공리 실패
    """
    field_ = get_field(backend or spec.backend)
    constants = StructureConstants.from_brackets(_brackets(spec), field_)
    structure_report = validate_structure(constants)
    failure = structure_report.first_failure()
    if failure is not None and spec.frame == "pointwise" and failure.name == "jacobi":
        logger.warning(f"{spec.name}: 점별 프레임 괄호가 야코비 항등식을 만족하지 않음")
    elif failure is not None:
        raise SpecValidationError(f"구조 상수 검증 실패 ({failure.name})", location="brackets", witness=failure.witness)

    phi = KForm.from_terms(
        3, {(record.i - 1, record.j - 1, record.k - 1): record.coeff for record in spec.phi}, field_
    )
    structure = G2Structure.from_form(phi)
    cross_report = validate_cross_axioms(structure)
    failure = cross_report.first_failure()
    if failure is not None:
        raise SpecValidationError(f"외적 공리 검증 실패 ({failure.name})", location="phi", witness=failure.witness)

    connection = levi_civita(constants)
    checks = (structure_report, cross_report, validate_connection(connection, constants))
    for report in checks:
        log_check_report(logger, report)
    probe = g2_class_probe(constants, connection, structure)
    logger.debug(f"매니폴드 생성: {spec.name} ({field_.name})")
    return Manifold(spec, field_, constants, connection, structure, probe, checks)


def resolve_xi(
    spec: ManifoldSpec,
    field_: ScalarField,
    xi: Optional[Sequence[str]] = None,
    u: Optional[Sequence[str]] = None,
) -> Vector7:
    """
    분석할 ξ 결정: 인자 xi, 인자 u, 명세 xi, 명세 u 순서, 모두 없으면 e7

    Raises:
        SpecValidationError: 성분 개수/표기 오류 또는 단위 벡터가 아님 (제곱 노름 보고)
    """
    if xi is not None and u is not None:
        raise SpecValidationError("xi와 u는 동시에 지정할 수 없습니다", location="xi")
    if xi is None and u is None:
        xi, u = spec.xi, spec.u

    try:
        if xi is not None:
            if len(xi) != DIM:
                raise ValueError(f"xi는 {DIM}개 성분이어야 합니다: {len(xi)}")
            vector = field_.asarray(field_.coerce(value) for value in xi)
        else:
            vector = rational_unit_vector(list(u) if u is not None else ["0"] * (DIM - 1), field_)
    except (ValueError, TypeError, AlgebraError) as e:
        raise SpecValidationError(str(e), location="xi" if xi is not None else "u")

    measured = norm2(vector)
    if not field_.equal(measured, field_.one):
        raise SpecValidationError(
            "ξ는 단위 벡터여야 합니다", location="xi", witness=f"g(ξ,ξ) = {field_.format(measured)}"
        )
    return vector
