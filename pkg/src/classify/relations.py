"""
Class Relations

이차 불변량 관계에 의한 C1..C12, D1, D2 필요조건 소거와
D1, D2, C12-공간, 자명 클래스의 정확한 소속 판정
"""

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..acms.basis import XI_SLOT
from ..invariants.quadratic import INVARIANT_COUNT, InvariantVector
from ..nablaphi.tensor import CovDerivTensor
from ..utils.checks import CheckReport

# Chinea-Gonzalez 관계의 집합 A
SET_A = frozenset({1, 2, 3, 4, 5, 7, 11, 13, 15, 16, 17, 18})
# dim = 2n+1 = 7
N = 3
NORM = "norm2"
C12_NORM = "c12_norm2"


class ClassVerdict(str, Enum):
    EXCLUDED = "excluded"
    CONSISTENT = "consistent"


@dataclass(frozen=True)
class ClassRelation:
    """
    한 클래스의 불변량 관계

    Attributes:
        name: "C1".."C12", "D1", "D2"
        chain: (키, 계수) 목록, 모든 계수·값이 서로 같아야 함
        zeros: 0이어야 하는 불변량 번호
    """
    name: str
    chain: Tuple[Tuple[str, Fraction], ...]
    zeros: frozenset


def _above(m: int) -> frozenset:
    return frozenset(range(m, INVARIANT_COUNT + 1))


def _chain(*items) -> Tuple[Tuple[str, Fraction], ...]:
    return tuple((key, Fraction(coefficient)) for key, coefficient in items)


def _signed(signs: Sequence[int], last: Tuple[str, Fraction]):
    keys = ("i6", "i8", "i9", "i12")
    return _chain(*[(key, sign) for key, sign in zip(keys, signs)], last)


RELATIONS: Tuple[ClassRelation, ...] = (
    ClassRelation("C1", _chain(("i1", 1), ("i2", -1), ("i3", -1), (NORM, 1)), _above(4)),
    ClassRelation("C2", _chain(("i1", 1), ("i2", 2), ("i3", -1), (NORM, 1)), _above(4)),
    ClassRelation("C3", _chain(("i1", 1), ("i3", 1), (NORM, 1)), frozenset({2}) | _above(4)),
    ClassRelation(
        "C4",
        _chain(("i1", 1), ("i3", 1), ("i4", Fraction(N, (N - 1) ** 2)), (C12_NORM, Fraction(N, (N - 1) ** 2))),
        frozenset({2}) | _above(5),
    ),
    ClassRelation("C5", _signed((1, -1, 1, -1), ("i14", Fraction(1, 2 * N))), frozenset({10}) | SET_A),
    ClassRelation("C6", _signed((1, 1, 1, 1), ("i10", Fraction(1, 2 * N))), frozenset({14}) | SET_A),
    ClassRelation("C7", _signed((1, 1, 1, -1), (NORM, Fraction(1, 2))), frozenset({10, 14}) | SET_A),
    ClassRelation("C8", _signed((1, -1, 1, -1), (NORM, Fraction(1, 2))), frozenset({10, 14}) | SET_A),
    ClassRelation("C9", _signed((1, 1, -1, -1), (NORM, Fraction(1, 2))), frozenset({10, 14}) | SET_A),
    ClassRelation("C10", _signed((1, -1, -1, 1), (NORM, Fraction(1, 2))), frozenset({10, 14}) | SET_A),
    ClassRelation("C11", _chain(("i5", 1), (NORM, 1)), _above(1) - {5}),
    ClassRelation("C12", _chain(("i16", 1), (NORM, 1)), _above(1) - {16}),
    ClassRelation("D1", (), _above(5)),
    ClassRelation("D2", (), frozenset({1, 2, 3, 4, 16, 17, 18})),
)

CLASS_NAMES = tuple(relation.name for relation in RELATIONS if relation.name.startswith("C"))


@dataclass
class ClassElimination:
    """
    클래스별 소거 판정 (필요조건일 뿐 충분조건이 아님)

    Attributes:
        trivial: α = 0이면 True, 모든 클래스가 자명하게 consistent
        verdicts: 클래스 이름 → 판정
        violations: 클래스 이름 → 위반된 관계 목록
    """
    trivial: bool
    verdicts: Dict[str, ClassVerdict]
    violations: Dict[str, List[str]] = field(default_factory=dict)

    def excluded(self, name: str) -> bool:
        return self.verdicts[name] is ClassVerdict.EXCLUDED

    def witness(self, name: str) -> Optional[str]:
        items = self.violations.get(name)
        return "; ".join(items) if items else None


def _value(invariants: InvariantVector, key: str):
    if key == NORM:
        return invariants.norm2
    if key == C12_NORM:
        return invariants.c12_norm2
    return invariants[int(key[1:])]


def _check_relation(relation: ClassRelation, invariants: InvariantVector) -> List[str]:
    field_ = invariants.field
    scale = invariants.scale
    problems: List[str] = []
    for m in sorted(relation.zeros):
        if not invariants.is_zero(m):
            problems.append(f"i{m} = {field_.format(invariants[m])} ≠ 0")
    if relation.chain:
        head_key, head_coefficient = relation.chain[0]
        head = field_.coerce(head_coefficient) * _value(invariants, head_key)
        for key, coefficient in relation.chain[1:]:
            other = field_.coerce(coefficient) * _value(invariants, key)
            if not field_.equal(head, other, scale):
                problems.append(
                    f"{_term(head_coefficient, head_key)} = {field_.format(head)} ≠ "
                    f"{_term(coefficient, key)} = {field_.format(other)}"
                )
    return problems


def _term(coefficient: Fraction, key: str) -> str:
    label = "‖α‖²" if key == NORM else ("Σc12²" if key == C12_NORM else key)
    if coefficient == 1:
        return label
    if coefficient == -1:
        return f"-{label}"
    return f"{coefficient}·{label}"


def class_elimination(invariants: InvariantVector) -> ClassElimination:
    """
    불변량 관계가 깨지는 클래스를 소거

    Args:
        invariants: 18개 불변량과 ‖α‖²

    Returns:
        C1..C12, D1, D2 판정 (α = 0이면 모두 consistent)
    """
    if invariants.all_zero():
        return ClassElimination(True, {relation.name: ClassVerdict.CONSISTENT for relation in RELATIONS})
    verdicts: Dict[str, ClassVerdict] = {}
    violations: Dict[str, List[str]] = {}
    for relation in RELATIONS:
        problems = _check_relation(relation, invariants)
        verdicts[relation.name] = ClassVerdict.EXCLUDED if problems else ClassVerdict.CONSISTENT
        if problems:
            violations[relation.name] = problems
    return ClassElimination(False, verdicts, violations)


@dataclass(frozen=True)
class SpaceMembership:
    """
    정의식에 의한 정확한 소속 판정

    Attributes:
        trivial: α = 0
        d1: α(ξ,x,y) = α(x,ξ,y) = 0
        d2: α(x,y,z) = η(x)α(ξ,y,z) + η(y)α(x,ξ,z) + η(z)α(x,y,ξ)
        c12: α(x,y,z) = η(x)η(y)α(ξ,ξ,z) + η(x)η(z)α(ξ,y,ξ)
        witnesses: 실패한 공간 → 첫 반례
    """
    trivial: bool
    d1: bool
    d2: bool
    c12: bool
    witnesses: Dict[str, str]

    def as_dict(self) -> Dict[str, bool]:
        return {"trivial": self.trivial, "D1": self.d1, "D2": self.d2, "C12": self.c12}


def _delta(a: int) -> int:
    return 1 if a == XI_SLOT else 0


def _first_failure(tensor: CovDerivTensor, expected: np.ndarray) -> Optional[str]:
    field_ = tensor.field
    alpha = tensor.alpha
    basis = tensor.basis
    for a, b, c in itertools.product(range(len(alpha)), repeat=3):
        if not field_.equal(alpha[a, b, c], expected[a, b, c]):
            labels = ", ".join(basis.label(index) for index in (a, b, c))
            frames = "; ".join(basis.describe(index) for index in sorted({a, b, c}) if index != XI_SLOT)
            note = f" ({frames})" if frames else ""
            return (f"α({labels}) = {field_.format(alpha[a, b, c])}, "
                    f"기대값 {field_.format(expected[a, b, c])}{note}")
    return None


def space_membership(tensor: CovDerivTensor) -> SpaceMembership:
    """
    D1, D2, C12-공간, 자명 클래스 소속을 모든 적응 기저 삼중쌍에서 정확히 판정

    η(b_a)는 b_a = ξ일 때만 1이다.
    """
    field_ = tensor.field
    alpha = tensor.alpha
    size = len(alpha)
    zero = field_.zeros(alpha.shape)

    d2_expected = field_.zeros(alpha.shape)
    c12_expected = field_.zeros(alpha.shape)
    d1_expected = alpha.copy()
    for a, b, c in itertools.product(range(size), repeat=3):
        d2_expected[a, b, c] = (
            _delta(a) * alpha[XI_SLOT, b, c] + _delta(b) * alpha[a, XI_SLOT, c] + _delta(c) * alpha[a, b, XI_SLOT]
        )
        c12_expected[a, b, c] = (
            _delta(a) * _delta(b) * alpha[XI_SLOT, XI_SLOT, c] + _delta(a) * _delta(c) * alpha[XI_SLOT, b, XI_SLOT]
        )
        if a == XI_SLOT or b == XI_SLOT:
            d1_expected[a, b, c] = field_.zero

    witnesses: Dict[str, str] = {}
    results = {}
    for name, expected in (("trivial", zero), ("D1", d1_expected), ("D2", d2_expected), ("C12", c12_expected)):
        failure = _first_failure(tensor, expected)
        results[name] = failure is None
        if failure:
            witnesses[name] = failure
    return SpaceMembership(results["trivial"], results["D1"], results["D2"], results["C12"], witnesses)


def c_space_symmetry(tensor: CovDerivTensor) -> CheckReport:
    """
    𝒞 공간의 대칭성

    α(x,y,z) = -α(x,z,y) = -α(x,φy,φz) + η(y)α(x,ξ,z) + η(z)α(x,y,ξ)
    """
    field_ = tensor.field
    alpha = tensor.alpha
    P = tensor.phi_basis
    report = CheckReport("c_space")

    antisymmetric = alpha + alpha.transpose(0, 2, 1)
    report.add("antisymmetry", field_.all_zero(antisymmetric), _first_failure(tensor, -alpha.transpose(0, 2, 1)))

    # α(x, φb_b, φb_c) = Σ_{p,q} P[b][p] P[c][q] α[x][p][q]
    rotated = np.tensordot(np.tensordot(alpha, P, axes=(1, 1)), P, axes=(1, 1))
    expected = -rotated
    for a, b, c in itertools.product(range(len(alpha)), repeat=3):
        expected[a, b, c] = expected[a, b, c] + _delta(b) * alpha[a, XI_SLOT, c] + _delta(c) * alpha[a, b, XI_SLOT]
    witness = _first_failure(tensor, expected)
    report.add("phi_symmetry", witness is None, witness)
    return report
