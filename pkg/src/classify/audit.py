"""
Theorem Audit

인스턴스마다 정리의 가정을 평가하고, 가정이 성립하면 분류 결과가 결론과
일치하는지 확인한다. 항등식 묶음(불변량 영점, δη = -div ξ, 𝒞 대칭성 등)도 함께 검사한다.
불일치는 데이터 조건이 아니라 구현 버그다.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional

import numpy as np

from ..acms.basis import XI_SLOT, AdaptedBasis
from ..acms.structure import ACMS, validate_acms
from ..exterior.forms import DIM, format_vector, inner
from ..frame.connection import Connection
from ..frame.differential import G2ClassProbe, ce_differential, half_convention
from ..frame.structure import StructureConstants
from ..g2.structure import G2Structure
from ..invariants.quadratic import INVARIANT_COUNT, InvariantVector
from ..nablaphi.diagnostics import XiDiagnostics
from ..nablaphi.tensor import CovDerivTensor, phi_derivative_tensor
from .named import NamedResult
from .relations import ClassElimination, SpaceMembership, c_space_symmetry

THEOREM = "theorem"
IDENTITY = "identity"


@dataclass(frozen=True)
class AuditItem:
    """
    Attributes:
        name: 항목 이름
        kind: "theorem" 또는 "identity"
        applicable: 가정 성립 여부 (False면 자명하게 통과)
        passed: 결론 일치 여부
        detail: 실패 설명
    """
    name: str
    kind: str
    applicable: bool
    passed: bool
    detail: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "kind": self.kind,
            "applicable": self.applicable,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass
class AuditReport:
    items: List[AuditItem] = field(default_factory=list)

    def add(self, name: str, kind: str, applicable: bool, passed: bool = True, detail: Optional[str] = None) -> None:
        passed = passed or not applicable
        self.items.append(AuditItem(name, kind, applicable, passed, None if passed else detail))

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def failures(self) -> List[AuditItem]:
        return [item for item in self.items if not item.passed]

    def item(self, name: str) -> AuditItem:
        for entry in self.items:
            if entry.name == name:
                return entry
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {"passed": self.passed, "items": [item.to_dict() for item in self.items]}


@dataclass(frozen=True)
class AuditInput:
    """감사에 필요한 한 인스턴스의 계산 결과 묶음"""
    constants: StructureConstants
    connection: Connection
    structure: G2Structure
    probe: G2ClassProbe
    acms: ACMS
    basis: AdaptedBasis
    tensor: CovDerivTensor
    invariants: InvariantVector
    diagnostics: XiDiagnostics
    delta_phi: np.ndarray
    elimination: ClassElimination
    membership: SpaceMembership
    named: Dict[str, NamedResult]
    alternatives: Dict[str, InvariantVector] = field(default_factory=dict)


def _not_excluded(elimination: ClassElimination, names: Iterable[str]) -> List[str]:
    return [name for name in names if not elimination.excluded(name)]


def _classes(*numbers: int) -> List[str]:
    return [f"C{number}" for number in numbers]


def _conclusion(elimination: ClassElimination, names: List[str], members: Dict[str, bool]) -> Optional[str]:
    """소거되지 않은 클래스와 참인 소속 판정을 모아 실패 설명을 만든다"""
    problems = []
    remaining = _not_excluded(elimination, names)
    if remaining:
        problems.append(f"소거되지 않음: {', '.join(remaining)}")
    inside = [name for name, value in members.items() if value]
    if inside:
        problems.append(f"소속 판정 참: {', '.join(inside)}")
    return "; ".join(problems) or None


def _audit_theorems(data: AuditInput, report: AuditReport) -> None:
    field_ = data.acms.field
    diag = data.diagnostics
    elimination = data.elimination
    membership = data.membership
    nearly_parallel = data.probe.is_nearly_parallel
    div_nonzero = not field_.is_zero(diag.div_xi)
    g_xi_v = inner(data.acms.xi, diag.v)
    v_nonzero = not field_.is_zero(g_xi_v)

    failure = _conclusion(elimination, ["D2"] + _classes(*range(1, 12)), {"D2": membership.d2})
    report.add("non_geodesic_exclusion", THEOREM, not diag.geodesic, failure is None, failure)

    failure = _conclusion(
        elimination,
        ["D1"] + _classes(1, 2, 3, 4, *range(6, 13)),
        {"D1": membership.d1, "semi_cosymplectic": bool(data.named["semi_cosymplectic"].holds)},
    )
    report.add("divergence_exclusion", THEOREM, div_nonzero, failure is None, failure)

    failure = _conclusion(
        elimination, ["D1", "D2", "C12"], {"D1": membership.d1, "D2": membership.d2, "C12": membership.c12}
    )
    report.add("nearly_parallel_exclusion", THEOREM, nearly_parallel and not diag.geodesic, failure is None, failure)

    k_contact = data.named["almost_k_contact"].holds
    report.add(
        "nearly_parallel_k_contact",
        THEOREM,
        nearly_parallel,
        diag.geodesic == k_contact,
        f"∇_ξξ = 0: {diag.geodesic}, 거의 K-접촉: {k_contact}",
    )

    failure = _conclusion(elimination, ["D1"] + _classes(5, *range(7, 13)), {"D1": membership.d1})
    report.add("xi_v_exclusion", THEOREM, v_nonzero, failure is None, failure)

    failure = _conclusion(elimination, _classes(*range(1, 13)), {})
    report.add("xi_v_divergence_exclusion", THEOREM, v_nonzero and div_nonzero, failure is None, failure)

    obstructed = diag.is_killing and not diag.xi_parallel
    flagged = bool(data.named["nearly_k_cosymplectic_obstruction"].holds)
    report.add(
        "killing_c1",
        THEOREM,
        obstructed,
        elimination.excluded("C1") and flagged,
        f"C1 소거: {elimination.excluded('C1')}, 장애 표시: {flagged}",
    )

    alpha_zero = data.tensor.is_zero()
    report.add(
        "parallel_g2",
        THEOREM,
        data.probe.parallel,
        alpha_zero == diag.xi_parallel,
        f"∇Φ = 0: {alpha_zero}, ∇ξ = 0: {diag.xi_parallel}",
    )


def _equal_item(report: AuditReport, name: str, data: AuditInput, left, right, applicable: bool = True) -> None:
    field_ = data.acms.field
    report.add(
        name,
        IDENTITY,
        applicable,
        field_.equal(left, right, data.invariants.scale),
        f"{field_.format(left)} ≠ {field_.format(right)}",
    )


def _audit_identities(data: AuditInput, report: AuditReport) -> None:
    field_ = data.acms.field
    acms = data.acms
    diag = data.diagnostics
    inv = data.invariants
    nearly_parallel = data.probe.is_nearly_parallel
    scale = inv.scale

    # i6, i16 영점
    along_f = data.basis.vectors[:XI_SLOT].dot(diag.nabla_xi)
    f_parallel = field_.all_zero(along_f)
    report.add("i6_frame_parallel", IDENTITY, True, inv.is_zero(6) == f_parallel,
               f"i6 = {field_.format(inv[6])}, ∇_fξ = 0: {f_parallel}")
    report.add("i16_geodesic", IDENTITY, True, inv.is_zero(16) == diag.geodesic,
               f"i16 = {field_.format(inv[16])}, ∇_ξξ = 0: {diag.geodesic}")

    # 발산
    g_xi_v = inner(acms.xi, diag.v)
    _equal_item(report, "i14_divergence", data, inv[14], diag.div_xi * diag.div_xi)
    _equal_item(report, "i15_divergence_v", data, inv[15], -diag.div_xi * g_xi_v)

    # 준평행 전용
    report.add("i5_geodesic", IDENTITY, nearly_parallel, inv.is_zero(5) == diag.geodesic,
               f"i5 = {field_.format(inv[5])}, ∇_ξξ = 0: {diag.geodesic}")
    xi_cross = data.structure.cross(acms.xi, diag.nabla_xi_xi)
    _equal_item(report, "i17_cross_v", data, inv[17], inner(xi_cross, diag.v), nearly_parallel)
    _equal_item(report, "i18_geodesic_v", data, inv[18], -inner(diag.nabla_xi_xi, diag.v), nearly_parallel)

    _equal_item(report, "i10_xi_v", data, inv[10], g_xi_v * g_xi_v)
    _equal_item(report, "delta_eta_divergence", data, diag.delta_eta, -diag.div_xi)
    _equal_item(report, "i4_c12", data, inv[4], inv.c12_norm2)

    c_space = c_space_symmetry(data.tensor)
    failed = c_space.first_failure()
    report.add("c_space_symmetry", IDENTITY, True, c_space.passed, failed and f"{failed.name}: {failed.witness}")

    axioms = validate_acms(acms)
    failed = axioms.first_failure()
    report.add("acms_axioms", IDENTITY, True, axioms.passed, failed and f"{failed.name}: {failed.witness}")

    # g(∇_xξ, ξ) = 0
    residual = diag.nabla_xi.dot(acms.xi)
    report.add("xi_unit_derivative", IDENTITY, True, field_.all_zero(residual),
               f"g(∇_eξ, ξ) = {format_vector(residual, field_)}")

    # (∇_{e_i}Φ)(ξ, e_k) = -g(∇_{e_i}ξ, ξ×e_k)
    left = np.tensordot(data.tensor.frame, acms.xi, axes=(1, 0))
    right = -diag.nabla_xi.dot(acms.phi_endo)
    report.add("nabla_phi_xi_slot", IDENTITY, True, field_.all_zero(left - right, scale),
               "(∇_eΦ)(ξ, e) ≠ -g(∇_eξ, ξ×e)")

    alternative = phi_derivative_tensor(data.connection, acms)
    report.add("frame_formula", IDENTITY, True, field_.all_zero(data.tensor.frame - alternative, scale),
               "두 ∇Φ 공식이 다름")

    d_eta = ce_differential(data.constants, acms.eta)
    if diag.is_killing:
        half = half_convention(d_eta)
        mismatch = [
            f"(e{i + 1},e{j + 1})"
            for i in range(DIM)
            for j in range(i + 1, DIM)
            if not field_.equal(half.coefficient((i, j)), diag.nabla_xi[i, j])
        ]
        report.add("killing_d_eta", IDENTITY, True, d_eta.is_zero() == diag.xi_parallel and not mismatch,
                   f"dη = 0: {d_eta.is_zero()}, ∇ξ = 0: {diag.xi_parallel}, 불일치 {mismatch[:3]}")
    else:
        report.add("killing_d_eta", IDENTITY, False)

    if nearly_parallel:
        expected = data.structure.cross_matrix(diag.nabla_xi_xi)
        report.add("nearly_parallel_xi_phi", IDENTITY, True,
                   field_.all_zero(diag.nabla_xi_phi - expected, scale), "∇_ξφ ≠ (∇_ξξ)×")
    else:
        report.add("nearly_parallel_xi_phi", IDENTITY, False)

    phi_zero = field_.all_zero(diag.nabla_xi_phi)
    Phi_zero = field_.all_zero(diag.nabla_xi_Phi)
    report.add("xi_phi_vs_Phi", IDENTITY, True, phi_zero == Phi_zero,
               f"∇_ξφ = 0: {phi_zero}, ∇_ξΦ = 0: {Phi_zero}")

    if data.alternatives:
        different = []
        for label, other in data.alternatives.items():
            different.extend(
                f"{label}:i{m}" for m in range(1, INVARIANT_COUNT + 1) if not field_.equal(inv[m], other[m], scale)
            )
            if not field_.equal(inv.norm2, other.norm2, scale):
                different.append(f"{label}:‖α‖²")
        report.add("basis_independence", IDENTITY, True, not different, f"기저에 따라 다름: {', '.join(different)}")
    else:
        report.add("basis_independence", IDENTITY, False)

    semi = bool(data.named["semi_cosymplectic"].holds)
    report.add("semi_cosymplectic_chain", IDENTITY, semi,
               field_.is_zero(diag.delta_eta) and inv.is_zero(14),
               f"δη = {field_.format(diag.delta_eta)}, i14 = {field_.format(inv[14])}")

    cosymplectic = bool(data.named["cosymplectic"].holds)
    report.add("cosymplectic_invariants", IDENTITY, True, cosymplectic == inv.all_zero(),
               f"코심플렉틱: {cosymplectic}, 불변량 모두 0: {inv.all_zero()}")

    nonzero = [f"i{m}" for m in range(5, INVARIANT_COUNT + 1) if not inv.is_zero(m)]
    report.add("d1_invariants", IDENTITY, data.membership.d1, not nonzero, f"D1인데 0이 아님: {', '.join(nonzero)}")


def theorem_audit(data: AuditInput) -> AuditReport:
    """
    정리 감사와 항등식 묶음 실행

    Args:
        data: 한 인스턴스의 계산 결과

    Returns:
        AuditReport (예외를 던지지 않음, 호출 측에서 실패를 판단)
    """
    report = AuditReport()
    _audit_theorems(data, report)
    _audit_identities(data, report)
    return report
