"""
Manifold Analyzer

검증 → 접속 → ACMS → ∇Φ → 불변량 → 분류 → 정리 감사 파이프라인
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ..acms.basis import XI_SLOT, AdaptedBasis, adapted_basis, rotate_pair
from ..acms.structure import ACMS, induce_acms, validate_acms
from ..classify.audit import AuditInput, AuditReport, theorem_audit
from ..classify.named import NamedResult, named_checks
from ..classify.relations import (
    RELATIONS,
    ClassElimination,
    SpaceMembership,
    class_elimination,
    space_membership,
)
from ..exterior.forms import DIM, KForm, Vector7, basis_vector, format_vector, inner
from ..exterior.scalar import ScalarField
from ..frame.differential import ce_differential, half_convention
from ..g2.structure import cross_table
from ..invariants.quadratic import INVARIANT_COUNT, InvariantVector, quadratic_invariants
from ..nablaphi.diagnostics import XiDiagnostics, xi_diagnostics
from ..nablaphi.tensor import CovDerivTensor, codifferential_phi, nabla_phi_tensor
from ..utils.checks import CheckReport
from ..utils.errors import G2AcmsError, InternalConsistencyError
from ..utils.logger import LoggerMixin
from .spec_loader import Manifold

FRAME_LABELS = [f"e{i + 1}" for i in range(DIM)]

ROTATION = ("3/5", "4/5")


def _equal_norm_pair(basis: AdaptedBasis) -> Optional[Tuple[int, int]]:
    """노름이 같은 첫 기저 쌍 (ξ 슬롯 제외)"""
    for a in range(XI_SLOT):
        for b in range(a + 1, XI_SLOT):
            if basis.field.equal(basis.norms2[a], basis.norms2[b]):
                return a, b
    return None


NOTES = [
    "C1..C12 판정은 불변량 관계에 의한 필요조건 소거이며 충분조건이 아님 (excluded | consistent)",
    "C4 관계 상수 n/(n-1)²에서 dim = 2n+1, n = 3 으로 가정",
    "dη는 ½ 인자 없는 규약 dη(x,y) = -η([x,y])로 저장, d_half는 ½ 규약 값",
    "i1..i4의 로마자 인덱스는 ξ가 아닌 f1..f6 위의 합",
    "frame = pointwise 명세는 한 점의 괄호 값이므로 야코비와 d∘d = 0이 보장되지 않으며, dφ는 주어진 괄호만으로 계산",
]


@dataclass
class AnalysisReport:
    """한 (매니폴드, ξ) 인스턴스의 전체 분석 결과"""
    manifold: Manifold = field(repr=False)
    acms: ACMS = field(repr=False)
    basis: AdaptedBasis = field(repr=False)
    tensor: CovDerivTensor = field(repr=False)
    delta_phi: np.ndarray = field(repr=False)
    diagnostics: XiDiagnostics = field(repr=False)
    invariants: InvariantVector = field(repr=False)
    acms_check: CheckReport = field(repr=False)
    elimination: ClassElimination = field(repr=False)
    membership: SpaceMembership = field(repr=False)
    named: Dict[str, NamedResult] = field(repr=False)
    audit: AuditReport = field(repr=False)
    tables: Dict[str, Any] = field(default_factory=dict, repr=False)

    @property
    def field(self) -> ScalarField:
        return self.manifold.field

    def g2_summary(self) -> Dict[str, Any]:
        """프레임 종류, 야코비 성립 여부, 평행/준평행 판정"""
        manifold = self.manifold
        probe = manifold.probe
        jacobi = all(
            report.result("jacobi").passed for report in manifold.checks if report.subject == "structure_constants"
        )
        return {
            "frame": manifold.spec.frame,
            "jacobi": jacobi,
            "parallel": probe.parallel,
            "nearly_parallel_k": None if probe.nearly_parallel is None else self.field.format(probe.nearly_parallel),
        }

    def to_dict(self) -> Dict[str, Any]:
        """텍스트/JSON 렌더링이 공유하는 직렬화 (스칼라는 문자열)"""
        f = self.field
        diag = self.diagnostics
        xi = self.acms.xi
        return {
            "manifold": self.manifold.name,
            "backend": f.name,
            "xi": [f.format(value) for value in xi],
            "xi_label": format_vector(xi, f),
            "basis": {
                "vectors": [self.basis.describe(a) for a in range(DIM)],
                "dropped": FRAME_LABELS[self.basis.dropped],
                "orthonormal": self.basis.orthonormal,
            },
            "g2": self.g2_summary(),
            "tables": self.tables,
            "acms": self.acms_check.to_dict(),
            "diagnostics": {
                "div_xi": f.format(diag.div_xi),
                "nabla_xi_xi": format_vector(diag.nabla_xi_xi, f),
                "v": format_vector(diag.v, f),
                "g_xi_v": f.format(inner(xi, diag.v)),
                "delta_phi": [f.format(value) for value in self.delta_phi],
                "delta_phi_xi": f.format(self.delta_phi.dot(xi)),
                "delta_eta": f.format(diag.delta_eta),
                "is_killing": diag.is_killing,
                "xi_parallel": diag.xi_parallel,
                "nabla_xi_phi_zero": f.all_zero(diag.nabla_xi_phi),
            },
            "invariants": {
                **{f"i{m}": f.format(self.invariants[m]) for m in range(1, INVARIANT_COUNT + 1)},
                "norm2": f.format(self.invariants.norm2),
                "c12": [f.format(value) for value in self.invariants.c12],
                "c12_norm2": f.format(self.invariants.c12_norm2),
            },
            "classification": {
                "trivial": self.membership.trivial,
                "space_membership": self.membership.as_dict(),
                "membership_witnesses": dict(self.membership.witnesses),
                "elimination": {
                    relation.name: {
                        "verdict": self.elimination.verdicts[relation.name].value,
                        "witness": self.elimination.witness(relation.name),
                    }
                    for relation in RELATIONS
                },
            },
            "named": {
                name: {
                    "holds": result.holds,
                    "witness": result.witness,
                    "values": None if result.values is None else [f.format(value) for value in result.values],
                }
                for name, result in self.named.items()
            },
            "audit": self.audit.to_dict(),
            "notes": list(NOTES),
        }


class ManifoldAnalyzer(LoggerMixin):
    """매니폴드 분석 클래스"""

    def __init__(self, alternative_basis: bool = True):
        """
        Args:
            alternative_basis: 기저 독립성 검사용 두 번째 적응 기저 사용 여부
        """
        self.alternative_basis = alternative_basis
        self.log_debug("매니폴드 분석기 초기화 완료")

    def tables(self, manifold: Manifold) -> Dict[str, Any]:
        """
        괄호, 레비-치비타 접속, 외적, 코프레임 dη_i, dφ 대 ⋆φ 표

        Args:
            manifold: 검증된 매니폴드

        Returns:
            1-기반 표기 문자열로 된 표
        """
        f = manifold.field
        probe = manifold.probe
        d_eta = []
        for i in range(DIM):
            eta = KForm.covector(basis_vector(i, f), f)
            d = ce_differential(manifold.constants, eta)
            d_eta.append({"form": f"η{i + 1}", "d": d.label(), "d_half": half_convention(d).label()})

        tables = {
            "brackets": [
                {"pair": f"[e{i + 1},e{j + 1}]", "value": format_vector(value, f)}
                for i, j, value in manifold.constants.nonzero_brackets()
            ],
            "connection": [
                {"pair": f"∇_{{e{i + 1}}}e{j + 1}", "value": format_vector(value, f)}
                for i, j, value in manifold.connection.nonzero_entries()
            ],
            "cross": [
                {"pair": f"e{i + 1}×e{j + 1}", "value": format_vector(value, f)}
                for i, j, value in cross_table(manifold.structure)
            ],
            "d_eta": d_eta,
            "g2": {
                "phi": manifold.structure.phi.label(),
                "dphi": probe.dphi.label(),
                "star_phi": probe.star_phi.label(),
                "parallel": probe.parallel,
                "closed": probe.closed,
                "nearly_parallel_k": None if probe.nearly_parallel is None else f.format(probe.nearly_parallel),
            },
        }
        self.log_debug(f"표 생성 완료: {manifold.name}")
        return tables

    def _invariants_in(self, manifold: Manifold, acms: ACMS, basis: AdaptedBasis) -> InvariantVector:
        tensor = nabla_phi_tensor(manifold.connection, acms, basis)
        return quadratic_invariants(tensor, acms)

    def _alternatives(self, manifold: Manifold, acms: ACMS, basis: AdaptedBasis) -> Dict[str, InvariantVector]:
        """
        기저 독립성 검사용 두 번째 적응 기저들의 불변량

        rotated: 노름이 같은 첫 쌍(f1, f2 우선)을 (3/5, 4/5)로 회전한 기저.
        정확한 백엔드에서 그런 쌍이 없으면 생략한다.
        reordered: 나머지 프레임 벡터를 역순으로 직교화한 기저
        """
        if not self.alternative_basis:
            return {}
        alternatives = {}
        pair = _equal_norm_pair(basis)
        if pair is not None:
            rotated = rotate_pair(basis, *pair, ROTATION[0], ROTATION[1])
            alternatives["rotated"] = self._invariants_in(manifold, acms, rotated)
        else:
            self.log_debug(f"노름이 같은 기저 쌍 없음, 회전 생략: {format_vector(acms.xi, manifold.field)}")
        remaining = [i for i in range(DIM) if i != basis.dropped]
        reordered = adapted_basis(acms.xi, manifold.field, order=list(reversed(remaining)))
        alternatives["reordered"] = self._invariants_in(manifold, acms, reordered)
        return alternatives

    def analyze(self, manifold: Manifold, xi: Vector7, with_tables: bool = True) -> AnalysisReport:
        """
        한 ξ에 대한 전체 분석

        Args:
            manifold: 검증된 매니폴드
            xi: 단위 벡터
            with_tables: 표 포함 여부 (퍼징에서는 생략)

        Returns:
            AnalysisReport

        Raises:
            NonUnitVectorError: ξ가 단위 벡터가 아님
            InternalConsistencyError: 정리 감사 실패
        """
        f = manifold.field
        try:
            acms = induce_acms(manifold.structure, xi)
            basis = adapted_basis(acms.xi, f)
            tensor = nabla_phi_tensor(manifold.connection, acms, basis)
            delta_phi = codifferential_phi(tensor)
            diagnostics = xi_diagnostics(
                manifold.connection, manifold.structure, acms, basis, tensor.along(acms.xi)
            )
            invariants = quadratic_invariants(tensor, acms)
            elimination = class_elimination(invariants)
            membership = space_membership(tensor)
            named = named_checks(tensor, acms, diagnostics, delta_phi, manifold.connection, manifold.structure)

            audit = theorem_audit(AuditInput(
                constants=manifold.constants,
                connection=manifold.connection,
                structure=manifold.structure,
                probe=manifold.probe,
                acms=acms,
                basis=basis,
                tensor=tensor,
                invariants=invariants,
                diagnostics=diagnostics,
                delta_phi=delta_phi,
                elimination=elimination,
                membership=membership,
                named=named,
                alternatives=self._alternatives(manifold, acms, basis),
            ))
            if not audit.passed:
                failures = [f"{item.name}: {item.detail}" for item in audit.failures()]
                raise InternalConsistencyError(
                    failures, {"manifold": manifold.name, "xi": format_vector(acms.xi, f)}
                )

            report = AnalysisReport(
                manifold=manifold,
                acms=acms,
                basis=basis,
                tensor=tensor,
                delta_phi=delta_phi,
                diagnostics=diagnostics,
                invariants=invariants,
                acms_check=validate_acms(acms),
                elimination=elimination,
                membership=membership,
                named=named,
                audit=audit,
                tables=self.tables(manifold) if with_tables else {},
            )
            self.log_debug(f"분석 완료: {manifold.name}, ξ = {format_vector(acms.xi, f)}")
            return report

        except G2AcmsError as e:
            self.log_error(f"분석 실패: {e}")
            raise
