"""
Report Formatting

분석/표/퍼징 결과 dict를 텍스트 또는 JSON으로 렌더링
두 렌더링은 같은 dict에서 만들어지므로 값이 항상 같다.
"""

import json
from typing import Any, Dict, List

from ..utils.logger import LoggerMixin

FORMATS = ("text", "json")


def _flag(value: Any) -> str:
    if value is None:
        return "판정 불가"
    return "예" if value else "아니오"


class ReportFormatter(LoggerMixin):
    """보고서 포맷터"""

    def render(self, data: Dict[str, Any], output_format: str = "text") -> str:
        """
        Args:
            data: to_dict() 결과
            output_format: "text" 또는 "json"

        Returns:
            렌더링된 문자열
        """
        if output_format == "json":
            return self.to_json(data)
        if output_format == "text":
            return self.to_text(data)
        raise ValueError(f"지원하지 않는 출력 형식: {output_format}")

    def to_json(self, data: Dict[str, Any]) -> str:
        return json.dumps(data, indent=2, ensure_ascii=False)

    def to_text(self, data: Dict[str, Any]) -> str:
        if "trials" in data:
            lines = self.fuzz_lines(data)
        elif "invariants" in data:
            lines = self.analysis_lines(data)
        else:
            lines = self.table_lines(data)
        return "\n".join(lines) + "\n"

    def table_lines(self, tables: Dict[str, Any]) -> List[str]:
        """괄호, 접속, 외적, dη, dφ 표"""
        lines: List[str] = []
        if "manifold" in tables:
            lines.append(f"# {tables['manifold']}")
        sections = (
            ("괄호", "brackets"),
            ("레비-치비타 접속", "connection"),
            ("외적", "cross"),
        )
        for title, key in sections:
            lines.append(f"## {title}")
            entries = tables.get(key, [])
            if not entries:
                lines.append("  (모두 0)")
            for entry in entries:
                lines.append(f"  {entry['pair']} = {entry['value']}")

        lines.append("## 코프레임 외미분")
        for entry in tables.get("d_eta", []):
            lines.append(f"  d{entry['form']} = {entry['d']}    (½ 규약: {entry['d_half']})")

        g2 = tables.get("g2", {})
        if g2:
            lines.append("## G2 구조")
            lines.append(f"  φ  = {g2['phi']}")
            lines.append(f"  dφ = {g2['dphi']}")
            lines.append(f"  ⋆φ = {g2['star_phi']}")
            lines.append(f"  평행: {_flag(g2['parallel'])}, 닫힘 (dφ = 0): {_flag(g2['closed'])}")
            k = g2["nearly_parallel_k"]
            lines.append(f"  준평행: {'아니오' if k is None else f'예 (k = {k})'}")
        return lines

    def analysis_lines(self, data: Dict[str, Any]) -> List[str]:
        lines = [f"# {data['manifold']} ({data['backend']})", f"ξ = {data['xi_label']}"]

        g2 = data["g2"]
        k = g2["nearly_parallel_k"]
        lines.append(f"프레임: {g2['frame']}, 야코비: {_flag(g2['jacobi'])}, 평행: {_flag(g2['parallel'])}, "
                     f"준평행: {'아니오' if k is None else f'예 (k = {k})'}")

        lines.append("## 적응 기저")
        lines.extend(f"  {text}" for text in data["basis"]["vectors"])

        if data.get("tables"):
            lines.extend(self.table_lines(data["tables"]))

        lines.append("## ACMS 공리")
        for result in data["acms"]["results"]:
            status = "통과" if result["passed"] else f"실패: {result['witness']}"
            lines.append(f"  {result['name']}: {status}")

        diag = data["diagnostics"]
        lines.append("## ξ 진단")
        lines.append(f"  div ξ = {diag['div_xi']}")
        lines.append(f"  ∇_ξξ = {diag['nabla_xi_xi']}")
        lines.append(f"  v = {diag['v']}, g(ξ,v) = {diag['g_xi_v']}")
        lines.append(f"  δΦ = ({', '.join(diag['delta_phi'])}), δΦ(ξ) = {diag['delta_phi_xi']}")
        lines.append(f"  δη = {diag['delta_eta']}")
        lines.append(f"  킬링: {_flag(diag['is_killing'])}, ∇ξ = 0: {_flag(diag['xi_parallel'])}, "
                     f"∇_ξφ = 0: {_flag(diag['nabla_xi_phi_zero'])}")

        invariants = data["invariants"]
        lines.append("## 이차 불변량")
        for m in range(1, 19):
            lines.append(f"  i{m} = {invariants[f'i{m}']}")
        lines.append(f"  ‖α‖² = {invariants['norm2']}")
        lines.append(f"  c12 = ({', '.join(invariants['c12'])}), Σc12² = {invariants['c12_norm2']}")

        classification = data["classification"]
        lines.append("## 공간 소속")
        for name, value in classification["space_membership"].items():
            witness = classification["membership_witnesses"].get(name)
            lines.append(f"  {name}: {_flag(value)}" + (f"  [{witness}]" if witness else ""))
        lines.append("## 클래스 소거 (필요조건)")
        for name, entry in classification["elimination"].items():
            witness = f"  [{entry['witness']}]" if entry["witness"] else ""
            lines.append(f"  {name}: {entry['verdict']}{witness}")

        lines.append("## 이름 있는 클래스")
        for name, entry in data["named"].items():
            extra = f"  [{entry['witness']}]" if entry["witness"] else ""
            lines.append(f"  {name}: {_flag(entry['holds'])}{extra}")

        audit = data["audit"]
        applicable = [item for item in audit["items"] if item["applicable"]]
        lines.append(f"## 정리 감사: {'통과' if audit['passed'] else '실패'} ({len(applicable)}개 항목 적용)")
        for item in audit["items"]:
            if not item["applicable"]:
                status = "해당 없음"
            else:
                status = "통과" if item["passed"] else f"실패: {item['detail']}"
            lines.append(f"  [{item['kind']}] {item['name']}: {status}")

        lines.append("## 참고")
        lines.extend(f"  - {note}" for note in data.get("notes", []))
        return lines

    def fuzz_lines(self, data: Dict[str, Any]) -> List[str]:
        lines = [
            f"# 퍼징: {data['manifold']}",
            f"  시행 {data['trials']}회, 시드 {data['seed']}",
            f"  감사 통과 {data['passed']}/{data['trials']}, 자명 클래스 {data['trivial']}/{data['trials']}",
            "## 항목별 적용/통과",
        ]
        for name, counts in data["items"].items():
            lines.append(f"  {name}: {counts['passed']}/{counts['applicable']}")
        return lines
