"""
Pipeline Module

매니폴드 명세 로드, 분석, 보고서 렌더링, 속성 퍼징
"""

from .spec_loader import (
    BracketRecord,
    Manifold,
    ManifoldSpec,
    PhiRecord,
    build_manifold,
    load_spec,
    parse_spec,
    resolve_xi,
    serialize_spec,
)
from .builtin import builtin_examples, get_builtin
from .analyzer import AnalysisReport, ManifoldAnalyzer
from .formatter import FORMATS, ReportFormatter
from .fuzzer import FuzzSummary, PropertyFuzzer, draw_u, trial_rng

__all__ = [
    "BracketRecord", "Manifold", "ManifoldSpec", "PhiRecord",
    "build_manifold", "load_spec", "parse_spec", "resolve_xi", "serialize_spec",
    "builtin_examples", "get_builtin",
    "AnalysisReport", "ManifoldAnalyzer",
    "FORMATS", "ReportFormatter",
    "FuzzSummary", "PropertyFuzzer", "draw_u", "trial_rng",
]
