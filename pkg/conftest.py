"""
pytest 공용 픽스처

내장 매니폴드(정확한 유리수 백엔드)와 자주 쓰는 ξ 분석 결과
"""

import json

import pytest

from src.exterior import EXACT, basis_vector
from src.pipeline import ManifoldAnalyzer, build_manifold, get_builtin, load_spec, serialize_spec


@pytest.fixture(scope="session")
def field():
    return EXACT


@pytest.fixture(scope="session")
def sasakian3():
    return build_manifold(get_builtin("sasakian3"))


@pytest.fixture(scope="session")
def flat():
    return build_manifold(get_builtin("flat"))


@pytest.fixture(scope="session")
def hyperbolic():
    return build_manifold(get_builtin("hyperbolic"))


@pytest.fixture(scope="session")
def closed_nilpotent():
    """[e1,e2] = -e6, [e1,e3] = -e7 와 φ₀: dφ = 0 이지만 평행이 아닌 닫힌 G2 구조"""
    data = json.loads(serialize_spec(get_builtin("flat")))
    data["name"] = "closed_nilpotent"
    data["brackets"] = [
        {"i": 1, "j": 2, "k": 6, "value": "-1"},
        {"i": 1, "j": 3, "k": 7, "value": "-1"},
    ]
    return build_manifold(load_spec(data))


@pytest.fixture(scope="session")
def analyzer():
    return ManifoldAnalyzer()


@pytest.fixture(scope="session")
def sasakian3_e1(sasakian3, analyzer):
    """sasakian3, ξ = e1 분석 결과"""
    return analyzer.analyze(sasakian3, basis_vector(0))
