#!/usr/bin/env python3
"""
프레임 다양체 테스트: 구조 상수, 코쥘 접속, CE 외미분, 발산, G2 판정
"""

import itertools
import random

from src.exterior import DIM, EXACT, KForm, basis_vector, hodge_star, random_rational
from src.frame import (
    StructureConstants,
    antisymmetrized_nabla,
    ce_differential,
    divergence,
    levi_civita,
    nabla_form,
    validate_connection,
    validate_structure,
)
from src.frame.structure import Bracket

# 3-사사키안 예제의 코쥘 표: (i, j) → ±k, ∇_{e_i}e_j = ±e_k
SASAKIAN3_CONNECTION = {
    (1, 2): 3, (1, 3): -2, (1, 4): -5, (1, 5): 4, (1, 6): -7, (1, 7): 6,
    (2, 1): -3, (2, 3): 1, (2, 4): -6, (2, 5): 7, (2, 6): 4, (2, 7): -5,
    (3, 1): 2, (3, 2): -1, (3, 4): -7, (3, 5): -6, (3, 6): 5, (3, 7): 4,
    (4, 1): -5, (4, 2): -6, (4, 3): -7, (4, 5): 1, (4, 6): 2, (4, 7): 3,
    (5, 1): 4, (5, 2): 7, (5, 3): -6, (5, 4): -1, (5, 6): 3, (5, 7): -2,
    (6, 1): -7, (6, 2): 4, (6, 3): 5, (6, 4): -2, (6, 5): -3, (6, 7): 1,
    (7, 1): 6, (7, 2): -5, (7, 3): 4, (7, 4): -3, (7, 5): 2, (7, 6): -1,
}


def e(i: int):
    return basis_vector(i - 1)


def eta(*labels: str) -> KForm:
    return KForm.from_monomials(2, {label: 1 for label in labels})


def constants(*brackets: Bracket) -> StructureConstants:
    """1-기반 (i, j, k, value) 레코드"""
    return StructureConstants.from_brackets((i - 1, j - 1, k - 1, value) for i, j, k, value in brackets)


def random_invariant_form(rng: random.Random, degree: int) -> KForm:
    terms = {index: random_rational(rng, 4) for index in itertools.combinations(range(DIM), degree)}
    return KForm.from_terms(degree, terms)


class TestStructureConstants:
    def test_sasakian3_bracket_count(self, sasakian3):
        assert len(sasakian3.constants.nonzero_brackets()) == 9
        assert not sasakian3.constants.is_abelian

    def test_abelian(self):
        report = validate_structure(StructureConstants.abelian())
        assert report.passed
        assert StructureConstants.abelian().is_abelian

    def test_jacobi_failure_witness(self):
        """[e1,e2]=e1, [e1,e3]=e1, [e2,e3]=e2 의 순환합은 (1,2,3)에서 -e1"""
        report = validate_structure(constants((1, 2, 1, 1), (1, 3, 1, 1), (2, 3, 2, 1)))
        jacobi = report.result("jacobi")
        assert not jacobi.passed
        assert jacobi.witness.startswith("(1,2,3)")
        assert jacobi.witness.endswith("= -e1")
        assert report.result("antisymmetry").passed

    def test_so21_satisfies_jacobi(self):
        assert validate_structure(constants((1, 2, 3, 1), (1, 3, 2, 1), (2, 3, 1, 1))).passed

    def test_sasakian3_pointwise_brackets_fail_jacobi(self, sasakian3):
        """예제의 9개 괄호만으로는 (1,4,6)에서 야코비가 깨진다"""
        jacobi = validate_structure(sasakian3.constants).result("jacobi")
        assert not jacobi.passed
        assert jacobi.witness.startswith("(1,4,6)")
        assert jacobi.witness.endswith("= -4e3")


class TestLeviCivita:
    def test_sasakian3_table(self, sasakian3):
        """42개 비영 성분과 ∇_{e_i}e_i = 0"""
        gamma = sasakian3.connection.gamma
        for i, j in itertools.product(range(1, DIM + 1), repeat=2):
            target = SASAKIAN3_CONNECTION.get((i, j))
            expected = EXACT.zeros(DIM) if target is None else e(abs(target)) * (1 if target > 0 else -1)
            assert list(gamma[i - 1, j - 1]) == list(expected), f"∇_{{e{i}}}e{j}"
        assert len(sasakian3.connection.nonzero_entries()) == 42

    def test_abelian_is_flat(self, flat):
        assert EXACT.all_zero(flat.connection.gamma)

    def test_metric_and_torsion(self, sasakian3, hyperbolic):
        for manifold in (sasakian3, hyperbolic):
            assert validate_connection(manifold.connection, manifold.constants).passed

    def test_covariant_of_frame(self, sasakian3):
        assert list(sasakian3.connection.covariant(e(2), e(4))) == list(-e(6))


class TestDifferential:
    def test_d_eta_sasakian3(self, sasakian3):
        c = sasakian3.constants
        d1 = ce_differential(c, KForm.covector(e(1), EXACT))
        d2 = ce_differential(c, KForm.covector(e(2), EXACT))
        d3 = ce_differential(c, KForm.covector(e(3), EXACT))
        assert d1 == eta("23", "45", "67").scale(-2)
        assert d2 == (eta("13", "57") - eta("46")).scale(2)
        assert d3 == eta("12", "47", "56").scale(-2)

    def test_abelian_differential(self, flat):
        rng = random.Random(3)
        for degree in range(DIM):
            assert ce_differential(flat.constants, random_invariant_form(rng, degree)).is_zero()

    def test_dd_zero_when_jacobi_holds(self, hyperbolic):
        rng = random.Random(5)
        for degree in range(DIM - 1):
            form = random_invariant_form(rng, degree)
            dd = ce_differential(hyperbolic.constants, ce_differential(hyperbolic.constants, form))
            assert dd.is_zero()

    def test_dd_zero_on_so21(self):
        c = constants((1, 2, 3, 1), (1, 3, 2, 1), (2, 3, 1, 1))
        rng = random.Random(9)
        for degree in range(DIM - 1):
            form = random_invariant_form(rng, degree)
            assert ce_differential(c, ce_differential(c, form)).is_zero()

    def test_antisymmetrized_nabla_matches_d(self, sasakian3, hyperbolic):
        """비틀림 없는 접속: Alt(∇φ) = dφ"""
        for manifold in (sasakian3, hyperbolic):
            phi = manifold.structure.phi
            assert antisymmetrized_nabla(manifold.connection, phi) == ce_differential(manifold.constants, phi)

    def test_nabla_eta1_along_e2(self, sasakian3):
        derivative = nabla_form(sasakian3.connection, KForm.covector(e(1), EXACT), 1)
        assert derivative == KForm.covector(-e(3), EXACT)

    def test_abelian_nabla_form(self, flat):
        assert nabla_form(flat.connection, flat.structure.phi, 4).is_zero()


class TestDivergence:
    def test_sasakian3_reeb_fields(self, sasakian3):
        assert divergence(sasakian3.connection, e(1)) == 0
        xi = EXACT.asarray(["2/7", "3/7", "6/7", 0, 0, 0, 0])
        assert divergence(sasakian3.connection, xi) == 0

    def test_hyperbolic(self, hyperbolic):
        assert divergence(hyperbolic.connection, e(7)) == -6
        assert divergence(hyperbolic.connection, e(1)) == 0


class TestG2Probe:
    def test_flat_is_parallel(self, flat):
        assert flat.probe.parallel
        assert flat.probe.nearly_parallel == 0

    def test_sasakian3_not_parallel(self, sasakian3):
        assert not sasakian3.probe.parallel

    def test_sasakian3_pointwise_dphi(self, sasakian3):
        """e^{4567}, e^{1247} 성분은 -4⋆φ와 같지만 e^{2367} 성분은 0이라 준평행 상수가 없다"""
        probe = sasakian3.probe
        star = hodge_star(sasakian3.structure.phi)
        assert probe.dphi.coefficient((3, 4, 5, 6)) == -4 * star.coefficient((3, 4, 5, 6))
        assert probe.dphi.coefficient((0, 1, 3, 6)) == -4 * star.coefficient((0, 1, 3, 6))
        assert star.coefficient((1, 2, 5, 6)) == -1
        assert probe.dphi.coefficient((1, 2, 5, 6)) == 0
        assert probe.nearly_parallel is None

    def test_hyperbolic_not_nearly_parallel(self, hyperbolic):
        assert not hyperbolic.probe.parallel
        assert hyperbolic.probe.nearly_parallel is None

    def test_closed_is_not_nearly_parallel(self, closed_nilpotent):
        """dφ = 0 이어도 ∇φ ≠ 0 이면 준평행 상수 k = 0 을 주지 않는다"""
        probe = closed_nilpotent.probe
        assert probe.closed
        assert probe.dphi.is_zero()
        assert not probe.parallel
        assert probe.nearly_parallel is None
        assert not probe.is_nearly_parallel

    def test_parallel_is_closed(self, flat, sasakian3):
        assert flat.probe.closed
        assert not sasakian3.probe.closed
