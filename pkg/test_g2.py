#!/usr/bin/env python3
"""
G2 구조 테스트: φ₀ 계수, 외적 값, 외적 공리 검증
"""

from src.exterior import DIM, KForm, basis_vector
from src.g2 import G2Structure, cross_table, standard_phi, validate_cross_axioms
from src.g2.structure import CROSS_AXIOMS
from src.pipeline.builtin import SASAKIAN3_PHI


def e(i: int):
    return basis_vector(i - 1)


def sasakian3_structure() -> G2Structure:
    return G2Structure.from_form(KForm.from_monomials(3, SASAKIAN3_PHI))


class TestStandardPhi:
    def test_coefficients(self):
        phi = standard_phi().phi
        assert phi.coefficient((0, 3, 4)) == 1
        assert phi.coefficient((2, 4, 5)) == -1
        assert len(phi.coeffs) == 7

    def test_cross_values(self):
        structure = standard_phi()
        assert list(structure.cross(e(1), e(2))) == list(e(3))
        assert list(structure.cross(e(2), e(5))) == list(-e(7))

    def test_cross_with_itself(self):
        structure = standard_phi()
        x = structure.field.asarray([1, "2/3", 0, -5, 0, "1/7", 3])
        assert structure.field.all_zero(structure.cross(x, x))

    def test_axioms_pass(self):
        report = validate_cross_axioms(standard_phi(), trials=20)
        assert report.passed
        assert [result.name for result in report.results] == list(CROSS_AXIOMS)


class TestSasakian3Form:
    def test_axioms_pass(self):
        assert validate_cross_axioms(sasakian3_structure(), trials=20).passed

    def test_cross_table(self):
        """프레임 외적 21쌍이 3-사사키안 예제의 표와 일치"""
        expected = {
            (1, 2): 3, (1, 3): -2, (1, 4): -5, (1, 5): 4, (1, 6): -7, (1, 7): 6,
            (2, 3): 1, (2, 4): 6, (2, 5): -7, (2, 6): -4, (2, 7): 5,
            (3, 4): 7, (3, 5): 6, (3, 6): -5, (3, 7): -4,
            (4, 5): -1, (4, 6): 2, (4, 7): 3, (5, 6): 3, (5, 7): -2, (6, 7): -1,
        }
        table = cross_table(sasakian3_structure())
        assert len(table) == 21
        for i, j, value in table:
            target = expected[(i + 1, j + 1)]
            sign = 1 if target > 0 else -1
            assert list(value) == list(e(abs(target)) * sign)


class TestBrokenForm:
    def test_zero_form_fails_norm_identity(self):
        structure = G2Structure.from_form(KForm.zero(3))
        report = validate_cross_axioms(structure, trials=0)
        assert not report.passed
        norm = report.result("norm_identity")
        assert not norm.passed
        assert norm.witness.startswith("(e1,e2)")

    def test_frame_pairs_only(self):
        structure = standard_phi()
        report = validate_cross_axioms(structure, trials=0)
        assert report.passed
        assert structure.table.shape == (DIM, DIM, DIM)
