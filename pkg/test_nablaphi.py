#!/usr/bin/env python3
"""
∇Φ 테스트: 프레임 공식, δΦ, ξ 진단값
"""

from fractions import Fraction

import pytest

from src.acms import adapted_basis, induce_acms, rational_unit_vector
from src.exterior import EXACT, basis_vector
from src.nablaphi import (
    codifferential_phi,
    nabla_phi_tensor,
    nabla_xi_phi,
    phi_derivative_tensor,
    xi_diagnostics,
)


def e(i: int):
    return basis_vector(i - 1)


def compute(manifold, xi):
    acms = induce_acms(manifold.structure, xi)
    basis = adapted_basis(acms.xi)
    tensor = nabla_phi_tensor(manifold.connection, acms, basis)
    diagnostics = xi_diagnostics(manifold.connection, manifold.structure, acms, basis, tensor.along(acms.xi))
    return acms, tensor, diagnostics


class TestSasakian3Xi1:
    def test_alpha_e2_e1_e2(self, sasakian3):
        _, tensor, _ = compute(sasakian3, e(1))
        assert tensor.at(e(2), e(1), e(2)) == 1
        assert tensor.frame[1, 0, 1] == 1

    def test_not_cosymplectic(self, sasakian3):
        _, tensor, _ = compute(sasakian3, e(1))
        assert not tensor.is_zero()

    def test_nabla_xi_phi_vanishes(self, sasakian3):
        acms, tensor, diagnostics = compute(sasakian3, e(1))
        assert EXACT.all_zero(nabla_xi_phi(sasakian3.connection, sasakian3.structure, acms))
        assert EXACT.all_zero(tensor.along(acms.xi))
        assert EXACT.all_zero(diagnostics.nabla_xi_phi)

    def test_codifferential(self, sasakian3):
        acms, tensor, _ = compute(sasakian3, e(1))
        delta_phi = codifferential_phi(tensor)
        assert delta_phi[0] == -2
        assert delta_phi.dot(acms.xi) == -2

    def test_diagnostics(self, sasakian3):
        acms, _, diagnostics = compute(sasakian3, e(1))
        assert list(diagnostics.v) == list(e(1) * 2)
        assert diagnostics.v.dot(acms.xi) == 2
        assert diagnostics.div_xi == 0
        assert diagnostics.delta_eta == 0
        assert diagnostics.is_killing
        assert not diagnostics.xi_parallel
        assert diagnostics.geodesic

    def test_two_formulas_agree(self, sasakian3):
        acms, tensor, _ = compute(sasakian3, e(1))
        other = phi_derivative_tensor(sasakian3.connection, acms)
        assert EXACT.all_zero(tensor.frame - other)


class TestSasakian3ReebCombination:
    @pytest.mark.parametrize(
        "a,b,c",
        [
            (0, Fraction(3, 5), Fraction(4, 5)),
            (Fraction(3, 5), Fraction(4, 5), 0),
            (Fraction(4, 5), 0, Fraction(3, 5)),
        ],
    )
    def test_spot_values(self, sasakian3, a, b, c):
        """ξ = ae1 + be2 + ce3: α(e1,e1,e2) = -b, α(e1,e1,e3) = -c, α(e2,e2,e1) = -a"""
        xi = EXACT.asarray([a, b, c, 0, 0, 0, 0])
        _, tensor, _ = compute(sasakian3, xi)
        assert tensor.at(e(1), e(1), e(2)) == -b
        assert tensor.at(e(1), e(1), e(3)) == -c
        assert tensor.at(e(2), e(2), e(1)) == -a

    @pytest.mark.parametrize(
        "values,k_contact",
        [
            ([0, "-5/13", "12/13"], True),
            (["3/5", "4/5", 0], False),
            (["4/5", 0, "3/5"], False),
            (["2/7", "3/7", "6/7"], False),
        ],
    )
    def test_geodesic_and_k_contact_verdict(self, sasakian3, values, k_contact):
        """span(e1,e2,e3)의 ξ는 항상 측지선이지만 ∇_ξφ 는 ξ1ξ2, ξ1ξ3 항이 있으면 0이 아니다"""
        xi = EXACT.asarray(values + [0, 0, 0, 0])
        _, _, diagnostics = compute(sasakian3, xi)
        assert diagnostics.geodesic
        assert EXACT.all_zero(diagnostics.nabla_xi_phi) == k_contact

    def test_nabla_xi_phi_entries(self, sasakian3):
        """ξ = 3/5e1 + 4/5e2: ∇_ξφ 는 (e4,e7), (e5,e6) 자리에만 크기 48/25"""
        xi = EXACT.asarray(["3/5", "4/5", 0, 0, 0, 0, 0])
        _, _, diagnostics = compute(sasakian3, xi)
        matrix = diagnostics.nabla_xi_phi
        nonzero = {(i, j) for i in range(7) for j in range(7) if matrix[i, j] != 0}
        assert nonzero == {(3, 6), (6, 3), (4, 5), (5, 4)}
        for i, j in nonzero:
            assert abs(matrix[i, j]) == Fraction(48, 25)

    def test_mixed_xi_not_geodesic(self, sasakian3):
        xi = rational_unit_vector([1, 0, 0, 1, 0, 0])
        _, _, diagnostics = compute(sasakian3, xi)
        assert not diagnostics.geodesic


class TestFlat:
    def test_everything_vanishes(self, flat):
        xi = rational_unit_vector(["1/2", 0, "-2/3", 1, 0, "1/4"])
        _, tensor, diagnostics = compute(flat, xi)
        assert tensor.is_zero()
        assert EXACT.all_zero(codifferential_phi(tensor))
        assert diagnostics.div_xi == 0
        assert EXACT.all_zero(diagnostics.v)
        assert diagnostics.is_killing
        assert diagnostics.xi_parallel


class TestHyperbolic:
    def test_xi_e7(self, hyperbolic):
        _, _, diagnostics = compute(hyperbolic, e(7))
        assert diagnostics.div_xi == -6
        assert diagnostics.delta_eta == 6
        assert not diagnostics.is_killing
        assert diagnostics.geodesic
