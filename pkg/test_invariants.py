#!/usr/bin/env python3
"""
이차 불변량 테스트: i1..i18, c12, ‖α‖², 기저 독립성
"""

from fractions import Fraction

from src.acms import adapted_basis, induce_acms, rational_unit_vector, rotate_pair
from src.exterior import DIM, EXACT, basis_vector
from src.invariants import INVARIANT_COUNT, alpha_norm2, contraction_c12, quadratic_invariants
from src.nablaphi import CovDerivTensor, nabla_phi_tensor, phi_in_basis


def invariants_for(manifold, xi, basis=None):
    acms = induce_acms(manifold.structure, xi)
    basis = basis or adapted_basis(acms.xi)
    tensor = nabla_phi_tensor(manifold.connection, acms, basis)
    return tensor, quadratic_invariants(tensor, acms)


class TestSasakian3Xi1:
    def test_golden_values(self, sasakian3):
        _, invariants = invariants_for(sasakian3, basis_vector(0))
        assert invariants[10] == 4
        assert invariants[6] == 6
        assert invariants[5] == 0
        assert invariants[16] == 0
        assert invariants.norm2 > 0

    def test_c12_at_xi(self, sasakian3):
        tensor, invariants = invariants_for(sasakian3, basis_vector(0))
        assert contraction_c12(tensor)[0] == 2
        assert invariants.c12[0] == 2

    def test_norm_independent_of_frame_summation(self, sasakian3):
        """적응 기저 위의 ‖α‖²와 원래 프레임 위의 재합산이 같다"""
        tensor, invariants = invariants_for(sasakian3, basis_vector(0))
        raw = sum(value * value for value in tensor.frame.ravel())
        assert invariants.norm2 == raw


class TestBasisIndependence:
    def test_reordered_and_rotated_bases(self, sasakian3):
        xi = rational_unit_vector(["1/2", "1/3", 0, "-1", "1/4", 0])
        base_tensor, base = invariants_for(sasakian3, xi)
        dropped = base_tensor.basis.dropped
        remaining = [i for i in range(DIM) if i != dropped]
        _, reordered = invariants_for(sasakian3, xi, adapted_basis(xi, order=list(reversed(remaining))))
        for m in range(1, INVARIANT_COUNT + 1):
            assert base[m] == reordered[m], f"i{m}"
        assert base.norm2 == reordered.norm2

    def test_rotation(self, sasakian3):
        basis = adapted_basis(basis_vector(0))
        _, base = invariants_for(sasakian3, basis_vector(0), basis)
        _, rotated = invariants_for(sasakian3, basis_vector(0), rotate_pair(basis, 2, 4, "5/13", "12/13"))
        for m in range(1, INVARIANT_COUNT + 1):
            assert base[m] == rotated[m], f"i{m}"


class TestFlat:
    def test_all_zero(self, flat):
        _, invariants = invariants_for(flat, rational_unit_vector([1, 2, 0, 0, "1/3", 0]))
        assert all(value == 0 for _, value in invariants.items())
        assert invariants.norm2 == 0
        assert invariants.all_zero()


class TestC12Norm:
    def test_matches_i4(self, sasakian3):
        xi = rational_unit_vector(["1/2", "1/3", 0, "-1", "1/4", 0])
        _, invariants = invariants_for(sasakian3, xi)
        assert invariants.c12_norm2 == invariants[4]

    def test_computed_from_frame_components(self, flat):
        """Σc12²는 프레임 좌표 성분에서, i4는 적응 기저 성분에서 계산되므로 둘이 어긋나면 드러난다"""
        q = Fraction(2, 3)
        acms = induce_acms(flat.structure, basis_vector(6))
        basis = adapted_basis(acms.xi)
        frame = EXACT.zeros((DIM, DIM, DIM))
        frame[0, 0, 1] = q
        phi_basis = phi_in_basis(acms, basis)

        consistent = quadratic_invariants(CovDerivTensor(frame, frame.copy(), phi_basis, basis, EXACT), acms)
        assert consistent[4] == q * q
        assert consistent.c12_norm2 == q * q

        mismatched = quadratic_invariants(CovDerivTensor(frame, frame * 2, phi_basis, basis, EXACT), acms)
        assert mismatched[4] == 4 * q * q
        assert mismatched.c12_norm2 == q * q


class TestNorm:
    def test_single_entry(self):
        """α(f1,f2,f3) = q 와 반대칭 짝 → ‖α‖² = 2q²"""
        q = Fraction(3, 7)
        basis = adapted_basis(basis_vector(6))
        alpha = EXACT.zeros((DIM, DIM, DIM))
        alpha[0, 1, 2] = q
        alpha[0, 2, 1] = -q
        tensor = CovDerivTensor(alpha.copy(), alpha, EXACT.zeros((DIM, DIM)), basis, EXACT)
        assert alpha_norm2(tensor) == 2 * q * q

    def test_hyperbolic_divergence_invariants(self, hyperbolic):
        """i14 = (div ξ)², i15 = -div ξ·g(ξ,v)"""
        xi = basis_vector(6)
        _, invariants = invariants_for(hyperbolic, xi)
        assert invariants[14] == 36
        assert invariants[15] == 0
        assert invariants[10] == 0
