#!/usr/bin/env python3
"""
외대수 테스트: 쐐기곱, 호지 스타, 내부곱, 평가, 스칼라 백엔드
"""

import itertools
import random
from fractions import Fraction

import pytest

from src.exterior import (
    DIM,
    EXACT,
    KForm,
    basis_vector,
    evaluate,
    format_vector,
    get_field,
    hodge_star,
    interior_product,
    parse_rational,
    random_rational,
    volume_form,
    wedge,
)
from src.g2 import STANDARD_PHI_TERMS
from src.utils import AlgebraError


def e(*labels: str) -> KForm:
    """e("12") = e^{12}, 여러 개면 합"""
    degree = len(labels[0])
    return KForm.from_monomials(degree, {label: 1 for label in labels})


def random_form(rng: random.Random, degree: int) -> KForm:
    terms = {
        index: random_rational(rng, 5)
        for index in itertools.combinations(range(DIM), degree)
        if rng.random() < 0.4
    }
    return KForm.from_terms(degree, terms)


class TestWedge:
    def test_basis_wedge(self):
        assert wedge(e("1"), e("2")) == e("12")

    def test_repeated_index(self):
        assert wedge(e("12"), e("12")).is_zero()

    def test_bilinearity(self):
        """(e^1+e^2)∧e^{23} = e^{123}"""
        assert wedge(e("1", "2"), e("23")) == e("123")

    def test_degree_overflow(self):
        with pytest.raises(AlgebraError):
            wedge(e("1234"), e("1234"))

    def test_graded_commutativity(self):
        """a∧b = (-1)^{jk} b∧a, 무작위 50쌍"""
        rng = random.Random(7)
        for _ in range(50):
            j, k = rng.randint(0, 4), rng.randint(0, 3)
            if j + k > DIM:
                continue
            a, b = random_form(rng, j), random_form(rng, k)
            sign = -1 if (j * k) % 2 else 1
            assert wedge(a, b) == wedge(b, a).scale(sign)


class TestHodgeStar:
    def test_star_of_one(self):
        assert hodge_star(KForm.from_terms(0, {(): 1})) == volume_form()

    def test_star_identity_permutation(self):
        assert hodge_star(e("123")) == e("4567")

    def test_star_star_is_identity(self):
        """홀수 차원 리만 계량: ⋆⋆ = id (모든 차수)"""
        rng = random.Random(11)
        for degree in range(DIM + 1):
            for _ in range(5):
                form = random_form(rng, degree)
                assert hodge_star(hodge_star(form)) == form

    def test_star_phi0(self):
        phi = KForm.from_monomials(3, STANDARD_PHI_TERMS)
        star = hodge_star(phi)
        assert star.coefficient((3, 4, 5, 6)) == 1
        assert len(star.coeffs) == 7


class TestInteriorProduct:
    def test_first_slot(self):
        assert interior_product(basis_vector(0), e("123")) == e("23")

    def test_missing_slot(self):
        assert interior_product(basis_vector(3), e("123")).is_zero()

    def test_sign(self):
        assert interior_product(basis_vector(1), e("123")) == e("13").scale(-1)

    def test_zero_form_rejected(self):
        with pytest.raises(AlgebraError):
            interior_product(basis_vector(0), KForm.from_terms(0, {(): 1}))


class TestEvaluate:
    def test_basis(self):
        e1, e2, e3 = (basis_vector(i) for i in range(3))
        assert evaluate(e("123"), [e1, e2, e3]) == 1
        assert evaluate(e("123"), [e2, e1, e3]) == -1

    def test_phi0_component(self):
        phi = KForm.from_monomials(3, STANDARD_PHI_TERMS)
        assert phi(basis_vector(1), basis_vector(4), basis_vector(6)) == -1

    def test_wrong_arity(self):
        with pytest.raises(AlgebraError):
            evaluate(e("123"), [basis_vector(0)])


class TestScalars:
    def test_parse_rational(self):
        assert parse_rational("-3/5") == Fraction(-3, 5)
        assert parse_rational("4") == 4

    @pytest.mark.parametrize("text", ["0.5", "1/0", "abc", ""])
    def test_parse_rational_rejects(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)

    def test_exact_sqrt(self):
        assert EXACT.exact_sqrt(Fraction(9, 25)) == Fraction(3, 5)
        assert EXACT.exact_sqrt(Fraction(2)) is None

    def test_float_tolerance(self):
        field_ = get_field("float", tolerance=1e-6)
        assert field_.is_zero(1e-7)
        assert not field_.is_zero(1e-3)

    def test_unknown_backend(self):
        with pytest.raises(ValueError):
            get_field("symbolic")

    def test_format_vector(self):
        vector = EXACT.asarray([0, "-1", "3/5", 0, 0, 0, 1])
        assert format_vector(vector) == "-e2+3/5e3+e7"
