"""
Unit tests for norm forms, reduction and well-roundedness
"""

import random
from fractions import Fraction

import pytest

import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.arith.integers import is_squarefree
from src.diophantine.solver import solve_pq
from src.errors import FieldKindError, InvalidArgumentError, NotPositiveDefiniteError, NotWellRoundedError
from src.latgeom.ideal_lattices import gram_of_ideal, gram_of_omega, minimal_gram_of_class, wr_real_criterion
from src.latgeom.minima import brute_force_minima
from src.latgeom.reduction import (
    apply_transform,
    compose,
    is_hexagonal,
    is_matrix_integral,
    is_wr,
    lattice_type,
    minimal_scale,
    minimal_vector_count,
    reduce_form,
    similarity_class,
    verify_angle_identity,
)
from src.models.classes import PqClass
from src.models.fields import IdealBasis
from src.models.forms import CriterionVerdict, QuadForm
from src.quadfield.fields import make_field
from src.quadfield.ideals import construct_wr_ideal, enumerate_ideals, primitive_part


def ideal(m, a, b, g=1):
    return IdealBasis(field=make_field(m), a=a, b=b, g=g)


def random_unimodular(rng, steps=6):
    U = (1, 0, 0, 1)
    for _ in range(steps):
        k = rng.randint(-3, 3)
        U = compose(U, rng.choice([(1, k, 0, 1), (1, 0, k, 1), (0, -1, 1, 0), (1, 0, 0, -1)]))
    return U


class TestGramForms:
    """Test norm forms of ideals and model lattices"""

    def test_ideal_examples(self):
        """Test one form per embedding case"""
        assert gram_of_ideal(ideal(21, 3, 1)).as_tuple() == (18, 18, 15)
        assert gram_of_ideal(ideal(-3, 1, 0)).as_tuple() == (1, 1, 1)
        assert gram_of_ideal(ideal(-21, 14, 7)).as_tuple() == (196, 196, 70)
        assert gram_of_ideal(ideal(7, 3, 1)).as_tuple() == (18, 12, 16)

    def test_omega_examples(self):
        """Test (q², 2pq, q²)"""
        assert gram_of_omega(PqClass(p=2, q=5, r=1, D=21)).as_tuple() == (25, 20, 25)
        assert gram_of_omega(PqClass(p=1, q=2, r=1, D=3)).as_tuple() == (4, 4, 4)
        assert gram_of_omega(PqClass(p=0, q=1, r=1, D=1)).as_tuple() == (1, 0, 1)

    def test_minimal_examples(self):
        """Test (q, 2p, q) and its discriminant"""
        form = minimal_gram_of_class(PqClass(p=2, q=5, r=1, D=21))
        assert form.as_tuple() == (5, 4, 5)
        assert form.B ** 2 - 4 * form.A * form.C == -84
        assert minimal_gram_of_class(PqClass(p=1, q=2, r=1, D=3)).as_tuple() == (2, 2, 2)
        assert minimal_gram_of_class(PqClass(p=0, q=1, r=1, D=1)).as_tuple() == (1, 0, 1)

    def test_scaling(self):
        """Test gram(I) = g²·gram(I/g)"""
        for m in (-21, 21, -3, 7, -1, 13):
            for I in enumerate_ideals(make_field(m), 30):
                if I.g == 1:
                    continue
                scaled = gram_of_ideal(I).as_tuple()
                base = gram_of_ideal(primitive_part(I)).as_tuple()
                assert scaled == tuple(I.g ** 2 * value for value in base)


class TestReduceForm:
    """Test Gauss-Lagrange reduction"""

    def test_examples(self):
        """Test hand-reduced forms"""
        assert reduce_form(QuadForm(18, 18, 15)).form.as_tuple() == (15, 12, 15)
        assert reduce_form(QuadForm(196, 196, 70)).form.as_tuple() == (70, 56, 70)
        assert reduce_form(QuadForm(1, 0, 1)).form.as_tuple() == (1, 0, 1)

    def test_transform_reproduces_result(self):
        """Test Uᵀ·G·U = reduced with det U = ±1"""
        for coefficients in [(18, 18, 15), (196, 196, 70), (3, -5, 7), (100, 199, 100), (9, 9, 3)]:
            form = QuadForm(*coefficients)
            result = reduce_form(form)
            s1, s2, s3, s4 = result.transform
            assert abs(s1 * s4 - s2 * s3) == 1
            assert apply_transform(form, result.transform) == result.form
            assert result.form.B ** 2 - 4 * result.form.A * result.form.C == form.B ** 2 - 4 * form.A * form.C

    def test_reduced_shape(self):
        """Test 0 ≤ B ≤ A ≤ C on random forms"""
        rng = random.Random(7)
        for _ in range(500):
            A, B, C = rng.randint(1, 1000), rng.randint(-1000, 1000), rng.randint(1, 1000)
            if 4 * A * C - B * B <= 0:
                continue
            result = reduce_form(QuadForm(A, B, C))
            reduced = result.form
            assert 0 <= reduced.B <= reduced.A <= reduced.C
            assert apply_transform(QuadForm(A, B, C), result.transform) == reduced

    def test_rejects_indefinite(self):
        """Test that indefinite or degenerate forms cannot be built"""
        with pytest.raises(NotPositiveDefiniteError):
            QuadForm(1, 0, -1)
        with pytest.raises(NotPositiveDefiniteError):
            QuadForm(1, 2, 1)
        with pytest.raises(NotPositiveDefiniteError):
            QuadForm(-1, 0, -1)


class TestWellRounded:
    """Test WR detection, minimal vectors and similarity classes"""

    def test_is_wr(self):
        """Test equal successive minima"""
        assert is_wr(QuadForm(15, 12, 15))
        assert not is_wr(QuadForm(1, 0, 2))
        assert is_wr(QuadForm(1, 1, 1))

    def test_minimal_vector_count(self):
        """Test hexagonal, square and generic lattices"""
        assert minimal_vector_count(QuadForm(1, 1, 1)) == 6
        assert minimal_vector_count(QuadForm(1, 0, 1)) == 4
        assert minimal_vector_count(QuadForm(1, 0, 2)) == 2
        assert is_hexagonal(QuadForm(1, -1, 1))

    def test_similarity_class(self):
        """Test (p, q, r, D) tokens"""
        assert similarity_class(QuadForm(15, 12, 15)) == PqClass(p=2, q=5, r=1, D=21)
        assert similarity_class(QuadForm(1, 1, 1)) == PqClass(p=1, q=2, r=1, D=3)
        assert similarity_class(QuadForm(1, 0, 1)) == PqClass(p=0, q=1, r=1, D=1)

    def test_similarity_class_with_r(self):
        """Test a class with r > 1: cos θ = 2/7 gives 45 = 3²·5"""
        assert similarity_class(QuadForm(7, 4, 7)) == PqClass(p=2, q=7, r=3, D=5)

    def test_rejects_non_wr(self):
        """Test similarity_class on a non-WR form"""
        with pytest.raises(NotWellRoundedError):
            similarity_class(QuadForm(1, 0, 2))

    def test_class_invariant_under_basis_change(self):
        """Test that random unimodular transforms keep the class"""
        rng = random.Random(11)
        for coefficients in [(25, 20, 25), (15, 12, 15), (4, 4, 4), (1, 0, 1), (70, 56, 70), (7, 4, 7)]:
            form = QuadForm(*coefficients)
            expected = similarity_class(form)
            for _ in range(50):
                moved = apply_transform(form, random_unimodular(rng))
                assert similarity_class(moved) == expected

    def test_angle_identity(self):
        """Test sin²θ = r²D/q² on reference forms"""
        assert verify_angle_identity(QuadForm(15, 12, 15), PqClass(p=2, q=5, r=1, D=21))
        assert verify_angle_identity(QuadForm(1, 1, 1), PqClass(p=1, q=2, r=1, D=3))
        assert verify_angle_identity(QuadForm(1, 0, 1), PqClass(p=0, q=1, r=1, D=1))
        assert not verify_angle_identity(QuadForm(15, 12, 15), PqClass(p=1, q=2, r=1, D=3))

    def test_integrality_and_scale(self):
        """Test matrix integrality and the scale against (q, 2p, q)"""
        assert not is_matrix_integral(QuadForm(1, 1, 1))
        assert is_matrix_integral(QuadForm(5, 4, 5))
        assert minimal_scale(QuadForm(1, 1, 1)) == Fraction(1, 2)
        assert minimal_scale(QuadForm(15, 12, 15)) == 3
        assert minimal_scale(QuadForm(196, 196, 70)) == 14
        assert lattice_type(QuadForm(15, 12, 15)) == 21


class TestBruteForceMinima:
    """Test the enumeration oracle"""

    def test_examples(self):
        """Test small forms"""
        vectors = brute_force_minima(QuadForm(5, 4, 5), 5)
        assert {(v.x, v.y) for v in vectors} == {(1, 0), (-1, 0), (0, 1), (0, -1)}
        assert all(v.value == 5 for v in vectors)
        vectors = brute_force_minima(QuadForm(1, 1, 1), 1)
        assert len(vectors) == 6
        vectors = brute_force_minima(QuadForm(1, 0, 2), 1)
        assert [(v.x, v.y) for v in vectors] == [(-1, 0), (1, 0)]

    def test_sorted_by_value(self):
        """Test ordering by value, then coordinates"""
        vectors = brute_force_minima(QuadForm(2, 1, 3), 12)
        keys = [(v.value, v.x, v.y) for v in vectors]
        assert keys == sorted(keys)

    def test_rejects_bad_bound(self):
        """Test bound < 1"""
        with pytest.raises(InvalidArgumentError):
            brute_force_minima(QuadForm(1, 0, 1), 0)

    def test_agrees_with_reduction(self):
        """Test minimum and minimal-vector count on random forms"""
        rng = random.Random(2024)
        checked = 0
        while checked < 1000:
            A, B, C = rng.randint(1, 1000), rng.randint(-1000, 1000), rng.randint(1, 1000)
            if 4 * A * C - B * B <= 0:
                continue
            form = QuadForm(A, B, C)
            minimum = reduce_form(form).form.A
            vectors = brute_force_minima(form, minimum)
            assert min(v.value for v in vectors) == minimum
            shortest = [v for v in vectors if v.value == minimum]
            assert len(shortest) == minimal_vector_count(form)
            assert (len(shortest) >= 4) == is_wr(form)
            assert (len(shortest) == 6) == is_hexagonal(form)
            checked += 1


class TestRealCriterion:
    """Test the sufficient WR criterion for real-field ideals"""

    def test_examples(self):
        """Test one example per verdict"""
        assert wr_real_criterion(ideal(21, 7, 3)) is CriterionVerdict.IMPLIES_R1
        assert wr_real_criterion(ideal(7, 3, 1)) is CriterionVerdict.MINKOWSKI_SUFFICIENT
        assert wr_real_criterion(ideal(21, 5, 4)) is CriterionVerdict.INCONCLUSIVE
        assert not is_wr(gram_of_ideal(ideal(7, 3, 1)))

    def test_rejects_wrong_inputs(self):
        """Test imaginary fields and g ≠ 1"""
        with pytest.raises(FieldKindError):
            wr_real_criterion(ideal(-21, 14, 7))
        with pytest.raises(FieldKindError):
            wr_real_criterion(ideal(21, 2, 0, 2))


class TestConstructionIsWellRounded:
    """Test the constructions for every solution with odd D ≤ 10³"""

    def test_both_fields_and_companion(self):
        """Test validity, class (p, q, 1, D) and the angle identity"""
        for D in range(3, 1001, 2):
            if not is_squarefree(D):
                continue
            for p, q in solve_pq(D, 1):
                expected = PqClass(p=p, q=q, r=1, D=D)
                for sign in ("real", "imaginary"):
                    for companion in (False, True):
                        form = gram_of_ideal(construct_wr_ideal(D, p, q, sign, companion=companion))
                        assert is_wr(form)
                        assert similarity_class(form) == expected
                        assert verify_angle_identity(form, expected)
