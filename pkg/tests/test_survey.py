"""
Unit tests for field scans, classification, class numbers and the reference table
"""

import math
from fractions import Fraction

import pytest
from pydantic import ValidationError

import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.arith.integers import is_squarefree, omega
from src.config import ScanOptions
from src.diophantine.solver import solve_pq
from src.latgeom.ideal_lattices import gram_of_ideal
from src.latgeom.reduction import similarity_class
from src.models.classes import PqClass
from src.models.survey import SurveyRecord
from src.quadfield.fields import make_field
from src.quadfield.ideals import principal_ideal_basis
from src.survey.classify import (
    class_number_imag,
    classify_wr_ideals,
    fundamental_discriminant,
    principal_wr_search,
    real_field_scan,
)
from src.survey.scan import (
    density_bound,
    density_report,
    iter_survey_records,
    meets_density_bound,
    scan_fields,
    survey_record,
)
from src.survey.table1 import table1_report


def triples(ideals):
    return [(ideal.a, ideal.b, ideal.g) for ideal in ideals]


class TestScanFields:
    """Test per-D records and their summary"""

    def test_sets_to_30(self):
        """Test the solvable and nearsquare sets for N = 30"""
        records, summary = scan_fields(30)
        assert [r.D for r in records] == [D for D in range(1, 31) if is_squarefree(D)]
        assert {r.D for r in records if r.solvable} == {1, 3, 15, 21}
        assert {r.D for r in records if r.nearsquare3} == {2, 3, 6, 10, 15, 21, 30}
        assert summary.solvable_count == 4

    def test_record_fields(self):
        """Test one record in detail"""
        record = survey_record(105)
        assert record.witness == 7
        assert (record.f, record.f1, record.f2, record.f2_divisors) == (1, 4, 1, 1)
        assert (record.omega, record.tau) == (3, 8)
        assert record.f1_bound_ok
        assert record.real_claim == "sufficient"
        assert survey_record(2).real_claim == "open"

    def test_summary_at_1000(self):
        """Test |A(N)|, |B(N)| and the solvable count"""
        _, summary = scan_fields(1000)
        assert (summary.squarefree_count, summary.nearsquare_count, summary.solvable_count) == (608, 137, 79)
        assert summary.ratio_nearsquare == Fraction(137, 608)

    def test_solvability_iff_nearsquare(self):
        """Test records up to 10⁴ against the parity rule"""
        records, _ = scan_fields(10 ** 4)
        for record in records:
            if record.D == 1:
                assert record.solvable and not record.nearsquare3
            elif record.D % 2:
                assert record.solvable == record.nearsquare3
            else:
                assert not record.solvable
                assert record.f == record.f1 == 0

    def test_parallel_matches_sequential(self):
        """Test ascending order regardless of workers"""
        sequential = list(iter_survey_records(ScanOptions(max_D=600, workers=1, chunk_size=37)))
        parallel = list(iter_survey_records(ScanOptions(max_D=600, workers=2, chunk_size=37)))
        assert sequential == parallel

    def test_record_invariants(self):
        """Test that a solvable record must be nearsquare"""
        with pytest.raises(ValidationError):
            SurveyRecord(
                D=5, nearsquare3=False, solvable=True, f=1, f1=1, f2=1, f2_divisors=1,
                omega=1, tau=2, f1_bound_ok=True, real_claim="sufficient",
            )

    def test_rejects_bad_options(self):
        """Test validation of scan options"""
        with pytest.raises(ValidationError):
            ScanOptions(max_D=0)
        with pytest.raises(ValidationError):
            ScanOptions(max_D=10, workers=0)


class TestDensityReport:
    """Test vectorised density counts"""

    def test_matches_scan(self):
        """Test density counts against the record scan at N = 1000"""
        report = density_report(1000)
        _, summary = scan_fields(1000)
        assert report.summary == summary

    def test_counts(self):
        """Test counts at 10⁴ and 10⁵"""
        small = density_report(10 ** 4).summary
        assert (small.squarefree_count, small.nearsquare_count, small.solvable_count) == (6083, 1334, 772)
        large = density_report(10 ** 5).summary
        assert (large.squarefree_count, large.nearsquare_count, large.solvable_count) == (60794, 12966, 7499)
        assert abs(float(small.ratio_nearsquare - large.ratio_nearsquare)) < 0.02
        assert meets_density_bound(large.ratio_nearsquare)

    def test_million(self):
        """Test N = 10⁶: squarefree density, nearsquare ratio and solvable ratio"""
        report = density_report(10 ** 6)
        summary = report.summary
        assert summary.squarefree_count == 607926
        assert abs(float(report.squarefree_density) - 6 / math.pi ** 2) < 0.001
        assert report.squarefree_density_limit == "0.607927"
        assert summary.nearsquare_count == 126131
        assert summary.solvable_count == 73247
        assert not report.meets_bound
        previous = density_report(10 ** 5).summary
        assert abs(float(summary.ratio_solvable - previous.ratio_solvable)) < 0.02

    def test_bound(self):
        """Test the constant and the exact comparison"""
        assert str(density_bound()) == "0.211325"
        assert not meets_density_bound(Fraction(2113, 10000))
        assert meets_density_bound(Fraction(2114, 10000))
        assert meets_density_bound(Fraction(1, 2))

    def test_threshold_flag(self):
        """Test small N is reported below the proof threshold"""
        assert density_report(100).below_proof_threshold
        assert not density_report(289).below_proof_threshold


class TestClassifyWrIdeals:
    """Test classification of well-rounded ideals by similarity class"""

    def test_examples(self):
        """Test Q(√−21), Q(√−2) and Q(√−3)"""
        report = classify_wr_ideals(make_field(-21), 50)
        assert report.classes == [PqClass(p=2, q=5, r=1, D=21)]
        assert {(5, 2, 1), (14, 7, 1)} <= set(triples(report.representatives))
        assert report.complete

        report = classify_wr_ideals(make_field(-2), 50)
        assert report.classes == [] and report.representatives == []

        report = classify_wr_ideals(make_field(-3), 10)
        assert report.classes == [PqClass(p=1, q=2, r=1, D=3)]
        assert (1, 0, 1) in triples(report.representatives)

    def test_gaussian_field(self):
        """Test the square class of Z[i]"""
        report = classify_wr_ideals(make_field(-1))
        assert report.classes == [PqClass(p=0, q=1, r=1, D=1)]
        assert report.h == 1

    def test_scaled_ideals(self):
        """Test that g > 1 ideals add no classes"""
        primitive = classify_wr_ideals(make_field(-21), 60)
        scaled = classify_wr_ideals(make_field(-21), 60, include_scaled=True)
        assert scaled.classes == primitive.classes
        assert len(scaled.representatives) > len(primitive.representatives)

    def test_representatives_match_classes(self):
        """Test every representative form lies in a listed class"""
        report = classify_wr_ideals(make_field(-105))
        assert {similarity_class(gram_of_ideal(I)) for I in report.representatives} == set(report.classes)

    def test_imaginary_fields_to_300(self):
        """Test class sets against solve_pq for odd squarefree D ≤ 300"""
        for D in range(3, 301, 2):
            if not is_squarefree(D):
                continue
            report = classify_wr_ideals(make_field(-D), 4 * D)
            expected = [PqClass(p=p, q=q, r=1, D=D) for p, q in solve_pq(D, 1)]
            assert report.classes == expected, D
            assert not report.missing
            assert 2 * report.wr_class_count <= 2 ** omega(D)


class TestClassNumber:
    """Test reduced-form class numbers"""

    def test_examples(self):
        """Test Δ, h and the WR class count"""
        record = class_number_imag(21)
        assert (record.delta, record.h, record.wr_classes) == (-84, 4, 1)
        assert record.forms == ((1, 0, 21), (2, 2, 11), (3, 0, 7), (5, 4, 5))
        record = class_number_imag(5)
        assert (record.delta, record.h, record.wr_classes) == (-20, 2, 0)
        assert record.forms == ((1, 0, 5), (2, 2, 3))
        record = class_number_imag(1)
        assert (record.delta, record.h, record.wr_classes) == (-4, 1, 1)
        record = class_number_imag(3)
        assert (record.delta, record.h, record.wr_classes) == (-3, 1, 1)

    def test_fundamental_discriminant(self):
        """Test −D against −4D"""
        assert fundamental_discriminant(3) == -3
        assert fundamental_discriminant(7) == -7
        assert fundamental_discriminant(5) == -20
        assert fundamental_discriminant(2) == -8

    def test_most_classes_are_not_wr(self):
        """Test wr_classes ≤ h with equality only for D = 1, 3"""
        equal = []
        for D in range(1, 301):
            if not is_squarefree(D):
                continue
            record = class_number_imag(D)
            assert record.wr_classes <= record.h
            if record.wr_classes == record.h:
                equal.append(D)
        assert equal == [1, 3]


class TestPrincipalSearch:
    """Test searches for principal well-rounded ideals"""

    def test_examples(self):
        """Test Q(√−5), Q(√21) and Q(√−3)"""
        assert principal_wr_search(make_field(-5), 20) == []

        hits = principal_wr_search(make_field(21), 20)
        found = triples(hit.ideal for hit in hits)
        assert (3, 1, 1) in found and (7, 3, 1) in found
        for hit in hits:
            assert principal_ideal_basis(make_field(21), hit.x, hit.y) == hit.ideal

        hits = principal_wr_search(make_field(-3), 5)
        assert (1, 0, 1) in triples(hit.ideal for hit in hits)

    def test_only_cyclotomic_imaginary_fields(self):
        """Test imaginary D ≤ 100 with height 50"""
        fields_with_hits = [
            D for D in range(1, 101)
            if is_squarefree(D) and principal_wr_search(make_field(-D), 50)
        ]
        assert fields_with_hits == [1, 3]

    def test_rejects_bad_height(self):
        """Test height < 1"""
        with pytest.raises(ValueError):
            principal_wr_search(make_field(-3), 0)


class TestRealFieldScan:
    """Test the real-field findings table"""

    def test_small_scan(self):
        """Test rows for D ≤ 30"""
        rows = {row.D: row for row in real_field_scan(30, height=5)}
        assert rows[21].solvable and rows[21].principal_wr
        assert rows[21].wr_class_count >= 1
        assert rows[3].solvable and rows[3].wr_class_count >= 1
        assert not rows[2].solvable
        assert rows[21].d_mod_4 == 1


class TestTable1:
    """Test the reference table"""

    def test_rows(self):
        """Test all four rows cell for cell"""
        rows = table1_report()
        assert [(r.D, r.ideal_1, r.ideal_2, r.ratio, r.r) for r in rows] == [
            (21, "⟨3, 1+δ⟩", "⟨7, 3+δ⟩", Fraction(2, 5), 1),
            (77, "⟨7, 3+δ⟩", "⟨11, 5+δ⟩", Fraction(2, 9), 1),
            (133, "⟨7, 3+δ⟩", "⟨19, 9+δ⟩", Fraction(6, 13), 1),
            (209, "⟨11, 5+δ⟩", "⟨19, 9+δ⟩", Fraction(4, 15), 1),
        ]
