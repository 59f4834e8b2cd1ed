import random
from fractions import Fraction

import pytest

from tldiag.scalars import qint
from tldiag import tl_diagram as tl
from tldiag.algebra import (
    AlgebraElement, FINITE, finite_element, psi_finite, evaluate,
)
from tldiag.repcheck import (
    regular_matrix, annihilator_check, commute_check, predicted_m_spectrum,
    repcheck_report,
)


def unit(k):
    return AlgebraElement.unit(FINITE, k)


class TestRegularMatrix:
    def test_identity(self):
        mat = regular_matrix(unit(3), Fraction(2))
        assert mat.dim == 5
        for i in range(5):
            for j in range(5):
                assert mat.entries[i][j] == (1 if i == j else 0)

    def test_e1_at_k2(self):
        mat = regular_matrix(evaluate([("e", 1)], 2, FINITE), Fraction(2))
        basis = mat.basis
        j = basis.index(tl.e_diagram(1, 2))
        assert mat.entries[j][j] == Fraction(5, 2)

    def test_degenerate_q_rejected(self):
        with pytest.raises(ValueError):
            regular_matrix(unit(2), Fraction(1))

    def test_algebra_map(self):
        rng = random.Random(3)
        for k in (2, 3, 4):
            diagrams = tl.enumerate_diagrams(k)
            for _ in range(50 // k):
                d1, d2 = rng.choice(diagrams), rng.choice(diagrams)
                a = finite_element(k, d1)
                b = finite_element(k, d2)
                ma = regular_matrix(a, Fraction(2))
                mb = regular_matrix(b, Fraction(2))
                mab = regular_matrix(a * b, Fraction(2))
                assert ma.matmul(mb).entries == mab.entries

    def test_e_trace_consistent(self):
        # trace of left multiplication by e_i: direct brute-force count
        for k in (2, 3, 4):
            q = Fraction(2)
            n = q + 1 / q
            for i in range(1, k):
                e = evaluate([("e", i)], k, FINITE)
                mat = regular_matrix(e, q)
                brute = Fraction(0)
                for b in tl.enumerate_diagrams(k):
                    prod, loops = tl.compose(tl.e_diagram(i, k), b)
                    if prod == b:
                        brute += n ** loops
                assert mat.trace() == brute


class TestAnnihilation:
    def test_identity_annihilated_by_one(self):
        mat = regular_matrix(unit(3), Fraction(2))
        assert annihilator_check(mat, [Fraction(1)])

    def test_m2_k3(self):
        mat = regular_matrix(psi_finite(2, 3), Fraction(2))
        assert annihilator_check(mat, predicted_m_spectrum(2, 3, Fraction(2)))

    def test_truncated_spectrum_fails(self):
        mat = regular_matrix(psi_finite(3, 3), Fraction(2))
        full = predicted_m_spectrum(3, 3, Fraction(2))
        assert annihilator_check(mat, full)
        truncated = [s for s in full if s != 0]
        assert not annihilator_check(mat, truncated)

    def test_all_predictions_small(self):
        for k in (2, 3, 4):
            for q in (Fraction(2), Fraction(5, 3)):
                for i in range(2, k + 1):
                    mat = regular_matrix(psi_finite(i, k), q)
                    assert annihilator_check(mat, predicted_m_spectrum(i, k, q))


class TestCommute:
    def test_family_commutes(self):
        for k in (3, 4):
            mats = [regular_matrix(psi_finite(i, k), Fraction(2))
                    for i in range(2, k + 1)]
            assert commute_check(mats)

    def test_e_generators_do_not(self):
        e1 = regular_matrix(evaluate([("e", 1)], 3, FINITE), Fraction(2))
        e2 = regular_matrix(evaluate([("e", 2)], 3, FINITE), Fraction(2))
        assert not commute_check([e1, e2])

    def test_singleton(self):
        assert commute_check([regular_matrix(unit(2), Fraction(2))])


class TestReport:
    def test_k4_report(self):
        report = repcheck_report(4, Fraction(2))
        assert report["matrix_dim"] == 14
        assert report["annihilated"] and report["commuting"]
        assert report["schema"] == 1

    def test_two_specializations_agree(self):
        for q in (Fraction(2), Fraction(5, 3)):
            report = repcheck_report(3, q)
            assert report["annihilated"] and report["commuting"]
