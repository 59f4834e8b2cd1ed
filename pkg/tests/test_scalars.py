from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tldiag.scalars import (
    IntLaurent, ParamScalar, NPoly, qint, exact_divide, to_n_basis,
    specialize, NonDivisibleError, UnassignedParameterError,
)

Q = IntLaurent.q_power


def laurents(max_degree=8, max_coeff=9):
    return st.builds(
        IntLaurent,
        st.dictionaries(st.integers(-max_degree, max_degree),
                        st.integers(-max_coeff, max_coeff), max_size=6))


class TestQint:
    def test_two(self):
        assert qint(2) == IntLaurent({1: 1, -1: 1})

    def test_zero_and_minus_one(self):
        assert qint(0).is_zero()
        assert qint(-1).is_zero()

    def test_four_by_long_division(self):
        # (q^4 - q^-4) / (q - q^-1)
        num = IntLaurent({4: 1, -4: -1})
        den = IntLaurent({1: 1, -1: -1})
        assert qint(4) == exact_divide(num, den)
        assert qint(4) == IntLaurent({3: 1, 1: 1, -1: 1, -3: 1})

    def test_domain_error(self):
        with pytest.raises(ValueError):
            qint(-2)

    def test_defining_product(self):
        den = IntLaurent({1: 1, -1: -1})
        for k in range(1, 31):
            assert qint(k) * den == IntLaurent({k: 1, -k: -1})

    @given(st.integers(0, 20), st.integers(0, 20))
    def test_pluecker_style_identity(self, b, a_off):
        # [a][b+1] - [a+1][b] = [a-b] for 0 <= b <= a
        a = b + a_off
        lhs = qint(a) * qint(b + 1) - qint(a + 1) * qint(b)
        assert lhs == qint(a - b)


class TestExactDivide:
    def test_difference_of_squares(self):
        assert exact_divide(IntLaurent({2: 1, -2: -1}),
                            IntLaurent({1: 1, -1: -1})) == qint(2)

    def test_monomial(self):
        assert exact_divide(Q(3), Q(1)) == Q(2)

    def test_non_divisible(self):
        with pytest.raises(NonDivisibleError):
            exact_divide(IntLaurent({1: 1, 0: 1}), IntLaurent({1: 1, -1: -1}))

    def test_non_integer_quotient(self):
        with pytest.raises(NonDivisibleError):
            exact_divide(Q(0, 1), Q(0, 2))

    @given(laurents(), laurents())
    def test_round_trip(self, a, b):
        if b.is_zero():
            return
        assert exact_divide(a * b, b) == a


class TestRingAxioms:
    @given(laurents(), laurents(), laurents())
    def test_laurent_ring(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(laurents(4, 4), laurents(4, 4), laurents(4, 4))
    def test_param_scalar_ring(self, la, lb, lc):
        a = ParamScalar({(1,): la, (): lb})
        b = ParamScalar({(2,): lb, (1, 1): lc})
        c = ParamScalar({(): lc})
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


class TestNBasis:
    def test_small(self):
        assert to_n_basis(1) == NPoly([1])
        assert to_n_basis(2) == NPoly([0, 1])
        assert to_n_basis(4) == NPoly([0, -2, 0, 1])

    def test_reevaluates_to_qint(self):
        n = IntLaurent({1: 1, -1: 1})
        for k in range(1, 31):
            assert to_n_basis(k).evaluate_laurent(n) == qint(k)


class TestSpecialize:
    def test_qint_two(self):
        assert specialize(qint(2), Fraction(2)) == Fraction(5, 2)

    def test_param(self):
        a = ParamScalar.x(1) * Q(1)
        assert specialize(a, Fraction(2), {1: Fraction(5, 2)}) == Fraction(5)

    def test_negative_power(self):
        assert specialize(Q(-3), Fraction(3, 2)) == Fraction(8, 27)

    def test_q_zero_rejected(self):
        with pytest.raises(ValueError):
            specialize(qint(2), Fraction(0))

    def test_unassigned(self):
        with pytest.raises(UnassignedParameterError):
            specialize(ParamScalar.x(2), Fraction(2), {1: Fraction(1)})


class TestRendering:
    def test_canonical_text(self):
        value = IntLaurent({3: 1, -1: 1, 0: -2})
        assert str(value) == "q^3 - 2 + q^-1"

    def test_json(self):
        assert IntLaurent({2: 3}).to_json() == {"2": 3}

    def test_params(self):
        assert str(ParamScalar.x(1)) == "x1"
        assert str(ParamScalar.x(2) * 2) == "2*x2"
