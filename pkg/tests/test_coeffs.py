import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kapteyn import (
    DomainError,
    a_eval_exact,
    a_eval_logabs,
    a_poly,
    coeff_closed_form,
    coeff_table_recurrence,
)

# the first five polynomials, written out coefficient-by-coefficient
PRINTED = {
    1: {1: Fraction(1, 2)},
    2: {2: Fraction(1, 2)},
    3: {1: Fraction(-1, 16), 3: Fraction(9, 16)},
    4: {2: Fraction(-1, 6), 4: Fraction(2, 3)},
    5: {1: Fraction(1, 384), 3: Fraction(-81, 256), 5: Fraction(625, 768)},
}


class TestClosedForm:
    @pytest.mark.parametrize("n,k,expected", [
        (3, 1, Fraction(-1, 16)),
        (5, 5, Fraction(625, 768)),
        (4, 3, Fraction(0)),
        (1, 1, Fraction(1, 2)),
        (4, 4, Fraction(2, 3)),
        (4, 2, Fraction(-1, 6)),
    ])
    def test_values(self, n, k, expected):
        assert coeff_closed_form(n, k) == expected

    def test_vanishes_at_k_zero_and_odd_gap(self):
        for n in range(1, 12):
            assert coeff_closed_form(n, 0) == 0
            for k in range(1, n + 1):
                if (n - k) % 2:
                    assert coeff_closed_form(n, k) == 0

    def test_diagonal_positive(self):
        for n in range(1, 30):
            assert coeff_closed_form(n, n) > 0

    def test_argument_validation(self):
        with pytest.raises(DomainError):
            coeff_closed_form(0, 0)
        with pytest.raises(DomainError):
            coeff_closed_form(3, 4)


class TestRecurrenceTable:
    def test_small_tables(self):
        tbl = coeff_table_recurrence(2)
        assert tbl.value(1, 1) == Fraction(1, 2)
        assert tbl.value(2, 2) == Fraction(1, 2)
        assert tbl.value(1, 0) == 0
        assert tbl.value(2, 0) == 0 and tbl.value(2, 1) == 0

    def test_row_four(self):
        tbl = coeff_table_recurrence(4)
        assert tbl.value(4, 4) == Fraction(2, 3)
        assert tbl.value(4, 2) == Fraction(-1, 6)

    def test_row_sums_to_half(self):
        tbl = coeff_table_recurrence(6)
        assert sum(tbl.rows[5]) == Fraction(1, 2)

    def test_matches_closed_form(self):
        tbl = coeff_table_recurrence(25)
        for n in range(1, 26):
            for k in range(n + 1):
                assert tbl.value(n, k) == coeff_closed_form(n, k), (n, k)

    def test_validation(self):
        with pytest.raises(DomainError):
            coeff_table_recurrence(0)
        tbl = coeff_table_recurrence(3)
        with pytest.raises(DomainError):
            tbl.value(4, 0)


class TestAPoly:
    @pytest.mark.parametrize("n", sorted(PRINTED))
    def test_printed_polynomials(self, n):
        poly = a_poly(n)
        expected = [PRINTED[n].get(k, Fraction(0)) for k in range(n + 1)]
        assert list(poly.coeffs) == expected

    def test_matches_closed_form_n7(self):
        poly = a_poly(7)
        for k in range(8):
            assert poly.coeffs[k] == coeff_closed_form(7, k)

    def test_parity_sparsity(self):
        for n in (6, 9, 14):
            for k, c in enumerate(a_poly(n).coeffs):
                if (n - k) % 2:
                    assert c == 0

    def test_coefficients_sum_to_half(self):
        for n in (1, 2, 3, 10, 37):
            assert sum(a_poly(n).coeffs) == Fraction(1, 2)


class TestEvalExact:
    def test_normalization_large_n(self):
        assert a_eval_exact(100, 1) == Fraction(1, 2)

    def test_zero_at_origin(self):
        assert a_eval_exact(17, 0) == 0

    def test_parity_example(self):
        assert a_eval_exact(9, Fraction(-3, 7)) == -a_eval_exact(9, Fraction(3, 7))

    @given(st.integers(1, 40), st.fractions(min_value=-4, max_value=4, max_denominator=50))
    @settings(max_examples=80, deadline=None)
    def test_parity_property(self, n, t):
        assert a_eval_exact(n, -t) == (-1) ** n * a_eval_exact(n, t)

    def test_reflection_identity_at_unity(self):
        # A_n(t) + A_n(1/t) at t = 1 collapses to 2 A_n(1) = 1
        for n in (1, 4, 9, 21):
            assert a_eval_exact(n, 1) + a_eval_exact(n, Fraction(1, 1)) == 1

    def test_large_t_leading_term(self):
        # for t >> 1 the top coefficient dominates: A_n(t) ~ (nt/2)^n / n!
        n, t = 30, 100
        lead = Fraction(n * t, 2) ** n / math.factorial(n)
        rel = abs(a_eval_exact(n, t) - lead) / lead
        assert rel < 0.01

    def test_float_input_uses_exact_dyadic(self):
        assert a_eval_exact(3, 0.5) == a_eval_exact(3, Fraction(1, 2))

    def test_validation(self):
        with pytest.raises(DomainError):
            a_eval_exact(0, 1)


class TestEvalLogAbs:
    def test_at_unity(self):
        for n in (4, 500):
            log_abs, sign = a_eval_logabs(n, 1)
            assert sign == 1
            assert log_abs == pytest.approx(math.log(0.5), abs=1e-13)

    def test_exact_rational_root_gives_sign_zero(self):
        # 9 t^3/16 = t/16 at t = 1/3 exactly
        log_abs, sign = a_eval_logabs(3, Fraction(1, 3))
        assert sign == 0
        assert log_abs == -math.inf

    def test_float_near_root_is_rounded_not_zero(self):
        # the float 1/3 is a dyadic off the exact root, so the sign survives
        _, sign = a_eval_logabs(3, 1 / 3)
        assert sign != 0

    def test_matches_exact_value(self):
        v = a_eval_exact(12, Fraction(7, 5))
        log_abs, sign = a_eval_logabs(12, Fraction(7, 5))
        assert sign == (1 if v > 0 else -1)
        assert log_abs == pytest.approx(math.log(abs(v)), rel=1e-13)

    def test_rejects_non_finite(self):
        with pytest.raises(DomainError):
            a_eval_logabs(3, math.inf)
