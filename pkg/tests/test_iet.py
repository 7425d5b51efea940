import math

import pytest

from ietwords import (
    DomainError,
    QuadNumber,
    ThreeIET,
    TwoIET,
    ZERO,
    binary_word,
    coding_word_k,
    factor_complexity,
    is_balanced,
    is_nondegenerate_params,
    ternary_word,
    three_iet_code,
    two_iet_code,
)

GOLDEN_SLOPE = QuadNumber(-1, 1, 5, 2)  # (sqrt(5)-1)/2
ALPHA = QuadNumber(3, -1, 5, 2)  # (3-sqrt(5))/2


def coprime_cases(max_n):
    for n in range(2, max_n + 1):
        for p in range(1, n):
            if math.gcd(p, n) == 1:
                yield p, n


class TestTwoIETCode:
    def test_rational_example(self):
        t = TwoIET(QuadNumber(2, 0, 0, 3))
        assert two_iet_code(t, ZERO, 3) == binary_word("001")

    def test_golden_example(self):
        assert two_iet_code(TwoIET(GOLDEN_SLOPE), ZERO, 3) == binary_word("001")

    def test_slope_one_codes_zeros(self):
        assert two_iet_code(TwoIET(QuadNumber(1)), ZERO, 2) == binary_word("00")

    def test_slope_zero_codes_ones(self):
        assert two_iet_code(TwoIET(QuadNumber(0)), ZERO, 2) == binary_word("11")

    def test_matches_direct_orbit_formula(self):
        # u_i = 0 iff frac(x0 - i*eps) < eps, evaluated independently
        eps = GOLDEN_SLOPE
        x0 = QuadNumber(1, 0, 0, 3)
        coded = two_iet_code(TwoIET(eps), x0, 60)
        for i, letter in enumerate(coded):
            iterate = (x0 - QuadNumber(i) * eps).frac()
            assert letter == (0 if iterate < eps else 1)

    def test_domain_errors(self):
        t = TwoIET(GOLDEN_SLOPE)
        with pytest.raises(DomainError):
            two_iet_code(t, QuadNumber(1), 3)
        with pytest.raises(DomainError):
            two_iet_code(t, QuadNumber(-1, 0, 0, 2), 3)
        with pytest.raises(DomainError):
            two_iet_code(t, ZERO, 0)
        with pytest.raises(DomainError):
            TwoIET(QuadNumber(3, 0, 0, 2))


class TestCodingWordK:
    def test_examples(self):
        assert coding_word_k(2, 3, 0) == binary_word("001")
        assert coding_word_k(2, 3, 1) == binary_word("010")
        assert coding_word_k(2, 3, 2) == binary_word("100")

    def test_coprimality_required(self):
        with pytest.raises(DomainError):
            coding_word_k(2, 4, 0)
        with pytest.raises(DomainError):
            coding_word_k(3, 3, 0)

    def test_agrees_with_exact_orbit_engine(self):
        for p, n in coprime_cases(30):
            slope = QuadNumber(p, 0, 0, n)
            t = TwoIET(slope)
            for k in range(n):
                start = QuadNumber(k, 0, 0, n)
                assert two_iet_code(t, start, n) == coding_word_k(p, n, k)

    def test_all_coding_words_balanced(self):
        for p, n in coprime_cases(30):
            for k in range(n):
                assert is_balanced(coding_word_k(p, n, k))


class TestThreeIETCode:
    def test_rational_example(self):
        t = ThreeIET(QuadNumber(2, 0, 0, 5), QuadNumber(3, 0, 0, 10))
        assert three_iet_code(t, ZERO, 3) == ternary_word("ABB")

    def test_boundary_point_codes_c(self):
        t = ThreeIET(QuadNumber(2, 0, 0, 5), QuadNumber(3, 0, 0, 10))
        assert three_iet_code(t, QuadNumber(7, 0, 0, 10), 1) == ternary_word("C")

    def test_zero_codes_a(self):
        t = ThreeIET(ALPHA, QuadNumber(1, 0, 0, 4))
        assert three_iet_code(t, ZERO, 1) == ternary_word("A")

    def test_orbit_stays_in_unit_interval(self):
        t = ThreeIET(ALPHA, QuadNumber(1, 0, 0, 4))
        word = three_iet_code(t, ZERO, 200)
        assert len(word) == 200
        assert set(word.letters) == {0, 1, 2}

    def test_parameter_validation(self):
        half = QuadNumber(1, 0, 0, 2)
        with pytest.raises(DomainError):
            ThreeIET(ZERO, half)
        with pytest.raises(DomainError):
            ThreeIET(half, half)
        with pytest.raises(DomainError):
            three_iet_code(ThreeIET(ALPHA, half), QuadNumber(2), 1)


class TestNondegeneracy:
    def test_rational_parameters_degenerate(self):
        quarter = QuadNumber(1, 0, 0, 4)
        assert not is_nondegenerate_params(ThreeIET(quarter, quarter))

    def test_golden_alpha_nondegenerate(self):
        assert is_nondegenerate_params(ThreeIET(ALPHA, QuadNumber(1, 0, 0, 4)))

    def test_radical_cancellation_trap(self):
        # (1-alpha)/(1+beta) collapses to 1/2 despite irrational inputs
        trap = ThreeIET(ALPHA, QuadNumber(-2, 1, 5))
        assert not is_nondegenerate_params(trap)


class TestSturmianComplexityOnPrefixes:
    def test_irrational_slope_prefix_complexity(self):
        for slope in (GOLDEN_SLOPE, QuadNumber(-1, 1, 2), QuadNumber(1, 1, 7, 5)):
            word = two_iet_code(TwoIET(slope), ZERO, 500)
            assert is_balanced(word)
            for m in range(1, 11):
                assert factor_complexity(word, m) == m + 1
