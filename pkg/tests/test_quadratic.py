import math
import random

import pytest
from hypothesis import given, strategies as st

from ietwords import (
    DomainError,
    FieldMismatchError,
    ONE,
    ParseError,
    QuadNumber,
    ZERO,
)

RADICANDS = [0, 2, 3, 5, 6, 7, 10, 11]

coefficients = st.integers(min_value=-60, max_value=60)
denominators = st.integers(min_value=1, max_value=40)


def quads(d):
    return st.builds(
        lambda a, b, c: QuadNumber(a, b, d, c), coefficients, coefficients, denominators
    )


any_quads = st.sampled_from(RADICANDS).flatmap(quads)
golden = QuadNumber(1, 1, 5, 2)


class TestNormalisation:
    def test_square_factor_extracted(self):
        assert QuadNumber(0, 1, 8) == QuadNumber(0, 2, 2)

    def test_perfect_square_radicand_becomes_rational(self):
        x = QuadNumber(1, 3, 4, 2)
        assert x.is_rational
        assert x == QuadNumber(7, 0, 0, 2)

    def test_gcd_reduction_and_sign(self):
        x = QuadNumber(2, 4, 5, -6)
        assert (x.a, x.b, x.d, x.c) == (-1, -2, 5, 3)

    def test_zero_is_canonical(self):
        assert QuadNumber(0, 0, 7, 5) == ZERO
        assert not ZERO

    def test_rational_with_zero_radical_part(self):
        assert QuadNumber(3, 0, 5, 1).d == 0

    def test_rejects_zero_denominator(self):
        with pytest.raises(DomainError):
            QuadNumber(1, 0, 0, 0)

    def test_rejects_negative_radicand(self):
        with pytest.raises(DomainError):
            QuadNumber(1, 1, -2)


class TestOrderAndFloor:
    def test_floor_golden_ratio(self):
        assert golden.floor() == 1

    def test_compare_example(self):
        assert QuadNumber(-1, 1, 5, 2) < QuadNumber(2, 0, 0, 3)

    def test_frac_of_negated_golden_conjugate(self):
        x = -QuadNumber(-1, 1, 5, 2)
        assert x.frac() == QuadNumber(3, -1, 5, 2)

    @given(any_quads)
    def test_floor_brackets_value(self, x):
        n = x.floor()
        assert QuadNumber(n) <= x < QuadNumber(n + 1)

    @given(any_quads)
    def test_frac_in_unit_interval(self, x):
        f = x.frac()
        assert ZERO <= f < ONE
        assert x == f + x.floor()

    def test_exact_integer_floor(self):
        assert QuadNumber(4, 0, 0, 2).floor() == 2
        assert QuadNumber(-5, 0, 0, 2).floor() == -3
        # b*sqrt(d) an exact integer after normalisation
        assert QuadNumber(0, 1, 9).floor() == 3
        assert QuadNumber(0, -1, 9).floor() == -3

    def test_cross_check_against_float(self):
        rng = random.Random(20120107)
        values = []
        for _ in range(1000):
            d = rng.choice(RADICANDS)
            values.append(
                QuadNumber(rng.randint(-60, 60), rng.randint(-60, 60), d, rng.randint(1, 40))
            )
        for x in values:
            assert x.floor() == math.floor(float(x))
        by_field = {}
        for x in values:
            by_field.setdefault(x.d, []).append(x)
        for group in by_field.values():
            for x, y in zip(group, group[1:]):
                if x == y:
                    assert abs(float(x) - float(y)) < 1e-9
                else:
                    assert (x < y) == (float(x) < float(y))


class TestArithmetic:
    @given(st.sampled_from(RADICANDS).flatmap(lambda d: st.tuples(quads(d), quads(d))))
    def test_add_sub_round_trip(self, pair):
        x, y = pair
        assert (x + y) - y == x
        assert x - x == ZERO

    @given(st.sampled_from(RADICANDS).flatmap(lambda d: st.tuples(quads(d), quads(d))))
    def test_mul_div_round_trip(self, pair):
        x, y = pair
        if y:
            assert (x * y) / y == x

    @given(any_quads)
    def test_int_operands(self, x):
        assert x + 1 - 1 == x
        assert 2 * x == x + x

    def test_rational_mixes_with_any_field(self):
        assert QuadNumber(1, 1, 5) + QuadNumber(1, 0, 0, 2) == QuadNumber(3, 2, 5, 2)

    def test_incompatible_radicands_rejected(self):
        with pytest.raises(FieldMismatchError):
            QuadNumber(0, 1, 2) + QuadNumber(0, 1, 3)
        with pytest.raises(FieldMismatchError):
            QuadNumber(0, 1, 2) < QuadNumber(0, 1, 3)

    def test_eq_across_fields_is_false(self):
        assert QuadNumber(0, 1, 2) != QuadNumber(0, 1, 3)

    def test_division_example(self):
        # ((-1+sqrt5)/2) / (-1+sqrt5) == 1/2
        num = QuadNumber(-1, 1, 5, 2)
        den = QuadNumber(-1, 1, 5)
        assert num / den == QuadNumber(1, 0, 0, 2)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO


class TestParsing:
    def test_round_trips(self):
        for text in ("0", "7", "-3", "2/3", "-5/4", "(3-1*sqrt(5))/2", "(-1+1*sqrt(5))/2"):
            x = QuadNumber.parse(text)
            assert QuadNumber.parse(str(x)) == x

    def test_whitespace_insensitive(self):
        assert QuadNumber.parse(" ( 3 - 1 * sqrt( 5 ) ) / 2 ") == QuadNumber(3, -1, 5, 2)

    def test_rational_forms(self):
        assert QuadNumber.parse("4/6") == QuadNumber(2, 0, 0, 3)
        assert QuadNumber.parse("-4/-6") == QuadNumber(2, 0, 0, 3)

    def test_non_square_free_radicand_normalised(self):
        assert QuadNumber.parse("(0+1*sqrt(12))/2") == QuadNumber(0, 1, 3)

    def test_rejections_name_token(self):
        with pytest.raises(ParseError, match="'x'"):
            QuadNumber.parse("(1+2*sqrt(x))/3")
        with pytest.raises(ParseError):
            QuadNumber.parse("(1+2*root(5))/3")
        with pytest.raises(ParseError):
            QuadNumber.parse("1/2/3")
        with pytest.raises(ParseError):
            QuadNumber.parse("")

    def test_hash_consistent_with_eq(self):
        assert hash(QuadNumber(2, 4, 5, 6)) == hash(QuadNumber(1, 2, 5, 3))
