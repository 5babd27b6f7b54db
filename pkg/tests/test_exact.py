import math
from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import assume, given, strategies as st

from avgiv.exact import (
    DomainError,
    ExactReal,
    compare,
    is_rational,
    make_exact,
    normalize_rational,
    sqrt,
)
from conftest import field_values, fractions

mpmath.mp.dps = 60


def to_mp(x: ExactReal):
    return mpmath.mpf(x.rat.numerator) / x.rat.denominator + (
        mpmath.mpf(x.coef.numerator) / x.coef.denominator
    ) * mpmath.sqrt(x.rad)


@pytest.mark.parametrize(
    "num, den, expected",
    [(3, 6, F(1, 2)), (-2, -4, F(1, 2)), (0, 7, F(0)), (4, -6, F(-2, 3))],
)
def test_normalize_rational(num, den, expected):
    q = normalize_rational(num, den)
    assert q == expected
    assert q.denominator > 0
    assert math.gcd(q.numerator, q.denominator) == 1


def test_normalize_rational_zero_denominator():
    with pytest.raises(DomainError):
        normalize_rational(1, 0)


def test_make_exact_extracts_squares():
    x = make_exact(0, 1, 8)
    assert (x.rat, x.coef, x.rad) == (0, 2, 2)
    assert make_exact(0, 3, 12) == make_exact(0, 6, 3)
    assert make_exact(0, 1, 72) == make_exact(0, 6, 2)


def test_make_exact_collapses_to_rational():
    x = make_exact(F(1, 2), 0, 5)
    assert (x.rat, x.coef, x.rad) == (F(1, 2), 0, 0)
    assert make_exact(1, 1, 1) == ExactReal.of(2)
    assert make_exact(0, F(1, 3), 9) == ExactReal.of(1)
    assert make_exact(7, 5, 0) == ExactReal.of(7)


def test_make_exact_already_canonical():
    x = make_exact(0, F(1, 2), 2)
    assert (x.rat, x.coef, x.rad) == (0, F(1, 2), 2)


def test_negative_radicand_rejected():
    with pytest.raises(DomainError):
        make_exact(0, 1, -2)


def test_compare_examples():
    assert compare(F(1, 2), F(2, 3)) == -1
    # 3 vs 2*sqrt(2): both positive, 3**2 = 9 > 8 = 2**2 * 2
    assert 3 ** 2 > 2 ** 2 * 2
    assert compare(3, 2 * sqrt(2)) == 1
    # sqrt(2)/2 vs 7/10: squares 1/2 > 49/100
    assert F(1, 2) > F(49, 100)
    assert compare(sqrt(2) / 2, F(7, 10)) == 1
    assert compare(sqrt(2), sqrt(2)) == 0


def test_compare_mixed_radicands_rejected():
    with pytest.raises(DomainError):
        compare(sqrt(2), sqrt(3))
    with pytest.raises(DomainError):
        sqrt(2) < sqrt(3)
    # rational against any field is fine
    assert sqrt(3) > 1


def test_equality_across_fields_does_not_raise():
    assert sqrt(2) != sqrt(3)
    assert len({sqrt(2), sqrt(3), ExactReal.of(1)}) == 3


def test_arithmetic_examples():
    h = sqrt(2) / 2
    assert F(1, 2) + h == make_exact(F(1, 2), F(1, 2), 2)
    assert h * h == ExactReal.of(F(1, 2))
    assert (1 + sqrt(2)) / 3 == make_exact(F(1, 3), F(1, 3), 2)
    # (1 + sqrt 2)/(1 - sqrt 2) = (1 + sqrt 2)^2 / (1 - 2) = -(3 + 2 sqrt 2)
    assert (1 + sqrt(2)) / (1 - sqrt(2)) == make_exact(-3, -2, 2)


def test_division_by_zero():
    with pytest.raises(DomainError):
        sqrt(2) / 0
    with pytest.raises(DomainError):
        ExactReal.of(1) / (sqrt(2) - sqrt(2))


def test_is_rational():
    assert is_rational(ExactReal.of(F(2, 3)))
    assert not is_rational(sqrt(2) / 2)
    assert is_rational(make_exact(0, 0, 0))


def test_hash_matches_fraction():
    assert hash(ExactReal.of(F(3, 7))) == hash(F(3, 7))
    assert ExactReal.of(F(3, 7)) == F(3, 7)


@pytest.mark.parametrize(
    "x", [sqrt(2), -sqrt(2), sqrt(2) * 1000, F(7, 3) - sqrt(5), make_exact(F(-5, 2), F(1, 9), 7)]
)
def test_floor_ceil_against_mpmath(x):
    assert math.floor(x) == int(mpmath.floor(to_mp(x)))
    assert math.ceil(x) == int(mpmath.ceil(to_mp(x)))


def test_str():
    assert str(ExactReal.of(F(2, 3))) == "2/3"
    assert str(sqrt(2) / 2) == "1/2*sqrt(2)"
    assert str(1 + sqrt(5) / 3) == "1+1/3*sqrt(5)"
    assert str(1 - sqrt(5)) == "1-sqrt(5)"
    assert str(-sqrt(5)) == "-1*sqrt(5)"


# -- properties ---------------------------------------------------------


@given(field_values(n=3))
def test_total_order(vals):
    x, y, z = vals
    c = compare(x, y)
    assert [x < y, x == y, x > y].count(True) == 1
    assert compare(y, x) == -c
    if x <= y and y <= z:
        assert x <= z
    assert (c == 0) == (x == y)


@given(field_values(n=3))
def test_order_compatible_with_field_ops(vals):
    x, y, z = vals
    assume(x < y)
    assert x + z < y + z
    if z > 0:
        assert x * z < y * z


@given(fractions(), fractions(), st.integers(0, 500))
def test_make_exact_idempotent(a, b, d):
    x = make_exact(a, b, d)
    assert make_exact(x.rat, x.coef, x.rad) == x
    if x.rad:
        assert x.rad >= 2 and x.coef != 0
        assert all(x.rad % (p * p) for p in range(2, math.isqrt(x.rad) + 1))


@given(fractions(), fractions(), st.integers(1, 40), st.integers(1, 30))
def test_square_factors_do_not_change_value(a, b, m, d):
    assert make_exact(a, b, m * m * d) == make_exact(a, b * m, d)


@given(field_values(n=2))
def test_arithmetic_round_trips(vals):
    x, y = vals
    assert (x + y) - y == x
    if y != 0:
        assert (x / y) * y == x
        assert (x * y) / y == x


@given(field_values(n=2))
def test_compare_agrees_with_high_precision_float(vals):
    x, y = vals
    gap = to_mp(x) - to_mp(y)
    assume(abs(gap) > mpmath.mpf("1e-9"))
    assert compare(x, y) == (1 if gap > 0 else -1)


@given(field_values())
def test_floor_brackets_value(vals):
    (x,) = vals
    k = math.floor(x)
    assert k <= x < k + 1
