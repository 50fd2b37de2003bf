import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ntheta.dedekind import (
    DedekindArgumentError,
    dedekind_sum,
    dedekind_sum_cotangent,
    dedekind_sum_float,
    reciprocity_defect,
    sawtooth,
)


def coprime(p_max, p_min=1):
    return [(p, q) for p in range(p_min, p_max + 1) for q in range(1, p) if math.gcd(p, q) == 1]


def test_sawtooth():
    assert sawtooth(Fraction(1, 2)) == 0
    assert sawtooth(7) == 0
    assert sawtooth(Fraction(1, 3)) == Fraction(-1, 6)
    assert sawtooth(Fraction(-1, 3)) == Fraction(1, 6)


def test_examples():
    assert dedekind_sum(5, 1) == 0
    assert dedekind_sum(1, 2) == 0
    assert dedekind_sum(1, 3) == Fraction(1, 18)
    assert dedekind_sum_cotangent(1, 3) == Fraction(1, 18)
    assert dedekind_sum_cotangent(1, 2) == 0
    assert dedekind_sum_cotangent(3, 5) == dedekind_sum(3, 5)


@pytest.mark.parametrize("p", range(2, 40))
def test_s1p_closed_form(p):
    assert dedekind_sum(1, p) == Fraction((p - 1) * (p - 2), 12 * p)


def test_against_mpmath_cotangent_sum():
    mpmath.mp.dps = 40
    for p, q in coprime(25, 2):
        ref = sum(mpmath.cot(mpmath.pi * k / p) * mpmath.cot(mpmath.pi * k * q / p) for k in range(1, p)) / (4 * p)
        assert abs(mpmath.mpf(dedekind_sum(q, p).numerator) / dedekind_sum(q, p).denominator - ref) < mpmath.mpf(10) ** -30


def test_cotangent_equals_sawtooth_p_to_30():
    for p, q in coprime(30, 2):
        assert dedekind_sum_cotangent(q, p) == dedekind_sum(q, p)


def test_float_route():
    for p, q in coprime(40, 2):
        assert abs(dedekind_sum_float(q, p) - float(dedekind_sum(q, p))) < 1e-12


def test_reciprocity_examples():
    assert reciprocity_defect(3, 1) == 0
    assert reciprocity_defect(2, 1) == 0
    assert reciprocity_defect(5, 3) == 0


def test_reciprocity_p_to_100():
    for p, q in coprime(100, 2):
        assert reciprocity_defect(p, q) == 0


def test_periodicity_oddness_and_denominator():
    for p, q in coprime(100, 2):
        s = dedekind_sum(q, p)
        assert dedekind_sum(q + p, p) == s
        assert dedekind_sum(q - 3 * p, p) == s
        assert dedekind_sum(-q, p) == -s
        assert (6 * p * p) % s.denominator == 0


@given(st.integers(1, 200), st.integers(-1000, 1000))
def test_normalization_property(p, q):
    if math.gcd(p, q % p) != 1 and p > 1:
        with pytest.raises(DedekindArgumentError):
            dedekind_sum(q, p)
    else:
        assert dedekind_sum(q, p) == -dedekind_sum(-q, p)


def test_invalid_args():
    with pytest.raises(DedekindArgumentError):
        dedekind_sum(2, 4)
    with pytest.raises(DedekindArgumentError):
        dedekind_sum_cotangent(3, 6)
    with pytest.raises(DedekindArgumentError):
        dedekind_sum(1, 0)
    with pytest.raises(DedekindArgumentError):
        reciprocity_defect(4, 6)
