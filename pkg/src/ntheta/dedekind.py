"""Dedekind sums s(q, p).

Two independent evaluations: the classical sawtooth sum, which needs only
rational arithmetic and is the default, and the cotangent sum
``(1/4p) sum_k cot(pi k/p) cot(pi k q/p)`` evaluated exactly in a
cyclotomic field.
"""

from __future__ import annotations

import math
from functools import lru_cache
from fractions import Fraction

from .exactnum import CyclotomicNumber, to_rational, trig_field_order, trig_value

__all__ = [
    "DedekindArgumentError",
    "sawtooth",
    "normalize_args",
    "dedekind_sum",
    "dedekind_sum_cotangent",
    "dedekind_sum_float",
    "reciprocity_defect",
]


class DedekindArgumentError(ValueError):
    pass


def sawtooth(x) -> Fraction:
    """((x)): 0 at integers, else x - floor(x) - 1/2."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def normalize_args(q: int, p: int) -> tuple[int, int]:
    """Reduce q modulo p and check coprimality. Returns (q mod p, p)."""
    if p < 1:
        raise DedekindArgumentError(f"p must be a positive integer, got {p}")
    q %= p
    if p > 1 and math.gcd(q, p) != 1:
        raise DedekindArgumentError(f"gcd(q, p) must be 1, got q={q} (mod p), p={p}")
    return q, p


@lru_cache(maxsize=None)
def _sawtooth_sum(q: int, p: int) -> Fraction:
    total = Fraction(0)
    for k in range(1, p):
        total += sawtooth(Fraction(k, p)) * sawtooth(Fraction(k * q, p))
    return total


def dedekind_sum(q: int, p: int) -> Fraction:
    """s(q, p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p)).

    >>> dedekind_sum(1, 3)
    Fraction(1, 18)
    """
    q, p = normalize_args(q, p)
    return _sawtooth_sum(q, p)


def dedekind_sum_cotangent(q: int, p: int) -> Fraction:
    """s(q, p) from the cotangent sum, exactly, in Q(zeta_lcm(2p,4))."""
    q, p = normalize_args(q, p)
    if p == 1:
        return Fraction(0)
    m = trig_field_order(p)
    total = CyclotomicNumber.rational(m, 0)
    for k in range(1, p):
        total += trig_value("cot_pi_over", k, p) * trig_value("cot_pi_over", k * q, p)
    # a non-rational total means the field arithmetic is broken; let it raise
    return to_rational(total) / (4 * p)


def dedekind_sum_float(q: int, p: int) -> float:
    """Floating-point cotangent sum (compensated summation)."""
    q, p = normalize_args(q, p)
    terms = [
        1.0 / (math.tan(math.pi * k / p) * math.tan(math.pi * ((k * q) % p) / p))
        for k in range(1, p)
    ]
    return math.fsum(terms) / (4 * p)


def reciprocity_defect(p: int, q: int) -> Fraction:
    """s(q,p) + s(p,q) + 1/4 - (p/q + q/p + 1/(pq))/12; zero by reciprocity."""
    if p < 1 or q < 1:
        raise DedekindArgumentError(f"p and q must be positive, got p={p}, q={q}")
    if math.gcd(p, q) != 1:
        raise DedekindArgumentError(f"gcd(p, q) must be 1, got p={p}, q={q}")
    p_, q_ = Fraction(p), Fraction(q)
    return (
        dedekind_sum(q, p)
        + dedekind_sum(p, q)
        + Fraction(1, 4)
        - (p_ / q_ + q_ / p_ + 1 / (p_ * q_)) / 12
    )
