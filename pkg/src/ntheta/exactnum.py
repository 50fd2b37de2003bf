"""Exact arithmetic in cyclotomic fields.

Rationals are plain :class:`fractions.Fraction` values. An element of
Q(zeta_n) is stored in the power basis ``1, zeta, ..., zeta^(phi(n)-1)``
after reduction modulo the n-th cyclotomic polynomial, as a vector of
integer numerators over one positive common denominator. That form is
canonical, so equality and the rationality test are decided by inspection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable

import mpmath
import numpy as np

__all__ = [
    "EXACT_LIMIT",
    "IntPolynomial",
    "CyclotomicNumber",
    "OrderMismatchError",
    "NotRationalError",
    "PoleError",
    "cyclotomic_polynomial",
    "cyc_arith",
    "cyc_inverse",
    "trig_value",
    "to_rational",
    "cyc_to_float",
    "float_error_bound",
    "root_sum",
    "root_sum_batch",
    "trig_field_order",
    "totient",
]

# Largest p handled exactly by default; above this callers use the float path.
EXACT_LIMIT = 64

# accumulations below this magnitude cannot overflow int64
_INT64_SAFE = 2**62

TRIG_KINDS = ("cos_two_pi", "sin_pi_over", "csc_pi_over", "cot_pi_over")


class OrderMismatchError(ValueError):
    """Raised when combining elements of different cyclotomic fields."""


class NotRationalError(ValueError):
    """Raised by :func:`to_rational` on an element outside Q."""

    def __init__(self, element: "CyclotomicNumber"):
        super().__init__(f"element of Q(zeta_{element.order}) is not rational: {element!r}")
        self.element = element


class PoleError(ValueError):
    """A trigonometric value was requested at a pole (sin(pi a/p) == 0)."""


def totient(n: int) -> int:
    result = n
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            while m % f == 0:
                m //= f
            result -= result // f
        f += 1
    if m > 1:
        result -= result // m
    return result


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients lowest degree first."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coefficients)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(int(x) for x in c))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    def divmod_monic(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Quotient and remainder by a monic divisor (stays in Z[x])."""
        d = divisor.coefficients
        if not d or d[-1] != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coefficients)
        k = len(d) - 1
        if len(rem) <= k:
            return IntPolynomial(()), self
        quot = [0] * (len(rem) - k)
        for top in range(len(rem) - 1, k - 1, -1):
            c = rem[top]
            if c:
                quot[top - k] = c
                for i in range(k + 1):
                    rem[top - k + i] -= c * d[i]
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem[:k]))

    def __repr__(self):
        return f"IntPolynomial({list(self.coefficients)})"


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPolynomial:
    """Phi_n, by exact division of x^n - 1 by Phi_d for the proper divisors d of n."""
    if n < 1:
        raise ValueError(f"cyclotomic_polynomial needs n >= 1, got {n}")
    poly = IntPolynomial((-1,) + (0,) * (n - 1) + (1,))
    for d in _divisors(n)[:-1]:
        poly, rem = poly.divmod_monic(cyclotomic_polynomial(d))
        if rem.coefficients:
            raise ArithmeticError(f"Phi_{d} does not divide x^{n}-1")  # pragma: no cover
    return poly


@lru_cache(maxsize=None)
def _reduction_data(n: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    """(phi(n), sparse low part of Phi_n) for the reduction x^phi = -low."""
    phi = cyclotomic_polynomial(n).coefficients
    deg = len(phi) - 1
    low = tuple((i, c) for i, c in enumerate(phi[:-1]) if c)
    return deg, low


def _reduce(n: int, vec: list[int]) -> list[int]:
    """Reduce an integer vector (lowest degree first) modulo Phi_n, in place."""
    deg, low = _reduction_data(n)
    for top in range(len(vec) - 1, deg - 1, -1):
        c = vec[top]
        if c:
            base = top - deg
            for i, a in low:
                vec[base + i] -= c * a
    if len(vec) < deg:
        vec.extend([0] * (deg - len(vec)))
    del vec[deg:]
    return vec


def _rational_parts(values: Iterable) -> tuple[list[int], int]:
    fracs = [Fraction(v) for v in values]
    den = 1
    for f in fracs:
        den = den * f.denominator // math.gcd(den, f.denominator)
    return [f.numerator * (den // f.denominator) for f in fracs], den


@dataclass(frozen=True)
class CyclotomicNumber:
    """Element of Q(zeta_order).

    ``num`` has length phi(order); the value is ``sum(num[i] * zeta^i) / den``.
    Instances are kept normalized (den > 0, gcd of den and all numerators 1),
    so dataclass equality is field equality. Build them through the
    classmethods rather than the raw constructor.
    """

    order: int
    num: tuple[int, ...]
    den: int = 1

    @classmethod
    def _normalized(cls, order: int, num: list[int], den: int) -> "CyclotomicNumber":
        if den < 0:
            num = [-x for x in num]
            den = -den
        g = den
        for x in num:
            if x:
                g = math.gcd(g, x)
                if g == 1:
                    break
        if not any(num):
            den = 1
        elif g > 1:
            num = [x // g for x in num]
            den //= g
        return cls(order, tuple(num), den)

    @classmethod
    def from_coeffs(cls, order: int, coeffs: Iterable) -> "CyclotomicNumber":
        """Element sum(coeffs[i] * zeta^i); any length, reduced mod Phi_order."""
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        num, den = _rational_parts(coeffs)
        return cls._normalized(order, _reduce(order, num), den)

    @classmethod
    def rational(cls, order: int, value) -> "CyclotomicNumber":
        return cls.from_coeffs(order, [value])

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> "CyclotomicNumber":
        """zeta_order ** k for any integer k."""
        vec = [0] * order
        vec[k % order] = 1
        return cls._normalized(order, _reduce(order, vec), 1)

    @property
    def degree(self) -> int:
        return len(self.num)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def _check(self, other: "CyclotomicNumber"):
        if other.order != self.order:
            raise OrderMismatchError(
                f"cannot combine elements of Q(zeta_{self.order}) and Q(zeta_{other.order})"
            )

    def _coerce(self, other) -> "CyclotomicNumber | None":
        if isinstance(other, CyclotomicNumber):
            self._check(other)
            return other
        if isinstance(other, (int, Rational)):
            return CyclotomicNumber.rational(self.order, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        den = self.den * o.den // math.gcd(self.den, o.den)
        sa, sb = den // self.den, den // o.den
        return CyclotomicNumber._normalized(
            self.order, [x * sa + y * sb for x, y in zip(self.num, o.num)], den
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, tuple(-x for x in self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, CyclotomicNumber):
            f = Fraction(other)
            return CyclotomicNumber._normalized(
                self.order, [x * f.numerator for x in self.num], self.den * f.denominator
            )
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.num, o.num
        out = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return CyclotomicNumber._normalized(self.order, _reduce(self.order, out), self.den * o.den)

    __rmul__ = __mul__

    def times_zeta(self, k: int) -> "CyclotomicNumber":
        """Multiply by zeta^k (a shift followed by one reduction)."""
        n = self.order
        vec = [0] * n
        s = k % n
        for i, x in enumerate(self.num):
            vec[(i + s) % n] += x
        return CyclotomicNumber._normalized(n, _reduce(n, vec), self.den)

    def inverse(self) -> "CyclotomicNumber":
        return cyc_inverse(self)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, CyclotomicNumber):
            if other == 0:
                raise ZeroDivisionError("division of a cyclotomic number by zero")
            return self * (1 / Fraction(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * cyc_inverse(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * cyc_inverse(self)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"({c})*z^{i}")
        return f"<Q(zeta_{self.order}): {' + '.join(terms) or '0'}>"


def cyc_arith(a: CyclotomicNumber, b: CyclotomicNumber, op: str) -> CyclotomicNumber:
    if a.order != b.order:
        raise OrderMismatchError(f"orders differ: {a.order} vs {b.order}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}; expected add, sub or mul")


def _frac_poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _frac_poly_sub_scaled(a: list[Fraction], b: list[Fraction], c: Fraction, shift: int):
    """a -= c * x^shift * b, in place."""
    need = len(b) + shift
    if len(a) < need:
        a.extend([Fraction(0)] * (need - len(a)))
    for i, y in enumerate(b):
        if y:
            a[i + shift] -= c * y


def cyc_inverse(a: CyclotomicNumber) -> CyclotomicNumber:
    """Inverse by the extended Euclidean algorithm against Phi_n over Q."""
    if a.is_zero():
        raise ZeroDivisionError(f"zero has no inverse in Q(zeta_{a.order})")
    n = a.order
    # Invert the integer numerator polynomial, then multiply by den.
    r0 = [Fraction(c) for c in cyclotomic_polynomial(n).coefficients]
    r1 = _frac_poly_trim([Fraction(x) for x in a.num])
    s0: list[Fraction] = []
    s1 = [Fraction(1)]
    while len(r1) > 1:
        # one full division step r0 = quot * r1 + rem, tracking s0 - quot * s1
        rem = list(r0)
        quot: list[Fraction] = []
        lead = r1[-1]
        while len(rem) >= len(r1):
            c = rem[-1] / lead
            shift = len(rem) - len(r1)
            if len(quot) <= shift:
                quot.extend([Fraction(0)] * (shift + 1 - len(quot)))
            quot[shift] += c
            _frac_poly_sub_scaled(rem, r1, c, shift)
            rem.pop()
            _frac_poly_trim(rem)
        s_new = list(s0)
        for shift, c in enumerate(quot):
            if c:
                _frac_poly_sub_scaled(s_new, s1, c, shift)
        r0, r1 = r1, rem
        s0, s1 = s1, _frac_poly_trim(s_new)
        if not r1:
            raise ArithmeticError("non-unit encountered; Phi_n should be irreducible")  # pragma: no cover
    # r1 is a nonzero constant: s1 * a.num == r1[0] (mod Phi_n)
    scale = Fraction(a.den) / r1[0]
    return CyclotomicNumber.from_coeffs(n, [c * scale for c in s1])


def trig_field_order(p: int) -> int:
    """Field order m = lcm(2p, 4) shared by every trig value with denominator p."""
    return math.lcm(2 * p, 4)


@lru_cache(maxsize=4096)
def _trig_cached(kind: str, a: int, p: int) -> CyclotomicNumber:
    m = trig_field_order(p)
    u = a * (m // (2 * p))  # zeta_{2p}^a as a power of zeta_m
    quarter = m // 4  # zeta_m^quarter == i
    Z = CyclotomicNumber.zeta
    if kind == "cos_two_pi":
        return (Z(m, 2 * u) + Z(m, -2 * u)) * Fraction(1, 2)
    if kind in ("csc_pi_over", "cot_pi_over") and a % p == 0:
        raise PoleError(f"{kind}: sin(pi*{a}/{p}) vanishes")
    # (x - 1/x) / (2i) == -i (x - 1/x) / 2
    sin = (Z(m, u) - Z(m, -u)).times_zeta(-quarter) * Fraction(1, 2)
    if kind == "sin_pi_over":
        return sin
    if kind == "csc_pi_over":
        return cyc_inverse(sin)
    if kind == "cot_pi_over":
        cos = (Z(m, u) + Z(m, -u)) * Fraction(1, 2)
        return cos * _trig_cached("csc_pi_over", a, p)
    raise ValueError(f"unknown trig kind {kind!r}; expected one of {TRIG_KINDS}")


def trig_value(kind: str, a: int, p: int) -> CyclotomicNumber:
    """Exact cos(2 pi a/p), sin(pi a/p), csc(pi a/p) or cot(pi a/p) in Q(zeta_lcm(2p,4)).

    >>> to_rational(trig_value("cos_two_pi", 1, 3))
    Fraction(-1, 2)
    """
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    if kind not in TRIG_KINDS:
        raise ValueError(f"unknown trig kind {kind!r}; expected one of {TRIG_KINDS}")
    # every kind is 2p-periodic in a
    return _trig_cached(kind, a % (2 * p), p)


def to_rational(a: CyclotomicNumber) -> Fraction:
    if not a.is_rational():
        raise NotRationalError(a)
    return Fraction(a.num[0], a.den) if a.num else Fraction(0)


def root_sum(order: int, terms: Iterable[tuple[CyclotomicNumber, int]]) -> CyclotomicNumber:
    """sum(c * zeta^k for c, k in terms), accumulated in Q[Z/order] and reduced once."""
    terms = list(terms)
    den = 1
    for c, _ in terms:
        if c.order != order:
            raise OrderMismatchError(f"term of order {c.order} in a sum over Q(zeta_{order})")
        den = den * c.den // math.gcd(den, c.den)
    acc = [0] * order
    for c, k in terms:
        scale = den // c.den
        s = k % order
        for i, x in enumerate(c.num):
            if x:
                acc[(i + s) % order] += scale * x
    return CyclotomicNumber._normalized(order, _reduce(order, acc), den)


@lru_cache(maxsize=None)
def _reduction_matrix(n: int) -> tuple[np.ndarray, int]:
    """Row j holds x^j mod Phi_n (j < n), plus the largest absolute column sum."""
    deg, _ = _reduction_data(n)
    rows = []
    cur = [1] + [0] * (deg - 1) if deg > 0 else []
    for _ in range(n):
        rows.append(list(cur))
        cur = _reduce(n, [0] + cur)
    colsum = max((sum(abs(r[k]) for r in rows) for k in range(deg)), default=0)
    dtype = np.int64 if max(abs(x) for r in rows for x in r) < _INT64_SAFE else object
    return np.array(rows, dtype=dtype).reshape(n, deg), colsum


def root_sum_batch(
    order: int, values: list[CyclotomicNumber], shifts: np.ndarray
) -> list[CyclotomicNumber]:
    """Row-wise ``root_sum``: entry b is sum_t values[t] * zeta^shifts[b, t].

    Accumulates every row in Q[Z/order] at once and reduces through the
    matrix of x^j mod Phi_order.
    """
    shifts = np.asarray(shifts, dtype=np.int64) % order
    rows, width = shifts.shape
    if width != len(values):
        raise ValueError("shifts must have one column per value")
    if not values:
        return [CyclotomicNumber.rational(order, 0)] * rows
    for c in values:
        if c.order != order:
            raise OrderMismatchError(f"term of order {c.order} in a sum over Q(zeta_{order})")
    den = 1
    for c in values:
        den = den * c.den // math.gcd(den, c.den)
    scaled = [[x * (den // c.den) for x in c.num] for c in values]
    acc_bound = sum(max(map(abs, v), default=0) for v in scaled)
    red, colsum = _reduction_matrix(order)
    fits = acc_bound < _INT64_SAFE and acc_bound * max(colsum, 1) < _INT64_SAFE
    dtype = np.int64 if fits and red.dtype == np.int64 else object
    vals = np.array(scaled, dtype=dtype)  # (width, phi)
    phi = vals.shape[1]
    # target position of coefficient i of term t in row b: (i + shift[b, t]) mod order
    pos = (shifts[:, :, None] + np.arange(phi, dtype=np.int64)[None, None, :]) % order
    pos += (np.arange(rows, dtype=np.int64) * order)[:, None, None]
    acc = np.zeros(rows * order, dtype=dtype)
    np.add.at(acc, pos.ravel(), np.broadcast_to(vals, (rows, width, phi)).ravel())
    reduced = acc.reshape(rows, order).dot(red.astype(dtype))
    return [
        CyclotomicNumber._normalized(order, [int(x) for x in row], den) for row in reduced
    ]


def float_error_bound(a: CyclotomicNumber, precision: int = 53) -> float:
    """Bound on |cyc_to_float(a, precision) - a|: 4 * phi(n) * sum|c_i| * 2**-precision."""
    mag = sum(abs(Fraction(x, a.den)) for x in a.num)
    return float(4 * max(a.degree, 1) * mag) * 2.0 ** (-precision)


def cyc_to_float(a: CyclotomicNumber, precision: int = 53):
    """Evaluate at zeta = exp(2 pi i/n).

    Returns a Python ``complex`` for ``precision == 53`` and an ``mpmath.mpc``
    carrying ``precision`` bits otherwise. The absolute error is at most
    :func:`float_error_bound` for the same precision.
    """
    if precision < 53:
        raise ValueError("precision must be at least 53 bits")
    with mpmath.workprec(precision + 16):
        total = mpmath.mpc(0)
        for i, x in enumerate(a.num):
            if x:
                total += mpmath.mpf(x) * mpmath.expjpi(mpmath.mpf(2 * i) / a.order)
        total /= a.den
        if precision == 53:
            return complex(total)
    with mpmath.workprec(precision):
        return +total
