"""Symmetric Laurent polynomials and the Alexander-polynomial functionals.

Exponents may be half-integers (the knot-complement polynomial picks up
``T^(1/2)`` factors when the divisibility is even), so a polynomial is
stored as a map from the *doubled* exponent to a rational coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

__all__ = [
    "AlexanderInputError",
    "SymmetricLaurent",
    "Violation",
    "validate",
    "parse_poly",
    "format_poly",
    "evaluate_at_one",
    "surgery_weight",
    "theta_zero_surgery",
    "gamma_of",
    "balanced_factor",
    "induce_knot_complement_poly",
    "TREFOIL",
    "UNKNOT",
]


class AlexanderInputError(ValueError):
    pass


@dataclass(frozen=True)
class SymmetricLaurent:
    """sum_e coeffs[e] * T^(e/2); zero coefficients are dropped.

    Symmetry and parity are *not* enforced on construction so that
    :func:`validate` can report what is wrong with user input; the
    functionals below reject invalid polynomials.
    """

    coeffs: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, c in dict(self.coeffs).items():
            c = Fraction(c)
            if c:
                clean[int(e)] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def from_symmetric(cls, coefficients) -> "SymmetricLaurent":
        """From [a_0, a_1, ..., a_n]: a_0 + sum_j a_j (T^j + T^-j)."""
        d = {}
        for j, a in enumerate(coefficients):
            d[2 * j] = Fraction(a)
            d[-2 * j] = Fraction(a)
        return cls(d)

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __eq__(self, other):
        if not isinstance(other, SymmetricLaurent):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other: "SymmetricLaurent") -> "SymmetricLaurent":
        d = dict(self.coeffs)
        for e, c in other.coeffs.items():
            d[e] = d.get(e, 0) + c
        return SymmetricLaurent(d)

    def __mul__(self, other) -> "SymmetricLaurent":
        if isinstance(other, SymmetricLaurent):
            d: dict[int, Fraction] = {}
            for e1, c1 in self.coeffs.items():
                for e2, c2 in other.coeffs.items():
                    d[e1 + e2] = d.get(e1 + e2, 0) + c1 * c2
            return SymmetricLaurent(d)
        c = Fraction(other)
        return SymmetricLaurent({e: v * c for e, v in self.coeffs.items()})

    __rmul__ = __mul__

    def coefficient(self, j) -> Fraction:
        """Coefficient of T^j; j may be a half-integer."""
        e = Fraction(j) * 2
        if e.denominator != 1:
            raise AlexanderInputError(f"exponent {j} is not a multiple of 1/2")
        return self.coeffs.get(int(e), Fraction(0))

    @property
    def integral(self) -> bool:
        return all(e % 2 == 0 for e in self.coeffs)

    @property
    def top_degree(self) -> Fraction:
        return Fraction(max(self.coeffs, default=0), 2)

    def __str__(self):
        return format_poly(self)


@dataclass(frozen=True)
class Violation:
    kind: str  # "symmetry" | "parity" | "zero"
    message: str


def validate(A: SymmetricLaurent) -> Violation | None:
    """First violated invariant, or None if A is a valid symmetric polynomial."""
    for e, c in A.coeffs.items():
        if c == 0:
            return Violation("zero", f"stored zero coefficient at exponent {Fraction(e, 2)}")
    for e, c in A.coeffs.items():
        if A.coeffs.get(-e, Fraction(0)) != c:
            return Violation(
                "symmetry",
                f"coefficient of T^{Fraction(e, 2)} is {c} but of T^{Fraction(-e, 2)} "
                f"is {A.coeffs.get(-e, Fraction(0))}",
            )
    parities = {e % 2 for e in A.coeffs}
    if len(parities) > 1:
        return Violation("parity", "integer and half-integer exponents are mixed")
    return None


def _require_valid(A: SymmetricLaurent, integral: bool = False):
    v = validate(A)
    if v is not None:
        raise AlexanderInputError(f"invalid polynomial ({v.kind}): {v.message}")
    if integral and not A.integral:
        raise AlexanderInputError("this functional needs integer exponents only")


def parse_poly(text: str) -> SymmetricLaurent:
    """Parse ``exp2:value`` pairs, e.g. ``2:1,0:-1,-2:1`` for the trefoil."""
    text = text.strip()
    d: dict[int, Fraction] = {}
    if not text:
        return SymmetricLaurent({})
    for chunk in text.split(","):
        try:
            e, v = chunk.split(":")
            e_int = int(e.strip())
            value = Fraction(v.strip())
        except ValueError as exc:
            raise AlexanderInputError(f"malformed polynomial term {chunk!r}; expected exp2:value") from exc
        if e_int in d:
            raise AlexanderInputError(f"exponent key {e_int} repeated")
        d[e_int] = value
    return SymmetricLaurent(d)


def format_poly(A: SymmetricLaurent) -> str:
    return ",".join(f"{e}:{c}" for e, c in sorted(A.coeffs.items(), reverse=True))


def evaluate_at_one(A: SymmetricLaurent) -> Fraction:
    return sum(A.coeffs.values(), Fraction(0))


def surgery_weight(A: SymmetricLaurent) -> Fraction:
    """sum_{j >= 1} j^2 a_j; half the full second moment for symmetric A."""
    _require_valid(A, integral=True)
    return sum((Fraction(e * e, 4) * c for e, c in A.coeffs.items() if e > 0), Fraction(0))


def theta_zero_surgery(A: SymmetricLaurent, i: int) -> Fraction:
    """theta(Y_0, s_i) = sum_{j >= 1} j a_{|i|+j}."""
    _require_valid(A, integral=True)
    base = abs(i)
    total = Fraction(0)
    for e, c in A.coeffs.items():
        j = e // 2 - base
        if j >= 1:
            total += j * c
    return total


def gamma_of(A_X: SymmetricLaurent) -> Fraction:
    """Gamma = sum_j b_j j^2 over every term (j may be a half-integer)."""
    _require_valid(A_X)
    return sum((Fraction(e * e, 4) * c for e, c in A_X.coeffs.items()), Fraction(0))


def balanced_factor(d: int) -> SymmetricLaurent:
    """(T^(d/2) - T^(-d/2)) / (T^(1/2) - T^(-1/2)) = sum of T^i, i = -(d-1)/2 .. (d-1)/2."""
    if d < 1:
        raise AlexanderInputError(f"d must be positive, got {d}")
    return SymmetricLaurent({e: 1 for e in range(-(d - 1), d, 2)})


def induce_knot_complement_poly(A_Y0: SymmetricLaurent, d: int, k: int) -> SymmetricLaurent:
    """A_X = (1/k) A_{Y0} * balanced_factor(d), normalized to A_X(1) = 1.

    Requires d | k and A_{Y0}(1) == k/d.
    """
    _require_valid(A_Y0, integral=True)
    if d < 1 or k < 1:
        raise AlexanderInputError(f"d and k must be positive, got d={d}, k={k}")
    if k % d:
        raise AlexanderInputError(f"d must divide k, got d={d}, k={k}")
    if evaluate_at_one(A_Y0) != Fraction(k, d):
        raise AlexanderInputError(
            f"normalization A(1) = k/d fails: A(1) = {evaluate_at_one(A_Y0)}, k/d = {Fraction(k, d)}"
        )
    return A_Y0 * balanced_factor(d) * Fraction(1, k)


UNKNOT = SymmetricLaurent({0: 1})
TREFOIL = SymmetricLaurent({2: 1, 0: -1, -2: 1})
