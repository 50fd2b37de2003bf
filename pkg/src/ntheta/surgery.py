"""Casson-Walker invariant through chains of rational surgeries.

The state carried along a chain is ``(lambda', |H_1|)`` with
``lambda' = |H_1| * lambda / 2``. In that normalization one p/q surgery on a
knot whose complement X has divisibility d and ``|Tors H_1(X)| = k`` is
affine::

    lambda'(Y_{p/q}) = p lambda'(Y) + q W + k eps'(p, q, d)
    eps'(p, q, d)    = q (d^2 - 1) / (12 d) - p d s(q, p) / 2

where W = sum_{j>=1} j^2 a_j is read from the Alexander polynomial of the
zero-surgery, normalized to A(1) = k/d. Since ``2 sum NTheta = |H_1| lambda``,
``lambda'`` is also the sum of NTheta over all Spin^c structures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .alexander import SymmetricLaurent, evaluate_at_one, parse_poly, surgery_weight
from .dedekind import dedekind_sum

__all__ = [
    "SurgeryError",
    "ChainInconsistencyError",
    "ChainStepError",
    "ManifoldState",
    "SurgeryStep",
    "ChainReport",
    "S3",
    "epsilon_prime",
    "apply_step",
    "run_chain",
    "casson_integral_chain",
    "steps_from_json",
]


class SurgeryError(ValueError):
    pass


class ChainInconsistencyError(SurgeryError):
    pass


class ChainStepError(SurgeryError):
    """Wraps the failure of one step in a chain."""

    def __init__(self, index: int, cause: Exception):
        super().__init__(f"step {index}: {cause}")
        self.index = index
        self.cause = cause


@dataclass(frozen=True)
class ManifoldState:
    lambda_prime: Fraction
    h1_order: int

    def __post_init__(self):
        if self.h1_order < 1:
            raise SurgeryError(f"|H_1| must be positive, got {self.h1_order}")
        object.__setattr__(self, "lambda_prime", Fraction(self.lambda_prime))

    @property
    def casson_walker(self) -> Fraction:
        return 2 * self.lambda_prime / self.h1_order


S3 = ManifoldState(Fraction(0), 1)


@dataclass(frozen=True)
class SurgeryStep:
    """One p/q surgery; exactly one of ``alexander`` and ``weight`` is given.

    (p, q) is sign-normalized to p > 0 on construction.
    """

    p: int
    q: int
    d: int = 1
    k: int = 1
    alexander: SymmetricLaurent | None = None
    weight: Fraction | None = None

    def __post_init__(self):
        p, q = self.p, self.q
        if p < 0:
            p, q = -p, -q
        if p == 0:
            raise SurgeryError("p = 0 (zero-surgery) does not give a rational homology sphere")
        if math.gcd(p, q) != 1:
            raise SurgeryError(f"gcd(p, q) must be 1, got p={p}, q={q}")
        if self.d < 1 or self.k < 1:
            raise SurgeryError(f"d and k must be positive, got d={self.d}, k={self.k}")
        if self.k % self.d:
            raise SurgeryError(f"d must divide k, got d={self.d}, k={self.k}")
        if (self.alexander is None) == (self.weight is None):
            raise SurgeryError("give exactly one of an Alexander polynomial or a weight")
        if self.alexander is not None:
            a1 = evaluate_at_one(self.alexander)
            if a1 != Fraction(self.k, self.d):
                raise SurgeryError(f"Alexander polynomial has A(1) = {a1}, expected k/d = {Fraction(self.k, self.d)}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        if self.weight is not None:
            object.__setattr__(self, "weight", Fraction(self.weight))

    @property
    def surgery_weight(self) -> Fraction:
        if self.weight is not None:
            return self.weight
        return surgery_weight(self.alexander)


@dataclass(frozen=True)
class ChainReport:
    lambda_prime: Fraction
    h1_order: int
    lambda_: Fraction
    ntheta_total: Fraction
    trace: tuple[ManifoldState, ...] = field(default=())

    @property
    def state(self) -> ManifoldState:
        return ManifoldState(self.lambda_prime, self.h1_order)


def epsilon_prime(p: int, q: int, d: int = 1) -> Fraction:
    """q (d^2 - 1) / (12 d) - p d s(q, p) / 2."""
    if p < 0:
        p, q = -p, -q
    if p < 1:
        raise SurgeryError(f"p must be nonzero, got {p}")
    if math.gcd(p, q) != 1:
        raise SurgeryError(f"gcd(p, q) must be 1, got p={p}, q={q}")
    if d < 1:
        raise SurgeryError(f"d must be positive, got {d}")
    return Fraction(q * (d * d - 1), 12 * d) - Fraction(p * d) * dedekind_sum(q, p) / 2


def apply_step(state: ManifoldState, step: SurgeryStep) -> ManifoldState:
    if step.d * step.k != state.h1_order:
        raise ChainInconsistencyError(
            f"d*k = {step.d}*{step.k} = {step.d * step.k} but the current |H_1| is {state.h1_order}"
        )
    lp = (
        step.p * state.lambda_prime
        + step.q * step.surgery_weight
        + step.k * epsilon_prime(step.p, step.q, step.d)
    )
    return ManifoldState(lp, step.p * step.d * step.k)


def run_chain(steps: Iterable[SurgeryStep], start: ManifoldState = S3) -> ChainReport:
    state = start
    trace = [state]
    for i, step in enumerate(steps):
        try:
            state = apply_step(state, step)
        except ValueError as exc:
            raise ChainStepError(i, exc) from exc
        trace.append(state)
    return ChainReport(
        lambda_prime=state.lambda_prime,
        h1_order=state.h1_order,
        lambda_=state.casson_walker,
        ntheta_total=state.lambda_prime,
        trace=tuple(trace),
    )


def casson_integral_chain(steps: Sequence[tuple[int, SymmetricLaurent]]) -> Fraction:
    """Casson invariant after successive 1/n surgeries on knots in homology spheres."""
    chain = []
    for i, (n, A) in enumerate(steps):
        try:
            chain.append(SurgeryStep(1, n, 1, 1, alexander=A))
        except SurgeryError as exc:
            raise ChainStepError(i, exc) from exc
    return run_chain(chain).lambda_


def steps_from_json(obj) -> list[SurgeryStep]:
    """Steps from a decoded chain document ``{"steps": [{p, q, d, k, alexander|weight}]}``."""
    if not isinstance(obj, dict) or not isinstance(obj.get("steps"), list):
        raise SurgeryError('chain document must be an object with a "steps" array')
    steps = []
    for i, raw in enumerate(obj["steps"]):
        try:
            if not isinstance(raw, dict):
                raise SurgeryError("each step must be an object")
            unknown = set(raw) - {"p", "q", "d", "k", "alexander", "weight"}
            if unknown:
                raise SurgeryError(f"unknown fields {sorted(unknown)}")
            for name in ("p", "q", "d", "k"):
                if not isinstance(raw.get(name), int) or isinstance(raw.get(name), bool):
                    raise SurgeryError(f"field {name!r} must be an integer")
            has_a, has_w = "alexander" in raw, "weight" in raw
            if has_a == has_w:
                raise SurgeryError('give exactly one of "alexander" or "weight"')
            if has_a:
                if not isinstance(raw["alexander"], str):
                    raise SurgeryError('"alexander" must be a string')
                kwargs = {"alexander": parse_poly(raw["alexander"])}
            else:
                if not isinstance(raw["weight"], str):
                    raise SurgeryError('"weight" must be a string such as "3/2"')
                try:
                    kwargs = {"weight": Fraction(raw["weight"])}
                except ValueError as exc:
                    raise SurgeryError(f"malformed weight {raw['weight']!r}") from exc
            steps.append(SurgeryStep(raw["p"], raw["q"], raw["d"], raw["k"], **kwargs))
        except ValueError as exc:
            raise ChainStepError(i, exc) from exc
    return steps
