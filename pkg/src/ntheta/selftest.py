"""Invariant suite run by ``ntheta selftest``."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import alexander, dedekind, lens, surgery

__all__ = ["CheckResult", "SelftestSummary", "run_selftest", "random_alexander", "coprime_pairs"]

DEPTHS = {
    # name: (reciprocity p, cotangent p, lens p, alexander corpus size)
    "small": (50, 20, 20, 50),
    "full": (100, 30, 30, 200),
}


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: int = 0
    first_failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failures == 0


@dataclass
class SelftestSummary:
    depth: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def coprime_pairs(p_max: int, p_min: int = 2) -> Iterable[tuple[int, int]]:
    """Pairs (p, q) with p_min <= p <= p_max, 1 <= q < p, gcd(p, q) == 1."""
    for p in range(p_min, p_max + 1):
        for q in range(1, p):
            if math.gcd(p, q) == 1:
                yield p, q


def random_alexander(rng: random.Random, max_degree: int = 8, max_value: int = 4) -> alexander.SymmetricLaurent:
    """Random symmetric integer polynomial with A(1) a positive integer."""
    n = rng.randint(0, max_degree)
    tail = [rng.randint(-max_value, max_value) for _ in range(n)]
    target = rng.randint(1, 4)
    a0 = target - 2 * sum(tail)
    return alexander.SymmetricLaurent.from_symmetric([a0] + tail)


def _run(result: CheckResult, cases: Iterable, check: Callable[..., bool | str]):
    for case in cases:
        result.cases += 1
        try:
            outcome = check(*case)
        except Exception as exc:  # a crash counts as a failure of that case
            outcome = f"{type(exc).__name__}: {exc}"
        if outcome is not True:
            result.failures += 1
            if result.first_failure is None:
                detail = "" if outcome is False else f" ({outcome})"
                result.first_failure = f"case {case}{detail}"


def _alexander_cases(size: int, seed: int = 20240101):
    rng = random.Random(seed)
    for _ in range(size):
        A = random_alexander(rng)
        a1 = alexander.evaluate_at_one(A)
        for d in range(1, 7):
            yield A, d, int(d * a1)


def _second_derivative_identity(A, d, k) -> bool:
    A_X = alexander.induce_knot_complement_poly(A, d, k)
    lhs = alexander.gamma_of(A_X)
    rhs = Fraction(d, k) * alexander.gamma_of(A) + Fraction(d * d - 1, 12)
    return lhs == rhs and alexander.evaluate_at_one(A_X) == 1


def _theta_identity(A) -> bool:
    top = int(A.top_degree)
    total = alexander.theta_zero_surgery(A, 0) + 2 * sum(
        alexander.theta_zero_surgery(A, i) for i in range(1, top + 1)
    )
    return total == alexander.surgery_weight(A)


def _lens_routes(p, q) -> bool:
    L = lens.LensSpec(p, q)
    report = lens.ntheta_spectrum(L, mode="exact")
    if report.total_check != 0:
        return False
    return all(
        lens.ntheta_lens(L, a, "eta_pipeline") == lens.ntheta_lens(L, a, "closed_form")
        for a in L.labels()
    )


def _lens_vs_chain(p, q) -> bool:
    chain = surgery.run_chain([surgery.SurgeryStep(p, q, 1, 1, alexander=alexander.UNKNOT)])
    s = dedekind.dedekind_sum(q, p)
    return chain.lambda_ == -s == lens.lens_lambda(lens.LensSpec(p, q))


def run_selftest(depth: str = "small") -> SelftestSummary:
    if depth not in DEPTHS:
        raise ValueError(f"unknown depth {depth!r}; expected small or full")
    recip_p, cot_p, lens_p, corpus = DEPTHS[depth]
    summary = SelftestSummary(depth)

    c = CheckResult(f"dedekind reciprocity (p <= {recip_p})")
    _run(c, coprime_pairs(recip_p), lambda p, q: dedekind.reciprocity_defect(p, q) == 0)
    summary.checks.append(c)

    c = CheckResult(f"cotangent == sawtooth (p <= {cot_p})")
    _run(
        c,
        coprime_pairs(cot_p),
        lambda p, q: dedekind.dedekind_sum_cotangent(q, p) == dedekind.dedekind_sum(q, p),
    )
    summary.checks.append(c)

    c = CheckResult(f"lens route agreement + aggregate (p <= {lens_p})")
    _run(c, coprime_pairs(lens_p), _lens_routes)
    summary.checks.append(c)

    c = CheckResult(f"lens lambda == unknot chain lambda (p <= {lens_p})")
    _run(c, coprime_pairs(lens_p), _lens_vs_chain)
    summary.checks.append(c)

    c = CheckResult(f"Gamma(A_X) second-derivative identity ({corpus} polynomials, d <= 6)")
    _run(c, _alexander_cases(corpus), _second_derivative_identity)
    summary.checks.append(c)

    c = CheckResult(f"theta summation identity ({corpus} polynomials)")
    rng = random.Random(7)
    _run(c, ((random_alexander(rng),) for _ in range(corpus)), _theta_identity)
    summary.checks.append(c)

    return summary
