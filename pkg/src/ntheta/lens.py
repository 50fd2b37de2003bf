"""Per-Spin^c invariants of lens spaces L(p, q).

Spin^c structures are labelled by alpha in Z/p. For each label we compute
the Dirac eta invariant of the round metric, the signature eta invariant,
the correction term ``Corr_Y = -eta_D/4 - eta_sign/8`` and
``NTheta = -Corr_Y``. The same NTheta is also produced from the closed
form ``2 NTheta(alpha) = -s(q,p) - (1/2p) sum_g csc csc cos``, and the
aggregate ``2 sum_alpha NTheta = -p s(q,p)`` is checked on every spectrum.

Exact values are computed in Q(zeta_m), m = lcm(2p, 4). For p above
:data:`~ntheta.exactnum.EXACT_LIMIT` the default is a float path using
compensated summation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .dedekind import dedekind_sum, dedekind_sum_float
from .exactnum import (
    EXACT_LIMIT,
    CyclotomicNumber,
    root_sum_batch,
    to_rational,
    trig_field_order,
    trig_value,
)

__all__ = [
    "LensSpecError",
    "ContractViolation",
    "LensSpec",
    "LensEntry",
    "LensInvariantReport",
    "csc_arguments",
    "fixed_point_term",
    "eta_dirac",
    "eta_signature",
    "corr_y",
    "ntheta_lens",
    "ntheta_spectrum",
    "lens_lambda",
    "FLOAT_TOLERANCE",
]

FLOAT_TOLERANCE = 1e-9


class LensSpecError(ValueError):
    pass


class ContractViolation(RuntimeError):
    """An identity that must hold by construction failed."""


@dataclass(frozen=True)
class LensSpec:
    """L(p, q); q is stored reduced to 0 <= q < p."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise LensSpecError(f"p must be positive, got {self.p}")
        q = self.q % self.p
        if math.gcd(self.p, q) != 1:
            raise LensSpecError(f"gcd(p, q) must be 1 for a lens space, got p={self.p}, q={self.q}")
        object.__setattr__(self, "q", q)

    def labels(self) -> range:
        return range(self.p)

    def check_label(self, alpha: int) -> int:
        if not 0 <= alpha < self.p:
            raise LensSpecError(f"Spin^c label must lie in 0..{self.p - 1}, got {alpha}")
        return alpha


def csc_arguments(p: int, q: int, g: int) -> tuple[int, int]:
    """(a, b) such that the g-th term uses csc(pi a/p) csc(pi b/p).

    Even p: the generator itself lifts to the spinors, arguments (g, qg).
    Odd p: its square does, arguments (2g, 2qg).
    """
    if p % 2 == 0:
        return g, q * g
    return 2 * g, 2 * q * g


def fixed_point_term(p: int, q: int, g: int) -> CyclotomicNumber:
    """Contribution -(1/2) csc csc of the origin to the g-index on B^4."""
    if not 1 <= g <= p - 1:
        raise LensSpecError(f"g must lie in 1..{p - 1}, got {g}")
    if math.gcd(p, q % p) != 1:
        raise LensSpecError(f"gcd(p, q) must be 1, got p={p}, q={q}")
    a, b = csc_arguments(p, q, g)
    return trig_value("csc_pi_over", a, p) * trig_value("csc_pi_over", b, p) * Fraction(-1, 2)


def _cos_weighted_table(p: int, values: tuple[CyclotomicNumber, ...]) -> tuple[Fraction, ...]:
    """sum_g values[g-1] * cos(2 pi g alpha/p) for every alpha, exactly.

    cos(2 pi g alpha/p) = (zeta_m^t + zeta_m^-t)/2 with t = (g alpha mod p) m/p.
    """
    m = trig_field_order(p)
    g = np.arange(1, p, dtype=np.int64)
    alpha = np.arange(p, dtype=np.int64)
    t = (np.outer(alpha, g) % p) * (m // p)
    sums = root_sum_batch(m, list(values) * 2, np.concatenate([t, -t], axis=1))
    # a non-rational sum means the field arithmetic is broken; let it raise
    return tuple(to_rational(x) / 2 for x in sums)


@lru_cache(maxsize=None)
def _fixed_point_terms(p: int, q: int) -> tuple[CyclotomicNumber, ...]:
    return tuple(fixed_point_term(p, q, g) for g in range(1, p))


@lru_cache(maxsize=None)
def _csc_products(p: int, q: int) -> tuple[CyclotomicNumber, ...]:
    out = []
    for g in range(1, p):
        a, b = csc_arguments(p, q, g)
        out.append(trig_value("csc_pi_over", a, p) * trig_value("csc_pi_over", b, p))
    return tuple(out)


@lru_cache(maxsize=None)
def _eta_dirac_table(p: int, q: int) -> tuple[Fraction, ...]:
    if p == 1:
        return (Fraction(0),)
    # eta_g = 2 * (fixed point term), and eta_alpha = (1/p) sum_g eta_g cos(...)
    return tuple(2 * x / p for x in _cos_weighted_table(p, _fixed_point_terms(p, q)))


@lru_cache(maxsize=None)
def _closed_form_table(p: int, q: int) -> tuple[Fraction, ...]:
    s = dedekind_sum(q, p)
    if p == 1:
        return (-s / 2,)
    return tuple((-s - x / (2 * p)) / 2 for x in _cos_weighted_table(p, _csc_products(p, q)))


def eta_dirac(L: LensSpec, alpha: int) -> Fraction:
    """Dirac eta invariant of the round metric coupled to the label alpha."""
    return _eta_dirac_table(L.p, L.q)[L.check_label(alpha)]


def eta_signature(L: LensSpec) -> Fraction:
    return -4 * dedekind_sum(L.q, L.p)


def corr_y(L: LensSpec, alpha: int) -> Fraction:
    return -eta_dirac(L, alpha) / 4 - eta_signature(L) / 8


def ntheta_lens(L: LensSpec, alpha: int, route: str = "eta_pipeline") -> Fraction:
    """NTheta(L(p,q), alpha), exactly, via the eta pipeline or the closed form."""
    if route == "eta_pipeline":
        return -corr_y(L, alpha)
    if route == "closed_form":
        return _closed_form_table(L.p, L.q)[L.check_label(alpha)]
    raise ValueError(f"unknown route {route!r}; expected eta_pipeline or closed_form")


def lens_lambda(L: LensSpec) -> Fraction:
    """Casson-Walker invariant read off the spectrum: 2 sum NTheta / p."""
    return 2 * sum(ntheta_lens(L, a) for a in L.labels()) / L.p


@dataclass(frozen=True)
class LensEntry:
    alpha: int
    eta_dirac: Fraction | float
    corr_y: Fraction | float
    ntheta: Fraction | float


@dataclass(frozen=True)
class LensInvariantReport:
    p: int
    q: int
    mode: str
    eta_sign: Fraction | float
    entries: tuple[LensEntry, ...]
    total_check: Fraction | float

    @property
    def spectrum(self) -> list:
        return [e.ntheta for e in self.entries]

    @property
    def total(self):
        """2 * sum of NTheta over all labels."""
        return 2 * sum(self.spectrum)


def _float_eta_dirac(p: int, q: int) -> np.ndarray:
    if p == 1:
        return np.zeros(1)
    g = np.arange(1, p)
    a, b = csc_arguments(p, q, g)
    # angles reduced mod 2p keep arguments in [0, 2pi)
    csc_prod = 1.0 / (np.sin(np.pi * (a % (2 * p)) / p) * np.sin(np.pi * (b % (2 * p)) / p))
    alpha = np.arange(p)
    # Neumaier summation over g, vectorized across alpha
    total = np.zeros(p)
    comp = np.zeros(p)
    for gi, c in zip(g, csc_prod):
        term = c * np.cos(2 * np.pi * ((gi * alpha) % p) / p)
        t = total + term
        big = np.abs(total) >= np.abs(term)
        comp += np.where(big, (total - t) + term, (term - t) + total)
        total = t
    return -(total + comp) / p


def _exact_report(L: LensSpec) -> LensInvariantReport:
    eta_s = eta_signature(L)
    entries = []
    for alpha in L.labels():
        ed = eta_dirac(L, alpha)
        c = -ed / 4 - eta_s / 8
        entries.append(LensEntry(alpha, ed, c, -c))
    s = dedekind_sum(L.q, L.p)
    total_check = 2 * sum(e.ntheta for e in entries) + L.p * s
    if total_check != 0:
        raise ContractViolation(f"L({L.p},{L.q}): 2*sum NTheta + p*s(q,p) = {total_check} != 0")
    return LensInvariantReport(L.p, L.q, "exact", eta_s, tuple(entries), total_check)


def _float_report(L: LensSpec) -> LensInvariantReport:
    s = dedekind_sum_float(L.q, L.p) if L.p > 1 else 0.0
    eta_s = -4.0 * s
    eds = _float_eta_dirac(L.p, L.q)
    entries = []
    for alpha, ed in enumerate(eds):
        c = -float(ed) / 4 - eta_s / 8
        entries.append(LensEntry(alpha, float(ed), c, -c))
    total_check = 2 * math.fsum(e.ntheta for e in entries) + L.p * s
    if abs(total_check) > FLOAT_TOLERANCE:
        raise ContractViolation(
            f"L({L.p},{L.q}) float: |2*sum NTheta + p*s(q,p)| = {abs(total_check):.3e}"
        )
    return LensInvariantReport(L.p, L.q, "float", eta_s, tuple(entries), total_check)


def ntheta_spectrum(L: LensSpec, mode: str = "auto") -> LensInvariantReport:
    """Full per-label table for L(p, q).

    ``mode`` is ``"exact"``, ``"float"`` or ``"auto"`` (exact for
    p <= EXACT_LIMIT). Raises :class:`ContractViolation` if the aggregate
    identity fails.
    """
    if mode == "auto":
        mode = "exact" if L.p <= EXACT_LIMIT else "float"
    if mode == "exact":
        return _exact_report(L)
    if mode == "float":
        return _float_report(L)
    raise ValueError(f"unknown mode {mode!r}; expected auto, exact or float")
