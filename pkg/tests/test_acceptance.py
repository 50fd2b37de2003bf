"""Acceptance criteria; each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py`` or ``python3 tests/test_acceptance.py``.
"""

import math
import random
import sys
import time
from fractions import Fraction

import pytest

from ntheta import alexander, dedekind, lens, surgery
from ntheta.exactnum import EXACT_LIMIT
from ntheta.selftest import coprime_pairs, random_alexander

FLOAT_TOL = 1e-9


def _criterion(number, title, check):
    start = time.perf_counter()
    try:
        detail = check()
        ok, err = True, None
    except Exception as exc:  # a contract violation counts as a failure too
        ok, detail, err = False, f"{type(exc).__name__}: {exc}", exc
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} -- {detail} ({time.perf_counter() - start:.1f}s)"
    return ok, line, err


def _report(capsys, number, title, check):
    ok, line, err = _criterion(number, title, check)
    with capsys.disabled():
        print("\n" + line)
    if not ok:
        raise err


def check_aggregate():
    n = 0
    for p, q in coprime_pairs(30):
        report = lens.ntheta_spectrum(lens.LensSpec(p, q), mode="exact")
        assert report.total == -p * dedekind.dedekind_sum(q, p), (p, q)
        assert report.total_check == 0
        n += 1
    return f"{n} lens spaces, 2*sum NTheta == -p s(q,p) exactly"


def check_unknot_chain():
    n = 0
    for p, q in coprime_pairs(30):
        lam = surgery.run_chain([surgery.SurgeryStep(p, q, 1, 1, alexander=alexander.UNKNOT)]).lambda_
        total = lens.ntheta_spectrum(lens.LensSpec(p, q), mode="exact").total
        assert lam == -dedekind.dedekind_sum(q, p) == total / p, (p, q)
        n += 1
    return f"{n} (p, q) pairs, chain lambda == -s(q,p) == (2/p) sum NTheta"


def check_routes():
    n = 0
    for p, q in coprime_pairs(30):
        L = lens.LensSpec(p, q)
        for a in L.labels():
            assert lens.ntheta_lens(L, a, "eta_pipeline") == lens.ntheta_lens(L, a, "closed_form"), (p, q, a)
            n += 1
    return f"{n} labels, eta pipeline == closed form exactly"


def check_dedekind():
    n_cot = n_rec = 0
    for p, q in coprime_pairs(30):
        assert dedekind.dedekind_sum_cotangent(q, p) == dedekind.dedekind_sum(q, p), (p, q)
        n_cot += 1
    for p, q in coprime_pairs(100, p_min=1):
        assert dedekind.reciprocity_defect(p, q) == 0, (p, q)
        n_rec += 1
    return f"{n_cot} cotangent/sawtooth pairs, {n_rec} reciprocity pairs"


def check_alexander():
    rng = random.Random(1729)
    n = 0
    for _ in range(200):
        A = random_alexander(rng)
        a1 = alexander.evaluate_at_one(A)
        for d in range(1, 7):
            k = int(d * a1)
            A_X = alexander.induce_knot_complement_poly(A, d, k)
            expected = Fraction(d, k) * alexander.gamma_of(A) + Fraction(d * d - 1, 12)
            assert alexander.gamma_of(A_X) == expected, (alexander.format_poly(A), d)
            assert alexander.evaluate_at_one(A_X) == 1
            n += 1
        top = int(A.top_degree)
        theta = alexander.theta_zero_surgery(A, 0) + 2 * sum(alexander.theta_zero_surgery(A, i) for i in range(1, top + 1))
        assert theta == alexander.surgery_weight(A), alexander.format_poly(A)
    return f"200 polynomials, {n} (A, d) cases, Gamma and theta identities exact"


def check_trefoil():
    for n in range(-5, 6):
        lam = surgery.run_chain([surgery.SurgeryStep(1, n, 1, 1, alexander=alexander.TREFOIL)]).lambda_
        assert lam == 2 * n, (n, lam)
    assert surgery.run_chain([]).lambda_ == 0
    return "lambda(S^3_{1/n}(trefoil)) == 2n for |n| <= 5; empty chain == 0"


def check_float():
    worst_small = 0.0
    n_small = 0
    for p, q in coprime_pairs(EXACT_LIMIT):
        L = lens.LensSpec(p, q)
        exact = lens.ntheta_spectrum(L, mode="exact")
        approx = lens.ntheta_spectrum(L, mode="float")
        for e, f in zip(exact.entries, approx.entries):
            for name in ("eta_dirac", "corr_y", "ntheta"):
                err = abs(float(getattr(e, name)) - getattr(f, name))
                worst_small = max(worst_small, err)
                assert err < FLOAT_TOL, (p, q, e.alpha, name, err)
        n_small += 1
    worst_big = 0.0
    n_big = 0
    for p in range(65, 201):
        for q in range(1, p):
            if math.gcd(p, q) != 1:
                continue
            report = lens.ntheta_spectrum(lens.LensSpec(p, q), mode="float")
            target = -p * float(dedekind.dedekind_sum(q, p))
            err = abs(report.total - target)
            worst_big = max(worst_big, err)
            assert err < FLOAT_TOL, (p, q, err)
            n_big += 1
    return (
        f"{n_small} spectra p <= 64 max entry error {worst_small:.1e}; "
        f"{n_big} spectra 64 < p <= 200 max aggregate error {worst_big:.1e}"
    )


CRITERIA = [
    (1, "lens aggregate identity (p <= 30)", check_aggregate),
    (2, "unknot chain vs Dedekind sum vs lens total (p <= 30)", check_unknot_chain),
    (3, "eta pipeline vs closed form per label (p <= 30)", check_routes),
    (4, "Dedekind cotangent form (p <= 30) and reciprocity (p <= 100)", check_dedekind),
    (5, "Gamma(A_X) and theta identities (200 random polynomials, d <= 6)", check_alexander),
    (6, "trefoil 1/n surgeries and empty chain", check_trefoil),
    (7, "float vs exact (p <= 64) and float aggregate (64 < p <= 200)", check_float),
]


@pytest.mark.slow
@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(capsys, number, title, check):
    _report(capsys, number, title, check)


if __name__ == "__main__":
    results = [_criterion(*c) for c in CRITERIA]
    for _, line, _ in results:
        print(line)
    sys.exit(0 if all(ok for ok, _, _ in results) else 1)
