"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.
"""

import math
import time

from conftest import TABLE1, ULP5
from eisenstats import (
    BoxParams,
    alpha,
    beta,
    build_tables,
    count_H_exact,
    count_H_main_term,
    count_eisenstein_exact,
    count_simultaneous,
    derived_stats,
    enumerate_box,
    gamma,
    moment_report,
    round5,
    sample_box,
    sum_psi_exact,
    sum_psi_sq_exact,
    table1,
)
from eisenstats.poly import trial_factor

_COLUMNS = ("alpha", "beta", "gamma", "mu", "sigma_sq", "sigma_sq_hat")


def _report(number: int, name: str, ok: bool, detail: str = "") -> None:
    state = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {number} {name}: {state}{suffix}")
    assert ok, f"criterion {number} failed: {detail}"


def test_criterion_1_table1_regression():
    # All 30 published entries to 5 decimals within +-1 unit in the last
    # place, timed end to end including the sieve at cutoff 10^7.
    start = time.time()
    tables = build_tables(10**7)
    reports = table1(tables)
    elapsed = time.time() - start
    bad = []
    for report in reports:
        for key, want in zip(_COLUMNS, TABLE1[report.d]):
            got = round5(getattr(report, key))
            if abs(got - want) > ULP5:
                bad.append((report.d, key, got, want))
    _report(1, "Table 1 regression", not bad and elapsed < 30.0,
            f"30 entries, {elapsed:.1f}s" if not bad else f"{bad}")


def test_criterion_2_oracle_equivalence(tables10k):
    start = time.time()
    bad = []
    for d in (2, 3):
        for H in range(1, 13):
            box = BoxParams(d, H)
            eis, _ = enumerate_box(box)
            triple = (
                count_eisenstein_exact(box, tables10k),
                sum_psi_exact(box, tables10k),
                sum_psi_sq_exact(box, tables10k),
            )
            enumerated = (eis.total(), eis.sum_psi(), eis.sum_psi_sq())
            if triple != enumerated:
                bad.append((d, H, triple, enumerated))
    elapsed = time.time() - start
    _report(2, "oracle equivalence d=2,3 H<=12", not bad and elapsed < 120.0,
            f"{elapsed:.1f}s" if not bad else f"{bad}")


def test_criterion_3_counting_function(tables10k):
    squarefree_15 = [2, 3, 5, 6, 7, 10, 11, 13, 14, 15]
    bad = []
    for d in (2, 3):
        for H in range(1, 13):
            box = BoxParams(d, H)
            for s in squarefree_15:
                primes = [p for p, _ in trial_factor(s)]
                exact = count_H_exact(s, box, tables10k)
                oracle = count_simultaneous(box, primes)
                if exact != oracle:
                    bad.append((d, H, s, exact, oracle))
    squarefree_20 = squarefree_15 + [17, 19]
    for H in (10**3, 10**4, 10**5):
        box = BoxParams(2, H)
        for s in squarefree_20:
            exact = count_H_exact(s, box, tables10k)
            main = count_H_main_term(s, box)
            if abs(exact - main) / main > 10.0 * s**3 / H:
                bad.append(("main", H, s, exact, main))
    _report(3, "count_H_exact vs oracle and main term", not bad,
            "" if not bad else f"{bad}")


def test_criterion_4_theorem_convergence(tables1m):
    mu_target, var_target = 1.07192, 0.07187
    gaps = {}
    for H in (100, 1000, 3000):
        rep = moment_report(BoxParams(2, H), tables1m)
        mean = float(rep.empirical_mean)
        var = float(rep.empirical_variance)
        gaps[H] = (abs(mean - mu_target), abs(var - var_target))
    ok = (
        gaps[1000][0] < 0.02
        and gaps[1000][1] < 0.02
        and gaps[3000][0] < gaps[100][0]
        and gaps[3000][1] < gaps[100][1]
    )
    _report(4, "mean/variance convergence d=2", ok,
            f"gaps at H=1000: mean {gaps[1000][0]:.5f}, var {gaps[1000][1]:.5f}")


def test_criterion_5_density_convergence(tables1m):
    gamma_targets = {2: 0.16765, 3: 0.05557}
    bad = []
    for d, target in gamma_targets.items():
        H = 10**3
        norm = count_eisenstein_exact(BoxParams(d, H), tables1m) / float(2 * H) ** (d + 1)
        if abs(norm - target) >= 0.01:
            bad.append((d, norm, target))
    _report(5, "normalized count vs gamma_d at H=10^3", not bad,
            "" if not bad else f"{bad}")


def test_criterion_6_all_polynomials_statistics(tables1m):
    start = time.time()
    box = BoxParams(2, 10**6)
    mean_target, var_target = 0.17971, 0.17239
    passes = 0
    for seed in range(100):
        est = sample_box(box, 10**6, seed, tables=tables1m)
        if (
            abs(est.mean_hat - mean_target) <= 4 * est.se_mean
            and abs(est.var_hat - var_target) <= 4 * est.se_var
        ):
            passes += 1
    elapsed = time.time() - start
    _report(6, "Monte Carlo 4-sigma coverage", passes >= 95,
            f"{passes}/100 seeds, {elapsed:.0f}s")


def test_criterion_7_certified_tails(tables1m, tables10m):
    bad = []
    for d in range(2, 11):
        for name, fn in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
            coarse, tail = fn(d, tables1m)
            fine, _ = fn(d, tables10m)
            if abs(fine - coarse) > tail:
                bad.append((name, d, abs(fine - coarse), tail))
    _report(7, "tail bounds certify cutoff movement", not bad,
            "" if not bad else f"{bad}")


def test_criterion_8_asymptotic_envelopes(tables1m):
    bad = []
    for d in range(2, 31):
        a, tail_a = alpha(d, tables1m)
        b, tail_b = beta(d, tables1m)
        g, tail_g = gamma(d, tables1m)
        mu, sigma_sq, _, _ = derived_stats(a, b, g)
        scaled = a * 2.0 ** (d + 2)
        envelope_hi = 1.0 + 4.0 * (2.0 / 3.0) ** d * (1.0 + 3.0 / (d - 1))
        lower = a - (a * a - b) / 2.0
        # The true gap gamma - lower is the third elementary symmetric
        # function of the prime densities (~1e-46 by d=30), far below one
        # ulp of the compared doubles, so the lower bound is asserted up to
        # the certified enclosure: truncation tails plus a few ulps of
        # evaluation rounding.
        slack = tail_a + tail_b + tail_g + 8.0 * math.ulp(a)
        checks = (
            1.0 < scaled < envelope_hi,
            mu > 1.0,
            sigma_sq >= 0.0,
            b < a * a,
            lower - slack <= g < a,
        )
        if not all(checks):
            bad.append((d, checks))
    _report(8, "asymptotic envelopes d=2..30", not bad,
            "" if not bad else f"{bad}")


def test_criterion_9_identity_suite(tables10k):
    bad = []
    primes_30 = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    for H in (6, 10, 30):
        box = BoxParams(2, H)
        pair_sum = 0
        primes = [p for p in primes_30 if p <= H]
        for i, p in enumerate(primes):
            for q in primes[i + 1 :]:
                if p * q <= H:
                    pair_sum += count_simultaneous(box, [p, q])
        lhs = sum_psi_sq_exact(box, tables10k)
        rhs = sum_psi_exact(box, tables10k) + 2 * pair_sum
        if lhs != rhs:
            bad.append((H, lhs, rhs))
        # The enumerated histogram must carry the identical second moment.
        eis, _ = enumerate_box(box)
        if eis.sum_psi_sq() != lhs:
            bad.append((H, "histogram", eis.sum_psi_sq(), lhs))
    _report(9, "psi^2 pair-decomposition identity", not bad,
            "" if not bad else f"{bad}")
