"""Exact counts of Eisenstein polynomials and psi-moments, no enumeration.

Everything here is exact integer arithmetic.  The central quantity is
count_H_exact(s, d, H): for squarefree s, the number of degree-d polynomials
of height <= H with s | a_i for i < d, gcd(a_0/s, s) = 1 and gcd(a_d, s) = 1.
It factors into three closed-form coefficient counts.  Sums of it over primes
and semiprimes give the exact first and second moments of psi, and an
inclusion-exclusion over squarefree moduli gives the exact number of
Eisenstein polynomials in the box.

Counts are validated against a 128-bit capacity; exceeding it raises instead
of silently producing numbers the rest of the toolchain cannot ingest.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .arith import ArithTables, omega, squarefree_divisors
from .errors import CountOverflowError, DegenerateBoxError
from .poly import trial_factor

_CAPACITY = 1 << 128


@dataclass(frozen=True)
class BoxParams:
    """A degree/height box: all degree-d integer polynomials of height <= H."""

    d: int
    H: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"degree must be >= 2, got {self.d}")
        if self.H < 1:
            raise ValueError(f"height bound must be >= 1, got {self.H}")


@dataclass(frozen=True)
class MomentReport:
    """Exact box statistics: counts as integers, moments as exact rationals."""

    params: BoxParams
    count_eisenstein: int
    sum_psi: int
    sum_psi_sq: int
    total_polys: int
    empirical_mean: Fraction
    empirical_variance: Fraction


def _check_capacity(value: int, what: str) -> int:
    if value >= _CAPACITY:
        raise CountOverflowError(f"{what} exceeds 128-bit capacity")
    return value


def _check_box_capacity(box: BoxParams) -> None:
    _check_capacity((2 * box.H + 1) ** (box.d + 1), f"box d={box.d} H={box.H}")


def _require_coverage(box: BoxParams, t: ArithTables) -> None:
    if t.limit < box.H:
        raise ValueError(f"tables cover {t.limit} < H={box.H}")


def count_multiples(s: int, H: int) -> int:
    """#{a in [-H, H] : s | a} = 2*floor(H/s) + 1 (zero always counts)."""
    return 2 * (H // s) + 1


def count_coprime(s: int, K: int, t: ArithTables) -> int:
    """#{k in [-K, K] : gcd(k, s) = 1} for squarefree s, by Mobius sum.

    For s > 1 the sum of mu over all divisors vanishes, which is exactly what
    removes k = 0 (gcd(0, s) = s).

    Raises:
        ValueError: If s is not squarefree.
    """
    return sum(m * (2 * (K // e) + 1) for e, m in squarefree_divisors(s, t))


def count_H_exact(s: int, box: BoxParams, t: ArithTables) -> int:
    """Exact #H_d(s, H) for squarefree s >= 2.

    The three factors count the middle coefficients (multiples of s), the
    constant term a_0 = s*k with gcd(k, s) = 1, and the leading coefficient
    coprime to s; a_0 = 0 and a_d = 0 are excluded automatically.  For
    squarefree s this is exactly the number of polynomials in the box that
    are Eisenstein at every prime dividing s.
    """
    if s < 2:
        raise ValueError(f"s must be >= 2, got {s}")
    middle = count_multiples(s, box.H) ** (box.d - 1)
    const = count_coprime(s, box.H // s, t)
    lead = count_coprime(s, box.H, t)
    return _check_capacity(middle * const * lead, f"count_H_exact(s={s})")


def count_H_main_term(s: int, box: BoxParams) -> float:
    """Leading-order approximation (2H)^(d+1) * phi(s)^2 / s^(d+2).

    Diagnostic only; the exact count is count_H_exact.
    """
    phi = 1
    for p, e in trial_factor(s):
        phi *= (p - 1) * p ** (e - 1)
    return (2.0 * box.H) ** (box.d + 1) * phi * phi / float(s) ** (box.d + 2)


def count_eisenstein_exact(box: BoxParams, t: ArithTables) -> int:
    """Exact #F_d(H), the number of Eisenstein polynomials in the box.

    Inclusion-exclusion over the events "Eisenstein at p":

        #F_d(H) = sum over squarefree 2 <= s <= H of -mu(s) * #H_d(s, H).

    The sum runs over squarefree s only: for squarefree s the defining
    conditions (s | a_i, gcd(a_0/s, s) = 1, gcd(a_d, s) = 1) split into the
    per-prime Eisenstein conditions at each p | s, so #H_d(s, H) counts the
    intersection of those events.  For non-squarefree s the gcd condition
    does not decompose primewise, and such s never enter the sum.  Terms with
    s > H vanish because s | a_0 with gcd(a_0/s, s) = 1 forces |a_0| >= s.
    """
    _require_coverage(box, t)
    _check_box_capacity(box)
    mu = t.moebius
    total = 0
    for s in range(2, box.H + 1):
        m = mu[s]
        if m == 0:
            continue
        total -= int(m) * count_H_exact(s, box, t)
    return _check_capacity(total, "count_eisenstein_exact")


def truncated_eisenstein_count(box: BoxParams, t: ArithTables, max_omega: int) -> int:
    """Bonferroni truncation: inclusion-exclusion restricted to omega(s) <= k.

    Odd k gives an upper bound for #F_d(H), even k a lower bound.
    """
    _require_coverage(box, t)
    mu = t.moebius
    total = 0
    for s in range(2, box.H + 1):
        m = mu[s]
        if m == 0 or omega(s, t) > max_omega:
            continue
        total -= int(m) * count_H_exact(s, box, t)
    return total


def sum_psi_exact(box: BoxParams, t: ArithTables) -> int:
    """Exact sum of psi(f) over Eisenstein f in the box.

    psi rewrites as a sum over primes: sum_psi = sum_{p <= H} #H_d(p, H).
    """
    _require_coverage(box, t)
    _check_box_capacity(box)
    cut = int(np.searchsorted(t.primes, box.H, side="right"))
    total = 0
    for p in t.primes[:cut]:
        total += count_H_exact(int(p), box, t)
    return _check_capacity(total, "sum_psi_exact")


def sum_psi_sq_exact(box: BoxParams, t: ArithTables) -> int:
    """Exact sum of psi(f)^2 over Eisenstein f in the box.

    Splitting the double sum over prime pairs into p = q and p != q gives

        sum_psi_sq = sum_psi + 2 * sum_{p < q, pq <= H} #H_d(pq, H),

    the factor 2 accounting for ordered pairs.
    """
    _require_coverage(box, t)
    total = sum_psi_exact(box, t)
    primes = t.primes
    pair_sum = 0
    for i in range(int(np.searchsorted(primes, isqrt(box.H), side="right"))):
        p = int(primes[i])
        hi = int(np.searchsorted(primes, box.H // p, side="right"))
        for j in range(i + 1, hi):
            pair_sum += count_H_exact(p * int(primes[j]), box, t)
    return _check_capacity(total + 2 * pair_sum, "sum_psi_sq_exact")


def total_polys(box: BoxParams) -> int:
    """All degree-d polynomials of height <= H: 2H * (2H+1)^d tuples."""
    return 2 * box.H * (2 * box.H + 1) ** box.d


def moment_report(box: BoxParams, t: ArithTables) -> MomentReport:
    """Assemble the exact counts and the exact-rational empirical moments.

    Raises:
        DegenerateBoxError: If the box holds no Eisenstein polynomial (H = 1).
    """
    _check_box_capacity(box)
    count = count_eisenstein_exact(box, t)
    if count == 0:
        raise DegenerateBoxError(f"no Eisenstein polynomials for d={box.d}, H={box.H}")
    s1 = sum_psi_exact(box, t)
    s2 = sum_psi_sq_exact(box, t)
    mean = Fraction(s1, count)
    variance = Fraction(s2, count) - mean * mean
    return MomentReport(
        params=box,
        count_eisenstein=count,
        sum_psi=s1,
        sum_psi_sq=s2,
        total_polys=_check_capacity(total_polys(box), "total_polys"),
        empirical_mean=mean,
        empirical_variance=variance,
    )
