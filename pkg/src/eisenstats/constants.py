"""Limiting constants of the psi statistics, with certified truncation tails.

All constants are built from the per-prime density x_p = (p-1)^2 / p^(d+2):

    alpha_d = sum x_p            (mean of psi over all polynomials)
    beta_d  = sum x_p^2
    gamma_d = 1 - prod (1 - x_p) (density of Eisenstein polynomials)

and the derived mean/variance over Eisenstein polynomials are
mu_d = alpha/gamma and sigma_d^2 = (alpha + alpha^2 - beta - mu*alpha)/gamma.
Over all polynomials the analogues are mu_hat = alpha and
sigma_hat^2 = alpha - beta.

Sums run over sieved primes up to a cutoff N in ascending order and are
accumulated exactly (math.fsum); each value carries an integral-test upper
bound on the truncation error, so every reported figure is a certified
enclosure of the true constant.
"""

import csv
import io
import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from .arith import ArithTables
from .errors import PrecisionError

#: Columns of the CSV export, in order.
CSV_COLUMNS = [
    "d",
    "alpha",
    "beta",
    "gamma",
    "mu",
    "sigma_sq",
    "mu_hat",
    "sigma_sq_hat",
    "tail_alpha",
    "tail_beta",
    "tail_gamma",
    "prime_cutoff",
]


@dataclass(frozen=True)
class ConstantsReport:
    """One degree's constants plus certified truncation-error bounds."""

    d: int
    prime_cutoff: int
    alpha: float
    beta: float
    gamma: float
    mu: float
    sigma_sq: float
    mu_hat: float
    sigma_sq_hat: float
    tail_alpha: float
    tail_beta: float
    tail_gamma: float

    def csv_row(self) -> list:
        return [getattr(self, name) for name in CSV_COLUMNS]


def _densities(d: int, t: ArithTables) -> np.ndarray:
    """x_p = (p-1)^2 / p^(d+2) over the sieved primes, ascending."""
    p = t.primes.astype(np.float64)
    return (p - 1.0) ** 2 * p ** -(d + 2.0)


def _check_tol(tail: float, tol: float | None, what: str) -> None:
    if tol is not None and tail > tol:
        raise PrecisionError(f"{what}: tail bound {tail:.3g} exceeds tolerance {tol:.3g}")


def alpha(d: int, t: ArithTables, tol: float | None = None) -> tuple[float, float]:
    """(alpha_d truncated at the cutoff, certified tail bound).

    The tail satisfies sum_{p > N} x_p < sum_{n > N} n^-d < N^(1-d)/(d-1).
    """
    if d < 2:
        raise ValueError(f"degree must be >= 2, got {d}")
    value = math.fsum(_densities(d, t))
    tail = float(t.limit) ** (1 - d) / (d - 1)
    _check_tol(tail, tol, f"alpha(d={d}, N={t.limit})")
    return value, tail


def beta(d: int, t: ArithTables, tol: float | None = None) -> tuple[float, float]:
    """(beta_d truncated at the cutoff, certified tail bound N^(1-2d)/(2d-1))."""
    if d < 2:
        raise ValueError(f"degree must be >= 2, got {d}")
    value = math.fsum(_densities(d, t) ** 2)
    tail = float(t.limit) ** (1 - 2 * d) / (2 * d - 1)
    _check_tol(tail, tol, f"beta(d={d}, N={t.limit})")
    return value, tail


def gamma(d: int, t: ArithTables, tol: float | None = None) -> tuple[float, float]:
    """(gamma_d truncated at the cutoff, certified tail bound).

    Computed as -expm1(sum log1p(-x_p)) rather than a running product, so
    10^6+ multiplications cannot drift.  Since x_p <= 1/16, the missing log
    factors obey 0 <= -sum_{p > N} log1p(-x_p) <= 2 sum_{p > N} x_p, and the
    resulting gamma error is at most exp(S) * 2 N^(1-d)/(d-1).
    """
    if d < 2:
        raise ValueError(f"degree must be >= 2, got {d}")
    log_sum = math.fsum(np.log1p(-_densities(d, t)))
    value = -math.expm1(log_sum)
    tail = math.exp(log_sum) * 2.0 * float(t.limit) ** (1 - d) / (d - 1)
    _check_tol(tail, tol, f"gamma(d={d}, N={t.limit})")
    return value, tail


def derived_stats(
    alpha_value: float, beta_value: float, gamma_value: float
) -> tuple[float, float, float, float]:
    """(mu, sigma_sq, mu_hat, sigma_sq_hat) from alpha, beta, gamma.

    sigma_sq = (alpha + alpha^2 - beta - mu*alpha)/gamma, evaluated in the
    algebraically equal form ((alpha^2 - beta) - alpha*(alpha - gamma)/gamma)
    / gamma, whose subtractions are exact for nearby doubles and keep the
    tiny variance positive at large d.
    """
    if gamma_value <= 0:
        raise ValueError("gamma must be positive")
    mu = alpha_value / gamma_value
    deficit = alpha_value - gamma_value
    sigma_sq = (
        (alpha_value * alpha_value - beta_value)
        - alpha_value * deficit / gamma_value
    ) / gamma_value
    return mu, sigma_sq, alpha_value, alpha_value - beta_value


def prime_zeta(s: int, t: ArithTables) -> float:
    """Truncated prime zeta P(s) = sum over sieved primes of p^-s."""
    p = t.primes.astype(np.float64)
    return math.fsum(p**-float(s))


def prime_zeta_combination(d: int, t: ArithTables) -> tuple[float, float]:
    """alpha_d and beta_d as binomial combinations of prime zeta values.

    Expanding (p-1)^2 and (p-1)^4 gives
        alpha_d = P(d) - 2 P(d+1) + P(d+2)
        beta_d  = P(2d) - 4 P(2d+1) + 6 P(2d+2) - 4 P(2d+3) + P(2d+4),
    an independent regrouping of the same truncated sums, used as a
    cross-check of alpha() and beta().
    """
    alpha_via = prime_zeta(d, t) - 2 * prime_zeta(d + 1, t) + prime_zeta(d + 2, t)
    beta_via = (
        prime_zeta(2 * d, t)
        - 4 * prime_zeta(2 * d + 1, t)
        + 6 * prime_zeta(2 * d + 2, t)
        - 4 * prime_zeta(2 * d + 3, t)
        + prime_zeta(2 * d + 4, t)
    )
    return alpha_via, beta_via


def constants_report(d: int, t: ArithTables, tol: float | None = None) -> ConstantsReport:
    """Compute every constant for one degree at the tables' cutoff."""
    a, tail_a = alpha(d, t, tol)
    b, tail_b = beta(d, t, tol)
    g, tail_g = gamma(d, t, tol)
    mu, sigma_sq, mu_hat, sigma_sq_hat = derived_stats(a, b, g)
    return ConstantsReport(
        d=d,
        prime_cutoff=t.limit,
        alpha=a,
        beta=b,
        gamma=g,
        mu=mu,
        sigma_sq=sigma_sq,
        mu_hat=mu_hat,
        sigma_sq_hat=sigma_sq_hat,
        tail_alpha=tail_a,
        tail_beta=tail_b,
        tail_gamma=tail_g,
    )


def table1(t: ArithTables, tol: float | None = None) -> list[ConstantsReport]:
    """Constants for the small degrees d = 2..6."""
    return [constants_report(d, t, tol) for d in range(2, 7)]


def round5(x: float) -> float:
    """Round to 5 decimals, halves away from zero (table convention)."""
    q = Decimal(repr(x)).quantize(Decimal("0.00001"), rounding=ROUND_HALF_UP)
    return float(q)


def reports_to_csv(reports: list[ConstantsReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow([f"{v:.17g}" if isinstance(v, float) else v for v in r.csv_row()])
    return buf.getvalue()
