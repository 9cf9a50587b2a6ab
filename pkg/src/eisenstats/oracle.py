"""Ground truth by brute force: box enumeration and seeded Monte Carlo.

enumerate_box visits every coefficient tuple in a box and tallies psi into
exact histograms; it is the independent check behind the closed-form counts.
sample_box draws uniform random polynomials with a reproducible generator and
estimates the psi statistics over all polynomials.
"""

import csv
import io
import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .arith import ArithTables, build_tables
from .counting import BoxParams
from .errors import BudgetError
from .poly import trial_factor

#: Largest box (in coefficient tuples) enumerate_box will walk.
DEFAULT_ENUM_BUDGET = 10**9

#: Identifier of the sampling generator, recorded in every SampleEstimate.
RNG_ALGORITHM = "numpy.random.PCG64"

UNIVERSE_EISENSTEIN = "eisenstein"
UNIVERSE_ALL = "all"


@dataclass(frozen=True)
class PsiHistogram:
    """Exact distribution of psi over one universe of a box.

    counts maps each attained psi value to the exact number of polynomials;
    universe is "eisenstein" (psi >= 1 only) or "all" (every tuple with a
    nonzero leading coefficient).
    """

    params: BoxParams
    counts: dict[int, int]
    universe: str

    def total(self) -> int:
        return sum(self.counts.values())

    def sum_psi(self) -> int:
        return sum(k * c for k, c in self.counts.items())

    def sum_psi_sq(self) -> int:
        return sum(k * k * c for k, c in self.counts.items())

    def to_csv(self) -> str:
        """CSV with columns psi,count,universe, psi ascending."""
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["psi", "count", "universe"])
        for k in sorted(self.counts):
            writer.writerow([k, self.counts[k], self.universe])
        return buf.getvalue()


@dataclass(frozen=True)
class SampleEstimate:
    """Monte Carlo estimates of the psi statistics over all polynomials."""

    d: int
    H: int
    sample_size: int
    seed: int
    p_hat: float
    mean_hat: float
    var_hat: float
    se_p: float
    se_mean: float
    se_var: float
    rng_algorithm: str = RNG_ALGORITHM


def _candidate_primes(a0: int) -> list[int]:
    # Primes that can witness Eisenstein-ness for this constant term:
    # p | a_0 with p^2 not dividing a_0.
    m = abs(a0)
    if m <= 1:
        return []
    return [p for p, e in trial_factor(m) if e == 1]


def enumerate_box(
    box: BoxParams, budget: int = DEFAULT_ENUM_BUDGET
) -> tuple[PsiHistogram, PsiHistogram]:
    """Visit every tuple (a_0, ..., a_d) with |a_i| <= H and a_d != 0.

    Returns the exact psi histograms for both universes (Eisenstein-only,
    all polynomials).

    Raises:
        BudgetError: If the box exceeds the enumeration budget.
    """
    size = (2 * box.H + 1) ** (box.d + 1)
    if size > budget:
        raise BudgetError(f"box of {size} tuples exceeds budget {budget}")
    H, d = box.H, box.d
    span = range(-H, H + 1)
    eis: dict[int, int] = {}
    everything: dict[int, int] = {}
    for a0 in span:
        cands = _candidate_primes(a0)
        for middle in product(span, repeat=d - 1):
            live = [p for p in cands if all(m % p == 0 for m in middle)]
            if not live:
                # psi = 0 for the whole leading-coefficient line.
                everything[0] = everything.get(0, 0) + 2 * H
                continue
            for ad in span:
                if ad == 0:
                    continue
                k = sum(1 for p in live if ad % p != 0)
                everything[k] = everything.get(k, 0) + 1
                if k:
                    eis[k] = eis.get(k, 0) + 1
    return (
        PsiHistogram(box, eis, UNIVERSE_EISENSTEIN),
        PsiHistogram(box, everything, UNIVERSE_ALL),
    )


def count_simultaneous(box: BoxParams, primes: list[int]) -> int:
    """Enumerated count of polynomials Eisenstein at every given prime.

    Checks the defining conditions coefficient by coefficient, rejecting a
    branch as soon as one prime fails; no closed-form counting involved.
    """
    ps = sorted(set(primes))
    H, d = box.H, box.d
    span = range(-H, H + 1)
    total = 0
    for a0 in span:
        if not all(a0 % p == 0 and a0 % (p * p) != 0 for p in ps):
            continue
        for middle in product(span, repeat=d - 1):
            if any(m % p != 0 for p in ps for m in middle):
                continue
            for ad in span:
                if ad != 0 and all(ad % p != 0 for p in ps):
                    total += 1
    return total


def psi_batch(coeffs: np.ndarray, tables: ArithTables) -> np.ndarray:
    """Vectorised psi for a matrix of coefficient rows (a_0, ..., a_d).

    Peels smallest prime factors off |a_0| layer by layer; each layer tests
    the Eisenstein conditions for one prime across all rows at once.
    Requires max |a_0| <= tables.limit.
    """
    coeffs = np.ascontiguousarray(coeffs, dtype=np.int64)
    if coeffs.ndim != 2 or coeffs.shape[1] < 3:
        raise ValueError("coeffs must be (n, d+1) with d >= 2")
    n, width = coeffs.shape
    a0 = np.abs(coeffs[:, 0])
    if n and int(a0.max()) > tables.limit:
        raise ValueError(f"|a_0| exceeds table limit {tables.limit}")
    spf = tables.smallest_prime_factor
    psi = np.zeros(n, dtype=np.int64)
    m = a0.copy()
    idx = np.flatnonzero(m > 1)
    while idx.size:
        rest = m[idx]
        p = spf[rest].astype(np.int64)
        exponent = np.zeros(idx.size, dtype=np.int64)
        while True:
            quotient, remainder = np.divmod(rest, p)
            divides = remainder == 0
            if not divides.any():
                break
            rest = np.where(divides, quotient, rest)
            exponent += divides
        eligible = exponent == 1
        for j in range(1, width - 1):
            eligible &= coeffs[idx, j] % p == 0
        eligible &= coeffs[idx, width - 1] % p != 0
        psi[idx] += eligible
        m[idx] = rest
        idx = idx[rest > 1]
    return psi


def sample_box(
    box: BoxParams,
    n: int,
    seed: int,
    tables: ArithTables | None = None,
) -> SampleEstimate:
    """Estimate the psi statistics from n uniform tuples in the box.

    Coefficients are uniform on [-H, H]; the leading one is redrawn until
    nonzero.  Identical (box, n, seed) always yields identical output.

    Args:
        tables: Optional sieve tables covering H; built on the fly if absent.
    """
    if n < 2:
        raise ValueError(f"need at least 2 samples, got {n}")
    if box.H < 2:
        raise ValueError(f"need H >= 2 for sampling, got {box.H}")
    if tables is None or tables.limit < box.H:
        tables = build_tables(box.H)
    rng = np.random.Generator(np.random.PCG64(seed))
    H, d = box.H, box.d
    coeffs = rng.integers(-H, H + 1, size=(n, d + 1), dtype=np.int64)
    lead = coeffs[:, d]
    while True:
        zero = lead == 0
        if not zero.any():
            break
        lead[zero] = rng.integers(-H, H + 1, size=int(zero.sum()), dtype=np.int64)

    psis = psi_batch(coeffs, tables).astype(np.float64)
    p_hat = float(np.mean(psis >= 1.0))
    mean_hat = float(psis.mean())
    var_hat = float(psis.var(ddof=1))
    centered = psis - mean_hat
    m2 = float(np.mean(centered**2))
    m4 = float(np.mean(centered**4))
    return SampleEstimate(
        d=d,
        H=H,
        sample_size=n,
        seed=seed,
        p_hat=p_hat,
        mean_hat=mean_hat,
        var_hat=var_hat,
        se_p=math.sqrt(max(p_hat * (1.0 - p_hat), 0.0) / n),
        se_mean=math.sqrt(var_hat / n),
        se_var=math.sqrt(max(m4 - m2 * m2, 0.0) / n),
    )
