"""Sieve-built arithmetic tables and elementary multiplicative functions.

Provides:
- ArithTables: primality, smallest prime factor and Mobius mu up to a limit,
  built once by a vectorised sieve and shared read-only by every counting loop.
- omega(n), euler_phi(n): O(omega(n)) lookups via smallest-prime-factor walks.
- squarefree_divisors(s): the 2^omega(s) divisors of a squarefree s with their
  Mobius values, as needed by the coprimality counts.
"""

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import CapacityError

#: Default sieve limit used by the constants computations (overridable via the
#: CLI and the EISEN_TABLE_LIMIT environment variable).
DEFAULT_TABLE_LIMIT = 10**7

#: Hard budget: tables are sized for limits up to 1e8 (~0.6 GB of arrays).
MAX_TABLE_LIMIT = 10**8


@dataclass(frozen=True)
class ArithTables:
    """Immutable sieve tables for 0..limit.

    Attributes:
        limit: Largest index covered by the tables.
        is_prime: Boolean array, is_prime[n] iff n is prime.
        smallest_prime_factor: int32 array; spf[n] is the least prime dividing
            n for n >= 2, with spf[0] = 0 and spf[1] = 1.
        moebius: int8 array with moebius[n] = mu(n).
        primes: Ascending int64 array of all primes <= limit.
    """

    limit: int
    is_prime: np.ndarray
    smallest_prime_factor: np.ndarray
    moebius: np.ndarray
    primes: np.ndarray


def build_tables(limit: int) -> ArithTables:
    """Sieve all tables up to limit (inclusive).

    Uses a smallest-prime-factor sieve so that factorisation, omega, phi and
    mu are all cheap lookups afterwards.  Construction is deterministic and
    single-threaded; the returned arrays are marked read-only.

    Args:
        limit: Sieve bound, 2 <= limit <= MAX_TABLE_LIMIT.

    Raises:
        ValueError: If limit < 2.
        CapacityError: If limit exceeds the configured memory budget.
    """
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    if limit > MAX_TABLE_LIMIT:
        raise CapacityError(
            f"limit {limit} exceeds the configured budget {MAX_TABLE_LIMIT}"
        )

    n = limit + 1
    root = isqrt(limit)

    spf = np.zeros(n, dtype=np.int32)
    for p in range(2, root + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    # Entries still zero are 0, 1 and the primes; spf[p] = p, spf[1] = 1.
    untouched = np.flatnonzero(spf == 0)
    spf[untouched] = untouched

    is_prime = np.zeros(n, dtype=bool)
    is_prime[2:] = spf[2:] == np.arange(2, n, dtype=np.int32)
    primes = np.flatnonzero(is_prime).astype(np.int64)

    # mu(n): flip the sign once per prime divisor, zero at multiples of p^2.
    mu = np.ones(n, dtype=np.int8)
    mu[0] = 0
    for p in primes[primes <= root]:
        p = int(p)
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
    # Primes p > sqrt(limit) divide n <= limit exactly once, via n = p*m with
    # m <= limit/p < sqrt(limit); iterate over m instead of p.
    first_large = int(np.searchsorted(primes, root, side="right"))
    for m in range(1, root + 1):
        hi = limit // m
        if hi <= root:
            break
        cut = int(np.searchsorted(primes, hi, side="right"))
        large = primes[first_large:cut]
        if large.size:
            mu[large * m] *= -1

    for arr in (spf, is_prime, mu, primes):
        arr.setflags(write=False)
    return ArithTables(limit, is_prime, spf, mu, primes)


def _check_range(n: int, t: ArithTables) -> None:
    if not 1 <= n <= t.limit:
        raise ValueError(f"n={n} outside table range [1, {t.limit}]")


def factorize(n: int, t: ArithTables) -> list[tuple[int, int]]:
    """Factor n into ascending (prime, exponent) pairs via spf walks.

    Args:
        n: Integer with 1 <= n <= t.limit.
    """
    _check_range(n, t)
    spf = t.smallest_prime_factor
    out = []
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out.append((p, e))
    return out


def omega(n: int, t: ArithTables) -> int:
    """Number of distinct prime factors of n (omega(1) = 0)."""
    return len(factorize(n, t))


def euler_phi(n: int, t: ArithTables) -> int:
    """Euler phi: the count of 1 <= k <= n coprime to n."""
    phi = 1
    for p, e in factorize(n, t):
        phi *= (p - 1) * p ** (e - 1)
    return phi


def squarefree_divisors(s: int, t: ArithTables) -> list[tuple[int, int]]:
    """All divisors of a squarefree s with their Mobius values.

    Returns the 2^omega(s) pairs (divisor, mu(divisor)) in ascending divisor
    order, starting with (1, +1).

    Raises:
        ValueError: If s is not squarefree or exceeds the table limit.
    """
    _check_range(s, t)
    if t.moebius[s] == 0:
        raise ValueError(f"s={s} is not squarefree")
    divs = [(1, 1)]
    for p, _ in factorize(s, t):
        divs += [(d * p, -m) for d, m in divs]
    divs.sort()
    return divs
