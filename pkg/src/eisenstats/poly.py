"""Integer polynomials, the p-Eisenstein test and the prime-counting psi.

A polynomial is p-Eisenstein when p divides every coefficient except the
leading one, p^2 does not divide the constant term, and p does not divide the
leading coefficient.  psi(f) counts the primes at which f is Eisenstein; any
such prime divides the constant term, so psi is computed by factoring a_0.
"""

from dataclasses import dataclass

from . import arith


@dataclass(frozen=True)
class Poly:
    """Degree-d integer polynomial as its coefficient tuple (a_0, ..., a_d).

    Index equals the power of x.  Requires degree >= 2 and a nonzero leading
    coefficient.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) < 3:
            raise ValueError("degree must be at least 2 (need >= 3 coefficients)")
        if coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_string(cls, text: str) -> "Poly":
        """Parse the CLI coefficient format: comma-separated, low to high.

        "2,2,1" is 2 + 2x + x^2.
        """
        try:
            coeffs = tuple(int(part.strip()) for part in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse coefficients from {text!r}") from None
        return cls(coeffs)


def height(f: Poly) -> int:
    """max |a_i| over all coefficients."""
    return max(abs(c) for c in f.coeffs)


def trial_factor(n: int) -> list[tuple[int, int]]:
    """Factor n >= 1 into ascending (prime, exponent) pairs by trial division."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e:
                out.append((p, e))
        f += 6
    if n > 1:
        out.append((n, 1))
    return out


def _is_prime(p: int) -> bool:
    return p >= 2 and trial_factor(p) == [(p, 1)]


def is_eisenstein_at(f: Poly, p: int) -> bool:
    """The indicator tau(f, p): is f Eisenstein at the prime p?

    The caller certifies that p is prime; only p >= 2 is validated here (a
    debug-mode assertion checks primality).
    """
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    assert _is_prime(p), f"is_eisenstein_at called with composite p={p}"
    c = f.coeffs
    return (
        all(x % p == 0 for x in c[:-1])
        and c[0] % (p * p) != 0
        and c[-1] % p != 0
    )


def _witness_primes(coeffs, tables=None):
    # Any Eisenstein prime divides a_0 exactly once, so factor |a_0| and keep
    # the exponent-1 primes that also divide the middle coefficients but not
    # the leading one.
    a0 = coeffs[0]
    if -1 <= a0 <= 1:
        return []
    m = abs(a0)
    if tables is not None and m <= tables.limit:
        factors = arith.factorize(m, tables)
    else:
        factors = trial_factor(m)
    middle = coeffs[1:-1]
    lead = coeffs[-1]
    return [
        p
        for p, e in factors
        if e == 1 and lead % p != 0 and all(c % p == 0 for c in middle)
    ]


def eisenstein_primes(f: Poly, tables: arith.ArithTables | None = None) -> list[int]:
    """Ascending list of every prime at which f is Eisenstein.

    When tables covering |a_0| are supplied, factoring uses the sieve;
    otherwise plain trial division.
    """
    return _witness_primes(f.coeffs, tables)


def psi(f: Poly, tables: arith.ArithTables | None = None) -> int:
    """Number of primes at which f is Eisenstein (0 when |a_0| <= 1)."""
    return len(_witness_primes(f.coeffs, tables))
