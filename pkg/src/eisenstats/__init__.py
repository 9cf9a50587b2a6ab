"""Exact counting and certified constants for Eisenstein polynomial statistics.

The package counts, for a degree d and height bound H, the Eisenstein
polynomials in the box and the exact first and second moments of psi(f) (the
number of primes at which f is Eisenstein) without enumerating the box, and
evaluates the limiting constants of those statistics with certified
truncation-error bounds.  A brute-force oracle and a seeded Monte Carlo
sampler provide independent checks.

Typical use:

    from eisenstats import build_tables, BoxParams, moment_report
    t = build_tables(10**4)
    report = moment_report(BoxParams(d=2, H=1000), t)
"""

from .arith import (
    DEFAULT_TABLE_LIMIT,
    MAX_TABLE_LIMIT,
    ArithTables,
    build_tables,
    euler_phi,
    factorize,
    omega,
    squarefree_divisors,
)
from .constants import (
    ConstantsReport,
    alpha,
    beta,
    constants_report,
    derived_stats,
    gamma,
    prime_zeta,
    prime_zeta_combination,
    reports_to_csv,
    round5,
    table1,
)
from .counting import (
    BoxParams,
    MomentReport,
    count_H_exact,
    count_H_main_term,
    count_coprime,
    count_eisenstein_exact,
    count_multiples,
    moment_report,
    sum_psi_exact,
    sum_psi_sq_exact,
    total_polys,
    truncated_eisenstein_count,
)
from .errors import (
    BudgetError,
    CapacityError,
    CountOverflowError,
    DegenerateBoxError,
    EisenError,
    OracleMismatchError,
    PrecisionError,
)
from .oracle import (
    PsiHistogram,
    SampleEstimate,
    count_simultaneous,
    enumerate_box,
    psi_batch,
    sample_box,
)
from .poly import Poly, eisenstein_primes, height, is_eisenstein_at, psi

__version__ = "0.1.0"

__all__ = [
    "ArithTables",
    "BoxParams",
    "BudgetError",
    "CapacityError",
    "ConstantsReport",
    "CountOverflowError",
    "DEFAULT_TABLE_LIMIT",
    "DegenerateBoxError",
    "EisenError",
    "MAX_TABLE_LIMIT",
    "MomentReport",
    "OracleMismatchError",
    "Poly",
    "PrecisionError",
    "PsiHistogram",
    "SampleEstimate",
    "alpha",
    "beta",
    "build_tables",
    "constants_report",
    "count_H_exact",
    "count_H_main_term",
    "count_coprime",
    "count_eisenstein_exact",
    "count_multiples",
    "count_simultaneous",
    "derived_stats",
    "eisenstein_primes",
    "enumerate_box",
    "euler_phi",
    "factorize",
    "gamma",
    "height",
    "is_eisenstein_at",
    "moment_report",
    "omega",
    "prime_zeta",
    "prime_zeta_combination",
    "psi",
    "psi_batch",
    "reports_to_csv",
    "round5",
    "sample_box",
    "squarefree_divisors",
    "sum_psi_exact",
    "sum_psi_sq_exact",
    "table1",
    "total_polys",
    "truncated_eisenstein_count",
]
