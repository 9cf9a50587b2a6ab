"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: capacity/precision failures exit 2,
cross-check failures exit 3, everything usage-shaped exits 1.
"""


class EisenError(Exception):
    """Base class for all package-specific failures."""


class CapacityError(EisenError):
    """A table or workspace would exceed the configured memory budget."""


class CountOverflowError(EisenError):
    """An exact count left the supported 128-bit range."""


class BudgetError(EisenError):
    """A brute-force enumeration would exceed the tuple budget."""


class PrecisionError(EisenError):
    """A certified tail bound is larger than the requested tolerance."""


class DegenerateBoxError(EisenError):
    """The box contains no Eisenstein polynomials, so moments are undefined."""


class OracleMismatchError(EisenError):
    """Exact counting and brute-force enumeration disagree (a correctness bug)."""
