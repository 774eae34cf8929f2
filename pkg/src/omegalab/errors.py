"""Exception types shared across the package."""


class OmegalabError(Exception):
    """Base class for errors raised by this package."""


class DimensionMismatchError(OmegalabError, ValueError):
    """Vector or partition lengths disagree where they must match."""


class DomainError(OmegalabError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ParameterError(OmegalabError, ValueError):
    """A family parameter (q, t, theta, k, a) is out of range."""


class DegeneracyError(OmegalabError, ArithmeticError):
    """An eigenvalue collision or singular solve that exact arithmetic must not
    silently absorb."""


class TieError(OmegalabError, ValueError):
    """Tied coordinates where a strictly ordered vector is required.

    Callers decide whether to perturb; nothing in the library perturbs input
    silently.
    """


class CacheFormatError(OmegalabError, ValueError):
    """A cache file record that cannot be parsed."""
