"""Classical symmetric function families and Muirhead means.

Families are indexed by a partition lambda on n variables:

  monomial    m_lambda, the orbit sum itself
  elementary  e_lambda = prod_i e_{lambda_i} with e_k the k-th elementary
  powersum    p_lambda = prod_i p_{lambda_i} with p_k = sum x_j^k, p_0 = n

The Muirhead mean of lambda at x is m_lambda(x) / m_lambda(1, ..., 1); for
positive x it is monotone under majorization of the index.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DomainError
from .partitions import Partition
from .sympoly import SymmetricPolynomial, monomial_eval, orbit_size

FAMILIES = ("monomial", "elementary", "powersum")


def _elementary_k(k: int, n: int) -> SymmetricPolynomial:
    """e_k on n variables: sum of all squarefree degree-k monomials."""
    if k > n:
        raise DomainError(f"elementary degree {k} exceeds variable count {n}")
    if k == 0:
        return SymmetricPolynomial.one(n)
    key = (1,) * k + (0,) * (n - k)
    return SymmetricPolynomial(n, {key: Fraction(1)})


def _powersum_k(k: int, n: int) -> SymmetricPolynomial:
    """p_k on n variables; p_0 is the constant n."""
    if k == 0:
        return SymmetricPolynomial(n, {(0,) * n: Fraction(n)})
    key = (k,) + (0,) * (n - 1)
    return SymmetricPolynomial(n, {key: Fraction(1)})


def expand_classical(family: str, lam, n: int | None = None) -> SymmetricPolynomial:
    """Expansion of the named family member in the monomial basis, exactly.

    For the monomial family the index must fit in n rows; product families
    accept indexes of any length (an index longer than n is fine, e.g.
    e_(1,1,1,1) on three variables).
    """
    lam = Partition(lam) if not isinstance(lam, Partition) else lam
    if n is None:
        n = lam.n
    if family == "monomial":
        if n != lam.n:
            lam = lam.pad(n)
        return SymmetricPolynomial.monomial(lam.parts, n)
    if family == "elementary":
        out = SymmetricPolynomial.one(n)
        for part in lam.parts:
            if part:
                out = out * _elementary_k(part, n)
        return out
    if family == "powersum":
        out = SymmetricPolynomial.one(n)
        for part in lam.parts:
            out = out * _powersum_k(part, n)
        return out
    raise DomainError(f"unknown family {family!r}; expected one of {FAMILIES}")


def muirhead_eval(lam, x: Sequence) -> Fraction:
    """Normalized monomial mean m_lambda(x) / m_lambda(1,...,1)."""
    lam = Partition(lam) if not isinstance(lam, Partition) else lam
    if len(tuple(x)) != lam.n:
        lam = lam.pad(len(tuple(x)))
    return monomial_eval(lam.parts, x) / orbit_size(lam.parts)


def powersum_eval(lam, x: Sequence) -> Fraction:
    """p_lambda(x) as a product of power sums; zero parts contribute p_0 = n."""
    xs = tuple(Fraction(c) for c in x)
    lam = Partition(lam).pad(len(xs))
    out = Fraction(1)
    for part in lam.parts:
        out *= sum((v ** part for v in xs), Fraction(0))
    return out


def powersum_compare(lam, mu, x: Sequence) -> tuple[Fraction, Fraction, str]:
    """Evaluate p_lambda and p_mu at x and report which dominates.

    Returns (p_lambda(x), p_mu(x), sign) with sign one of '+', '-', '='
    meaning lambda's value is greater, smaller, or equal.
    """
    xs = tuple(Fraction(c) for c in x)
    n = len(xs)
    lhs = expand_classical("powersum", Partition(lam).pad(n), n).eval(xs)
    rhs = expand_classical("powersum", Partition(mu).pad(n), n).eval(xs)
    sign = "+" if lhs > rhs else ("-" if lhs < rhs else "=")
    return lhs, rhs, sign


def muirhead_gap(lam, mu, x: Sequence) -> Fraction:
    """Muirhead mean of lam minus that of mu at x; needs lam to majorize mu
    for the classical inequality to promise a nonnegative answer on positive x."""
    return muirhead_eval(lam, x) - muirhead_eval(mu, x)
