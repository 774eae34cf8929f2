"""Sparse symmetric polynomials over exact rationals, in the monomial basis.

A SymmetricPolynomial on n variables is a finite rational combination of
monomial symmetric polynomials m_lambda, stored as a dict from the sorted
exponent tuple (the partition, trailing zeros kept) to a nonzero Fraction.
m_lambda(x) sums x^eta over the distinct rearrangements eta of lambda, each
counted once.

The module also carries the expanded (one term per exponent vector)
representation used internally when applying difference or differential
operators; that form never leaves this package.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DimensionMismatchError, DomainError

Exponent = tuple  # tuple[int, ...]


def distinct_permutations(seq: Sequence) -> Iterator[tuple]:
    """Distinct rearrangements of seq, each exactly once (Knuth's Algorithm L).

    Works on any orderable entries; yields tuples in increasing lexicographic
    order starting from sorted(seq).
    """
    a = sorted(seq)
    n = len(a)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(a)
        # largest j with a[j] < a[j+1]
        j = n - 2
        while j >= 0 and a[j] >= a[j + 1]:
            j -= 1
        if j < 0:
            return
        k = n - 1
        while a[j] >= a[k]:
            k -= 1
        a[j], a[k] = a[k], a[j]
        a[j + 1:] = reversed(a[j + 1:])


def orbit_size(lam: Sequence[int]) -> int:
    """Number of distinct rearrangements of lam, i.e. m_lambda(1,...,1)."""
    from math import factorial

    counts: dict = {}
    for p in lam:
        counts[p] = counts.get(p, 0) + 1
    size = factorial(len(tuple(lam)))
    for c in counts.values():
        size //= factorial(c)
    return size


def _as_partition_key(lam, n: int) -> Exponent:
    parts = tuple(int(p) for p in lam)
    if len(parts) != n:
        raise DimensionMismatchError(
            f"exponent {parts} has length {len(parts)}, expected {n}")
    if any(p < 0 for p in parts):
        raise DomainError(f"negative exponent in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(n - 1)):
        raise DomainError(f"monomial key not weakly decreasing: {parts}")
    return parts


class SymmetricPolynomial:
    """Rational combination of monomial symmetric polynomials, fixed n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponent, Fraction] | None = None):
        if n < 1:
            raise DomainError("need n >= 1")
        self.n = n
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for key, coeff in terms.items():
                c = Fraction(coeff)
                if c == 0:
                    continue
                clean[_as_partition_key(key, n)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def monomial(cls, lam, n: int | None = None) -> "SymmetricPolynomial":
        parts = tuple(int(p) for p in lam)
        if n is None:
            n = len(parts)
        elif len(parts) < n:
            parts = parts + (0,) * (n - len(parts))
        return cls(n, {parts: Fraction(1)})

    @classmethod
    def zero(cls, n: int) -> "SymmetricPolynomial":
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> "SymmetricPolynomial":
        return cls(n, {(0,) * n: Fraction(1)})

    # -- ring structure ----------------------------------------------------

    def _check_compatible(self, other: "SymmetricPolynomial"):
        if self.n != other.n:
            raise DimensionMismatchError(
                f"polynomials on {self.n} and {other.n} variables")

    def __add__(self, other: "SymmetricPolynomial") -> "SymmetricPolynomial":
        self._check_compatible(other)
        return poly_combine([(Fraction(1), self), (Fraction(1), other)])

    def __sub__(self, other: "SymmetricPolynomial") -> "SymmetricPolynomial":
        self._check_compatible(other)
        return poly_combine([(Fraction(1), self), (Fraction(-1), other)])

    def __mul__(self, other):
        if isinstance(other, SymmetricPolynomial):
            return poly_multiply(self, other)
        return poly_combine([(Fraction(other), self)])

    def __rmul__(self, other):
        return poly_combine([(Fraction(other), self)])

    def __neg__(self):
        return poly_combine([(Fraction(-1), self)])

    def __eq__(self, other):
        if isinstance(other, SymmetricPolynomial):
            return self.n == other.n and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, lam) -> Fraction:
        key = _as_partition_key(tuple(lam), self.n)
        return self.terms.get(key, Fraction(0))

    def items(self):
        """Terms as (partition key, coefficient), heaviest key first."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def eval(self, x: Sequence) -> Fraction:
        return poly_eval(self, x)

    def __repr__(self):
        if not self.terms:
            return f"SymmetricPolynomial({self.n}, 0)"
        body = " + ".join(f"{c}*m{k}" for k, c in self.items())
        return f"SymmetricPolynomial({self.n}, {body})"


def monomial_eval(lam, x: Sequence) -> Fraction:
    """m_lambda(x): sum of x^eta over distinct rearrangements eta of lambda."""
    parts = tuple(int(p) for p in lam)
    xs = tuple(Fraction(c) for c in x)
    if len(parts) != len(xs):
        raise DimensionMismatchError(
            f"partition length {len(parts)} vs point length {len(xs)}")
    total = Fraction(0)
    for eta in distinct_permutations(parts):
        term = Fraction(1)
        for xi, e in zip(xs, eta):
            if e:
                term *= xi ** e
        total += term
    return total


def poly_eval(p: SymmetricPolynomial, x: Sequence) -> Fraction:
    xs = tuple(Fraction(c) for c in x)
    if len(xs) != p.n:
        raise DimensionMismatchError(
            f"point length {len(xs)} vs polynomial on {p.n} variables")
    total = Fraction(0)
    for key, coeff in p.terms.items():
        total += coeff * monomial_eval(key, xs)
    return total


def poly_eval_float(p: SymmetricPolynomial, x: Sequence) -> float:
    """Floating evaluation of an exact expansion at a floating point."""
    xs = tuple(float(c) for c in x)
    if len(xs) != p.n:
        raise DimensionMismatchError(
            f"point length {len(xs)} vs polynomial on {p.n} variables")
    total = 0.0
    for key, coeff in p.terms.items():
        total += float(coeff) * sum(
            math.prod(xi ** e for xi, e in zip(xs, eta) if e)
            for eta in distinct_permutations(key))
    return total


def poly_combine(pairs: Iterable[tuple[Fraction, SymmetricPolynomial]]) -> SymmetricPolynomial:
    """Exact linear combination sum c_i * p_i with zero terms dropped."""
    pairs = list(pairs)
    if not pairs:
        raise DomainError("poly_combine needs at least one summand")
    n = pairs[0][1].n
    acc: dict[Exponent, Fraction] = {}
    for coeff, poly in pairs:
        if poly.n != n:
            raise DimensionMismatchError("mixed variable counts in combination")
        c0 = Fraction(coeff)
        if c0 == 0:
            continue
        for key, c in poly.terms.items():
            new = acc.get(key, Fraction(0)) + c0 * c
            if new == 0:
                acc.pop(key, None)
            else:
                acc[key] = new
    return SymmetricPolynomial(n, acc)


# -- expanded (exponent-vector) representation; internal ---------------------


def expand_to_exponents(p: SymmetricPolynomial) -> dict[Exponent, Fraction]:
    """Full expansion: one entry per exponent vector of each monomial orbit."""
    out: dict[Exponent, Fraction] = {}
    for key, coeff in p.terms.items():
        for eta in distinct_permutations(key):
            out[eta] = out.get(eta, Fraction(0)) + coeff
    return {e: c for e, c in out.items() if c != 0}


def symmetrize_exponents(expanded: Mapping[Exponent, Fraction], n: int,
                         check: bool = True) -> SymmetricPolynomial:
    """Collect an expanded polynomial back into the monomial basis.

    With check=True the expansion must actually be symmetric: every exponent
    vector in an orbit must carry the same coefficient.
    """
    terms: dict[Exponent, Fraction] = {}
    seen: dict[Exponent, Fraction] = {}
    for e, c in expanded.items():
        if c == 0:
            continue
        key = tuple(sorted(e, reverse=True))
        if check:
            if key in seen and seen[key] != c:
                raise DomainError(
                    f"expansion not symmetric at orbit {key}: {seen[key]} vs {c}")
            seen[key] = c
        terms[key] = c
    if check:
        # orbits must be complete, not just internally consistent
        for key, c in terms.items():
            hits = sum(1 for eta in distinct_permutations(key) if expanded.get(eta, 0) == c)
            if hits != orbit_size(key):
                raise DomainError(f"incomplete orbit for {key}")
    return SymmetricPolynomial(n, terms)


def exp_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        new = out.get(e, Fraction(0)) + c
        if new == 0:
            out.pop(e, None)
        else:
            out[e] = new
    return out


def exp_scale(a: dict, c: Fraction) -> dict:
    if c == 0:
        return {}
    return {e: v * c for e, v in a.items()}


def exp_mul(a: dict, b: dict) -> dict:
    out: dict[Exponent, Fraction] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(i + j for i, j in zip(ea, eb))
            new = out.get(e, Fraction(0)) + ca * cb
            if new == 0:
                out.pop(e, None)
            else:
                out[e] = new
    return out


def exp_binomial(n: int, i: int, ci: Fraction, j: int, cj: Fraction) -> dict:
    """The linear form ci*x_i + cj*x_j as an expanded polynomial."""
    ei = [0] * n
    ei[i] = 1
    ej = [0] * n
    ej[j] = 1
    out = {}
    if ci:
        out[tuple(ei)] = Fraction(ci)
    if cj:
        out[tuple(ej)] = Fraction(cj)
    return out


def exp_divide_linear(p: dict, n: int, i: int, j: int) -> dict:
    """Exact division of p by (x_i - x_j); raises if the division is inexact.

    Processes terms by decreasing x_i-exponent; each reduction step moves one
    power of x_i to x_j, so the total x_i-degree strictly drops and the loop
    terminates.
    """
    rem = dict(p)
    quo: dict[Exponent, Fraction] = {}
    while rem:
        e = max(rem, key=lambda t: (t[i], t))
        c = rem[e]
        if e[i] == 0:
            raise DomainError("polynomial not divisible by the linear factor")
        q = list(e)
        q[i] -= 1
        qe = tuple(q)
        quo[qe] = quo.get(qe, Fraction(0)) + c
        del rem[e]
        # cancel -x_j * quotient term against the remainder
        r = list(qe)
        r[j] += 1
        re = tuple(r)
        new = rem.get(re, Fraction(0)) + c
        if new == 0:
            rem.pop(re, None)
        else:
            rem[re] = new
    return {e: c for e, c in quo.items() if c != 0}


def poly_multiply(p: SymmetricPolynomial, q: SymmetricPolynomial) -> SymmetricPolynomial:
    """Product in the monomial basis via expand, convolve, re-collect."""
    p._check_compatible(q)
    prod = exp_mul(expand_to_exponents(p), expand_to_exponents(q))
    return symmetrize_exponents(prod, p.n, check=False)


# -- serialization -----------------------------------------------------------


def serialize_poly(p: SymmetricPolynomial) -> str:
    """One line per term: 'lambda : coefficient', heaviest term first."""
    lines = []
    for key, coeff in p.items():
        lines.append(f"{','.join(str(e) for e in key)} : {coeff}")
    if not lines:
        lines.append(f"{','.join('0' for _ in range(p.n))} : 0")
    return "\n".join(lines) + "\n"


def parse_poly(text: str, n: int | None = None) -> SymmetricPolynomial:
    """Inverse of serialize_poly; n is inferred from the first key if omitted."""
    terms: dict[Exponent, Fraction] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise DomainError(f"malformed polynomial line {line!r}")
        left, right = line.split(":", 1)
        key = tuple(int(tok) for tok in left.strip().split(","))
        coeff = Fraction(right.strip())
        if n is None:
            n = len(key)
        if coeff != 0:
            terms[key] = terms.get(key, Fraction(0)) + coeff
    if n is None:
        raise DomainError("no terms and no explicit n")
    return SymmetricPolynomial(n, terms)
