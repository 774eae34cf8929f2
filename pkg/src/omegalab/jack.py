"""Jack polynomials at rational theta in [0, infinity].

Expansions are computed directly at the given theta by an exact triangular
eigen-solve (never through the q -> 1 limit); the limit itself is examined
separately by jack_limit_probe, the only non-exact path in the module.
theta = 0 reduces to normalized monomials and theta = infinity to elementary
polynomials of the conjugate shape.
"""

from __future__ import annotations

import decimal
import math
from fractions import Fraction
from typing import Sequence

from . import cache
from .classical import expand_classical
from .eigensolve import dominance_ideal, solve_eigen_expansion
from .errors import DimensionMismatchError, DomainError, ParameterError
from .macdonald import MacdonaldParams, macdonald_expand, _as_key
from .partitions import Partition
from .sympoly import (SymmetricPolynomial, distinct_permutations, exp_add,
                      exp_divide_linear, exp_scale, poly_eval_float,
                      symmetrize_exponents)

INFINITE = math.inf


class JackParam:
    """The deformation parameter: an exact nonnegative rational, or infinity."""

    __slots__ = ("theta",)

    def __init__(self, theta):
        if isinstance(theta, JackParam):
            theta = theta.theta
        if theta == INFINITE:
            self.theta = INFINITE
            return
        if isinstance(theta, str) and theta.strip() in ("inf", "oo"):
            self.theta = INFINITE
            return
        theta = Fraction(theta)
        if theta < 0:
            raise ParameterError(f"need theta >= 0; got {theta}")
        self.theta = theta

    @property
    def is_infinite(self) -> bool:
        return self.theta == INFINITE

    def __eq__(self, other):
        return isinstance(other, JackParam) and self.theta == other.theta

    def __hash__(self):
        return hash(self.theta)

    def __repr__(self):
        return f"JackParam({'inf' if self.is_infinite else self.theta})"


def _apply_jack_op(nu: tuple, n: int, theta: Fraction) -> dict:
    """Monomial-basis row of the theta-deformed differential operator on m_nu.

    The operator is sum_i x_i^2 d_i^2 + 2 theta sum_{i<j}
    (x_i^2 d_i - x_j^2 d_j)/(x_i - x_j); each pair term is antisymmetric
    under swapping i and j, so the division is exact.
    """
    orbit = list(distinct_permutations(nu))
    diagonal = sum(p * (p - 1) for p in nu)
    total: dict = {eta: Fraction(diagonal) for eta in orbit} if diagonal else {}
    if theta:
        crossed: dict = {}
        for i in range(n):
            for j in range(i + 1, n):
                pair: dict = {}
                for eta in orbit:
                    if eta[i]:
                        up = list(eta)
                        up[i] += 1
                        key = tuple(up)
                        pair[key] = pair.get(key, Fraction(0)) + eta[i]
                    if eta[j]:
                        up = list(eta)
                        up[j] += 1
                        key = tuple(up)
                        pair[key] = pair.get(key, Fraction(0)) - eta[j]
                pair = {e: c for e, c in pair.items() if c}
                crossed = exp_add(crossed, exp_divide_linear(pair, n, i, j))
        total = exp_add(total, exp_scale(crossed, 2 * theta))
    return dict(symmetrize_exponents(total, n, check=True).terms)


def _jack_eigenvalue(nu: tuple, n: int, theta: Fraction) -> Fraction:
    return (sum(p * (p - 1) for p in nu)
            + 2 * theta * sum((n - 1 - i) * nu[i] for i in range(n)))


_EXPAND_MEMO: dict[tuple, SymmetricPolynomial] = {}


def jack_expand(lam, theta) -> SymmetricPolynomial:
    """Monic Jack polynomial P_lambda(x; theta) in the monomial basis.

    Finite theta only; the infinite parameter has no monomial-triangular
    expansion of this shape and is handled by omega_jack_eval.
    """
    theta = JackParam(theta)
    if theta.is_infinite:
        raise DomainError("jack_expand needs finite theta; "
                          "use omega_jack_eval for the infinite parameter")
    lam = tuple(Partition(lam).parts) if not isinstance(lam, Partition) \
        else lam.parts
    n = len(lam)
    th = theta.theta
    if th == 0:
        # the operator is diagonal at theta = 0 (and has eigenvalue
        # collisions there); the eigenfunctions are the monomials themselves
        return SymmetricPolynomial.monomial(lam, n)
    key = (n, lam, th)
    hit = _EXPAND_MEMO.get(key)
    if hit is None:
        def compute():
            if len(dominance_ideal(lam, n)) == 1:
                return SymmetricPolynomial.monomial(lam, n)
            return solve_eigen_expansion(
                lam, n,
                lambda nu: _apply_jack_op(nu, n, th),
                lambda nu: _jack_eigenvalue(nu, n, th),
                label=f"theta={th}")

        hit = cache.fetch("jack", n, lam, compute, theta=th)
        _EXPAND_MEMO[key] = hit
    return hit


def _coerce_nonneg_point(x) -> tuple[Fraction, ...]:
    pt = tuple(Fraction(v) for v in x)
    if any(v < 0 for v in pt):
        raise DomainError(f"need nonnegative coordinates; got {pt}")
    return pt


def omega_jack_eval(lam, theta, x) -> Fraction:
    """Omega_lambda(x; theta): the Jack polynomial normalized to 1 at (1,...,1).

    theta = 0 gives m_lambda(x)/m_lambda(1), theta = infinity gives
    e_conj(x)/e_conj(1) for the conjugate shape, finite positive theta
    evaluates the monic expansion.  Exact.
    """
    theta = JackParam(theta)
    lam = Partition(lam)
    x = _coerce_nonneg_point(x)
    n = len(x)
    if lam.n != n:
        raise DimensionMismatchError(f"partition {lam} vs point of length {n}")
    ones = (Fraction(1),) * n
    if theta.is_infinite:
        conj = lam.conjugate(max(lam.parts[0], 1))
        p = expand_classical("elementary", conj, n)
    elif theta.theta == 0:
        p = SymmetricPolynomial.monomial(lam.parts, n)
    else:
        p = jack_expand(lam, theta)
    denom = p.eval(ones)
    assert denom > 0, (lam, theta)
    return p.eval(x) / denom


def _floor_scaled_log(k: int, ratio: Fraction) -> int:
    """floor(k * log(ratio)) with a guard against boundary misrounding."""
    value = k * math.log(ratio)
    if abs(value - round(value)) < 2.0 ** -40:
        with decimal.localcontext() as ctx:
            ctx.prec = 50
            d = (decimal.Decimal(ratio.numerator)
                 / decimal.Decimal(ratio.denominator)).ln() * k
            return int(d.to_integral_value(rounding=decimal.ROUND_FLOOR))
    return math.floor(value)


def jack_limit_probe(lam, theta, x, ks: Sequence[int]):
    """Watch Macdonald values at shrinking lattice scales approach Jack values.

    For each k: q = exp(-1/k), t = exp(-theta/k), label entries
    mu_j = floor(k*log(x_j/a)) with a = x_n/2, and the probe point
    x^(k)_j = a * q^(-mu_j) * t^(n-j), which converges to x coordinatewise.
    The floating parameters are rationalized exactly (binary values as
    fractions), the expansion is solved exactly, and only the final
    evaluation is floating.  Returns a list of
    (k, macdonald value, jack value, absolute gap).
    """
    theta = JackParam(theta)
    if theta.is_infinite or theta.theta <= 0:
        raise DomainError("the limit probe needs finite positive theta")
    x = tuple(Fraction(v) for v in x)
    n = len(x)
    if any(x[i] <= x[i + 1] for i in range(n - 1)) or x[-1] <= 0:
        raise DomainError(f"need strictly decreasing positive x; got {x}")
    lam = _as_key(lam, n)
    a = x[-1] / 2
    th = float(theta.theta)
    jack_val = float(omega_jack_eval(lam, theta, x))
    out = []
    for k in ks:
        k = int(k)
        assert k >= 1
        q = math.exp(-1.0 / k)
        t = math.exp(-th / k)
        mu = tuple(_floor_scaled_log(k, xj / a) for xj in x)
        assert all(mu[i] >= mu[i + 1] for i in range(n - 1)), mu
        xk = tuple(float(a) * q ** (-mu[j]) * t ** (n - 1 - j)
                   for j in range(n))
        params = MacdonaldParams(Fraction(q), Fraction(t), n)
        p = macdonald_expand(lam, params)
        mac_val = poly_eval_float(p, xk) / poly_eval_float(
            p, tuple(t ** d for d in params.delta))
        out.append((k, mac_val, jack_val, abs(mac_val - jack_val)))
    return out
