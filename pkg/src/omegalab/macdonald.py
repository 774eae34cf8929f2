"""Macdonald polynomials at fixed rational parameters.

Provides the monic dominance-triangular expansions P_lambda(x; q, t), their
normalizations Omega_lambda = P_lambda / P_lambda(t^delta), the dominant
q-lattice of evaluation points, shifted (interpolation) Macdonald
polynomials, the binomial-formula identity relating the two, and the
parameter-inversion identity.  Everything is exact rational arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import cache
from .eigensolve import (as_int_vector, dominance_ideal, solve_eigen_expansion,
                         solve_linear_system)
from .errors import (DegeneracyError, DimensionMismatchError, DomainError,
                     ParameterError)
from .partitions import Partition, contains, partitions_of
from .sympoly import (SymmetricPolynomial, distinct_permutations, exp_add,
                      exp_binomial, exp_divide_linear, exp_mul, exp_scale,
                      monomial_eval, symmetrize_exponents)


def _iroot(m: int, r: int) -> int | None:
    """Exact r-th root of a nonnegative integer, or None."""
    if m == 0:
        return 0
    k = max(1, int(round(m ** (1.0 / r))))
    for cand in range(max(1, k - 2), k + 3):
        if cand ** r == m:
            return cand
    return None


def rational_power(q: Fraction, theta: Fraction) -> Fraction:
    """q**theta when it is rational; ParameterError otherwise."""
    q = Fraction(q)
    theta = Fraction(theta)
    if q <= 0:
        raise ParameterError("base must be positive")
    base = q ** theta.numerator
    r = theta.denominator
    if r == 1:
        return base
    num = _iroot(base.numerator, r)
    den = _iroot(base.denominator, r)
    if num is None or den is None:
        raise ParameterError(f"{q}**{theta} is not rational")
    return Fraction(num, den)


class MacdonaldParams:
    """Parameter bundle (q, t, a, n) with exact rational entries.

    q and t live in (0,1); a is a positive scale for the lattice.  theta is
    an optional coupling exponent recording t = q**theta when the parameters
    were built in coupled form.
    """

    __slots__ = ("q", "t", "a", "n", "theta")

    def __init__(self, q, t, n: int, a=Fraction(1), theta=None, _relax=False):
        q = Fraction(q)
        t = Fraction(t)
        a = Fraction(a)
        if _relax:
            if q <= 0 or t <= 0 or q == 1 or t == 1:
                raise ParameterError("need positive parameters, not equal to 1")
        elif not (0 < q < 1 and 0 < t < 1):
            raise ParameterError(f"need q, t in (0,1); got q={q}, t={t}")
        if a <= 0:
            raise ParameterError(f"need a > 0; got a={a}")
        if n < 1:
            raise ParameterError(f"need n >= 1; got n={n}")
        if theta is not None:
            theta = Fraction(theta)
            if rational_power(q, theta) != t:
                raise ParameterError(f"coupling broken: {q}**{theta} != {t}")
        self.q = q
        self.t = t
        self.a = a
        self.n = int(n)
        self.theta = theta

    @classmethod
    def coupled(cls, q, theta, n: int, a=Fraction(1)) -> "MacdonaldParams":
        """Parameters with t = q**theta computed exactly."""
        q = Fraction(q)
        theta = Fraction(theta)
        return cls(q, rational_power(q, theta), n, a, theta=theta)

    @property
    def delta(self) -> tuple[int, ...]:
        return tuple(range(self.n - 1, -1, -1))

    def t_delta(self) -> tuple[Fraction, ...]:
        """The principal specialization point (t^(n-1), ..., t, 1)."""
        return tuple(self.t ** d for d in self.delta)

    def inverted(self) -> "MacdonaldParams":
        """Parameters (1/q, 1/t); only inversion_check may use the result."""
        return MacdonaldParams(1 / self.q, 1 / self.t, self.n, self.a,
                               _relax=True)

    def key(self) -> tuple:
        return (self.n, self.q, self.t)

    def __repr__(self):
        return (f"MacdonaldParams(q={self.q}, t={self.t}, n={self.n}, "
                f"a={self.a})")


def _as_key(lam, n: int) -> tuple[int, ...]:
    parts = tuple(lam.parts if isinstance(lam, Partition) else as_int_vector(lam))
    if len(parts) > n:
        raise DimensionMismatchError(f"partition {parts} longer than n={n}")
    parts = parts + (0,) * (n - len(parts))
    if any(p < 0 for p in parts) or any(parts[i] < parts[i + 1]
                                        for i in range(n - 1)):
        raise DomainError(f"not a partition: {parts}")
    return parts


def _apply_macdonald_op(nu: tuple, n: int, q: Fraction, t: Fraction) -> dict:
    """Monomial-basis row of the Macdonald q-difference operator on m_nu.

    The operator is sum_i A_i(x;t) T_{q,x_i} with A_i = prod_{j != i}
    (t x_i - x_j)/(x_i - x_j).  Clearing denominators against the Vandermonde
    keeps everything polynomial: the i-th summand contributes
    (-1)^i N_i(x) V_i(x) (T_i m_nu) to V(x) * (D m_nu), where N_i collects
    the numerators t x_i - x_j and V_i is the Vandermonde without x_i.
    The total is divisible by each Vandermonde factor in turn.
    """
    one = Fraction(1)
    total: dict = {}
    for i in range(n):
        shifted = {}
        for eta in distinct_permutations(nu):
            shifted[eta] = shifted.get(eta, Fraction(0)) + q ** eta[i]
        prod = shifted
        for j in range(n):
            if j != i:
                prod = exp_mul(prod, exp_binomial(n, i, t, j, -one))
        for j in range(n):
            for k in range(j + 1, n):
                if j != i and k != i:
                    prod = exp_mul(prod, exp_binomial(n, j, one, k, -one))
        total = exp_add(total, exp_scale(prod, Fraction((-1) ** i)))
    for j in range(n):
        for k in range(j + 1, n):
            total = exp_divide_linear(total, n, j, k)
    return dict(symmetrize_exponents(total, n, check=True).terms)


def _mac_eigenvalue(nu: tuple, n: int, q: Fraction, t: Fraction) -> Fraction:
    return sum((q ** nu[i]) * (t ** (n - 1 - i)) for i in range(n))


_EXPAND_MEMO: dict[tuple, SymmetricPolynomial] = {}


def _expand_uncached(lam: tuple, params: MacdonaldParams) -> SymmetricPolynomial:
    n, q, t = params.n, params.q, params.t
    if len(dominance_ideal(lam, n)) == 1:
        return SymmetricPolynomial.monomial(lam, n)
    return solve_eigen_expansion(
        lam, n,
        lambda nu: _apply_macdonald_op(nu, n, q, t),
        lambda nu: _mac_eigenvalue(nu, n, q, t),
        label=f"q={q}, t={t}")


def macdonald_expand(lam, params: MacdonaldParams) -> SymmetricPolynomial:
    """Monic Macdonald polynomial P_lambda(x; q, t) in the monomial basis."""
    lam = _as_key(lam, params.n)
    key = (params.key(), lam)
    hit = _EXPAND_MEMO.get(key)
    if hit is None:
        hit = cache.fetch("macdonald", params.n, lam,
                          lambda: _expand_uncached(lam, params),
                          q=params.q, t=params.t)
        _EXPAND_MEMO[key] = hit
    return hit


def _coerce_point(x, n: int) -> tuple[Fraction, ...]:
    if len(x) != n:
        raise DimensionMismatchError(f"point {tuple(x)} not of length {n}")
    return tuple(Fraction(v) for v in x)


def omega_mac_eval(lam, params: MacdonaldParams, x) -> Fraction:
    """Omega_lambda(x; q, t) = P_lambda(x) / P_lambda(t^delta), exact."""
    p = macdonald_expand(lam, params)
    x = _coerce_point(x, params.n)
    denom = p.eval(params.t_delta())
    assert denom != 0, (lam, params)
    return p.eval(x) / denom


class LatticePoint:
    """A dominant-lattice evaluation point with its integer label."""

    __slots__ = ("mu", "coords")

    def __init__(self, mu: tuple[int, ...], coords: tuple[Fraction, ...]):
        self.mu = mu
        self.coords = coords

    def __eq__(self, other):
        return (isinstance(other, LatticePoint)
                and self.mu == other.mu and self.coords == other.coords)

    def __repr__(self):
        return f"LatticePoint(mu={self.mu}, coords={self.coords})"


def lattice_point(mu, params: MacdonaldParams) -> LatticePoint:
    """Exact coordinates of the lattice point labeled by mu.

    mu is weakly decreasing with integer entries of either sign.  The i-th
    coordinate is a * q^(-mu_i) * t^(i-1): the largest scale factor rides on
    the lowest t-power, so coordinates come out strictly decreasing and the
    point set contains the interpolation grid q^kappa * t^delta.  The
    all-zero label gives a * t^delta as a multiset, and shifting the label
    by c * (1,...,1) rescales the point by q^(-c).
    """
    mu = as_int_vector(mu)
    if len(mu) != params.n:
        raise DimensionMismatchError(f"label {mu} not of length {params.n}")
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise DomainError(f"label must be weakly decreasing: {mu}")
    q, t, a = params.q, params.t, params.a
    coords = tuple(a * q ** (-mu[i]) * t ** i for i in range(params.n))
    return LatticePoint(mu, coords)


def inversion_check(lam, params: MacdonaldParams, x):
    """Both sides of Omega_lambda(x; 1/q, 1/t) = t^((n-1)|lambda|) Omega_lambda(x; q, t).

    Returns (lhs, rhs, equal).
    """
    lam = _as_key(lam, params.n)
    x = _coerce_point(x, params.n)
    lhs = omega_mac_eval(lam, params.inverted(), x)
    rhs = params.t ** ((params.n - 1) * sum(lam)) * omega_mac_eval(lam, params, x)
    return lhs, rhs, lhs == rhs


def interpolation_node(kappa, params: MacdonaldParams) -> tuple[Fraction, ...]:
    """The grid point z(kappa) with z_i = q^(kappa_i) * t^(n-i)."""
    kappa = as_int_vector(kappa)
    if len(kappa) != params.n:
        raise DimensionMismatchError(f"node label {kappa} not of length {params.n}")
    q, t, n = params.q, params.t, params.n
    return tuple(q ** kappa[i] * t ** (n - 1 - i) for i in range(n))


_INTERP_MEMO: dict[tuple, SymmetricPolynomial] = {}


def _interpolation_monic(mu: tuple, params: MacdonaldParams) -> SymmetricPolynomial:
    """Leading-monic interpolation polynomial in the shifted variables.

    As a symmetric polynomial S(z) of degree |mu| it vanishes at z(kappa)
    for every partition kappa != mu with |kappa| <= |mu|, and its m_mu
    coefficient is 1.  The weight-|mu| component is then automatically the
    Macdonald polynomial P_mu(z).
    """
    key = (params.key(), mu)
    hit = _INTERP_MEMO.get(key)
    if hit is not None:
        return hit
    n = params.n
    basis = [nu for w in range(sum(mu) + 1) for nu in partitions_of(w, n)]
    matrix = []
    rhs = []
    for kappa in basis:
        if kappa == mu:
            matrix.append([Fraction(int(nu == mu)) for nu in basis])
            rhs.append(Fraction(1))
        else:
            node = interpolation_node(kappa, params)
            matrix.append([monomial_eval(nu, node) for nu in basis])
            rhs.append(Fraction(0))
    try:
        sol = solve_linear_system(matrix, rhs)
    except DegeneracyError:
        raise DegeneracyError(
            f"singular interpolation system for mu={mu}, q={params.q}, "
            f"t={params.t}") from None
    poly = SymmetricPolynomial(n, dict(zip(basis, sol)))
    assert poly.coefficient(mu) == 1
    _INTERP_MEMO[key] = poly
    return poly


class ShiftedMacdonald:
    """Shifted Macdonald polynomial P*_mu, normalized to P*_mu(q^mu) = 1.

    Represented as a symmetric polynomial in the shifted variables
    z_i = u_i * t^(n-i); eval() applies the shift to its argument,
    eval_shifted() takes the z-variables directly.  It vanishes at
    u = q^kappa for every partition kappa != mu with |kappa| <= |mu|.
    """

    __slots__ = ("mu", "params", "zpoly")

    def __init__(self, mu: tuple, params: MacdonaldParams,
                 zpoly: SymmetricPolynomial):
        self.mu = mu
        self.params = params
        self.zpoly = zpoly

    @property
    def degree(self) -> int:
        return sum(self.mu)

    def eval_shifted(self, z) -> Fraction:
        return self.zpoly.eval(_coerce_point(z, self.params.n))

    def eval(self, u) -> Fraction:
        u = _coerce_point(u, self.params.n)
        t, n = self.params.t, self.params.n
        return self.eval_shifted(tuple(u[i] * t ** (n - 1 - i) for i in range(n)))

    def eval_label(self, kappa) -> Fraction:
        """Value at u = q^kappa, i.e. at the grid point z(kappa)."""
        return self.eval_shifted(interpolation_node(kappa, self.params))

    def __repr__(self):
        return f"ShiftedMacdonald(mu={self.mu}, {self.params!r})"


def shifted_macdonald(mu, params: MacdonaldParams) -> ShiftedMacdonald:
    """The interpolation polynomial P*_mu with P*_mu(q^mu) = 1."""
    mu = _as_key(mu, params.n)
    monic = _interpolation_monic(mu, params)
    norm = monic.eval(interpolation_node(mu, params))
    if norm == 0:
        raise DegeneracyError(
            f"interpolation polynomial vanishes at its own node: mu={mu}, "
            f"q={params.q}, t={params.t}")
    return ShiftedMacdonald(mu, params, (1 / norm) * monic)


def binomial_check(lam, params: MacdonaldParams, x) -> Fraction:
    """Residual of the binomial expansion of Omega_lambda at x (expected 0).

    Omega_lambda(x) is compared against
        sum over mu contained in lambda of
        S_mu(z(lambda)) / (S_mu(z(mu)) * P_mu(t^delta)) * S_mu(x)
    with S_mu the leading-monic interpolation polynomial; the normalization
    of P*_mu cancels in the ratio.
    """
    lam = _as_key(lam, params.n)
    x = _coerce_point(x, params.n)
    n = params.n
    t_delta = params.t_delta()
    z_lam = interpolation_node(lam, params)
    total = Fraction(0)
    for w in range(sum(lam) + 1):
        for mu in partitions_of(w, n):
            if not contains(lam, mu):
                continue
            s = _interpolation_monic(mu, params)
            den_node = s.eval(interpolation_node(mu, params))
            den_principal = macdonald_expand(mu, params).eval(t_delta)
            if den_node == 0 or den_principal == 0:
                raise DegeneracyError(
                    f"zero denominator in binomial term mu={mu}, "
                    f"q={params.q}, t={params.t}")
            total += s.eval(z_lam) / (den_node * den_principal) * s.eval(x)
    return omega_mac_eval(lam, params, x) - total
