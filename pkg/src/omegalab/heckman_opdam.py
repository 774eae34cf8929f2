"""Hypergeometric functions attached to the root system of the symmetric group.

F_{k,s}(x) is evaluated numerically by peeling off one variable at a time:
the n-variable value is an integral of the (n-1)-variable function over the
box of points interlacing x, against an explicit positive weight.  Base
cases (n = 1, k = 0, uniform x) are closed forms.  This is the only module
in the package that works in floating point end to end; everything it is
checked against (Jack evaluations) stays exact until the final comparison.

Conventions: F is symmetric in x and in s separately, F(0) = 1, and
F_{k, lam + k*rho}(x) = Omega_lam(e^x; k) ties the family to the Jack side.
"""

from __future__ import annotations

import functools
import itertools
import math
import warnings
from fractions import Fraction

import numpy as np

from .errors import DomainError, ParameterError, TieError
from .jack import JackParam, jack_expand
from .macdonald import _as_key
from .sympoly import poly_eval_float

SINGULARITY_RULES = ("plain-gauss", "endpoint-substitution")


class HOParams:
    """Multiplicity k >= 0 and variable count n, plus the derived vectors."""

    __slots__ = ("k", "n")

    def __init__(self, k, n: int):
        k = float(k)
        if not math.isfinite(k) or k < 0:
            raise ParameterError(f"need multiplicity k >= 0; got {k}")
        n = int(n)
        if n < 1:
            raise ParameterError(f"need at least one variable; got n={n}")
        self.k = k
        self.n = n

    @property
    def rho(self) -> tuple:
        """The half-sum vector ((n-1)/2, (n-3)/2, ..., -(n-1)/2), exact."""
        return tuple(Fraction(self.n - 1 - 2 * i, 2) for i in range(self.n))

    @property
    def xi(self) -> tuple:
        """The diagonal direction used by the derivative identity."""
        return (1.0,) * self.n

    def basis(self, i: int) -> tuple:
        assert 0 <= i < self.n
        return tuple(1.0 if j == i else 0.0 for j in range(self.n))

    def __repr__(self):
        return f"HOParams(k={self.k}, n={self.n})"


class QuadratureConfig:
    """Tensor Gauss-Legendre settings for the interlacing integrals.

    nodes_per_dimension counts nodes per panel; the endpoint-substitution
    rule splits every dimension into two panels at its midpoint and, for
    k < 1, bends each panel with the power map u -> u^(1/k) so that the
    boundary factor |e^{x_i} - e^{nu_j}|^(k-1) integrates exactly smoothly.
    """

    __slots__ = ("nodes_per_dimension", "singularity_rule", "min_gap")

    def __init__(self, nodes_per_dimension: int = 64,
                 singularity_rule: str = "endpoint-substitution",
                 min_gap: float = 1e-8):
        nodes_per_dimension = int(nodes_per_dimension)
        if nodes_per_dimension < 4:
            raise ParameterError(
                f"need nodes_per_dimension >= 4; got {nodes_per_dimension}")
        if singularity_rule not in SINGULARITY_RULES:
            raise ParameterError(f"unknown singularity rule "
                                 f"{singularity_rule!r}; "
                                 f"choose from {SINGULARITY_RULES}")
        min_gap = float(min_gap)
        if not min_gap > 0:
            raise ParameterError(f"need min_gap > 0; got {min_gap}")
        self.nodes_per_dimension = nodes_per_dimension
        self.singularity_rule = singularity_rule
        self.min_gap = min_gap

    def with_nodes(self, nodes: int) -> "QuadratureConfig":
        return QuadratureConfig(nodes, self.singularity_rule, self.min_gap)

    def __repr__(self):
        return (f"QuadratureConfig(nodes_per_dimension="
                f"{self.nodes_per_dimension}, singularity_rule="
                f"{self.singularity_rule!r}, min_gap={self.min_gap})")


@functools.lru_cache(maxsize=None)
def _unit_gauss(m: int):
    """Gauss-Legendre nodes and weights on [0, 1], read-only."""
    z, w = np.polynomial.legendre.leggauss(m)
    u = (z + 1.0) / 2.0
    w = w / 2.0
    u.setflags(write=False)
    w.setflags(write=False)
    return u, w


# floor for endpoint displacements: keeps 0^(k-1) out of the weight factors
# on zero-width boxes (those nodes carry weight 0, so the value is unused)
_TINY = 1e-300


def _panel_nodes(lo, hi, k: float, cfg: QuadratureConfig):
    """Quadrature nodes for one interlacing dimension.

    lo and hi may be scalars or broadcastable arrays; the node axis is
    appended last.  Returns (tau, dlo, dhi, wts) where dlo = tau - lo and
    dhi = hi - tau are taken from the map itself, so they stay accurate
    even when tau is within rounding distance of an endpoint.  Weights
    absorb the affine and power-map Jacobians.
    """
    lo = np.asarray(lo, dtype=float)[..., None]
    hi = np.asarray(hi, dtype=float)[..., None]
    m = cfg.nodes_per_dimension
    u, w = _unit_gauss(m)
    if cfg.singularity_rule == "plain-gauss":
        if k < 1.0:
            warnings.warn("plain-gauss with k < 1 leaves the endpoint "
                          "singularity unresolved; expect degraded accuracy",
                          stacklevel=3)
        length = hi - lo
        dlo = length * u
        return lo + dlo, dlo, length * (1.0 - u), length * w
    half = (hi - lo) / 2.0
    if k >= 1.0:
        # weight is bounded; two plain panels per dimension
        dlo = np.concatenate([half * u, half * (1.0 + u)], axis=-1)
        dhi = np.concatenate([half * (2.0 - u), half * (1.0 - u)], axis=-1)
        wts = half * w
        wts = np.concatenate([wts, wts], axis=-1)
        return lo + dlo, dlo, dhi, wts
    # k < 1: nu = endpoint +- half * u^(1/k) turns the (nu-endpoint)^(k-1)
    # factor into a constant; the Jacobian goes into the weights
    g = u ** (1.0 / k)
    jac = (1.0 / k) * u ** (1.0 / k - 1.0)
    dlo = np.concatenate([half * g, half * (2.0 - g)], axis=-1)
    dhi = np.concatenate([half * (2.0 - g), half * g], axis=-1)
    wts = half * jac * w
    wts = np.concatenate([wts, wts], axis=-1)
    return lo + dlo, dlo, dhi, wts


def _abs_pow(base, expo: float):
    return np.abs(base) ** expo


def _weighted_edges(wts, elo, etau, dlo, dhi, k: float):
    """wts * (e^tau - e^lo)^(k-1) * (e^hi - e^tau)^(k-1), stably.

    e^tau - e^lo is written e^lo * expm1(dlo) so a node that rounds onto
    its endpoint still produces the true small difference instead of 0.
    The weight is folded in between the two factors: each near-endpoint
    factor is large exactly where wts is small, and the running product
    stays near unit scale instead of overflowing.
    """
    glo = elo * np.expm1(np.maximum(dlo, _TINY))
    ghi = etau * np.expm1(np.maximum(dhi, _TINY))
    return (wts * glo ** (k - 1.0)) * ghi ** (k - 1.0)


def _f2_batch(k: float, s1: float, s2: float, a, b, cfg: QuadratureConfig):
    """F_{k,(s1,s2)} on the grid of pairs (a_i, b_j) with a_i > b_j."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    lo = np.broadcast_to(b[None, :], (a.size, b.size))
    hi = np.broadcast_to(a[:, None], (a.size, b.size))
    tau, dlo, dhi, wts = _panel_nodes(lo, hi, k, cfg)
    if k != 1.0:
        wts = _weighted_edges(wts, np.exp(b)[None, :, None], np.exp(tau),
                              dlo, dhi, k)
    integral = np.sum(wts * np.exp((s1 + 1.0 - k - s2) * tau), axis=-1)
    pref = (math.gamma(2.0 * k) / math.gamma(k) ** 2
            * np.exp((s2 + k / 2.0) * (a[:, None] + b[None, :]))
            * _abs_pow(np.exp(a)[:, None] - np.exp(b)[None, :], 1.0 - 2.0 * k))
    return pref * integral


def _f_rec(k: float, s: tuple, x: tuple, cfg: QuadratureConfig) -> float:
    """The interlacing recursion at sorted strict x; no tie policing here."""
    n = len(x)
    assert all(x[i] > x[i + 1] for i in range(n - 1)), x
    if n == 1:
        return math.exp(s[0] * x[0])
    sn = s[-1]
    ex = [math.exp(v) for v in x]
    vandermonde = math.prod(ex[i] - ex[j]
                            for i in range(n) for j in range(i + 1, n))
    pref = (math.gamma(n * k) / math.gamma(k) ** n
            * math.exp((sn + k * (n - 1) / 2.0) * sum(x))
            * vandermonde ** (1.0 - 2.0 * k))
    drift = 1.0 - n * k / 2.0 - sn
    if n == 2:
        tau, dlo, dhi, wts = _panel_nodes(x[1], x[0], k, cfg)
        if k != 1.0:
            wts = _weighted_edges(wts, ex[1], np.exp(tau), dlo, dhi, k)
        return pref * float(np.sum(wts * np.exp((s[0] + drift) * tau)))
    if n == 3:
        a, dlo_a, dhi_a, wa = _panel_nodes(x[1], x[0], k, cfg)
        b, dlo_b, dhi_b, wb = _panel_nodes(x[2], x[1], k, cfg)
        inner = _f2_batch(k, s[0], s[1], a, b, cfg)
        ea, eb = np.exp(a), np.exp(b)
        if k != 1.0:
            # each nu_j sees its two box endpoints (stable form) plus the
            # one remaining coordinate of x, which stays bounded away
            wa = _weighted_edges(wa, ex[1], ea, dlo_a, dhi_a, k)
            wa = wa * _abs_pow(ea - ex[2], k - 1.0)
            wb = _weighted_edges(wb, ex[2], eb, dlo_b, dhi_b, k)
            wb = wb * _abs_pow(ex[0] - eb, k - 1.0)
        grid = inner * np.exp(drift * (a[:, None] + b[None, :]))
        grid = grid * (ea[:, None] - eb[None, :])
        return pref * float(np.sum(wa[:, None] * wb[None, :] * grid))
    # n >= 4: scalar tensor loop over the box, best effort
    dims = [_panel_nodes(x[j + 1], x[j], k, cfg) for j in range(n - 1)]
    total = 0.0
    for picks in itertools.product(*(range(d[0].size) for d in dims)):
        nu = tuple(float(dims[j][0][picks[j]]) for j in range(n - 1))
        if any(nu[i] <= nu[i + 1] for i in range(n - 2)):
            continue   # node rounded onto a shared endpoint; weight ~ 0
        weight = math.prod(float(dims[j][3][picks[j]]) for j in range(n - 1))
        if k != 1.0:
            for j in range(n - 1):
                dlo = max(float(dims[j][1][picks[j]]), _TINY)
                dhi = max(float(dims[j][2][picks[j]]), _TINY)
                weight *= ((math.exp(x[j + 1]) * math.expm1(dlo)) ** (k - 1.0)
                           * (math.exp(nu[j]) * math.expm1(dhi)) ** (k - 1.0))
                for i in range(n):
                    if i not in (j, j + 1):
                        weight *= abs(ex[i] - math.exp(nu[j])) ** (k - 1.0)
        enu = [math.exp(v) for v in nu]
        piece = (_f_rec(k, s[:-1], nu, cfg)
                 * math.exp(drift * sum(nu))
                 * math.prod(enu[i] - enu[j] for i in range(n - 1)
                             for j in range(i + 1, n - 1)))
        total += weight * piece
    return pref * total


def _sorted_checked(x, min_gap: float):
    xs = sorted((float(v) for v in x), reverse=True)
    if not all(math.isfinite(v) for v in xs):
        raise DomainError(f"need finite coordinates; got {x}")
    if xs[0] == xs[-1]:
        return xs, True
    for i in range(len(xs) - 1):
        if xs[i] - xs[i + 1] < min_gap:
            raise TieError(
                f"coordinates {xs[i]} and {xs[i + 1]} are closer than "
                f"min_gap={min_gap}; perturb the point or raise the gap")
    return xs, False


def ho_eval(params: HOParams, s, x, cfg: QuadratureConfig = None) -> float:
    """F_{k,s}(x) by recursive quadrature; closed forms where they exist.

    x and s are sorted internally (F is symmetric in each), the diagonal
    part of x is split off exactly as exp(mean(x)*sum(s)), and the
    remaining trace-free part goes through the interlacing recursion.
    """
    cfg = cfg or QuadratureConfig()
    n = params.n
    s = tuple(float(v) for v in s)
    if len(s) != n or len(x) != n:
        raise DomainError(f"need length-{n} vectors; got s={s}, x={tuple(x)}")
    if not all(math.isfinite(v) for v in s):
        raise DomainError(f"need finite spectral vector; got {s}")
    if n == 1:
        return math.exp(s[0] * float(x[0]))
    if params.k == 0.0:
        return ho_closed_forms(params, s, x)
    xs, uniform = _sorted_checked(x, cfg.min_gap)
    ss = tuple(sorted(s, reverse=True))
    mean = sum(xs) / n
    if uniform:
        return math.exp(sum(ss) * mean)
    centered = tuple(v - mean for v in xs)
    return math.exp(sum(ss) * mean) * _f_rec(params.k, ss, centered, cfg)


def ho_closed_forms(params: HOParams, s, x) -> float:
    """Exact branches: k = 0 (symmetrized exponential) and n = 1."""
    n = params.n
    s = tuple(float(v) for v in s)
    x = tuple(float(v) for v in x)
    if n == 1:
        return math.exp(s[0] * x[0])
    if params.k != 0.0:
        raise DomainError("closed forms cover k = 0 or n = 1 only; "
                          f"got k={params.k}, n={n}")
    acc = 0.0
    for perm in itertools.permutations(x):
        acc += math.exp(sum(si * xi for si, xi in zip(s, perm)))
    return acc / math.factorial(n)


def ho_jack_consistency(lam, params: HOParams, x,
                        cfg: QuadratureConfig = None) -> float:
    """Relative gap between F_{k, lam+k*rho}(x) and Omega_lam(e^x; k).

    The right side is evaluated from the exact expansion at rational
    theta = k, floated only at the end; the left side is quadrature.
    """
    theta = JackParam(Fraction(params.k))
    lam = _as_key(lam, params.n)
    s = tuple(float(Fraction(li) + theta.theta * r)
              for li, r in zip(lam, params.rho))
    p = jack_expand(lam, theta)
    y = [math.exp(float(v)) for v in x]
    jack_side = poly_eval_float(p, y) / float(p.eval((Fraction(1),) * params.n))
    ho_side = ho_eval(params, s, x, cfg)
    assert jack_side > 0
    return abs(ho_side - jack_side) / jack_side


def ho_direction_residual(params: HOParams, s, x, h: float,
                          cfg: QuadratureConfig = None) -> float:
    """How well the diagonal derivative identity holds at x.

    Central difference of F along the all-ones direction, compared with
    sum(s) * F(x); returns |difference| / |F(x)|.
    """
    h = float(h)
    if not h > 0:
        raise DomainError(f"need step h > 0; got {h}")
    s = tuple(float(v) for v in s)
    x = tuple(float(v) for v in x)
    up = tuple(v + h for v in x)
    down = tuple(v - h for v in x)
    f0 = ho_eval(params, s, x, cfg)
    f_up = ho_eval(params, s, up, cfg)
    f_down = ho_eval(params, s, down, cfg)
    derivative = (f_up - f_down) / (2.0 * h)
    assert f0 != 0.0
    return abs(derivative - sum(s) * f0) / abs(f0)


def ho_error_estimate(params: HOParams, s, x,
                      cfg: QuadratureConfig = None) -> float:
    """Self-consistency gap |F at m nodes - F at 2m nodes|.

    Ten times this value is the working quadrature tolerance used by the
    inequality sweeps.
    """
    cfg = cfg or QuadratureConfig()
    coarse = ho_eval(params, s, x, cfg)
    fine = ho_eval(params, s, x, cfg.with_nodes(2 * cfg.nodes_per_dimension))
    return abs(fine - coarse)
