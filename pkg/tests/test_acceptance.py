"""The acceptance gate: eleven go/no-go checks over the whole package.

Each test sweeps one advertised guarantee at its full contractual range,
appends a PASS/FAIL line to the run summary, and pins its tolerances as
module constants.  Exact families tolerate nothing; quadrature families
get the stated bands and wall-clock budgets.
"""

import math
import time
from fractions import Fraction

from omegalab.classical import muirhead_eval, powersum_eval
from omegalab.heckman_opdam import (HOParams, QuadratureConfig,
                                    ho_closed_forms, ho_direction_residual,
                                    ho_eval, ho_jack_consistency)
from omegalab.jack import jack_expand, jack_limit_probe, omega_jack_eval
from omegalab.lab import (check_log_convexity, check_schur_convexity,
                          check_weak_majorization, find_witness,
                          hunt_violation)
from omegalab.macdonald import (MacdonaldParams, binomial_check,
                                inversion_check, omega_mac_eval)
from omegalab.partitions import Partition, majorizes, partitions_of
from omegalab.sampling import RationalSampler

# pinned tolerances and budgets
TIME_BUDGET_MUIRHEAD = 300.0      # seconds, criterion 1 end to end
TIME_BUDGET_LATTICE = 600.0       # seconds, criterion 4 end to end
LIMIT_REL_BOUND = 1e-2            # criterion 7 relative gap at k = 1000
CONSISTENCY_TOL_INT = 1e-6        # criterion 9, k >= 1, 64 nodes
CONSISTENCY_TOL_HALF = 1e-3       # criterion 9, k = 1/2, 64 nodes
CONSISTENCY_TOL_N3 = 1e-3         # criterion 9, n = 3, 48 nodes
EVAL_TIME_BUDGET = 30.0           # seconds per quadrature evaluation
ORIGIN_TOL = 1e-8                 # criterion 10, F(s, 0) = 1
SYMMETRY_TOL = 1e-6               # criterion 10, relative, s permutations
RESIDUAL_TOL = 1e-4               # criterion 10, diagonal derivative
CLOSED_FORM_TOL = 1e-10           # criterion 10, k = 0 closed form
MIN_PROBE_TRIPLES = 50            # criterion 10, per (k, n) and sweep
HUNT_BUDGET = 100000              # criterion 11 probes per parameter point

JACK_THETAS = (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(1),
               Fraction(2), Fraction(5), "inf")
LATTICE_QT = ((Fraction(1, 2), Fraction(1, 3)),
              (Fraction(2, 3), Fraction(1, 2)),
              (Fraction(1, 3), Fraction(2, 3)),
              (Fraction(9, 10), Fraction(1, 2)))
RESIDUAL_QT = ((Fraction(1, 2), Fraction(1, 3)),
               (Fraction(2, 3), Fraction(1, 2)))
HUNT_QT = LATTICE_QT + ((Fraction(9, 10), Fraction(1, 100)),)


class _Criterion:
    """Collects failures for one criterion and formats the summary line."""

    def __init__(self, log, number, name):
        self.log = log
        self.number = number
        self.name = name
        self.problems = []
        self.detail = ""

    def check(self, condition, message):
        if not condition:
            self.problems.append(message)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        if exc is not None:
            self.problems.append(f"unexpected {exc_type.__name__}: {exc}")
        status = "PASS" if not self.problems else "FAIL"
        tail = self.detail if not self.problems \
            else "; ".join(str(p) for p in self.problems[:4])
        self.log.append(
            f"criterion {self.number:02d} [{status}] {self.name}: {tail}")
        if exc is not None:
            return False
        assert not self.problems, (self.number, self.name, self.problems[:10])
        return False


def _same_weight_shapes(n, max_weight):
    return [[Partition(p) for p in partitions_of(w, n)]
            for w in range(1, max_weight + 1)]


def test_criterion_01_muirhead_sweep_and_witnesses(criterion_log):
    with _Criterion(criterion_log, 1, "muirhead order + witness coverage") as c:
        start = time.monotonic()
        report = check_schur_convexity("muirhead", 3, 6, samples=100, seed=0,
                                       x_low=0, x_high=10)
        c.check(report.passed,
                f"{len(report.violations)} forward violations")
        witnesses = 0
        for shapes in _same_weight_shapes(3, 6):
            for lam in shapes:
                for mu in shapes:
                    if lam.parts == mu.parts or majorizes(lam, mu) \
                            or majorizes(mu, lam):
                        continue
                    w = find_witness(lam, mu, "muirhead")
                    exact_lhs = muirhead_eval(lam, w.x)
                    exact_rhs = muirhead_eval(mu, w.x)
                    c.check(exact_lhs == w.lhs and exact_rhs == w.rhs
                            and exact_lhs < exact_rhs,
                            f"witness for {lam} vs {mu} fails re-check")
                    witnesses += 1
        elapsed = time.monotonic() - start
        c.check(elapsed <= TIME_BUDGET_MUIRHEAD,
                f"took {elapsed:.0f}s > {TIME_BUDGET_MUIRHEAD:.0f}s")
        c.detail = (f"{report.pairs_checked} comparable pairs x 100 points, "
                    f"{witnesses} incomparable pairs separated, "
                    f"{elapsed:.1f}s")


def test_criterion_02_powersum_order_and_log_convexity(criterion_log):
    with _Criterion(criterion_log, 2, "power-sum order + log-convexity") as c:
        forward = check_schur_convexity("powersum", 3, 6, samples=100, seed=0)
        c.check(forward.passed,
                f"{len(forward.violations)} order violations")
        convex = check_log_convexity("powersum", 3, 6, samples=100, seed=0)
        c.check(convex.passed,
                f"{len(convex.violations)} log-convexity violations")
        c.detail = (f"order {forward.pairs_checked} pairs, midpoint "
                    f"{convex.pairs_checked} pairs, 100 points each, exact")


def test_criterion_03_jack_order_and_nonnegativity(criterion_log):
    with _Criterion(criterion_log, 3, "jack order + coefficient signs") as c:
        for theta in JACK_THETAS:
            for n in (1, 2, 3, 4):
                report = check_schur_convexity("jack", n, 6, samples=100,
                                               seed=0, theta=theta)
                c.check(report.passed,
                        f"theta={theta} n={n}: "
                        f"{len(report.violations)} violations")
        coeffs = 0
        for theta in JACK_THETAS[:-1]:
            for n in (1, 2, 3, 4):
                for w in range(0, 7):
                    for lam in partitions_of(w, n):
                        for key, value in jack_expand(lam, theta).terms.items():
                            c.check(value >= 0,
                                    f"negative c at theta={theta} "
                                    f"lam={lam} nu={key}")
                            coeffs += 1
        c.detail = (f"{len(JACK_THETAS)} parameter values x n<=4, exact; "
                    f"{coeffs} expansion coefficients all nonnegative")


def test_criterion_04_lattice_order_and_log_convexity(criterion_log):
    with _Criterion(criterion_log, 4, "q-lattice order + log-convexity") as c:
        start = time.monotonic()
        configs = 0
        for q, t in LATTICE_QT:
            for a in (Fraction(1), Fraction(1, 2)):
                for n in (1, 2, 3):
                    order = check_schur_convexity(
                        "macdonald-lattice", n, 6, q=q, t=t, a=a,
                        label_bound=4)
                    c.check(order.passed,
                            f"order q={q} t={t} a={a} n={n}: "
                            f"{len(order.violations)} violations")
                    convex = check_log_convexity(
                        "macdonald-lattice", n, 6, q=q, t=t, a=a,
                        label_bound=4)
                    c.check(convex.passed,
                            f"log-convexity q={q} t={t} a={a} n={n}: "
                            f"{len(convex.violations)} violations")
                    configs += 1
        elapsed = time.monotonic() - start
        c.check(elapsed <= TIME_BUDGET_LATTICE,
                f"took {elapsed:.0f}s > {TIME_BUDGET_LATTICE:.0f}s")
        c.detail = (f"{configs} parameter configs, labels in [0,4], exact, "
                    f"{elapsed:.1f}s")


def test_criterion_05_binomial_residual(criterion_log):
    with _Criterion(criterion_log, 5, "binomial expansion residual") as c:
        probes = 0
        for q, t in RESIDUAL_QT:
            for n in (2, 3):
                params = MacdonaldParams(q, t, n)
                sampler = RationalSampler(11, Fraction(1, 4), Fraction(5))
                for w in range(0, 5):
                    for lam in partitions_of(w, n):
                        for i in range(5):
                            x = sampler.point(probes * 5 + i, n)
                            residual = binomial_check(lam, params, x)
                            c.check(residual == 0,
                                    f"residual {residual} at q={q} t={t} "
                                    f"lam={lam} x={x}")
                        probes += 1
        c.detail = f"{probes} shapes x 5 rational points, residual exactly 0"


def test_criterion_06_parameter_inversion(criterion_log):
    with _Criterion(criterion_log, 6, "parameter inversion identity") as c:
        combos = 0
        for q, t in RESIDUAL_QT:
            for n in (1, 2, 3):
                params = MacdonaldParams(q, t, n)
                sampler = RationalSampler(13, Fraction(1, 3), Fraction(4))
                for w in range(0, 5):
                    for lam in partitions_of(w, n):
                        for i in range(3):
                            x = sampler.point(combos * 3 + i, n)
                            lhs, rhs, equal = inversion_check(lam, params, x)
                            c.check(equal,
                                    f"q={q} t={t} lam={lam} x={x}: "
                                    f"{lhs} != {rhs}")
                        combos += 1
        c.detail = f"{combos} shape/parameter combos x 3 points, exact"


def test_criterion_07_lattice_limit_probe(criterion_log):
    with _Criterion(criterion_log, 7, "lattice-scale limit probe") as c:
        rels = []
        for theta in (Fraction(1, 2), Fraction(1), Fraction(2)):
            rows = jack_limit_probe((2, 1), theta, (4, 1), (10, 1000))
            gap_coarse = rows[0][3]
            gap_fine = rows[1][3]
            jack_value = rows[0][2]
            c.check(gap_fine < gap_coarse,
                    f"theta={theta}: gap did not shrink "
                    f"({gap_fine:.3e} vs {gap_coarse:.3e})")
            rel = gap_fine / jack_value
            c.check(rel <= LIMIT_REL_BOUND,
                    f"theta={theta}: relative gap {rel:.3e} "
                    f"> {LIMIT_REL_BOUND}")
            rels.append(rel)
        c.detail = ("k=10 -> k=1000 shrinks; worst relative gap "
                    f"{max(rels):.2e} <= {LIMIT_REL_BOUND}")


def test_criterion_08_weak_majorization(criterion_log):
    with _Criterion(criterion_log, 8, "weak majorization on x >= 1") as c:
        for theta in (0, 1, "inf"):
            for n in (1, 2, 3):
                report = check_weak_majorization(theta, n, 5, samples=100,
                                                 seed=0, x_low=1, x_high=10)
                c.check(report.passed,
                        f"theta={theta} n={n}: "
                        f"{len(report.violations)} violations")
        # necessity of the box: below the all-ones point the containment
        # (1,0) >= (0,0) reverses, 1/2 < 1
        half = (Fraction(1, 2), Fraction(1, 2))
        for theta in (0, 1, "inf"):
            value = omega_jack_eval((1, 0), theta, half)
            c.check(value == Fraction(1, 2),
                    f"necessity example evaluated to {value}")
        c.detail = ("3 parameter values x n<=3, exact; necessity example "
                    "1/2 < 1 at x=(1/2,1/2)")


def test_criterion_09_quadrature_consistency(criterion_log):
    with _Criterion(criterion_log, 9, "quadrature vs exact expansions") as c:
        worst = 0.0
        slowest = 0.0
        for k in (0.5, 1, 2):
            params = HOParams(k, 2)
            bound = CONSISTENCY_TOL_HALF if k == 0.5 else CONSISTENCY_TOL_INT
            for lam in ((1, 0), (2, 0), (2, 1)):
                for x in ((math.log(4), 0.0), (1.0, -1.0)):
                    t0 = time.monotonic()
                    gap = ho_jack_consistency(lam, params, x,
                                              QuadratureConfig(64))
                    dt = time.monotonic() - t0
                    c.check(gap <= bound,
                            f"k={k} lam={lam} x={x}: gap {gap:.2e} > {bound}")
                    c.check(dt <= EVAL_TIME_BUDGET,
                            f"k={k} lam={lam}: {dt:.1f}s per eval")
                    worst = max(worst, gap)
                    slowest = max(slowest, dt)
        t0 = time.monotonic()
        gap3 = ho_jack_consistency((1, 0, 0), HOParams(1, 3),
                                   (0.5, 0.0, -0.5), QuadratureConfig(48))
        dt3 = time.monotonic() - t0
        c.check(gap3 <= CONSISTENCY_TOL_N3,
                f"n=3: gap {gap3:.2e} > {CONSISTENCY_TOL_N3}")
        c.check(dt3 <= EVAL_TIME_BUDGET, f"n=3 eval took {dt3:.1f}s")
        c.detail = (f"worst n=2 gap {worst:.2e}, n=3 gap {gap3:.2e}, "
                    f"slowest eval {max(slowest, dt3):.2f}s")


def test_criterion_10_quadrature_structure(criterion_log):
    with _Criterion(criterion_log, 10, "quadrature structural checks") as c:
        # value 1 at the origin
        for k in (0, 0.5, 1, 2):
            for n in (2, 3):
                params = HOParams(k, n)
                s = tuple(float(2 - i) for i in range(n))
                value = ho_eval(params, s, (0.0,) * n)
                c.check(abs(value - 1.0) <= ORIGIN_TOL,
                        f"k={k} n={n}: F(s,0) = {value}")
        # permutation symmetry in s
        params = HOParams(1.5, 3)
        s = (1.3, -0.2, -0.8)
        x = (0.9, 0.3, -0.6)
        base = ho_eval(params, s, x)
        for perm in ((1, 0, 2), (2, 0, 1), (0, 2, 1)):
            other = ho_eval(params, tuple(s[i] for i in perm), x)
            c.check(abs(other - base) <= SYMMETRY_TOL * abs(base),
                    f"permutation {perm} moved the value")
        # diagonal derivative identity
        for k, n, s, x in ((0.5, 2, (1.0, -1.0), (0.8, -0.3)),
                           (1, 2, (2.0, -0.5), (0.9, -0.4)),
                           (2, 2, (1.5, 0.5), (1.1, 0.2)),
                           (1, 3, (2.0, 0.0, -1.0), (0.7, 0.2, -0.4))):
            res = ho_direction_residual(HOParams(k, n), s, x, 1e-4)
            c.check(res <= RESIDUAL_TOL,
                    f"k={k} n={n}: residual {res:.2e} > {RESIDUAL_TOL}")
        # zero-coupling closed form
        sampler = RationalSampler(17, Fraction(-2), Fraction(2))
        for n in (2, 3):
            params = HOParams(0, n)
            s = tuple(float(1 + i) for i in range(n))
            for i in range(5):
                x = tuple(float(v) for v in sampler.point(i, n))
                via_eval = ho_eval(params, s, x)
                closed = ho_closed_forms(params, s, x)
                c.check(abs(via_eval - closed)
                        <= CLOSED_FORM_TOL * (1.0 + abs(closed)),
                        f"n={n} x={x}: closed-form gap")
        # order and log-convexity sweeps inside the quadrature band; the
        # working tolerance is 10x the two-grid error estimate plus a
        # machine-noise floor, sub-tolerance gaps count as near-misses
        cfg = QuadratureConfig(24)
        near = 0
        for k in (0, 1, 2):
            for n in (2, 3):
                for driver, tag in ((check_schur_convexity, "order"),
                                    (check_log_convexity, "log-convexity")):
                    rep = driver("heckman-opdam", n, 4, samples=10, seed=0,
                                 k=k, cfg=cfg)
                    triples = rep.pairs_checked * rep.samples - rep.skipped
                    c.check(rep.passed,
                            f"{tag} k={k} n={n}: "
                            f"{len(rep.violations)} violations")
                    c.check(triples >= MIN_PROBE_TRIPLES,
                            f"{tag} k={k} n={n}: only {triples} probes")
                    near += rep.near_misses
        c.detail = (f"origin/symmetry/derivative/closed-form pinned; "
                    f"12 sweeps clean, {near} near-misses inside tolerance")


def test_criterion_11_parameter_hunt(criterion_log):
    with _Criterion(criterion_log, 11, "off-lattice violation hunt") as c:
        found = 0
        searched = 0
        for q, t in HUNT_QT:
            for n in (2, 3):
                witness, probes = hunt_violation(q, t, n=n, max_weight=6,
                                                 budget=HUNT_BUDGET, seed=0)
                searched += 1
                c.check(probes <= HUNT_BUDGET,
                        f"q={q} t={t} n={n}: budget exceeded")
                if witness is None:
                    criterion_log.append(
                        f"criterion 11 outcome: none found at q={q} t={t} "
                        f"n={n} within {probes} probes")
                    continue
                found += 1
                params = MacdonaldParams(witness.params["q"],
                                         witness.params["t"], n,
                                         a=witness.params["a"])
                lhs = omega_mac_eval(witness.lam, params, witness.x)
                rhs = omega_mac_eval(witness.mu, params, witness.x)
                c.check(lhs == witness.lhs and rhs == witness.rhs,
                        f"q={q} t={t} n={n}: reported values do not re-verify")
                c.check(lhs < rhs,
                        f"q={q} t={t} n={n}: not a violation on re-check")
                c.check(majorizes(witness.lam, witness.mu),
                        f"q={q} t={t} n={n}: pair not comparable")
                point = ",".join(str(v) for v in witness.x)
                criterion_log.append(
                    f"criterion 11 discovery: q={q} t={t} n={n}: "
                    f"Omega_{witness.lam}({point}) = {lhs} < {rhs} "
                    f"= Omega_{witness.mu} after {probes} probes")
        c.detail = (f"{found} of {searched} parameter points produced "
                    f"exactly certified violations (see discovery lines)")
