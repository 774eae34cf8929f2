"""Order and convexity sweeps across every family.

A sweep enumerates comparable partition pairs, evaluates both sides on a
deterministic sample set, and returns a report whose violations list is
empty exactly when the inequality held everywhere.  Exact families compare
Fractions; the quadrature family gets an error-estimate tolerance.  Run:

    python3 demos/inequality_sweeps.py
"""

import json
from fractions import Fraction

from omegalab import (check_log_convexity, check_schur_convexity,
                      check_weak_majorization, omega_jack_eval)


def outcome(report):
    flag = "ok " if report.passed else "FAIL"
    return (f"[{flag}] pairs={report.pairs_checked:3d} "
            f"samples={report.samples:3d} near={report.near_misses} "
            f"skipped={report.skipped} ({report.elapsed_ms} ms)")


def main():
    print("order under majorization (lambda >= mu pointwise on positive x)")
    print("  muirhead     ",
          outcome(check_schur_convexity("muirhead", 3, 5, samples=40)))
    print("  powersum     ",
          outcome(check_schur_convexity("powersum", 3, 5, samples=40)))
    for theta in (Fraction(0), Fraction(1, 2), Fraction(2), "inf"):
        rep = check_schur_convexity("jack", 3, 5, samples=40, theta=theta)
        print(f"  jack {str(theta):>5}   ", outcome(rep))
    rep = check_schur_convexity("macdonald-lattice", 2, 5,
                                q=Fraction(1, 2), t=Fraction(1, 3))
    print("  q-lattice    ", outcome(rep))
    rep = check_schur_convexity("heckman-opdam", 2, 4, samples=10, k=1.5)
    print("  quadrature   ", outcome(rep))

    print("\nmidpoint log-convexity in the index")
    rep = check_log_convexity("powersum", 3, 5, samples=40)
    print("  powersum     ", outcome(rep))
    rep = check_log_convexity("macdonald-lattice", 2, 5,
                              q=Fraction(2, 3), t=Fraction(1, 2))
    print("  q-lattice    ", outcome(rep))

    print("\nweak majorization drops the equal-weight requirement, "
          "but needs x >= 1:")
    for theta in (0, 1, "inf"):
        rep = check_weak_majorization(theta, 2, 4, samples=40)
        print(f"  jack {str(theta):>5}   ", outcome(rep))
    value = omega_jack_eval((1, 0), 1, (Fraction(1, 2), Fraction(1, 2)))
    print(f"  below the box: Omega_(1,0)(1/2,1/2) = {value} < 1 = "
          f"Omega_(0,0), so the restriction is necessary")

    print("\nreports serialize to a stable json schema:")
    rep = check_schur_convexity("muirhead", 2, 3, samples=5, seed=42)
    print(json.dumps(rep.to_json(), indent=2))


if __name__ == "__main__":
    main()
