"""The dominant q-lattice and the identities that live on it.

Normalized values Omega_lambda = P_lambda / P_lambda(t^delta) are evaluated
at exact lattice points a * q^(-mu) * t^delta, where the binomial expansion
through shifted (interpolation) polynomials terminates and reproduces the
value with residual exactly zero.  Run directly:

    python3 demos/lattice_and_binomial.py
"""

from fractions import Fraction

from omegalab import (MacdonaldParams, binomial_check, inversion_check,
                      lattice_point, omega_mac_eval, shifted_macdonald)


def main():
    params = MacdonaldParams(Fraction(1, 2), Fraction(1, 3), 2)
    print(f"parameters: q={params.q}, t={params.t}, n={params.n}")

    print("\nlattice points indexed by weakly decreasing integer labels:")
    for label in ((0, 0), (1, 0), (2, 0), (2, 1), (0, -1)):
        point = lattice_point(label, params)
        coords = ", ".join(str(v) for v in point.coords)
        print(f"  mu={label}:  ({coords})")
    print("  shifting a label by (1,1) rescales the point by 1/q")

    print("\nnormalized values at the all-ones point:")
    for lam in ((1, 0), (1, 1), (2, 0), (2, 1)):
        value = omega_mac_eval(lam, params, (1, 1))
        print(f"  Omega_{lam}(1,1) = {value}")
    print("  note 36/17 < 3: the order between (2,0) and (1,1) fails at "
          "(1,1), which is not a lattice point")

    print("\nshifted interpolation polynomials vanish on lower shapes:")
    star = shifted_macdonald((2, 0), params)
    for kappa in ((0, 0), (1, 0), (1, 1), (2, 0)):
        print(f"  P*_(2,0) at label {kappa}: {star.eval_label(kappa)}")

    print("\nbinomial reconstruction residual (exactly 0 off lattice too):")
    for x in ((Fraction(7, 2), Fraction(1, 5)), (Fraction(3), Fraction(2))):
        residual = binomial_check((2, 1), params, x)
        print(f"  x={tuple(str(v) for v in x)}: residual = {residual}")

    print("\nparameter inversion (q,t) -> (1/q,1/t) rescales by a known power:")
    lhs, rhs, equal = inversion_check((2, 1), params, (Fraction(3), Fraction(2)))
    print(f"  lhs = {lhs}")
    print(f"  rhs = {rhs}")
    print(f"  equal: {equal}")


if __name__ == "__main__":
    main()
