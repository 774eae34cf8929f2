"""Constructive counterexamples: separation witnesses and the hunt.

When two equal-weight shapes are incomparable in the majorization order,
no inequality can hold between their means in both directions; the witness
builder produces an exact point showing the requested direction fails.
The hunt runs the other way around: fix the parameters, leave the lattice,
and search for a certified violation of the lattice order.  Run:

    python3 demos/witnesses_and_hunt.py
"""

from fractions import Fraction

from omegalab import find_witness, hunt_violation, majorizes


def show(witness):
    x = ",".join(str(v) for v in witness.x)
    print(f"  x = ({x})")
    print(f"  value of {witness.lam}: {witness.lhs}")
    print(f"  value of {witness.mu}: {witness.rhs}")
    print(f"  margin: {witness.margin}")


def main():
    lam, mu = (4, 1, 1), (3, 3, 0)
    print(f"{lam} vs {mu}: majorizes either way? "
          f"{majorizes(lam, mu)} / {majorizes(mu, lam)}")

    print("\nmuirhead separation for the incomparable pair:")
    show(find_witness(lam, mu, "muirhead"))

    print("\nthe same pair separates in the jack family at theta=1/2:")
    show(find_witness(lam, mu, "jack", theta=Fraction(1, 2)))

    print("\nand on the q-lattice by picking a label:")
    w = find_witness(lam, mu, "macdonald-lattice",
                     q=Fraction(1, 2), t=Fraction(1, 3))
    show(w)
    print(f"  (constructed from label {w.params['label']})")

    print("\nhunt: leave the lattice at q=1/2, t=1/3 and search for an "
          "order violation")
    witness, probes = hunt_violation(Fraction(1, 2), Fraction(1, 3), n=2,
                                     max_weight=6, budget=100000)
    if witness is None:
        print(f"  none found within {probes} probes")
    else:
        print(f"  found after {probes} probe(s), certified exactly:")
        show(witness)
        print("  so the order genuinely needs the lattice: the all-ones "
              "point already breaks it")

    print("\nrestricting the same search to lattice points finds nothing:")
    witness, probes = hunt_violation(Fraction(1, 2), Fraction(1, 3), n=2,
                                     max_weight=6, budget=100000,
                                     lattice_only=True)
    print(f"  witness: {witness}  (after exhausting {probes} lattice probes)")


if __name__ == "__main__":
    main()
