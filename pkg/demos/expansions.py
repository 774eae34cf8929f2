"""Tour of the exact expansion engines.

Every polynomial here is a dictionary of monomial-basis coefficients with
Fraction entries, so everything printed is exact.  Run directly:

    python3 demos/expansions.py
"""

from fractions import Fraction

from omegalab import (JackParam, MacdonaldParams, expand_classical,
                      jack_expand, macdonald_expand, serialize_poly)


def show(title, poly):
    print(f"\n{title}")
    for key, coeff in poly.items():
        print(f"  m({','.join(str(e) for e in key)})  *  {coeff}")


def main():
    print("classical families on three variables")
    show("e_(2,1) = e_2 * e_1", expand_classical("elementary", (2, 1), 3))
    show("p_(2,1) = p_2 * p_1", expand_classical("powersum", (2, 1), 3))

    print("\njack expansions interpolate between those families")
    for theta in (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(5)):
        p = jack_expand((2, 0), theta)
        print(f"  theta={theta}:  m(2,0) + {p.coefficient((1, 1))} m(1,1)")
    print("  the mixing coefficient is 2*theta/(theta+1), watch it sweep "
          "0 -> 2 as theta grows")

    print("\ntheta = 1 collapses to schur polynomials (kostka numbers):")
    show("jack (2,1,0) at theta=1", jack_expand((2, 1, 0), 1))

    print("\nmacdonald polynomials carry two parameters")
    params = MacdonaldParams(Fraction(1, 2), Fraction(1, 3), 2)
    p = macdonald_expand((2, 0), params)
    show("P_(2,0) at q=1/2, t=1/3", p)
    print("  the m(1,1) coefficient is (1+q)(1-t)/(1-qt) = 6/5 here")

    equal = MacdonaldParams(Fraction(1, 2), Fraction(1, 2), 3)
    show("q = t collapses to schur again: P_(2,1,0) at q=t=1/2",
         macdonald_expand((2, 1, 0), equal))

    print("\nserialized form (stable, cache-friendly):")
    print(serialize_poly(p))


if __name__ == "__main__":
    main()
