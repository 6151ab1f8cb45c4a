#!/usr/bin/env python3
"""Tour of the finite combinatorics underneath everything else: the
sixteen 2-characteristics, their parity split, the orbit classification
of triples and quadruples, and the two characters of the integral
symplectic group that the construction leans on."""

import random

from azy5 import (EVEN_CHARS, GENERATORS, M0, ODD_CHARS, act_char, act_set,
                  chi_p, classify_quadruple, even_quadruples, even_triples,
                  format_char, pair_sign, psi_p, random_word, translation)
from azy5.symplectic import FULL


def main():
    print("characteristics")
    print("  even:", " ".join(format_char(m) for m in EVEN_CHARS))
    print("  odd: ", " ".join(format_char(m) for m in ODD_CHARS))

    print("\ntriples of even characteristics, classified by the parity of")
    print("the sub-triples' XOR sums:")
    for tag in ("minus", "plus"):
        print(f"  {tag}: {len(even_triples(tag))}")

    print("\nquadruples:")
    for tag in ("minus", "star", "plus"):
        print(f"  {tag}: {len(even_quadruples(tag))}")
    print("  the coordinate quadruple", sorted(M0), "is",
          classify_quadruple(tuple(M0)))

    print("\nthe group permutes characteristics; a random length-6 word:")
    rng = random.Random(12)
    g = random_word(FULL, rng, 6)
    for m in sorted(M0):
        print(f"  {format_char(m)} -> {format_char(act_char(g, m))}")
    print("  image of the coordinate quadruple:", sorted(act_set(g, M0)),
          "->", classify_quadruple(tuple(act_set(g, M0))))

    print("\npermutation of the six odd characteristics induced by each")
    print("generator, its sign character chi_P, and the pair sign:")
    names = "JABC"
    for name, gen in zip(names, GENERATORS):
        perm = psi_p(gen)
        try:
            ps = pair_sign(gen)
        except ValueError:
            ps = "pairs not preserved"
        print(f"  {name}: perm {perm}  chi_P {chi_p(gen):+d}  pair sign {ps}")

    eta = translation(((1, 0), (0, 0)))
    print("\nthe translation by E11 has chi_P =", chi_p(eta),
          "(it flips one matched pair in place)")


if __name__ == "__main__":
    main()
