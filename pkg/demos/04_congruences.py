#!/usr/bin/env python3
"""Congruence lattices, quotients, subdirect irreducibility.

    python3 demos/04_congruences.py
"""

from pbzlat import catalog
from pbzlat.congruences import (
    agreement_below, all_congruences, is_subdirectly_irreducible,
    principal_congruence, tilde_family_report,
)
from pbzlat.constructions import horizontal_sum, quotient


def blocks_str(A, theta):
    return " ".join("{" + ",".join(A.labels[a] for a in B) + "}"
                    for B in theta.blocks())


def main():
    D5 = catalog.get("D5")
    print("congruences of the five-element Kleene chain D5:")
    for theta in all_congruences(D5):
        print("  " + blocks_str(D5, theta))
    print()

    print("the monolith collapses the whole interior; the quotient is D3:")
    mono = principal_congruence(D5, 1, 2)
    Q = quotient(D5, mono)
    print("  monolith:", blocks_str(D5, mono))
    print("  quotient labels:", ", ".join(Q.labels))
    print()

    print("subdirect irreducibility of the chains:")
    for n in range(2, 9):
        si, mono = is_subdirectly_irreducible(catalog.get(f"D{n}"))
        extra = "" if not si else "  monolith " + \
            blocks_str(catalog.get(f"D{n}"), mono)
        print(f"  D{n}: {si}{extra}")
    print()

    print("horizontal sums: B4 with a short chain stays s.i., with D6")
    print("it does not:")
    for j in (3, 4, 5):
        A = catalog.get(f"B4+D{j}")
        print(f"  B4+D{j}: {is_subdirectly_irreducible(A)[0]}")
    loose = horizontal_sum([catalog.get("B4"), catalog.get("D6")])
    print(f"  B4+D6: {is_subdirectly_irreducible(loose)[0]}")
    print()

    print("the agreement-below-p relations on D5 shrink from the total")
    print("relation at p=0 to the identity at p=1:")
    for p in range(D5.n):
        rep = agreement_below(D5, p)
        print(f"  p={D5.labels[p]}: congruence={rep.is_congruence}"
              f"  {blocks_str(D5, rep.partition)}")
    print()

    fam = tilde_family_report(D5)
    print(f"tilde-coset family on D5: preconditions "
          f"{'ok' if fam.precondition_ok else fam.failed_preconditions}, "
          f"meet relations {fam.meet_relations_ok}, "
          f"join relations {fam.join_relations_ok}, "
          f"one of each trivial {fam.one_of_each_trivial}")


if __name__ == "__main__":
    main()
