#!/usr/bin/env python3
"""Twist doubles and the cone representation of antiortholattices.

    python3 demos/03_twists.py
"""

from pbzlat import axioms, catalog
from pbzlat.constructions import cones, twist1, twist2, twist_represent
from pbzlat.core import chain_lattice, boolean_lattice, is_isomorphic


def main():
    print("twist1 stacks a dual copy of L minus its bottom under L,")
    print("twist2 keeps the whole copy.  Both always come out as")
    print("antiortholattices:")
    for L, tag in ((chain_lattice(3), "3-chain"),
                   (boolean_lattice(4), "2x2")):
        for f in (twist1, twist2):
            T = f(L)
            rep = axioms.classify(T)
            print(f"  {f.__name__}({tag}): n={T.n}"
                  f" antiortholattice={rep.antiortholattice}"
                  f" labels={','.join(T.labels)}")
    print()

    print("twists of chains give back the Kleene chains:")
    print("  twist1(3-chain) iso D5:",
          bool(is_isomorphic(twist1(chain_lattice(3)), catalog.get("D5"))))
    print("  twist2(2-chain) iso D4:",
          bool(is_isomorphic(twist2(chain_lattice(2)), catalog.get("D4"))))
    print()

    print("the cones N = {x <= x'} and P = {x' <= x} of T1(2x2):")
    A = catalog.get("T1(2x2)")
    cn = cones(A)
    lab = lambda S: "{" + ",".join(A.labels[i] for i in sorted(S)) + "}"
    print(f"  negative={lab(cn.negative)} positive={lab(cn.positive)}")
    print()

    print("when the cones cover the universe the algebra is a twist of")
    print("its own positive cone; twist_represent rebuilds it and checks")
    print("the isomorphism:")
    for name in ("D6", "T1(2x2)", "T1(N5+1)"):
        rep = twist_represent(catalog.get(name))
        print(f"  {name}: index={rep.index} core n={rep.core.n}"
              f" rebuilt={rep.rebuilt.name}")
    print()

    print("coverage can fail: pad the diamond M3 with a point below and")
    print("above and swap two atoms with the involution.  Still an")
    print("antiortholattice, but a and b sit beside their images:")
    from pbzlat.core import FiniteAlgebra
    A = FiniteAlgebra.from_covers(
        7, [(0, 1), (1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5), (5, 6)],
        kleene=[6, 5, 3, 2, 4, 1, 0],
        brouwer=[6, 0, 0, 0, 0, 0, 0],
        labels=["0", "p", "a", "b", "c", "q", "1"])
    print("  antiortholattice:", axioms.classify(A).antiortholattice)
    rep = twist_represent(A)
    print(f"  representable: {rep.ok}, first uncovered element:"
          f" {A.labels[rep.witness]}")


if __name__ == "__main__":
    main()
