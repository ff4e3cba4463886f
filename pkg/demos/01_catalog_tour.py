#!/usr/bin/env python3
"""Tour of the named algebras: sizes, class flags, sharp sets, blocks.

Run from the repository root after installing the package:

    python3 demos/01_catalog_tour.py
"""

from pbzlat import catalog, axioms, constructions


def fmt_set(A, elems):
    return "{" + ",".join(A.labels[i] for i in sorted(elems)) + "}"


def main():
    print("catalog entries:", ", ".join(catalog.names()))
    print()

    shown = ("antiortholattice", "orthomodular", "bz-star", "pbz-star")
    print(f"{'name':<10} {'n':>3}  " + "  ".join(f"{k:<16}" for k in shown))
    for name in catalog.names():
        A = catalog.get(name)
        flags = axioms.classify(A).flags()
        row = "  ".join(f"{str(flags[k]):<16}" for k in shown)
        print(f"{name:<10} {A.n:>3}  {row}")
    print()

    print("sharp sets tell the classes apart.  On an antiortholattice")
    print("only the bounds are Kleene-sharp; on a Boolean algebra every")
    print("element is.")
    for name in ("D5", "B4", "B4+D3", "O6"):
        A = catalog.get(name)
        s = axioms.sharp_sets(A)
        print(f"  {name:<8} S_K={fmt_set(A, s.s_k):<14}"
              f" S_<>={fmt_set(A, s.s_diamond):<14}"
              f" S_B={fmt_set(A, s.s_b)}")
    print()

    print("blocks of the horizontal sums (maximal Boolean or chain")
    print("subalgebras):")
    for name in ("B4+D3", "MO2+D3", "MO2"):
        A = catalog.get(name)
        blks = constructions.blocks(A)
        print(f"  {name:<8} " + " ".join(fmt_set(A, b) for b in blks))
    print()

    print("the benzene ring O6 is the standard example of a BZ* algebra")
    print("that is not paraorthomodular:")
    rep = axioms.classify(catalog.get("O6"))
    print(f"  bz-star={rep.flags()['bz-star']}"
          f" paraorthomodular={rep.paraorthomodular}"
          f" witness={dict(rep.witnesses).get('paraorthomodular')}")


if __name__ == "__main__":
    main()
