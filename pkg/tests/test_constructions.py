"""Twists, sums, products, subalgebras, quotients."""

import pytest

from pbzlat import axioms, catalog
from pbzlat.congruences import Congruence
from pbzlat.constructions import (
    blocks, commutes, cones, gamma, horizontal_sum,
    is_horizontal_sum_of_blocks, ordinal_sum, product, quotient,
    subalgebra_generated, subuniverse_generated, twist1, twist2,
    twist_represent,
)
from pbzlat.core import (
    BoundedLattice, FiniteAlgebra, boolean_lattice, chain_lattice,
    is_isomorphic, is_order_isomorphic,
)


def n5_plus_top():
    # pentagon 0 < a < c < 1, 0 < b < 1, with a fresh top stacked on
    n5 = BoundedLattice.from_covers(
        5, [(0, 1), (1, 3), (0, 2), (3, 4), (2, 4)],
        labels=["0", "a", "b", "c", "1"])
    return ordinal_sum(n5, chain_lattice(1), name="N5+1")


def padded_m3():
    # antiortholattice whose cones miss the swapped antichain pair
    return FiniteAlgebra.from_covers(
        7, [(0, 1), (1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5), (5, 6)],
        kleene=[6, 5, 3, 2, 4, 1, 0],
        brouwer=[6, 0, 0, 0, 0, 0, 0],
        labels=["0", "p", "a", "b", "c", "q", "1"])


def test_twist_sizes_and_labels():
    for m in (2, 3, 4, 5):
        L = chain_lattice(m)
        t1, t2 = twist1(L), twist2(L)
        assert t1.n == 2 * m - 1
        assert t2.n == 2 * m
        # original labels survive on top, dual copy is f(...) below
        assert list(t1.labels[-m:]) == list(L.labels)
        assert all(lab.startswith("f(") for lab in t1.labels[:m - 1])
        assert all(lab.startswith("f(") for lab in t2.labels[:m])
    named = twist1(chain_lattice(2, name="D2"))
    assert named.name == "T1(D2)"
    assert twist2(chain_lattice(2)).name == "T2(chain2)"


def test_twist_small_chains_give_catalog_chains():
    assert is_isomorphic(twist1(chain_lattice(2)), catalog.get("D3"))
    assert is_isomorphic(twist2(chain_lattice(2)), catalog.get("D4"))
    assert is_isomorphic(twist1(chain_lattice(3)), catalog.get("D5"))
    assert is_isomorphic(twist2(chain_lattice(1)), catalog.get("D2"))


def test_twist_of_square_matches_catalog():
    sq = boolean_lattice(4)
    assert is_isomorphic(twist1(sq), catalog.get("T1(2x2)"))
    assert is_isomorphic(twist2(sq), catalog.get("T2(2x2)"))
    assert is_isomorphic(twist1(n5_plus_top()), catalog.get("T1(N5+1)"))


def test_twists_are_antiortholattices():
    inputs = [chain_lattice(2), chain_lattice(4), boolean_lattice(4),
              boolean_lattice(8), n5_plus_top()]
    for L in inputs:
        for T in (twist1(L), twist2(L)):
            rep = axioms.classify(T)
            assert rep.antiortholattice and rep.pbz_star
        fix1 = [a for a in range(twist1(L).n)
                if twist1(L).kleene[a] == a]
        fix2 = [a for a in range(twist2(L).n)
                if twist2(L).kleene[a] == a]
        assert len(fix1) == 1 and fix2 == []


def test_twist1_needs_two_elements():
    with pytest.raises(ValueError):
        twist1(chain_lattice(1))


def test_cones_on_twist():
    A = catalog.get("T1(2x2)")
    cn = cones(A)
    # indices: f1 fa fb o a b 1
    assert cn.negative == frozenset({0, 1, 2, 3})
    assert cn.positive == frozenset({3, 4, 5, 6})
    assert cn.strictly_positive == frozenset({4, 5, 6})
    assert cn.strictly_negative == frozenset({0, 1, 2})
    assert cn.negative | cn.positive == frozenset(range(A.n))


def test_cones_do_not_always_cover():
    cn = cones(catalog.get("MO2"))
    assert cn.negative == frozenset({0})
    assert cn.positive == frozenset({5})


def test_twist_represent_round_trip():
    aols = ["D2", "D3", "D4", "D5", "D6", "D7", "D8",
            "T1(2x2)", "T2(2x2)", "T1(N5+1)"]
    for name in aols:
        A = catalog.get(name)
        rep = twist_represent(A)
        assert rep.ok, name
        fixpoints = [a for a in range(A.n) if A.kleene[a] == a]
        assert rep.index == (1 if fixpoints else 2)
        assert rep.rebuilt.n == A.n
        assert is_isomorphic(rep.rebuilt, A)
        assert sorted(rep.iso) == list(range(A.n))
        want_core = (A.n + 1) // 2 if rep.index == 1 else A.n // 2
        assert rep.core.n == want_core
        # iso really maps A onto the rebuilt twist
        for a in range(A.n):
            for b in range(A.n):
                assert A.le(a, b) == rep.rebuilt.le(rep.iso[a], rep.iso[b])


def test_twist_represent_rejects_non_antiortholattices():
    with pytest.raises(ValueError):
        twist_represent(catalog.get("MO2"))
    with pytest.raises(ValueError):
        twist_represent(catalog.get("B4"))


def test_twist_represent_witness_when_cones_fall_short():
    A = padded_m3()
    assert axioms.classify(A).antiortholattice
    rep = twist_represent(A)
    assert not rep.ok
    assert rep.witness == 2  # a, incomparable with a' = b
    assert rep.rebuilt is None


def test_ordinal_sum_of_chains_is_chain():
    S = ordinal_sum(chain_lattice(2), chain_lattice(2))
    assert S.n == 4
    assert is_order_isomorphic(S, chain_lattice(4))
    assert S.labels[0].startswith("l:") and S.labels[-1].startswith("u:")


def test_ordinal_sum_keeps_summand_order():
    m3 = BoundedLattice.from_covers(
        5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    S = ordinal_sum(m3, chain_lattice(2))
    assert isinstance(S, BoundedLattice)
    assert S.n == 7
    # the pentagon's incomparabilities survive, everything sits below
    # the upper chain
    assert not S.le(1, 2) and not S.le(2, 1)
    for a in range(5):
        assert S.le(a, 5) and S.le(a, 6)


def test_horizontal_sum_matches_catalog():
    pairs = [("B4+D3", ["B4", "D3"]), ("B4+D4", ["B4", "D4"]),
             ("B4+D5", ["B4", "D5"]), ("MO2+D3", ["MO2", "D3"])]
    for target, parts in pairs:
        H = horizontal_sum([catalog.get(p) for p in parts])
        assert is_isomorphic(H, catalog.get(target)), target


def test_horizontal_sum_of_two_squares_is_mo2():
    H = horizontal_sum([catalog.get("B4"), catalog.get("B4")])
    assert H.n == 6
    assert is_isomorphic(H, catalog.get("MO2"))
    # clashing interior labels get a suffix
    assert sorted(H.labels) == ["0", "1", "a", "a.1", "b", "b.1"]


def test_horizontal_sum_errors():
    D3 = catalog.get("D3")
    with pytest.raises(ValueError, match="at least one"):
        horizontal_sum([])
    with pytest.raises(ValueError, match="at most one"):
        horizontal_sum([D3, D3])
    one = FiniteAlgebra([[True]], [0], [0])
    with pytest.raises(ValueError, match="nontrivial"):
        horizontal_sum([catalog.get("B4"), one])
    loose = FiniteAlgebra(chain_lattice(3).leq, [2, 1, 0], [0, 0, 0])
    with pytest.raises(ValueError, match="bounds"):
        horizontal_sum([loose, catalog.get("B4")])


def test_horizontal_sum_single_summand():
    B4 = catalog.get("B4")
    H = horizontal_sum([B4])
    assert H.n == B4.n and is_isomorphic(H, B4)


def test_blocks():
    B4 = catalog.get("B4")
    assert blocks(B4) == [frozenset(range(4))]
    assert blocks(catalog.get("D5")) == [frozenset(range(5))]
    assert blocks(catalog.get("MO2")) == [frozenset({0, 1, 3, 5}),
                                          frozenset({0, 2, 4, 5})]
    assert blocks(catalog.get("B4+D3")) == [frozenset({0, 1, 2, 4}),
                                            frozenset({0, 3, 4})]
    with pytest.raises(ValueError):
        blocks(catalog.get("O6"))  # BZ* yet not PBZ*


def test_blocks_of_boolean_algebra_is_itself():
    for name in ("B8", "B16"):
        A = catalog.get(name)
        assert blocks(A) == [frozenset(range(A.n))]


def test_horizontal_sum_recognition():
    for name in ("B4", "MO2", "D4", "B4+D3", "B4+D5", "MO2+D3", "B8"):
        rep = is_horizontal_sum_of_blocks(catalog.get(name))
        assert rep.holds and rep.by_conditions and rep.agree, name
    rep = is_horizontal_sum_of_blocks(catalog.get("T1(2x2)"))
    assert not rep.holds and not rep.by_conditions and rep.agree
    failed = [k for k, (ok, _) in rep.conditions if not ok]
    assert "dense-comparable" in failed


def test_gamma_and_commutes():
    B8 = catalog.get("B8")
    assert all(commutes(B8, a, b)
               for a in range(B8.n) for b in range(B8.n))
    MO2 = catalog.get("MO2")  # 0 a b A B 1
    assert not commutes(MO2, 1, 2)
    assert gamma(MO2, 1, 2) == MO2.one
    assert commutes(MO2, 1, 3)  # a with its own complement
    assert all(commutes(MO2, 0, x) and commutes(MO2, x, 5)
               for x in range(6))


def test_product():
    P = product(catalog.get("D2"), catalog.get("D2"))
    assert is_isomorphic(P, catalog.get("B4"))
    Q = product(catalog.get("D3"), catalog.get("D3"))
    rep = axioms.classify(Q)
    assert Q.n == 9 and rep.pbz_star and not rep.antiortholattice
    assert len(axioms.sharp_sets(Q).s_k) == 4
    assert Q.labels[0] == "(0,0)"


def test_subalgebra_generated():
    B8 = catalog.get("B8")
    atom = B8.labels.index("a")
    S = subuniverse_generated(B8, [atom])
    assert len(S) == 4
    sub = subalgebra_generated(B8, [atom])
    assert is_isomorphic(sub, catalog.get("B4"))

    D5 = catalog.get("D5")
    assert subuniverse_generated(D5, []) == frozenset({0, 4})
    assert is_isomorphic(subalgebra_generated(D5, []), catalog.get("D2"))

    T = catalog.get("T1(2x2)")
    sub = subalgebra_generated(T, [1])  # fa
    assert is_isomorphic(sub, catalog.get("D4"))


def test_quotient_by_monolith():
    D5 = catalog.get("D5")
    theta = Congruence.from_blocks(5, [(0,), (1, 2, 3), (4,)])
    Q = quotient(D5, theta)
    assert Q.labels == ("{0}", "{a,b,c}", "{1}")
    assert is_isomorphic(Q, catalog.get("D3"))


def test_quotient_rejects_non_congruence():
    D5 = catalog.get("D5")
    bad = Congruence.from_blocks(5, [(0, 1), (2,), (3,), (4,)])
    with pytest.raises(ValueError, match="congruence"):
        quotient(D5, bad)
