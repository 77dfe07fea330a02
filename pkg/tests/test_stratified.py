from __future__ import annotations

import random

import pytest
from helpers import oracle_connected_nonempty, oracle_weakly_frontier, random_strat

from stratkit.poset import Flag, PosetMap, antichain, chain, make_poset, regular_flags
from stratkit.simplicial import SMap, from_complex, hom_enumerate, standard
from stratkit.stratified import (
    StratError,
    StratMap,
    StratSSet,
    classify_horn,
    empty,
    frontier_report,
    is_refined,
    pullback,
    pushforward,
    refine,
    restrict,
    strat_boundary,
    strat_homs,
    strat_horn,
    strat_mapping_cylinder,
    strat_product,
    strat_simplex,
    stratum,
    tensor,
    trivially,
)

PQ = chain(1, ["p", "q"])


def fvec(S):
    return [len(S.nondeg(n)) for n in range(S.max_dim + 1)]


def test_standard_stratified_objects():
    D = strat_simplex(Flag(PQ, ("p", "q")))
    assert fvec(D.sset) == [2, 1] and D.labels["0,1"] == ("p", "q")
    bd = strat_boundary(Flag(PQ, ("p", "p", "q"))).source
    assert len(bd.sset) == 6 and sorted(bd.vertex_label(v) for v in bd.sset.nondeg(0)) == ["p", "p", "q"]
    assert len(strat_horn(Flag(chain(2), ("0", "1", "2")), 1).source.sset) == 5


def test_classify_horn():
    C1, C2 = chain(1), chain(2)
    t = classify_horn(Flag(C1, ("0", "1")), 0)
    assert not t.admissible and not t.inner
    t = classify_horn(Flag(C1, ("0", "0", "1")), 1)
    assert t.admissible and t.inner
    t = classify_horn(Flag(C2, ("0", "1", "2")), 1)
    assert t.inner and not t.admissible


def test_labels_are_validated():
    S = standard("simplex", 1)
    with pytest.raises(StratError):
        StratSSet(S, PQ, {"0": ("q",), "1": ("p",), "0,1": ("q", "p")})
    with pytest.raises(StratError):
        StratSSet(S, PQ, {"0": ("p",), "1": ("q",)})


def test_pushforward_and_pullback_examples():
    D = strat_simplex(Flag(PQ, ("p", "q")))
    pt = chain(0)
    f = PosetMap(PQ, pt, {"p": "0", "q": "0"})
    Y = pushforward(f, D)
    assert set(Y.labels.values()) == {("0",), ("0", "0")}
    inc = PosetMap(chain(0, ["p"]), PQ, {"p": "p"})
    pb = pullback(inc, D)
    assert fvec(pb.obj.sset) == [1]
    # adjunction: both hom sets have three elements
    I = trivially(standard("simplex", 1), pt, "0")
    lhs = strat_homs(pushforward(f, D), I, PosetMap.identity(pt))
    rhs = strat_homs(D, pullback(f, I).obj, PosetMap.identity(PQ))
    assert len(lhs) == len(rhs) == 3


def test_stratum_and_restrict():
    D = strat_simplex(Flag(PQ, ("p", "q")))
    assert fvec(stratum(D, "p")) == [1]
    assert fvec(stratum(strat_simplex(Flag(PQ, ("p", "p", "q"))), "p")) == [2, 1]
    C2 = chain(2)
    R = restrict(strat_simplex(Flag(C2, ("0", "1", "2"))), ["0", "1"])
    assert fvec(R.sset) == [2, 1] and len(R.poset) == 2


def test_tensor_and_products():
    T = tensor(strat_simplex(Flag(chain(0, ["p"]), ("p",))), standard("simplex", 1))
    assert fvec(T.sset) == [2, 1] and set(T.labels.values()) <= {("p",), ("p", "p")}
    D = strat_simplex(Flag(PQ, ("p", "q")))
    U = tensor(D, standard("simplex", 0))
    assert fvec(U.sset) == [2, 1]
    sp = strat_product(strat_simplex(Flag(chain(1), ("0", "1"))), strat_simplex(Flag(chain(1), ("0", "1"))))
    assert len(sp.obj.poset) == 4
    sp.obj.validate()


def test_refine_examples():
    D = strat_simplex(Flag(PQ, ("p", "q")))
    assert refine(D).pmap.is_iso() and is_refined(D)
    B = trivially(standard("boundary", 1), chain(0), "0")
    r = refine(B)
    assert len(r.source.poset) == 2 and not r.source.poset.leq(*r.source.poset.elements)
    assert not is_refined(B)
    Q = trivially(standard("simplex", 0), PQ, "q")
    r = refine(Q)
    assert len(r.source.poset) == 1 and not r.pmap.is_iso()
    assert not is_refined(empty(chain(0)))


def test_frontier_examples():
    D = strat_simplex(Flag(PQ, ("p", "q")))
    fr = frontier_report(D)
    assert fr.weakly_frontier and fr.frontier
    P3 = chain(2, ["p", "q", "r"])
    E = StratSSet(standard("simplex", 1), P3, {"0": ("p",), "1": ("r",), "0,1": ("p", "r")})
    assert not frontier_report(E).weakly_frontier
    S = from_complex([("a",), ("b",)])
    U = StratSSet(S, PQ, {"a": ("p",), "b": ("q",)})
    fr = frontier_report(U)
    assert not fr.weakly_frontier and fr.closure_incidence == frozenset({("p", "p"), ("q", "q")})


def test_simplices_of_regular_flags_are_refined_and_frontier():
    for P in (chain(2), make_poset(["a", "b", "c"], [("a", "b"), ("a", "c")])):
        for I in regular_flags(P):
            X = strat_simplex(I)
            X = restrict(X, I.entries)
            assert is_refined(X) and frontier_report(X).frontier


def test_refine_idempotent_and_keeps_sset():
    r = random.Random(11)
    for _ in range(120):
        X = random_strat(r)
        Xr = refine(X).source
        assert Xr.sset is X.sset
        assert refine(Xr).pmap.is_iso()
        Xr.validate()


def test_refined_iff_frontier_sample():
    r = random.Random(5)
    for _ in range(150):
        X = random_strat(r)
        fr = frontier_report(X)
        assert fr.weakly_frontier == oracle_weakly_frontier(X)
        assert is_refined(X) == (oracle_connected_nonempty(X) and fr.weakly_frontier)


def test_mapping_cylinder_examples():
    a = strat_simplex(Flag(chain(0, ["x"]), ("x",)))
    b = strat_simplex(Flag(chain(0, ["y"]), ("y",)))
    f = StratMap(SMap(a.sset, b.sset, {"0": b.sset.simp("0")}), PosetMap(a.poset, b.poset, {"x": "y"}), a, b)
    M = strat_mapping_cylinder(f)
    assert fvec(M.obj.sset) == [2, 1] and len(M.obj.poset) == 2
    (e,) = M.obj.sset.nondeg(1)
    lo, hi = M.obj.labels[e]
    assert M.obj.poset.lt(lo, hi)
    M.obj.validate()
    M.from_target.validate()
    M.from_source.validate()


def test_mapping_cylinder_of_empty_source():
    Y = strat_simplex(Flag(PQ, ("p", "q")))
    E = empty(make_poset([]))
    f = StratMap(SMap(E.sset, Y.sset, {}), PosetMap(E.poset, PQ, {}), E, Y)
    M = strat_mapping_cylinder(f)
    assert fvec(M.obj.sset) == fvec(Y.sset) and len(M.obj.poset) == 2
    # over a nonempty source poset the cylinder gains empty strata
    E2 = empty(PQ)
    g = StratMap(SMap(E2.sset, Y.sset, {}), PosetMap.identity(PQ), E2, Y)
    M2 = strat_mapping_cylinder(g)
    assert fvec(M2.obj.sset) == fvec(Y.sset) and len(M2.obj.poset) == 4
    assert M2.from_target.pmap.then(PosetMap.identity(M2.obj.poset)).source == PQ


def test_strat_homs_counts_against_plain_homs():
    # over a one-element poset every simplicial map is stratified
    pt = chain(0)
    A = trivially(standard("horn", 2, 1), pt, "0")
    B = trivially(standard("simplex", 2), pt, "0")
    assert len(strat_homs(A, B)) == len(hom_enumerate(A.sset, B.sset))
    # a strictly increasing label admits only the identity-like maps
    D = strat_simplex(Flag(PQ, ("p", "q")))
    assert len(strat_homs(D, D, PosetMap.identity(PQ))) == 1
    assert len(strat_homs(D, trivially(standard("simplex", 1), antichain(["z"]), "z"))) == 3
