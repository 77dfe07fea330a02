from __future__ import annotations

from collections import Counter

import pytest

from stratkit.homology import homology
from stratkit.poset import Flag, PosetMap, chain, make_poset
from stratkit.simplicial import SMap, from_complex, pi0, standard
from stratkit.factorization import (
    builtin_generators,
    cff_report,
    circle_pushout,
    cofibrancy_report,
    fibrancy_certificate,
    has_rlp,
    horn_decomposition_verify,
    replay,
    soa_factorize,
    valid_horn_decomposition_inputs,
)
from stratkit.stratified import (
    StratError,
    StratMap,
    StratSSet,
    empty,
    nerve,
    strat_boundary,
    strat_homs,
    strat_horn,
    strat_simplex,
    trivially,
)

PQ = chain(1, ["p", "q"])
PT = chain(0, ["*"])


def names(gens):
    return [g.name for g in gens]


def naive_rlp(f: StratMap, g: StratMap) -> tuple[bool, int]:
    """Enumerate both legs independently, then search every candidate diagonal."""
    X, Y, A, B = f.source, f.target, g.source, g.target
    squares = 0
    for v in strat_homs(B, Y):
        for u in strat_homs(A, X):
            if g.then(v).smap.images != u.then(f).smap.images:
                continue
            if g.then(v).pmap.assignment != u.then(f).pmap.assignment:
                continue
            squares += 1
            lift = any(
                g.then(h).smap.images == u.smap.images
                and g.then(h).pmap.assignment == u.pmap.assignment
                and h.then(f).smap.images == v.smap.images
                and h.then(f).pmap.assignment == v.pmap.assignment
                for h in strat_homs(B, X)
            )
            if not lift:
                return False, squares
    return True, squares


def collapse_to(X: StratSSet, Y: StratSSet, pm: PosetMap) -> StratMap:
    (m,) = strat_homs(X, Y, pm)
    return m


def test_builtin_generator_examples():
    G = builtin_generators("D_P", PQ, 1)
    assert names(G.cofibrations) == ["boundary[p]", "boundary[q]", "boundary[p,p]", "boundary[p<q]", "boundary[q,q]"]
    # admissible horns repeat the entry at k
    assert names(G.acyclic) == ["horn[p,p]_0", "horn[p,p]_1", "horn[q,q]_0", "horn[q,q]_1"]
    CR = builtin_generators("CR", None, 1)
    assert names(CR.cofibrations) == ["boundary[0]", "boundary[0<1]"] and CR.acyclic == []
    Dg = builtin_generators("D_global", None, 1)
    assert {"empty[->0]", "empty[0+0->0<1]"} <= set(names(Dg.cofibrations))
    # inner but not admissible: only the categorical set has it
    assert "horn[0<1<2]_1" in names(builtin_generators("C_P", chain(2), 2).acyclic)
    assert "horn[0<1<2]_1" not in names(builtin_generators("D_P", chain(2), 2).acyclic)
    for kind in ("D_P", "C_P", "D_global", "C_global", "DR", "CR"):
        builtin_generators(kind, PQ, 2).validate()
    with pytest.raises(StratError):
        builtin_generators("bogus")
    with pytest.raises(StratError):
        builtin_generators("D_P")


def test_rlp_point_fills_everything():
    X = strat_simplex(Flag(chain(0), ("0",)))
    f = StratMap.identity(X)
    for J in (("0", "0"), ("0", "0", "0")):
        for k in range(len(J)):
            assert has_rlp(f, strat_horn(Flag(chain(0), J), k)).holds


def test_rlp_exit_edge_example():
    # Two points over p<q mapping to a point: the horn already contains its exit
    # edge, so every square factors through a constant stratum and lifts.
    X = StratSSet(from_complex([("a",), ("b",)]), PQ, {"a": ("p",), "b": ("q",)})
    T = strat_simplex(Flag(PT, ("*",)))
    f = collapse_to(X, T, PosetMap(PQ, PT, {"p": "*", "q": "*"}))
    g = strat_horn(Flag(PQ, ("p", "p", "q")), 1)
    r = has_rlp(f, g)
    assert r.holds and (r.holds, r.squares) == naive_rlp(f, g)
    assert has_rlp(f, g, scope="fixed").squares == 0


def test_rlp_fails_without_filler():
    Lam = strat_horn(Flag(PQ, ("p", "p", "q")), 1)
    N = nerve(PQ)
    f = collapse_to(Lam.source, N, PosetMap.identity(PQ))
    r = has_rlp(f, Lam, scope="fixed")
    assert not r.holds and r.witness is not None
    assert naive_rlp(f, Lam)[0] is False


@pytest.mark.parametrize(
    "J,k",
    [(("p", "p"), 0), (("p", "q"), 1), (("p", "p", "q"), 1), (("p", "q", "q"), 2)],
)
def test_rlp_matches_naive_oracle(corpus, J, k):
    g = strat_horn(Flag(PQ, J), k) if len(J) > 2 else strat_boundary(Flag(PQ, J))
    N = nerve(PQ)
    for name in ("edge_pq", "two_exits", "horn_ppq_1", "bd_pq", "tri_ppq"):
        X = corpus[name]
        f = collapse_to(X, N, PosetMap.identity(PQ))
        r = has_rlp(f, g)
        assert (r.holds, r.squares) == naive_rlp(f, g), name


def test_soa_trivial_when_lifts_exist():
    X = strat_simplex(Flag(PQ, ("p", "q")))
    F = soa_factorize(StratMap.identity(X), builtin_generators("D_P", PQ, 2), 3, 2, family="acyclic")
    assert F.log == [] and F.complete and F.i.smap.images == StratMap.identity(X).smap.images


def test_soa_attaches_skeleton():
    D = strat_simplex(Flag(PQ, ("p", "q")))
    E = empty(PQ)
    f = StratMap(SMap(E.sset, D.sset, {}), PosetMap.identity(PQ), E, D)
    G = builtin_generators("CR", None, 1)
    F = soa_factorize(f, G, 3, 1)
    assert F.complete and F.check_commutes()
    assert Counter(a.generator for a in F.log) == {"boundary[0]": 2, "boundary[0<1]": 1}
    assert [len(F.Z.sset.nondeg(n)) for n in (0, 1)] == [2, 1]
    Z, i = replay(E, G, F.log)
    assert sorted(Z.sset.ids) == sorted(F.Z.sset.ids) and i.smap.images == F.i.smap.images


def test_soa_against_admissible_horns():
    Lam = strat_horn(Flag(PQ, ("p", "p", "q")), 1)
    G = builtin_generators("D_P", PQ, 2)
    F = soa_factorize(Lam, G, 3, 2, family="acyclic")
    assert F.complete and F.check_commutes()
    assert [a.generator for a in F.log] == ["horn[p,p,q]_1"]
    # one filler recovers the simplex
    assert F.q.is_mono() and len(F.Z.sset) == len(Lam.target.sset)
    Z, i = replay(Lam.source, G, F.log, family="acyclic")
    assert sorted(Z.sset.ids) == sorted(F.Z.sset.ids) and i.smap.images == F.i.smap.images


def test_soa_keeps_growing_without_a_filler_in_the_target():
    Lam = strat_horn(Flag(PQ, ("p", "p", "q")), 1)
    f = collapse_to(Lam.source, nerve(PQ), PosetMap.identity(PQ))
    G = builtin_generators("D_P", PQ, 2)
    F = soa_factorize(f, G, 2, 2, family="acyclic")
    assert F.check_commutes() and F.stages_run == 2
    assert all(a.generator in set(names(G.acyclic)) for a in F.log)
    # each filler adds a new p-edge, which poses new horn problems
    assert not F.complete


def test_soa_residual_empty_means_lifting():
    Lam = strat_horn(Flag(PQ, ("p", "p", "q")), 1)
    G = builtin_generators("D_P", PQ, 2)
    F = soa_factorize(Lam, G, 5, 2)
    assert F.complete and F.check_commutes()
    for g in G.cofibrations:
        assert has_rlp(F.q, g.map, scope="fixed").holds, g.name


def test_soa_residual_when_stages_run_out():
    D = strat_simplex(Flag(PQ, ("p", "q")))
    E = empty(PQ)
    f = StratMap(SMap(E.sset, D.sset, {}), PosetMap.identity(PQ), E, D)
    F = soa_factorize(f, builtin_generators("CR", None, 1), 1, 1)
    # the edge can only be attached once both endpoints exist
    assert F.stages_run == 1 and not F.complete and F.check_commutes()


def test_fibrancy_examples():
    pt = strat_simplex(Flag(chain(0), ("0",)))
    for cap in (1, 2, 3):
        assert fibrancy_certificate(pt, "categorical", cap).passed
    X = strat_boundary(Flag(PQ, ("p", "p", "q"))).source
    r = fibrancy_certificate(X, "diagrammatic", 2)
    assert not r.passed and (("p", "p", "q"), 1) in r.failing_horns
    assert r.witness is not None and r.witness[:2] == r.failing_horns[0]
    n = fibrancy_certificate(nerve(PQ), "categorical", 3)
    assert n.passed and n.horns_checked > 0


def test_cofibrancy_examples():
    c = cofibrancy_report(strat_simplex(Flag(PQ, ("p", "q"))), "refined")
    assert c.cofibrant and len(c.cells) == 3
    c = cofibrancy_report(trivially(standard("boundary", 1), chain(0), "0"), "refined")
    assert not c.cofibrant and c.blocking["split_strata"] == {"0": ["0#1", "0#2"]}
    c = cofibrancy_report(empty(make_poset([])), "unrefined")
    assert c.cofibrant and c.cells == []


def test_cff_examples():
    assert cff_report(strat_simplex(Flag(PQ, ("p", "q"))), 2).passed
    X = StratSSet(from_complex([("a",), ("b",)]), PQ, {"a": ("p",), "b": ("q",)})
    assert not cff_report(X, 2).frontier_connected
    H = strat_horn(Flag(PQ, ("p", "q", "q")), 1).source
    c = cff_report(H, 2)
    assert not c.passed and c.inner_filling.witness[:2] == (("p", "q", "q"), 1)


def test_horn_decomposition_example():
    P = chain(2, ["p", "q1", "q2"])
    hd = horn_decomposition_verify(Flag(P, ("p", "p", "q1", "q2")), 1)
    assert hd.passed
    assert [s.horn for s in hd.steps] == ["Lambda^[p<q1<q2]_1", "Lambda^[p,p,q1,q2]_2", "Lambda^[p,p,q2,q2]_1"]
    assert hd.size_B == hd.size_A + 6
    assert all(s.inner and s.pushout_iso for s in hd.steps)


def test_horn_decomposition_rejects_bad_inputs():
    P = chain(2, ["p", "q1", "q2"])
    J = Flag(P, ("p", "p", "q1", "q2"))
    for k in (0, 3):
        with pytest.raises(StratError):
            horn_decomposition_verify(J, k)
    with pytest.raises(StratError):
        horn_decomposition_verify(Flag(PQ, ("p", "p", "q")), 1)


def test_horn_decomposition_sweep_small():
    cases = [c for m in (1, 2) for c in valid_horn_decomposition_inputs(chain(m), 4)]
    assert cases
    for J, k in cases:
        assert horn_decomposition_verify(J, k).passed, (J.entries, k)


def test_circle_pushout():
    c = circle_pushout()
    assert c.poset_is_singleton and c.legs_commute
    S = c.circle.sset
    assert len(pi0(S)) == 1
    H = homology(S, 1)
    assert H.rank == 1 and H.torsion == []
