from __future__ import annotations

from itertools import product as cartesian

import pytest

from stratkit.simplicial import (
    EdgePath,
    SimplicialError,
    SimplicialSet,
    SMap,
    delete_vertex_star,
    disjoint_union,
    from_complex,
    hom_enumerate,
    pi0,
    product,
    pushout,
    standard,
    surjection_to_word,
    word_to_surjection,
)


def fvec(X: SimplicialSet) -> list[int]:
    return [len(X.nondeg(n)) for n in range(X.max_dim + 1)]


def naive_homs(X: SimplicialSet, Y: SimplicialSet) -> set[tuple]:
    """Every assignment of nondegenerate simplices, filtered by the face relations."""
    xs = X.ids
    pools = [Y.simplices(X.dim(x)) for x in xs]
    out = set()
    for choice in cartesian(*pools):
        f = dict(zip(xs, choice))
        ok = True
        for x in xs:
            if X.dim(x) == 0:
                continue
            for i, (alpha, y) in enumerate(X.faces_of(x)):
                if Y.face(f[x], i) != Y.apply(f[y], alpha):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(tuple(f[x] for x in xs))
    return out


def test_standard_sizes():
    assert len(standard("simplex", 2)) == 7
    assert len(standard("boundary", 2)) == 6
    assert len(standard("horn", 2, 1)) == 5
    with pytest.raises(SimplicialError):
        standard("horn", 2, 3)


def test_degeneracy_words_roundtrip():
    for alpha in [(0, 0, 1), (0, 1, 1, 2), (0,), (0, 0, 0)]:
        assert word_to_surjection(surjection_to_word(alpha), max(alpha)) == alpha


def test_simplicial_identities_on_delta2():
    D = standard("simplex", 2)
    top = D.simp("0,1,2")
    # d_i d_j = d_{j-1} d_i for i < j
    for j in range(3):
        for i in range(j):
            assert D.face(D.face(top, j), i) == D.face(D.face(top, i), j - 1)
    # d_i s_j rules
    for j in range(3):
        s = D.degen(top, j)
        assert D.face(s, j) == top and D.face(s, j + 1) == top


def test_product_delta1_squared():
    P = product(standard("simplex", 1), standard("simplex", 1), dim_cap=2)
    assert fvec(P.sset) == [4, 5, 2]
    P.sset.validate()


def test_product_units():
    Y = standard("boundary", 2)
    P = product(standard("simplex", 0), Y)
    assert fvec(P.sset) == fvec(Y)
    Q = product(standard("boundary", 1), standard("simplex", 0))
    assert fvec(Q.sset) == [2]


def test_pushout_examples():
    D = standard("simplex", 2)
    H = standard("horn", 2, 1)
    inc = SMap(H, D, {x: D.simp(x) for x in H.ids})
    po = pushout(inc, SMap.identity(H))
    assert fvec(po.sset) == [3, 3, 1]
    # two intervals glued crosswise along their endpoints
    I = standard("simplex", 1)
    B = standard("boundary", 1)
    f = SMap(B, I, {"0": I.simp("0"), "1": I.simp("1")})
    g = SMap(B, I, {"0": I.simp("1"), "1": I.simp("0")})
    circ = pushout(f, g).sset
    assert fvec(circ) == [2, 2] and len(pi0(circ)) == 1
    E = SimplicialSet({})
    X = standard("boundary", 2)
    assert fvec(pushout(SMap(E, E, {}), SMap(E, X, {})).sset) == fvec(X)


def test_pushout_universal_property():
    I = standard("simplex", 1)
    B = standard("boundary", 1)
    f = SMap(B, I, {"0": I.simp("0"), "1": I.simp("1")})
    g = SMap(B, I, {"0": I.simp("1"), "1": I.simp("0")})
    po = pushout(f, g)
    for T in [standard("simplex", 1), standard("boundary", 2), standard("simplex", 2)]:
        cocones = sum(
            1
            for u in hom_enumerate(I, T)
            for v in hom_enumerate(I, T)
            if all(f.then(u).images[b] == g.then(v).images[b] for b in B.ids)
        )
        assert cocones == len(hom_enumerate(po.sset, T))


def test_hom_counts():
    assert len(hom_enumerate(standard("simplex", 1), standard("simplex", 1))) == 3
    for n in range(4):
        assert len(hom_enumerate(standard("simplex", 0), standard("simplex", n))) == n + 1
    assert len(hom_enumerate(standard("boundary", 1), standard("simplex", 0))) == 1


@pytest.mark.parametrize(
    "X,Y",
    [
        (standard("simplex", 1), standard("boundary", 2)),
        (standard("horn", 2, 1), standard("simplex", 2)),
        (standard("boundary", 2), standard("simplex", 1)),
        (standard("simplex", 2), standard("simplex", 1)),
        (standard("boundary", 1), standard("horn", 2, 0)),
    ],
)
def test_homs_match_naive_oracle(X, Y):
    fast = {tuple(f.images[x] for x in X.ids) for f in hom_enumerate(X, Y)}
    assert fast == naive_homs(X, Y)


def test_pi0_examples():
    assert len(pi0(standard("boundary", 1))) == 2
    assert all(len(pi0(standard("simplex", n))) == 1 for n in range(4))
    assert pi0(SimplicialSet({})) == []


def test_delete_vertex_star():
    cone = from_complex([("0", "1", "c"), ("1", "2", "c"), ("0", "2", "c")])
    assert fvec(delete_vertex_star(cone, "c")) == [3, 3]
    assert fvec(delete_vertex_star(standard("boundary", 1), "0")) == [1]
    rest = delete_vertex_star(standard("simplex", 2), "1")
    assert rest.nondeg(1) == ["0,2"] and fvec(rest) == [2, 1]


def test_edge_paths():
    X = standard("boundary", 2)
    p = EdgePath.through(X, ["0", "1", "2", "0"])
    assert p.is_closed() and p.vertices == ["0", "1", "2", "0"]
    assert p.reversed().vertices == ["0", "2", "1", "0"]
    assert (p + p).chain() == {k: 2 * v for k, v in p.chain().items()}
    with pytest.raises(SimplicialError):
        EdgePath.through(standard("boundary", 1), ["0", "1"])


def test_disjoint_union_and_validation():
    Z, i, j = disjoint_union(standard("simplex", 1), standard("simplex", 1))
    assert fvec(Z) == [4, 2] and len(pi0(Z)) == 2
    with pytest.raises(SimplicialError):
        SimplicialSet({"e": [((0,), "a"), ((0,), "b")], "a": []})
