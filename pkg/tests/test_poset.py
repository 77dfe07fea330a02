from __future__ import annotations

from itertools import product as cartesian

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stratkit.poset import (
    Flag,
    PosetError,
    PosetMap,
    antichain,
    chain,
    depth,
    flag_name,
    flags,
    make_poset,
    poset_maps,
    poset_pushout,
    product_poset,
    regular_flags,
    subdivision,
)


def random_poset(draw_pairs, n):
    els = [f"e{i}" for i in range(n)]
    # only i < j pairs, so the closure is antisymmetric
    return make_poset(els, [(els[i], els[j]) for i, j in draw_pairs if i < j])


posets = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=6).map(lambda ps: random_poset(ps, n))
)


def brute_leq_closure(els, pairs):
    le = {(a, a) for a in els} | set(pairs)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in list(cartesian(le, le)):
            if b == c and (a, d) not in le:
                le.add((a, d))
                changed = True
    return le


def test_make_poset_examples():
    P = make_poset(["p", "q"], [("p", "q")])
    assert P.lt("p", "q") and not P.leq("q", "p")
    A = make_poset(["a", "b"])
    assert not A.leq("a", "b") and not A.leq("b", "a")
    with pytest.raises(PosetError):
        make_poset(["a", "b"], [("a", "b"), ("b", "a")])


@given(posets)
@settings(max_examples=60, deadline=None)
def test_closure_matches_bruteforce(P):
    pairs = [(a, b) for a, b in P.covers()]
    assert set(P.le) == brute_leq_closure(P.elements, pairs)


def test_flags_examples():
    assert [f.entries for f in flags(chain(0), 2)] == [("0",), ("0", "0"), ("0", "0", "0")]
    got = {f.entries for f in flags(chain(1, ["p", "q"]), 1)}
    assert got == {("p",), ("q",), ("p", "p"), ("p", "q"), ("q", "q")}
    assert {f.entries for f in flags(antichain(["a", "b"]), 1)} == {("a",), ("b",), ("a", "a"), ("b", "b")}


@given(posets, st.integers(0, 3))
@settings(max_examples=60, deadline=None)
def test_flag_count_bruteforce(P, n):
    expected = sum(
        1
        for k in range(n + 1)
        for seq in cartesian(P.elements, repeat=k + 1)
        if all(P.leq(seq[i], seq[i + 1]) for i in range(k))
    )
    fl = flags(P, n)
    assert len(fl) == expected == len({f.entries for f in fl})


def test_subdivision_examples():
    sd1 = subdivision(chain(1))
    assert len(sd1) == 3
    assert sd1.leq("[0]", "[0<1]") and sd1.leq("[1]", "[0<1]")
    assert len(subdivision(chain(2))) == 7
    sdA = subdivision(antichain(["a", "b"]))
    assert len(sdA) == 2 and not sdA.leq("[a]", "[b]")


@given(posets)
@settings(max_examples=40, deadline=None)
def test_subdivision_counts_chains(P):
    chains = [
        c for k in range(1, len(P) + 1) for c in cartesian(P.elements, repeat=k) if all(P.lt(c[i], c[i + 1]) for i in range(k - 1))
    ]
    assert len(subdivision(P)) == len(chains) == len(regular_flags(P))


def test_depth():
    P = chain(1, ["p", "q"])
    assert depth(P, "p") == 1 and depth(P, "q") == 0
    assert depth(chain(2), "0") == 2


def test_poset_pushout_examples():
    I = chain(1, ["a", "b"])
    two = antichain(["x", "y"])
    f = PosetMap(two, I, {"x": "a", "y": "b"})
    g = PosetMap(two, I, {"x": "b", "y": "a"})
    assert len(poset_pushout(f, g).poset) == 1
    idm = PosetMap.identity(I)
    assert len(poset_pushout(idm, idm).poset) == 2
    E = make_poset([])
    po = poset_pushout(PosetMap(E, chain(0, ["p"]), {}), PosetMap(E, chain(0, ["q"]), {}))
    assert len(po.poset) == 2 and not po.poset.leq(*po.poset.elements)


@given(posets, posets)
@settings(max_examples=25, deadline=None)
def test_pushout_universal_property(B, C):
    # glue along the first element of each
    A = chain(0, ["*"])
    f = PosetMap(A, B, {"*": B.elements[0]})
    g = PosetMap(A, C, {"*": C.elements[0]})
    po = poset_pushout(f, g)
    T = chain(2)
    n_cocones = sum(
        1 for u in poset_maps(B, T) for v in poset_maps(C, T) if u(B.elements[0]) == v(C.elements[0])
    )
    n_maps = len(poset_maps(po.poset, T))
    assert n_cocones == n_maps
    for u in poset_maps(po.poset, T):
        assert po.left.then(u).assignment[B.elements[0]] == po.right.then(u).assignment[C.elements[0]]


def test_poset_maps_and_product():
    assert len(poset_maps(chain(1), chain(1))) == 3
    P, names = product_poset(chain(1), chain(1))
    assert len(P) == 4 and P.leq(names[("0", "0")], names[("1", "1")])


def test_flag_validation_and_names():
    P = chain(1, ["p", "q"])
    with pytest.raises(PosetError):
        Flag(P, ("q", "p"))
    assert flag_name(("p", "q")) == "[p<q]" and flag_name(("p", "p", "q")) == "[p,p,q]"
