from __future__ import annotations

import random

import pytest

from stratkit.poset import Flag, Poset, chain, make_poset
from stratkit.simplicial import from_complex, standard
from stratkit.stratified import StratSSet, empty, nerve, strat_boundary, strat_horn, strat_simplex, trivially

PQ = chain(1, ["p", "q"])


def labelled(facets, vlabel: dict[str, str], P: Poset) -> StratSSet:
    """A stratified complex from facets; vertex order follows the labels."""
    order = {e: i for i, e in enumerate(P.elements)}
    S = from_complex(facets, key=lambda v: (order[vlabel[v]], v))
    return StratSSet(S, P, {x: tuple(vlabel[v] for v in S.vertex_ids(x)) for x in S.ids})


def small_corpus() -> dict[str, StratSSet]:
    """Stratified sets with at most 8 nondegenerate simplices."""
    P3 = chain(2, ["p", "q", "r"])
    V = make_poset(["p", "q", "r"], [("p", "q"), ("p", "r")])
    out: dict[str, StratSSet] = {
        "pt_p": strat_simplex(Flag(PQ, ("p",))),
        "edge_pq": strat_simplex(Flag(PQ, ("p", "q"))),
        "edge_pp": strat_simplex(Flag(PQ, ("p", "p"))),
        "tri_ppq": strat_simplex(Flag(PQ, ("p", "p", "q"))),
        "tri_pqq": strat_simplex(Flag(PQ, ("p", "q", "q"))),
        "horn_ppq_1": strat_horn(Flag(PQ, ("p", "p", "q")), 1).source,
        "horn_pqq_2": strat_horn(Flag(PQ, ("p", "q", "q")), 2).source,
        "bd_pq": strat_boundary(Flag(PQ, ("p", "q"))).source,
        "tri_pqr": strat_simplex(Flag(P3, ("p", "q", "r"))),
        "circle_q": trivially(standard("boundary", 2), PQ, "q"),
        "empty_pq": empty(PQ),
        "nerve_pq": nerve(PQ),
        "vee": labelled([("a", "b"), ("a", "c")], {"a": "p", "b": "q", "c": "r"}, V),
        "two_exits": labelled([("a", "b"), ("a", "c")], {"a": "p", "b": "q", "c": "q"}, PQ),
    }
    for name, X in out.items():
        assert len(X.sset) <= 8, name
    return out


@pytest.fixture(scope="session")
def corpus() -> dict[str, StratSSet]:
    return small_corpus()


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20261015)
