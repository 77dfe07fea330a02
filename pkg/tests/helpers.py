"""Random instances and brute-force oracles shared by the test modules."""

from __future__ import annotations

import random
from itertools import combinations

from stratkit.poset import Poset, make_poset
from stratkit.simplicial import from_complex
from stratkit.stratified import StratSSet


def random_poset(r: random.Random, max_size: int = 4) -> Poset:
    n = r.randint(1, max_size)
    els = [f"p{i}" for i in range(n)]
    pairs = [(els[i], els[j]) for i, j in combinations(range(n), 2) if r.random() < 0.55]
    return make_poset(els, pairs)


def random_strat(r: random.Random, max_poset: int = 4, max_dim: int = 3, max_vertices: int = 7) -> StratSSet:
    """A random stratified complex; facets only join vertices with comparable labels."""
    P = random_poset(r, max_poset)
    nv = r.randint(1, max_vertices)
    lab = {f"v{i}": r.choice(P.elements) for i in range(nv)}
    verts = sorted(lab)
    facets = []
    for _ in range(r.randint(1, 8)):
        size = r.randint(1, min(max_dim + 1, nv))
        pick = r.sample(verts, size)
        if all(P.leq(lab[a], lab[b]) or P.leq(lab[b], lab[a]) for a, b in combinations(pick, 2)):
            facets.append(pick)
    if not facets:
        facets = [[verts[0]]]
    idx = {e: i for i, e in enumerate(P.elements)}
    S = from_complex(facets, key=lambda v: (idx[lab[v]], v))
    return StratSSet(S, P, {x: tuple(lab[v] for v in S.vertex_ids(x)) for x in S.ids})


def oracle_connected_nonempty(X: StratSSet) -> bool:
    S = X.sset
    parent = {v: v for v in S.nondeg(0)}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for e in S.nondeg(1):
        a, b = S.vertex_ids(e)
        if X.vertex_label(a) == X.vertex_label(b):
            parent[find(a)] = find(b)
    for p in X.poset.elements:
        roots = {find(v) for v in S.nondeg(0) if X.vertex_label(v) == p}
        if len(roots) != 1:
            return False
    return True


def oracle_weakly_frontier(X: StratSSet) -> bool:
    """Order generated by edge labels (plus reflexivity) equals the order of P."""
    S, P = X.sset, X.poset
    if {X.vertex_label(v) for v in S.nondeg(0)} != set(P.elements):
        return False
    rel = {(p, p) for p in P.elements}
    for e in S.nondeg(1):
        a, b = S.vertex_ids(e)
        rel.add((X.vertex_label(a), X.vertex_label(b)))
    for k in P.elements:
        for i in P.elements:
            for j in P.elements:
                if (i, k) in rel and (k, j) in rel:
                    rel.add((i, j))
    return rel == set(P.le)


def random_flag_complex(r: random.Random, max_poset: int = 4) -> StratSSet:
    """Unions of stratified simplices on regular flags, sometimes with a doubled vertex.

    These hit refined instances over larger posets far more often than
    ``random_strat``.
    """
    from stratkit.poset import regular_flags

    P = random_poset(r, max_poset)
    chains = [f.entries for f in regular_flags(P) if len(f.entries) <= 4]
    pick = [c for c in chains if r.random() < 0.6] or [chains[0]]
    copies = {p: 1 for p in P.elements}
    if r.random() < 0.3:
        copies[r.choice(P.elements)] = 2
    facets = []
    for c in pick:
        facets.append([f"{p}.{r.randrange(copies[p])}" for p in c])
    idx = {e: i for i, e in enumerate(P.elements)}
    S = from_complex(facets, key=lambda v: (idx[v.split(".")[0]], v))
    return StratSSet(S, P, {x: tuple(v.split(".")[0] for v in S.vertex_ids(x)) for x in S.ids})
