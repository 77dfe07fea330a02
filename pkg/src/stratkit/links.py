"""Simplicial homotopy links and the checks built on them.

``hol(X, I)`` is the simplicial set whose ``n``-simplices are the stratified
maps ``Delta^I x Delta^n -> X``. Level ``n`` is enumerated in full
(degenerate simplices included) and each map is matched against the
degeneracies of level ``n - 1``; what remains gets a fresh nondegenerate id.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .homology import homology, smith_normal_form
from .poset import Flag, Poset, flag_name, flags, regular_flags, subdivision
from .simplicial import (
    SimplicialError,
    SimplicialSet,
    Simp,
    SMap,
    _codegen,
    _coface,
    _ident,
    iter_homs,
    pi0,
    product,
    standard,
    yoneda,
)
from .stratified import StratError, StratMap, StratSSet

__all__ = [
    "Hol",
    "hol",
    "hol_map",
    "extended_hol",
    "LinkDiagram",
    "link_diagram",
    "constant_diagram",
    "DecollageReport",
    "decollage_check_pi0",
    "is_simply_connected",
    "EquivVerdict",
    "diagrammatic_equiv_check",
]


def _simplex_op(n: int, op: Sequence[int]) -> SMap:
    """The map ``Delta^k -> Delta^n`` given by a monotone ``op``."""
    D = standard("simplex", n)
    top = D.simp(D.nondeg(n)[0])
    return yoneda(D, D.apply(top, op))


class _Domains:
    """Cached products ``Delta^d x Delta^n`` and the operators between them."""

    _cache: dict[tuple, object] = {}

    @classmethod
    def product(cls, d: int, n: int):
        key = ("p", d, n)
        if key not in cls._cache:
            cls._cache[key] = product(standard("simplex", d), standard("simplex", n))
        return cls._cache[key]

    @classmethod
    def op(cls, d: int, n_from: int, n_to: int, op: tuple[int, ...]) -> SMap:
        """``id x op : Delta^d x Delta^{n_from} -> Delta^d x Delta^{n_to}``."""
        key = ("o", d, n_from, n_to, op)
        if key not in cls._cache:
            src, tgt = cls.product(d, n_from), cls.product(d, n_to)
            left = SMap.identity(src.left)
            cls._cache[key] = _prod_map(left, _simplex_op(n_to, op), src, tgt)
        return cls._cache[key]

    @classmethod
    def vertex_op(cls, d_from: int, d_to: int, n: int, verts: tuple[int, ...]) -> SMap:
        """``iota x id`` for a vertex inclusion ``Delta^{d_from} -> Delta^{d_to}``."""
        key = ("v", d_from, d_to, n, verts)
        if key not in cls._cache:
            src, tgt = cls.product(d_from, n), cls.product(d_to, n)
            right = SMap.identity(src.right)
            cls._cache[key] = _prod_map(_simplex_op(d_to, verts), right, src, tgt)
        return cls._cache[key]


def _prod_map(f: SMap, g: SMap, src, tgt) -> SMap:
    imgs = {pid: tgt.pair(f(sx), g(sy)) for pid, (sx, sy) in src.components.items()}
    return SMap(src.sset, tgt.sset, imgs, check=False)


def _key(dom: SimplicialSet, imgs: Mapping[str, Simp]) -> tuple:
    return tuple(imgs[x] for x in dom.ids)


def _compose(h: SMap, imgs: Mapping[str, Simp], X: SimplicialSet) -> dict[str, Simp]:
    """``phi o h`` where ``phi`` is given by ``imgs``."""
    out = {}
    for x in h.source.ids:
        alpha, y = h.images[x]
        out[x] = X.apply(imgs[y], alpha)
    return out


@dataclass
class Hol:
    """``hol(X, I)`` up to ``dim_cap`` with the maps that define its simplices."""

    sset: SimplicialSet
    source: StratSSet
    flag: tuple[str, ...]
    dim_cap: int
    reps: dict[str, dict[str, Simp]]  # nondegenerate id -> image dictionary
    index: dict[int, dict[tuple, Simp]]  # level -> map key -> simplex of sset

    def lookup(self, n: int, imgs: Mapping[str, Simp]) -> Simp:
        dom = _Domains.product(len(self.flag) - 1, n).sset
        return self.index[n][_key(dom, imgs)]


def hol(X: StratSSet, I: Sequence[str] | Flag, dim_cap: int, *, budget: int | None = None, prefix: str = "") -> Hol:
    entries = tuple(I.entries if isinstance(I, Flag) else I)
    for e in entries:
        X.poset.check(e)
    if not X.poset.is_chain(entries):
        raise StratError(f"{entries} is not a flag")
    d = len(entries) - 1
    S = X.sset
    faces: dict[str, list[Simp]] = {}
    reps: dict[str, dict[str, Simp]] = {}
    index: dict[int, dict[tuple, Simp]] = {}
    # a constant-label vertex restriction keeps the search tight
    by_label: dict[str, list[str]] = {}
    for v in S.nondeg(0):
        by_label.setdefault(X.vertex_label(v), []).append(v)
    proxy = _Hol(faces)
    for n in range(dim_cap + 1):
        pr = _Domains.product(d, n)
        dom = pr.sset
        vlab = {v: entries[int(pr.components[v][0][1])] for v in dom.nondeg(0)}

        def allowed(x: str, c: Simp, _asg: dict, vlab=vlab) -> bool:
            return x not in vlab or X.vertex_label(c[1]) == vlab[x]

        level: dict[tuple, Simp] = {}
        count = 0
        cofaces = [_Domains.op(d, n - 1, n, _coface(n, i)) for i in range(n + 1)] if n else []
        codegs = [_Domains.op(d, n, n - 1, _codegen(n - 1, j)) for j in range(n)] if n else []
        for imgs in iter_homs(dom, S, budget=budget, allowed=allowed):
            key = _key(dom, imgs)
            fs = [index[n - 1][_key(cofaces[i].source, _compose(cofaces[i], imgs, S))] for i in range(n + 1)] if n else []
            simp: Simp | None = None
            for j in range(n):
                # phi is degenerate iff phi = (d_j phi) o (id x sigma^j)
                back = _compose(codegs[j], _restrict_rep(fs[j], proxy, reps, index, n - 1, d, S), S)
                if _key(dom, back) == key:
                    simp = proxy.degen(fs[j], j)
                    break
            if simp is None:
                nid = f"{prefix}{n}:{count}"
                count += 1
                faces[nid] = fs
                reps[nid] = dict(imgs)
                proxy.add(nid, fs)
                simp = (_ident(n), nid)
            level[key] = simp
        index[n] = level
    H = SimplicialSet(faces, check=False)
    return Hol(H, X, entries, dim_cap, reps, index)


class _Hol:
    """Incrementally built simplicial set used while ``hol`` is assembled."""

    def __init__(self, faces: dict[str, list[Simp]]):
        self.faces = faces

    def add(self, nid: str, fs: list[Simp]) -> None:
        self.faces[nid] = fs

    def degen(self, s: Simp, j: int) -> Simp:
        alpha, x = s
        m = len(alpha) - 1
        op = _codegen(m, j)
        return tuple(alpha[t] for t in op), x


def _restrict_rep(
    s: Simp,
    proxy: _Hol,
    reps: dict[str, dict[str, Simp]],
    index: dict[int, dict[tuple, Simp]],
    n: int,
    d: int,
    S: SimplicialSet,
) -> dict[str, Simp]:
    """The image dictionary of the level-``n`` simplex ``s``."""
    alpha, x = s
    base = reps[x]
    if alpha == _ident(n):
        return base
    k = alpha[-1]
    h = _Domains.op(d, n, k, alpha)
    return _compose(h, base, S)


def hol_map(f: StratMap, A: Hol, B: Hol) -> SMap:
    """Post-composition with ``f`` from ``hol(X, I)`` to ``hol(Y, f(I))``."""
    if f.pmap.on_flag(A.flag) != B.flag:
        raise StratError("flag of the target link does not match")
    d = len(A.flag) - 1
    imgs = {}
    for nid, rep in A.reps.items():
        n = A.sset.dim(nid)
        dom = _Domains.product(d, n).sset
        pushed = {x: f.smap(s) for x, s in rep.items()}
        imgs[nid] = B.index[n][_key(dom, pushed)]
    return SMap(A.sset, B.sset, imgs, check=False)


def restriction_map(A: Hol, B: Hol) -> SMap:
    """``phi -> phi o (iota x id)`` from ``hol(X, I)`` to ``hol(X, I')`` with ``I'`` a subflag."""
    pos = []
    j = 0
    for e in B.flag:
        while A.flag[j] != e:
            j += 1
        pos.append(j)
        j += 1
    verts = tuple(pos)
    dA, dB = len(A.flag) - 1, len(B.flag) - 1
    imgs = {}
    S = A.source.sset
    for nid, rep in A.reps.items():
        n = A.sset.dim(nid)
        h = _Domains.vertex_op(dB, dA, n, verts)
        pulled = _compose(h, rep, S)
        imgs[nid] = B.index[n][_key(h.source, pulled)]
    return SMap(A.sset, B.sset, imgs, check=False)


def extended_hol(X: StratSSet, n: int, dim_cap: int, *, budget: int | None = None) -> tuple[SimplicialSet, dict[tuple[str, ...], Hol]]:
    """Disjoint union of ``hol(X, J)`` over all flags ``J`` of length ``n + 1``."""
    parts: dict[tuple[str, ...], Hol] = {}
    faces: dict[str, list[Simp]] = {}
    for J in flags(X.poset, n):
        if len(J) != n + 1:
            continue
        h = hol(X, J, dim_cap, budget=budget, prefix=flag_name(J.entries) + "/")
        parts[J.entries] = h
        for x in h.sset.ids:
            faces[x] = list(h.sset.faces_of(x))
    return SimplicialSet(faces, check=False), parts


# -- diagrams ----------------------------------------------------------------------------


@dataclass
class LinkDiagram:
    index: Poset
    values: dict[tuple[str, ...], SimplicialSet]
    restrictions: dict[tuple[tuple[str, ...], tuple[str, ...]], SMap]
    dim_cap: int
    links: dict[tuple[str, ...], Hol] = field(default_factory=dict, repr=False)

    def check_functorial(self) -> list[tuple]:
        """Triples ``I > J > K`` where restriction does not compose."""
        bad = []
        for (I, J), r1 in self.restrictions.items():
            for (J2, K), r2 in self.restrictions.items():
                if J2 != J or (I, K) not in self.restrictions:
                    continue
                if r1.then(r2).images != self.restrictions[(I, K)].images:
                    bad.append((I, J, K))
        return bad


def _subflags(I: tuple[str, ...]) -> list[tuple[str, ...]]:
    from itertools import combinations

    return [c for r in range(1, len(I)) for c in combinations(I, r)]


def link_diagram(X: StratSSet, max_flag_len: int, dim_cap: int, *, budget: int | None = None) -> LinkDiagram:
    links = {I.entries: hol(X, I, dim_cap, budget=budget) for I in regular_flags(X.poset, max_flag_len)}
    restr = {}
    for I, h in links.items():
        for K in _subflags(I):
            restr[(I, K)] = restriction_map(h, links[K])
    sd = subdivision(X.poset)
    keep = [flag_name(I) for I in links]
    return LinkDiagram(sd.subposet(keep), {I: h.sset for I, h in links.items()}, restr, dim_cap, links)


def constant_diagram(P: Poset, max_flag_len: int, value: SimplicialSet, overrides: Mapping[tuple[str, ...], SimplicialSet] | None = None) -> LinkDiagram:
    """Diagram with the same value everywhere; overridden entries map trivially.

    Restriction maps out of an overridden entry send everything to the first
    vertex of ``value``; this only makes sense for one-vertex values or empty
    overrides.
    """
    overrides = dict(overrides or {})
    vals = {}
    for I in regular_flags(P, max_flag_len):
        vals[I.entries] = overrides.get(I.entries, value)
    restr = {}
    for I, A in vals.items():
        for K in _subflags(I):
            B = vals[K]
            if A is B:
                restr[(I, K)] = SMap.identity(A)
            else:
                v = B.simp(B.nondeg(0)[0]) if B.nondeg(0) else None
                imgs = {}
                for x in A.ids:
                    if v is None:
                        raise SimplicialError("cannot map a nonempty entry to an empty one")
                    imgs[x] = ((0,) * (A.dim(x) + 1), v[1])
                restr[(I, K)] = SMap(A, B, imgs, check=False)
    sd = subdivision(P)
    return LinkDiagram(sd.subposet([flag_name(I) for I in vals]), vals, restr, 0)


# -- pi_1 and H_1 tools -------------------------------------------------------------------


def _component_of(X: SimplicialSet) -> dict[str, int]:
    out = {}
    for i, c in enumerate(pi0(X)):
        for v in c:
            out[v] = i
    return out


def is_simply_connected(X: SimplicialSet, vertices: Sequence[str] | None = None) -> bool:
    """Sufficient test that the component on ``vertices`` has trivial ``pi_1``.

    Edges off a spanning tree generate ``pi_1``; a 2-simplex whose boundary
    word mentions exactly one surviving generator, exactly once, kills it.
    Returns False when this greedy procedure stalls (which is inconclusive).
    """
    comps = pi0(X)
    if vertices is None:
        if len(comps) != 1:
            return len(comps) == 0
        vertices = comps[0]
    vs = set(vertices)
    edges = [e for e in X.nondeg(1) if X.vertex_ids(e)[0] in vs]
    parent = {v: v for v in vs}

    def find(v: str) -> str:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    alive: set[str] = set()
    for e in edges:
        a, b = X.vertex_ids(e)
        ra, rb = find(a), find(b)
        if ra == rb:
            alive.add(e)
        else:
            parent[ra] = rb
    if not alive:
        return True
    tris = [t for t in X.nondeg(2) if X.vertex_ids(t)[0] in vs]
    words = []
    for t in tris:
        w: dict[str, int] = {}
        for i, (alpha, y) in enumerate(X.faces_of(t)):
            if alpha == (0, 1):
                w[y] = w.get(y, 0) + (1 if i != 1 else -1)
        words.append(w)
    changed = True
    while alive and changed:
        changed = False
        for w in words:
            live = [(e, c) for e, c in w.items() if e in alive]
            if len(live) == 1 and abs(live[0][1]) == 1:
                alive.discard(live[0][0])
                changed = True
    return not alive


def _chain_push(f: SMap, chain: Mapping[str, int]) -> dict[str, int]:
    out: dict[str, int] = {}
    for x, c in chain.items():
        alpha, y = f.images[x]
        if alpha == _ident(len(alpha) - 1):
            out[y] = out.get(y, 0) + c
    return {k: v for k, v in out.items() if v}


def _h1_cokernel_class(
    B: SimplicialSet, comp: Sequence[str], sub_chains: list[dict[str, int]]
) -> tuple:
    """Data to compute classes in ``H_1(B_0) / span(sub_chains)``."""
    Bc = B.sub(B.closure(x for x in B.ids if B.vertex_ids(x)[0] in set(comp)))
    H = homology(Bc, 1)
    cols = [H.coordinates(c)[0] for c in sub_chains]
    r = H.rank
    M = np.array(cols, dtype=np.int64).T if cols and r else np.zeros((r, 0), dtype=np.int64)
    snf = smith_normal_form(M.reshape(r, len(cols)) if r else np.zeros((0, len(cols)), dtype=np.int64))
    return Bc, H, snf


def _coker_class(H, snf, chain: Mapping[str, int]) -> tuple:
    v = np.array(H.coordinates(dict(chain))[0], dtype=object)
    w = snf.U.astype(object) @ v if len(v) else v
    out = []
    for i, x in enumerate(w):
        if i < snf.rank:
            d = snf.diag[i]
            if d > 1:
                out.append(int(x) % d)
        else:
            out.append(int(x))
    return tuple(out)


def _coker_size(snf, rank: int) -> float:
    free = rank - snf.rank
    if free > 0:
        return float("inf")
    size = 1
    for d in snf.diag:
        size *= d
    return size


# -- decollage -----------------------------------------------------------------------------


@dataclass
class DecollageReport:
    holds_at_pi0: bool | None  # None means inconclusive
    failures: list[tuple[str, ...]]
    inconclusive: list[tuple[str, ...]]
    details: dict[tuple[str, ...], str]

    @property
    def verdict(self) -> str:
        return {True: "holds", False: "fails", None: "inconclusive"}[self.holds_at_pi0]


def _edge_path_between(X: SimplicialSet, a: str, b: str) -> dict[str, int]:
    """1-chain of some edge path from ``a`` to ``b`` (BFS in the 1-skeleton)."""
    if a == b:
        return {}
    adj: dict[str, list[tuple[str, str, int]]] = {}
    for e in X.nondeg(1):
        u, v = X.vertex_ids(e)
        adj.setdefault(u, []).append((v, e, 1))
        adj.setdefault(v, []).append((u, e, -1))
    prev: dict[str, tuple[str, str, int]] = {}
    seen = {a}
    queue = [a]
    while queue:
        u = queue.pop(0)
        if u == b:
            break
        for v, e, s in adj.get(u, []):
            if v not in seen:
                seen.add(v)
                prev[v] = (u, e, s)
                queue.append(v)
    if b not in seen:
        raise SimplicialError(f"{a!r} and {b!r} are not connected")
    chain: dict[str, int] = {}
    v = b
    while v != a:
        u, e, s = prev[v]
        chain[e] = chain.get(e, 0) + s
        v = u
    return chain


def _add(c1: Mapping[str, int], c2: Mapping[str, int], sign: int = 1) -> dict[str, int]:
    out = dict(c1)
    for k, v in c2.items():
        out[k] = out.get(k, 0) + sign * v
    return {k: v for k, v in out.items() if v}


def decollage_check_pi0(D: LinkDiagram) -> DecollageReport:
    failures: list[tuple[str, ...]] = []
    inconclusive: list[tuple[str, ...]] = []
    details: dict[tuple[str, ...], str] = {}
    for I in sorted(D.values, key=lambda t: (len(t), t)):
        n = len(I) - 1
        if n < 2:
            continue
        pairs = [(I[i], I[i + 1]) for i in range(n)]
        bases = [(I[i],) for i in range(1, n)]
        for key in pairs + bases:
            if key not in D.values:
                raise SimplicialError(f"diagram entry {flag_name(key)} missing")
        top = D.values[I]
        comp_pair = [_component_of(D.values[p]) for p in pairs]
        comp_base = [_component_of(D.values[b]) for b in bases]
        n_pair = [len(pi0(D.values[p])) for p in pairs]

        def base_comp(i: int, side: str, c: int) -> int:
            # component c of pairs[i] restricted to bases[i-1] (side "l") or bases[i] ("r")
            P = D.values[pairs[i]]
            v = next(u for u in P.nondeg(0) if comp_pair[i][u] == c)
            if side == "r":
                r = D.restrictions[(pairs[i], bases[i])]
                return comp_base[i][r.images[v][1]]
            r = D.restrictions[(pairs[i], bases[i - 1])]
            return comp_base[i - 1][r.images[v][1]]

        # fiber product of pi0 sets
        tuples: list[tuple[int, ...]] = [(c,) for c in range(n_pair[0])]
        for i in range(1, n):
            tuples = [
                t + (c,)
                for t in tuples
                for c in range(n_pair[i])
                if base_comp(i - 1, "r", t[-1]) == base_comp(i, "l", c)
            ]
        image: dict[tuple[int, ...], list[int]] = {}
        top_comps = pi0(top)
        reps_top = [c[0] for c in top_comps]
        for k, v in enumerate(reps_top):
            t = tuple(
                comp_pair[i][D.restrictions[(I, pairs[i])].images[v][1]] for i in range(n)
            )
            image.setdefault(t, []).append(k)
        if set(image) != set(tuples):
            failures.append(I)
            details[I] = "comparison misses components of the fiber product"
            continue
        used_bases: list[tuple[int, int]] = []
        for i in range(n - 1):
            for t in tuples:
                used_bases.append((i, base_comp(i, "r", t[i])))
        all_sc = all(
            is_simply_connected(
                D.values[bases[i]], [u for u, cc in comp_base[i].items() if cc == c]
            )
            for i, c in set(used_bases)
        )
        injective = all(len(v) == 1 for v in image.values())
        if all_sc:
            if injective:
                details[I] = "bijective on components; bases simply connected"
            else:
                failures.append(I)
                details[I] = "two components over the same class of the homotopy pullback"
            continue
        if n != 2:
            inconclusive.append(I)
            details[I] = "non-simply-connected base beyond two factors"
            continue
        verdict = _two_factor_h1(D, I, pairs, bases[0], comp_pair, comp_base[0], image, reps_top)
        if verdict is False:
            failures.append(I)
            details[I] = "H1 cokernel separates more classes than components"
        else:
            inconclusive.append(I)
            details[I] = "H1 shadow consistent; double cosets not decided"
    if failures:
        ok: bool | None = False
    elif inconclusive:
        ok = None
    else:
        ok = True
    return DecollageReport(ok, failures, inconclusive, details)


def _two_factor_h1(D, I, pairs, base, comp_pair, comp_base, image, reps_top) -> bool | None:
    A, C, B = D.values[pairs[0]], D.values[pairs[1]], D.values[base]
    rA, rC = D.restrictions[(pairs[0], base)], D.restrictions[(pairs[1], base)]
    rtA, rtC = D.restrictions[(I, pairs[0])], D.restrictions[(I, pairs[1])]
    for t, ks in image.items():
        a_vs = [u for u, c in comp_pair[0].items() if c == t[0]]
        c_vs = [u for u, c in comp_pair[1].items() if c == t[1]]
        b0 = rA.images[a_vs[0]][1]
        comp = [u for u, c in comp_base.items() if c == comp_base[b0]]
        gens = []
        for src, r, vs in ((A, rA, a_vs), (C, rC, c_vs)):
            sub = src.sub(src.closure(x for x in src.ids if src.vertex_ids(x)[0] in set(vs)))
            for g in homology(sub, 1).generators:
                gens.append(_chain_push(r, g))
        Bc, H, snf = _h1_cokernel_class(B, comp, gens)
        size = _coker_size(snf, H.rank)
        if size > len(ks):
            return False
        classes = set()
        a_ref = rtA.images[reps_top[ks[0]]][1]
        c_ref = rtC.images[reps_top[ks[0]]][1]
        for k in ks:
            v = reps_top[k]
            pa = _edge_path_between(A, a_ref, rtA.images[v][1])
            pc = _edge_path_between(C, c_ref, rtC.images[v][1])
            loop = _add(_chain_push(rA, pa), _chain_push(rC, pc), -1)
            classes.add(_coker_class(H, snf, loop))
        if len(classes) < len(ks):
            return None
    return None


# -- equivalence checks ----------------------------------------------------------------------


@dataclass
class EquivVerdict:
    pi0_bijective: bool
    h1_iso: bool | None
    flags_failing: list[tuple[str, ...]]
    entries: dict[str, dict] = field(default_factory=dict)
    mode: str = "poset"
    max_flag_len: int = 0
    dim_cap: int = 0

    @property
    def passed(self) -> bool:
        return self.pi0_bijective and self.h1_iso is not False

    def summary(self) -> str:
        if self.passed:
            inv = "pi0, H1" if self.h1_iso else "pi0"
            return f"consistent up to ({inv}, L={self.max_flag_len}, dim_cap={self.dim_cap})"
        return "refuted at " + ", ".join(flag_name(f) for f in self.flags_failing)


def _compare(f: SMap, with_h1: bool = True) -> dict:
    A, B = f.source, f.target
    ca, cb = _component_of(A), _component_of(B)
    na, nb = len(pi0(A)), len(pi0(B))
    img = {}
    for v in A.nondeg(0):
        img.setdefault(ca[v], set()).add(cb[f.images[v][1]])
    pi0_ok = na == nb and len({next(iter(s)) for s in img.values()}) == nb and all(len(s) == 1 for s in img.values())
    if not with_h1:
        # without 2-simplices H_1 of the truncation is not H_1 of the link
        return {
            "source_size": len(A),
            "target_size": len(B),
            "pi0": [na, nb],
            "h1": None,
            "pi0_bijective": bool(pi0_ok),
            "h1_iso": None,
        }
    HA, HB = homology(A, 1), homology(B, 1)
    h1_ok = HA.rank == HB.rank and sorted(HA.torsion) == sorted(HB.torsion)
    if h1_ok and HA.rank:
        M = np.array([HB.coordinates(_chain_push(f, g))[0] for g in HA.generators], dtype=object).T
        s = smith_normal_form(M)
        h1_ok = s.rank == HA.rank and all(d == 1 for d in s.diag)
    return {
        "source_size": len(A),
        "target_size": len(B),
        "pi0": [na, nb],
        "h1": [HA.descriptor(), HB.descriptor()],
        "pi0_bijective": bool(pi0_ok),
        "h1_iso": bool(h1_ok),
    }


def diagrammatic_equiv_check(
    f: StratMap,
    max_flag_len: int,
    dim_cap: int,
    *,
    mode: str = "poset",
    budget: int | None = None,
) -> EquivVerdict:
    """Semi-decision: compare ``pi0`` and ``H_1`` of all induced link maps.

    ``H_1`` needs 2-simplices, so with ``dim_cap < 2`` it is left unassessed
    (``h1_iso`` is ``None``) and only ``pi0`` can refute.
    """
    X, Y = f.source, f.target
    with_h1 = dim_cap >= 2
    pi0_ok = True
    h1_ok: bool | None = True if with_h1 else None
    failing: list[tuple[str, ...]] = []
    entries: dict[str, dict] = {}
    if mode == "poset":
        if not f.pmap.is_iso():
            raise StratError("poset-preserving mode needs an isomorphism of posets")
        for I in regular_flags(X.poset, max_flag_len):
            A = hol(X, I, dim_cap, budget=budget)
            B = hol(Y, f.pmap.on_flag(I.entries), dim_cap, budget=budget)
            rep = _compare(hol_map(f, A, B), with_h1)
            entries[flag_name(I.entries)] = rep
            if not rep["pi0_bijective"] or rep["h1_iso"] is False:
                failing.append(I.entries)
            pi0_ok &= rep["pi0_bijective"]
            if with_h1:
                h1_ok = h1_ok and rep["h1_iso"]
    elif mode == "extended":
        for n in range(max_flag_len):
            SA, partsA = extended_hol(X, n, dim_cap, budget=budget)
            SB, partsB = extended_hol(Y, n, dim_cap, budget=budget)
            imgs = {}
            for J, hA in partsA.items():
                hB = partsB[f.pmap.on_flag(J)]
                m = hol_map(f, hA, hB)
                imgs.update(m.images)
            rep = _compare(SMap(SA, SB, imgs, check=False), with_h1)
            entries[f"[{n}]"] = rep
            if not rep["pi0_bijective"] or rep["h1_iso"] is False:
                failing.append(tuple(str(i) for i in range(n + 1)))
            pi0_ok &= rep["pi0_bijective"]
            if with_h1:
                h1_ok = h1_ok and rep["h1_iso"]
    else:
        raise StratError(f"unknown mode {mode!r}")
    return EquivVerdict(pi0_ok, h1_ok, failing, entries, mode, max_flag_len, dim_cap)
