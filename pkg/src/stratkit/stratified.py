"""Stratified simplicial sets: simplicial sets with a map to the nerve of a poset."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .poset import (
    Flag,
    Poset,
    PosetMap,
    chain,
    make_poset,
    poset_maps,
    poset_pushout,
    product_poset,
)
from .simplicial import (
    SimplicialSet,
    Simp,
    SMap,
    _ident,
    _sname,
    iter_homs,
    pi0,
    product,
    product_map,
    pushout,
    standard,
)

__all__ = [
    "StratError",
    "StratSSet",
    "StratMap",
    "strat_simplex",
    "strat_boundary",
    "strat_horn",
    "HornType",
    "classify_horn",
    "trivially",
    "pushforward",
    "pullback",
    "stratum",
    "restrict",
    "tensor",
    "strat_product",
    "StratPushout",
    "strat_pushout",
    "strat_homs",
    "refine",
    "is_refined",
    "FrontierReport",
    "frontier_report",
    "strat_mapping_cylinder",
    "MappingCylinder",
    "nerve",
    "empty",
    "strat_product_map",
    "StratProduct",
    "Pullback",
]


class StratError(ValueError):
    pass


@dataclass(frozen=True)
class StratSSet:
    """A simplicial set with a flag label on every nondegenerate simplex."""

    sset: SimplicialSet
    poset: Poset
    labels: Mapping[str, tuple[str, ...]]
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.check:
            self.validate()

    def validate(self) -> None:
        X, P = self.sset, self.poset
        for x in X.ids:
            lab = self.labels.get(x)
            if lab is None:
                raise StratError(f"simplex {x!r} has no label")
            if len(lab) != X.dim(x) + 1:
                raise StratError(f"label of {x!r} has the wrong length")
            for e in lab:
                if e not in P:
                    raise StratError(f"label of {x!r} uses unknown element {e!r}")
            if not P.is_chain(lab):
                raise StratError(f"label of {x!r} is not a flag")
        for x in X.ids:
            lab = self.labels[x]
            if X.dim(x) == 0:
                continue
            for i, s in enumerate(X.faces_of(x)):
                if self.label(s) != lab[:i] + lab[i + 1 :]:
                    raise StratError(f"label of face d_{i} of {x!r} is incompatible")

    def label(self, s: Simp) -> tuple[str, ...]:
        alpha, x = s
        lab = self.labels[x]
        return tuple(lab[a] for a in alpha)

    def vertex_label(self, v: str) -> str:
        return self.labels[v][0]

    def flag(self, x: str) -> Flag:
        return Flag(self.poset, self.labels[x])

    def sub(self, ids: Iterable[str], poset: Poset | None = None) -> "StratSSet":
        S = self.sset.sub(ids)
        return StratSSet(S, poset or self.poset, {x: self.labels[x] for x in S.ids}, check=False)

    def __len__(self) -> int:
        return len(self.sset)


@dataclass(frozen=True)
class StratMap:
    smap: SMap
    pmap: PosetMap
    source: StratSSet
    target: StratSSet
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.check:
            self.validate()

    def validate(self) -> None:
        if self.pmap.source != self.source.poset or self.pmap.target != self.target.poset:
            raise StratError("poset map does not match the stratifications")
        for x in self.source.sset.ids:
            if self.target.label(self.smap.images[x]) != self.pmap.on_flag(self.source.labels[x]):
                raise StratError(f"map does not preserve the label of {x!r}")

    def then(self, other: "StratMap") -> "StratMap":
        return StratMap(
            self.smap.then(other.smap), self.pmap.then(other.pmap), self.source, other.target, check=False
        )

    def is_mono(self) -> bool:
        return self.smap.is_mono()

    def key(self) -> tuple:
        return (self.pmap.key(), self.smap.key())

    @staticmethod
    def identity(X: StratSSet) -> "StratMap":
        return StratMap(SMap.identity(X.sset), PosetMap.identity(X.poset), X, X, check=False)


def _make(S: SimplicialSet, P: Poset, labels: Mapping[str, tuple[str, ...]]) -> StratSSet:
    return StratSSet(S, P, dict(labels))


def _standard_labels(S: SimplicialSet, entries: Sequence[str]) -> dict[str, tuple[str, ...]]:
    return {x: tuple(entries[int(v)] for v in S.vertex_ids(x)) for x in S.ids}


def _as_flag(J: Flag | tuple[Poset, Sequence[str]]) -> Flag:
    return J if isinstance(J, Flag) else Flag(J[0], tuple(J[1]))


def strat_simplex(J: Flag) -> StratSSet:
    """``Delta^J``: the standard simplex with vertex ``i`` labeled ``J[i]``."""
    J = _as_flag(J)
    S = standard("simplex", J.dim)
    return _make(S, J.poset, _standard_labels(S, J.entries))


def _sub_inclusion(kind: str, J: Flag, k: int | None = None) -> StratMap:
    J = _as_flag(J)
    big = strat_simplex(J)
    S = standard(kind, J.dim, k)
    small = _make(S, J.poset, _standard_labels(S, J.entries))
    return StratMap(big.sset.inclusion_of(S), PosetMap.identity(J.poset), small, big, check=False)


def strat_boundary(J: Flag) -> StratMap:
    """Inclusion ``dDelta^J -> Delta^J`` over the identity."""
    return _sub_inclusion("boundary", J)


def strat_horn(J: Flag, k: int) -> StratMap:
    """Inclusion ``Lambda^J_k -> Delta^J`` over the identity."""
    J = _as_flag(J)
    if not 0 <= k <= J.dim:
        raise StratError(f"horn index {k} out of range for {J}")
    return _sub_inclusion("horn", J, k)


@dataclass(frozen=True)
class HornType:
    admissible: bool
    inner: bool


def classify_horn(J: Flag, k: int) -> HornType:
    J = _as_flag(J)
    e, n = J.entries, J.dim
    if not 0 <= k <= n:
        raise StratError(f"horn index {k} out of range for {J}")
    adm = (k + 1 <= n and e[k] == e[k + 1]) or (k >= 1 and e[k] == e[k - 1])
    return HornType(bool(adm), 0 < k < n)


def trivially(K: SimplicialSet, P: Poset, p: str) -> StratSSet:
    """``K`` with every simplex over the single element ``p``."""
    P.check(p)
    return StratSSet(K, P, {x: (p,) * (K.dim(x) + 1) for x in K.ids}, check=False)


def empty(P: Poset) -> StratSSet:
    return StratSSet(SimplicialSet({}, check=False), P, {}, check=False)


# -- base change --------------------------------------------------------------------


def pushforward(f: PosetMap, X: StratSSet) -> StratSSet:
    if f.source != X.poset:
        raise StratError("pushforward along a map from a different poset")
    return StratSSet(X.sset, f.target, {x: f.on_flag(l) for x, l in X.labels.items()}, check=False)


def _joint_normal(seqs: Sequence[Sequence]) -> tuple[tuple[int, ...], list[int]]:
    """Collapse positions where every sequence repeats; returns (gamma, representatives)."""
    n = len(seqs[0])
    gamma, reps = [0], [0]
    for t in range(1, n):
        if all(s[t] == s[t - 1] for s in seqs):
            gamma.append(gamma[-1])
        else:
            gamma.append(gamma[-1] + 1)
            reps.append(t)
    return tuple(gamma), reps


@dataclass
class Pullback:
    obj: StratSSet
    proj: SMap  # underlying map to Y


def pullback(f: PosetMap, Y: StratSSet) -> Pullback:
    """``f^*Y``: the fiber product of ``Y`` with the nerve of the source of ``f``."""
    if f.target != Y.poset:
        raise StratError("pullback along a map into a different poset")
    P = f.source
    S = Y.sset
    fiber = {q: [p for p in P.elements if f(p) == q] for q in f.target.elements}
    comps: dict[str, tuple[Simp, tuple[str, ...]]] = {}
    lookup: dict[tuple[Simp, tuple[str, ...]], str] = {}

    def name(s: Simp, sig: tuple[str, ...]) -> str:
        return f"{_sname(s)}@[{','.join(sig)}]"

    for y in S.ids:
        lam = Y.labels[y]
        d = S.dim(y)
        # grow (alpha, sigma) jointly nondegenerate with f(sigma) = lam o alpha
        stack: list[tuple[tuple[int, ...], tuple[str, ...]]] = [((0,), (p,)) for p in fiber[lam[0]]]
        while stack:
            alpha, sig = stack.pop()
            if alpha[-1] == d:
                s = (alpha, y)
                key = (s, sig)
                if key not in lookup:
                    nm = name(s, sig)
                    comps[nm] = key
                    lookup[key] = nm
            for step in (0, 1):
                a = alpha[-1] + step
                if a > d:
                    continue
                for p in fiber[lam[a]]:
                    if not P.leq(sig[-1], p):
                        continue
                    if step == 0 and p == sig[-1]:
                        continue
                    stack.append((alpha + (a,), sig + (p,)))

    def normal(s: Simp, sig: tuple[str, ...]) -> Simp:
        gamma, reps = _joint_normal([s[0], sig])
        key = ((tuple(s[0][t] for t in reps), s[1]), tuple(sig[t] for t in reps))
        return gamma, lookup[key]

    faces: dict[str, list[Simp]] = {}
    for nm, (s, sig) in comps.items():
        m = len(sig) - 1
        faces[nm] = [normal(S.face(s, i), sig[:i] + sig[i + 1 :]) for i in range(m + 1)] if m else []
    Z = SimplicialSet(faces, check=False)
    obj = StratSSet(Z, P, {nm: comps[nm][1] for nm in Z.ids}, check=False)
    proj = SMap(Z, S, {nm: comps[nm][0] for nm in Z.ids}, check=False)
    return Pullback(obj, proj)


# -- strata and restrictions ----------------------------------------------------------


def stratum(X: StratSSet, p: str) -> SimplicialSet:
    X.poset.check(p)
    return X.sset.sub(x for x in X.sset.ids if set(X.labels[x]) == {p})


def restrict(X: StratSSet, Q: Iterable[str]) -> StratSSet:
    keep = set(Q)
    for q in keep:
        X.poset.check(q)
    sub = X.poset.subposet(keep)
    return X.sub([x for x in X.sset.ids if set(X.labels[x]) <= keep], poset=sub)


# -- products ---------------------------------------------------------------------------


def tensor(X: StratSSet, K: SimplicialSet, dim_cap: int | None = None) -> StratSSet:
    """``X x K`` labeled through the first factor."""
    pr = product(X.sset, K, dim_cap)
    labels = {pid: X.label(sx) for pid, (sx, _) in pr.components.items()}
    return StratSSet(pr.sset, X.poset, labels, check=False)


@dataclass
class StratProduct:
    obj: StratSSet
    names: dict[tuple[str, str], str]
    raw: object  # the underlying Product


def strat_product(X: StratSSet, Y: StratSSet, dim_cap: int | None = None) -> StratProduct:
    """``X x Y`` over the product poset."""
    pr = product(X.sset, Y.sset, dim_cap)
    PQ, names = product_poset(X.poset, Y.poset)
    labels = {}
    for pid, (sx, sy) in pr.components.items():
        labels[pid] = tuple(names[(a, b)] for a, b in zip(X.label(sx), Y.label(sy)))
    return StratProduct(StratSSet(pr.sset, PQ, labels, check=False), names, pr)


def strat_product_map(f: StratMap, g: StratMap, src: StratProduct, tgt: StratProduct) -> StratMap:
    sm = product_map(f.smap, g.smap, src.raw, tgt.raw)  # type: ignore[arg-type]
    inv = {v: k for k, v in src.names.items()}
    pm = PosetMap(
        src.obj.poset,
        tgt.obj.poset,
        {e: tgt.names[(f.pmap(inv[e][0]), g.pmap(inv[e][1]))] for e in src.obj.poset.elements},
    )
    return StratMap(sm, pm, src.obj, tgt.obj, check=False)


# -- pushouts -------------------------------------------------------------------------


@dataclass
class StratPushout:
    obj: StratSSet
    left: StratMap
    right: StratMap
    new_names: dict[str, str]


def strat_pushout(f: StratMap, g: StratMap, *, prefix: str = "") -> StratPushout:
    """Pushout along a monomorphism ``f``; posets are pushed out as well."""
    po = pushout(f.smap, g.smap, prefix=prefix)
    if f.pmap.is_iso() and f.pmap.target == f.pmap.source and all(
        f.pmap(a) == a for a in f.pmap.source.elements
    ):
        Q = g.target.poset
        pl = PosetMap(f.target.poset, Q, {a: g.pmap(a) for a in f.target.poset.elements})
        pr = PosetMap.identity(Q)
    else:
        pp = poset_pushout(f.pmap, g.pmap)
        Q, pl, pr = pp.poset, pp.left, pp.right
    labels = {c: pr.on_flag(g.target.labels[c]) for c in g.target.sset.ids}
    for b, nm in po.new_names.items():
        labels[nm] = pl.on_flag(f.target.labels[b])
    obj = StratSSet(po.sset, Q, labels, check=False)
    left = StratMap(po.left, pl, f.target, obj, check=False)
    right = StratMap(po.right, pr, g.target, obj, check=False)
    return StratPushout(obj, left, right, po.new_names)


# -- hom sets -----------------------------------------------------------------------


def strat_homs(
    X: StratSSet,
    Y: StratSSet,
    pmap: PosetMap | None = None,
    *,
    budget: int | None = None,
    fixed: Mapping[str, Simp] | None = None,
) -> list[StratMap]:
    """All stratified maps ``X -> Y`` over ``pmap`` (over every poset map when None)."""
    pmaps = [pmap] if pmap is not None else poset_maps(X.poset, Y.poset)
    out = []
    for pm in pmaps:

        def allowed(x: str, c: Simp, _asg: dict, pm: PosetMap = pm) -> bool:
            return X.sset.dim(x) != 0 or Y.vertex_label(c[1]) == pm(X.vertex_label(x))

        for imgs in iter_homs(X.sset, Y.sset, budget=budget, fixed=fixed, allowed=allowed):
            out.append(StratMap(SMap(X.sset, Y.sset, imgs, check=False), pm, X, Y, check=False))
    return out


# -- refinement ---------------------------------------------------------------------


def refine(X: StratSSet) -> StratMap:
    """The refinement ``X^r -> X``: strata split into path components."""
    S = X.sset
    comp_of: dict[str, str] = {}
    elems: list[str] = []
    over: dict[str, str] = {}
    for p in X.poset.elements:
        st = S.sub(x for x in S.ids if set(X.labels[x]) == {p})
        comps = pi0(st)
        for i, c in enumerate(comps, start=1):
            nm = p if len(comps) == 1 else f"{p}#{i}"
            elems.append(nm)
            over[nm] = p
            for v in c:
                comp_of[v] = nm
    rel = []
    for e in S.nondeg(1):
        a, b = S.vertex_ids(e)
        rel.append((comp_of[a], comp_of[b]))
    R = make_poset(elems, rel)
    labels = {x: tuple(comp_of[v] for v in S.vertex_ids(x)) for x in S.ids}
    Xr = StratSSet(S, R, labels, check=False)
    pm = PosetMap(R, X.poset, over)
    return StratMap(SMap.identity(S), pm, Xr, X, check=False)


def is_refined(X: StratSSet) -> bool:
    return refine(X).pmap.is_iso()


@dataclass(frozen=True)
class FrontierReport:
    surjective: bool
    closure_incidence: frozenset[tuple[str, str]]
    weakly_frontier: bool
    frontier: bool

    def as_dict(self) -> dict:
        return {
            "surjective": self.surjective,
            "closure_incidence": sorted([list(p) for p in self.closure_incidence]),
            "weakly_frontier": self.weakly_frontier,
            "frontier": self.frontier,
        }


def frontier_report(X: StratSSet) -> FrontierReport:
    P, S = X.poset, X.sset
    used = {X.vertex_label(v) for v in S.nondeg(0)}
    surjective = used == set(P.elements)
    ci: set[tuple[str, str]] = set()
    for x in S.ids:
        lab = set(X.labels[x])
        for p in lab:
            for q in lab:
                if P.leq(p, q):
                    ci.add((p, q))
    generated = make_poset(P.elements, ci).le if surjective else frozenset()
    weakly = surjective and generated == P.le
    frontier = weakly
    if weakly:
        above: dict[str, set[str]] = {x: set() for x in S.ids}
        for y in S.ids:
            lab = set(X.labels[y])
            for x in S.closure([y]):
                above[x] |= lab
        for x in S.ids:
            top = X.labels[x][-1]
            for p, q in ci:
                if p == top and q not in above[x]:
                    frontier = False
                    break
            if not frontier:
                break
    return FrontierReport(surjective, frozenset(ci), weakly, frontier)


# -- mapping cylinders ---------------------------------------------------------------


@dataclass
class MappingCylinder:
    obj: StratSSet
    from_target: StratMap  # Y -> M(f)
    from_source: StratMap  # X x {1} -> M(f), as a map out of X


def strat_mapping_cylinder(f: StratMap, dim_cap: int | None = None) -> MappingCylinder:
    """``Y`` glued to ``X x Delta^[0<1]`` along ``X x {0}``."""
    X = f.source
    I = strat_simplex(Flag(chain(1), ("0", "1")))
    pt0 = strat_simplex(Flag(make_poset(["0"]), ("0",)))
    pt1 = strat_simplex(Flag(make_poset(["1"]), ("1",)))
    inc0 = StratMap(
        SMap(pt0.sset, I.sset, {"0": I.sset.simp("0")}, check=False),
        PosetMap(pt0.poset, I.poset, {"0": "0"}),
        pt0,
        I,
        check=False,
    )
    inc1 = StratMap(
        SMap(pt1.sset, I.sset, {"0": I.sset.simp("1")}, check=False),
        PosetMap(pt1.poset, I.poset, {"1": "1"}),
        pt1,
        I,
        check=False,
    )
    cyl = strat_product(X, I, dim_cap)
    bottom = strat_product(X, pt0, dim_cap)
    top = strat_product(X, pt1, dim_cap)
    idX = StratMap.identity(X)
    j0 = strat_product_map(idX, inc0, bottom, cyl)
    j1 = strat_product_map(idX, inc1, top, cyl)
    # X x {0} -> X -> Y
    proj_s = SMap(bottom.obj.sset, X.sset, {k: v[0] for k, v in bottom.raw.components.items()}, check=False)  # type: ignore[attr-defined]
    inv0 = {v: k for k, v in bottom.names.items()}
    proj_p = PosetMap(bottom.obj.poset, X.poset, {e: inv0[e][0] for e in bottom.obj.poset.elements})
    proj = StratMap(proj_s, proj_p, bottom.obj, X, check=False)
    po = strat_pushout(j0, proj.then(f))
    # expose the top copy as a map out of X
    imgs = {}
    for pid, (sx, _sy) in top.raw.components.items():  # type: ignore[attr-defined]
        if sx[0] == _ident(len(sx[0]) - 1):
            imgs[sx[1]] = (_ident(len(sx[0]) - 1), pid)
    to_top_s = SMap(X.sset, top.obj.sset, imgs, check=False)
    to_top_p = PosetMap(X.poset, top.obj.poset, {p: top.names[(p, "1")] for p in X.poset.elements})
    to_top = StratMap(to_top_s, to_top_p, X, top.obj, check=False)
    from_source = to_top.then(j1).then(po.left)
    return MappingCylinder(po.obj, po.right, from_source)


def nerve(P: Poset) -> StratSSet:
    """The nerve of ``P`` stratified by the identity: simplices are regular flags."""
    from .poset import regular_flags

    fl = [f.entries for f in regular_flags(P)]
    ids = {e: ",".join(e) for e in fl}
    faces: dict[str, list[Simp]] = {}
    for e in fl:
        d = len(e) - 1
        faces[ids[e]] = [(_ident(d - 1), ids[e[:i] + e[i + 1 :]]) for i in range(d + 1)] if d else []
    S = SimplicialSet(faces, check=False)
    return StratSSet(S, P, {ids[e]: e for e in fl}, check=False)
