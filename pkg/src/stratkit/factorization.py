"""Generators, lifting problems, small-object factorization and horn filling."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .poset import (
    Flag,
    Poset,
    PosetMap,
    antichain,
    chain,
    flag_name,
    flags,
    make_poset,
    poset_maps,
)
from .simplicial import (
    SimplicialSet,
    Simp,
    SMap,
    _ident,
    from_complex,
    iter_homs,
    pi0,
    standard,
)
from .stratified import (
    StratError,
    StratMap,
    StratSSet,
    classify_horn,
    frontier_report,
    refine,
    strat_boundary,
    strat_horn,
    strat_pushout,
    strat_simplex,
    stratum,
)

__all__ = [
    "Generator",
    "GeneratorSet",
    "builtin_generators",
    "Square",
    "RLPResult",
    "iter_squares",
    "find_lift",
    "has_rlp",
    "Attachment",
    "Factorization",
    "soa_factorize",
    "replay",
    "FibrancyResult",
    "fibrancy_certificate",
    "CofibrancyReport",
    "cofibrancy_report",
    "CFFReport",
    "cff_report",
    "HornStep",
    "HornDecomposition",
    "horn_decomposition_verify",
    "valid_horn_decomposition_inputs",
    "CirclePushout",
    "circle_pushout",
]

GENERATOR_KINDS = ("D_P", "C_P", "D_global", "C_global", "DR", "CR")


@dataclass(frozen=True)
class Generator:
    name: str
    map: StratMap
    dim: int


@dataclass
class GeneratorSet:
    name: str
    scope: str  # "fixed" or "global"
    cofibrations: list[Generator]
    acyclic: list[Generator]
    poset: Poset | None = None
    max_dim: int = 2

    def family(self, which: str) -> list[Generator]:
        if which in ("cofibrations", "cof", "I"):
            return self.cofibrations
        if which in ("acyclic", "J"):
            return self.acyclic
        raise StratError(f"unknown generator family {which!r}")

    def validate(self) -> None:
        for g in self.cofibrations + self.acyclic:
            if not g.map.is_mono():
                raise StratError(f"generator {g.name} is not a monomorphism")


def _boundary_gen(J: Flag) -> Generator:
    return Generator(f"boundary{flag_name(J.entries)}", strat_boundary(J), J.dim)


def _horn_gen(J: Flag, k: int) -> Generator:
    return Generator(f"horn{flag_name(J.entries)}_{k}", strat_horn(J, k), J.dim)


def _horns(J: Flag, inner_too: bool) -> list[Generator]:
    out = []
    if J.dim < 1:
        return out
    for k in range(J.dim + 1):
        t = classify_horn(J, k)
        if t.admissible or (inner_too and t.inner):
            out.append(_horn_gen(J, k))
    return out


def _std_flag(n: int) -> Flag:
    return Flag(chain(n), tuple(str(i) for i in range(n + 1)))


def _surjective_flags(n: int) -> list[Flag]:
    """Flags of length ``n + 1`` onto some chain ``[m]``."""
    out = []
    for m in range(n + 1):
        for jumps in combinations(range(n), m):
            js = set(jumps)
            e = [0]
            for t in range(n):
                e.append(e[-1] + (1 if t in js else 0))
            out.append(Flag(chain(m), tuple(str(v) for v in e)))
    return out


def _empty_over(P: Poset) -> StratSSet:
    return StratSSet(SimplicialSet({}, check=False), P, {}, check=False)


def _empty_gen(name: str, P: Poset, Q: Poset, assignment: dict[str, str]) -> Generator:
    A, B = _empty_over(P), _empty_over(Q)
    m = StratMap(SMap(A.sset, B.sset, {}, check=False), PosetMap(P, Q, assignment), A, B)
    return Generator(name, m, -1)


def builtin_generators(kind: str, P: Poset | None = None, max_dim: int = 2) -> GeneratorSet:
    """Generating cofibrations and acyclic generators up to ``max_dim``."""
    if kind not in GENERATOR_KINDS:
        raise StratError(f"unknown generator kind {kind!r}; expected one of {GENERATOR_KINDS}")
    inner = kind.startswith("C")
    if kind in ("D_P", "C_P"):
        if P is None:
            raise StratError(f"{kind} needs a poset")
        fl = flags(P, max_dim)
        cof = [_boundary_gen(J) for J in fl]
        acy = [h for J in fl for h in _horns(J, inner)]
        return GeneratorSet(kind, "fixed", cof, acy, P, max_dim)
    cof = [_boundary_gen(_std_flag(n)) for n in range(max_dim + 1)]
    if kind in ("D_global", "C_global"):
        cof.append(_empty_gen("empty[0+0->0<1]", antichain(["0", "1"]), chain(1), {"0": "0", "1": "1"}))
        cof.append(_empty_gen("empty[->0]", make_poset([]), chain(0), {}))
        acy = [h for n in range(1, max_dim + 1) for J in _surjective_flags(n) for h in _horns(J, inner)]
        return GeneratorSet(kind, "global", cof, acy, None, max_dim)
    return GeneratorSet(kind, "global", cof, [], None, max_dim)


# -- lifting problems ----------------------------------------------------------------------


@dataclass(frozen=True)
class Square:
    generator: str
    u: StratMap  # A -> X
    v: StratMap  # B -> Y

    def key(self) -> tuple:
        return (self.generator, self.u.key(), self.v.key())


def _name_identity(P: Poset, Q: Poset) -> PosetMap | None:
    if not all(p in Q for p in P.elements):
        return None
    try:
        return PosetMap(P, Q, {p: p for p in P.elements})
    except Exception:
        return None


def _pmaps(P: Poset, Q: Poset, scope: str) -> list[PosetMap]:
    if scope == "fixed":
        m = _name_identity(P, Q)
        return [m] if m is not None else []
    return poset_maps(P, Q)


def _homs_over(
    S: StratSSet,
    T: StratSSet,
    pm: PosetMap,
    check: "callable | None" = None,
    fixed: dict[str, Simp] | None = None,
    budget: int | None = None,
) -> Iterator[dict[str, Simp]]:
    def allowed(x: str, c: Simp, _asg: dict) -> bool:
        if S.sset.dim(x) == 0 and T.vertex_label(c[1]) != pm(S.vertex_label(x)):
            return False
        return check is None or check(x, c)

    yield from iter_homs(S.sset, T.sset, budget=budget, fixed=fixed, allowed=allowed)


def iter_squares(f: StratMap, g: StratMap, scope: str = "global", budget: int | None = None) -> Iterator[tuple[StratMap, StratMap]]:
    """All commuting squares ``(u: A -> X, v: B -> Y)`` with ``f u = v g``."""
    X, Y, A, B = f.source, f.target, g.source, g.target
    for vp in _pmaps(B.poset, Y.poset, scope):
        for vimg in _homs_over(B, Y, vp, budget=budget):
            v = StratMap(SMap(B.sset, Y.sset, vimg, check=False), vp, B, Y, check=False)
            target_p = {a: vp(g.pmap(a)) for a in A.poset.elements}
            for up in _pmaps(A.poset, X.poset, scope):
                if any(f.pmap(up(a)) != target_p[a] for a in A.poset.elements):
                    continue

                def comm(x: str, c: Simp) -> bool:
                    return f.smap(c) == v.smap(g.smap.images[x])

                for uimg in _homs_over(A, X, up, comm, budget=budget):
                    u = StratMap(SMap(A.sset, X.sset, uimg, check=False), up, A, X, check=False)
                    yield u, v


def find_lift(f: StratMap, g: StratMap, u: StratMap, v: StratMap, scope: str = "global", budget: int | None = None) -> StratMap | None:
    """A diagonal ``h: B -> X`` with ``h g = u`` and ``f h = v``, or None."""
    X, A, B = f.source, g.source, g.target
    fixed = {g.smap.images[a][1]: u.smap.images[a] for a in A.sset.ids}
    for hp in _pmaps(B.poset, X.poset, scope):
        if any(hp(g.pmap(a)) != u.pmap(a) for a in A.poset.elements):
            continue
        if any(f.pmap(hp(b)) != v.pmap(b) for b in B.poset.elements):
            continue

        def comm(x: str, c: Simp) -> bool:
            return f.smap(c) == v.smap.images[x]

        for himg in _homs_over(B, X, hp, comm, fixed=fixed, budget=budget):
            return StratMap(SMap(B.sset, X.sset, himg, check=False), hp, B, X, check=False)
    return None


@dataclass
class RLPResult:
    holds: bool
    squares: int
    witness: tuple[StratMap, StratMap] | None
    lifts: list[StratMap] = field(default_factory=list, repr=False)


def has_rlp(f: StratMap, g: StratMap, scope: str = "global", budget: int | None = None) -> RLPResult:
    """Whether ``f`` has the right lifting property against ``g``."""
    if not g.is_mono():
        raise StratError("lifting is checked against monomorphisms only")
    count = 0
    lifts = []
    for u, v in iter_squares(f, g, scope, budget):
        count += 1
        h = find_lift(f, g, u, v, scope, budget)
        if h is None:
            return RLPResult(False, count, (u, v), lifts)
        lifts.append(h)
    return RLPResult(True, count, None, lifts)


# -- small object argument ---------------------------------------------------------------------


@dataclass(frozen=True)
class Attachment:
    stage: int
    generator: str
    prefix: str
    u_images: dict[str, Simp]
    u_pmap: dict[str, str]
    v_images: dict[str, Simp]
    v_pmap: dict[str, str]

    def as_dict(self) -> dict:
        return {
            "stage": self.stage,
            "generator": self.generator,
            "prefix": self.prefix,
            "u": {"images": {k: [list(a), x] for k, (a, x) in sorted(self.u_images.items())}, "pmap": dict(sorted(self.u_pmap.items()))},
            "v": {"images": {k: [list(a), x] for k, (a, x) in sorted(self.v_images.items())}, "pmap": dict(sorted(self.v_pmap.items()))},
        }


@dataclass
class Factorization:
    f: StratMap
    family: str
    scope: str
    log: list[Attachment]
    Z: StratSSet
    i: StratMap
    q: StratMap
    residual: list[Square]
    stages_run: int
    dim_cap: int

    @property
    def complete(self) -> bool:
        return not self.residual

    def check_commutes(self) -> bool:
        comp = self.i.then(self.q)
        return comp.smap.images == self.f.smap.images and comp.pmap.assignment == self.f.pmap.assignment


def _unsolved(q: StratMap, gens: Sequence[Generator], scope: str, dim_cap: int, budget: int | None) -> list[Square]:
    out = []
    for gen in gens:
        if gen.dim > dim_cap:
            continue
        for u, v in iter_squares(q, gen.map, scope, budget):
            if find_lift(q, gen.map, u, v, scope, budget) is None:
                out.append(Square(gen.name, u, v))
    return out


def _attach(Z: StratSSet, gen: Generator, u_img: dict, u_pm: dict, prefix: str):
    A = gen.map.source
    u = StratMap(SMap(A.sset, Z.sset, u_img, check=False), PosetMap(A.poset, Z.poset, u_pm), A, Z, check=False)
    return strat_pushout(gen.map, u, prefix=prefix)


def soa_factorize(
    f: StratMap,
    G: GeneratorSet,
    max_stages: int,
    dim_cap: int,
    *,
    family: str = "cofibrations",
    budget: int | None = None,
) -> Factorization:
    """Finite-stage small object argument.

    Each stage collects the lifting problems of the chosen generators against
    the current ``q`` that have no solution, and attaches one cell per
    problem by pushout. Running out of stages is not an error: the result
    then carries its unsolved problems in ``residual``.
    """
    gens = [g for g in G.family(family) if g.dim <= dim_cap]
    by_name = {g.name: g for g in gens}
    Z, i, q = f.source, StratMap.identity(f.source), f
    log: list[Attachment] = []
    seen: set[tuple] = set()
    stages = 0
    residual = _unsolved(q, gens, G.scope, dim_cap, budget)
    while residual and stages < max_stages:
        stages += 1
        # maps from the stage-start object into the growing one
        into: StratMap = StratMap.identity(Z)
        for sq in residual:
            if sq.key() in seen:
                continue
            seen.add(sq.key())
            gen = by_name[sq.generator]
            u = sq.u.then(into)
            prefix = f"c{len(log)}:"
            po = _attach(into.target, gen, dict(u.smap.images), dict(u.pmap.assignment), prefix)
            log.append(
                Attachment(stages, gen.name, prefix, dict(u.smap.images), dict(u.pmap.assignment),
                           dict(sq.v.smap.images), dict(sq.v.pmap.assignment))
            )
            Znew = po.obj
            # q on the new object: old part through q, new cells through v
            qimg = {z: q.smap.images[z] for z in q.source.sset.ids}
            for b, nm in po.new_names.items():
                qimg[nm] = sq.v.smap.images[b]
            qp: dict[str, str] = {}
            for z in q.source.poset.elements:
                qp[po.right.pmap(z)] = q.pmap(z)
            for b in gen.map.target.poset.elements:
                qp.setdefault(po.left.pmap(b), sq.v.pmap(b))
            q = StratMap(SMap(Znew.sset, f.target.sset, qimg, check=False), PosetMap(Znew.poset, f.target.poset, qp), Znew, f.target, check=False)
            i = i.then(po.right)
            into = into.then(po.right)
        Z = q.source
        residual = _unsolved(q, gens, G.scope, dim_cap, budget)
    return Factorization(f, family, G.scope, log, Z, i, q, residual, stages, dim_cap)


def replay(X: StratSSet, G: GeneratorSet, log: Sequence[Attachment], family: str = "cofibrations") -> tuple[StratSSet, StratMap]:
    """Rebuild ``Z`` and ``i: X -> Z`` from an attachment log."""
    by_name = {g.name: g for g in G.family(family)}
    Z, i = X, StratMap.identity(X)
    for att in log:
        po = _attach(Z, by_name[att.generator], att.u_images, att.u_pmap, att.prefix)
        Z = po.obj
        i = i.then(po.right)
    return Z, i


# -- fibrancy and cofibrancy -----------------------------------------------------------------


@dataclass
class FibrancyResult:
    passed: bool
    horns_checked: int
    witness: tuple[tuple[str, ...], int, dict[str, Simp]] | None
    failing_horns: list[tuple[tuple[str, ...], int]] = field(default_factory=list)

    def as_dict(self) -> dict:
        w = None
        if self.witness:
            J, k, imgs = self.witness
            w = {"flag": list(J), "k": k, "map": {x: [list(a), y] for x, (a, y) in sorted(imgs.items())}}
        return {
            "passed": self.passed,
            "horns_checked": self.horns_checked,
            "witness": w,
            "failing_horns": [{"flag": list(J), "k": k} for J, k in self.failing_horns],
        }


def fibrancy_certificate(
    X: StratSSet, structure: str, dim_cap: int, *, inner_only: bool = False, budget: int | None = None
) -> FibrancyResult:
    """Extension property against stratified horns over ``X``'s poset.

    ``diagrammatic`` uses admissible horns, ``categorical`` admissible and
    inner horns; ``inner_only`` restricts to inner horns.
    """
    if structure not in ("diagrammatic", "categorical"):
        raise StratError(f"unknown structure {structure!r}")
    P = X.poset
    ident = PosetMap.identity(P)
    checked = 0
    witness = None
    failing: list[tuple[tuple[str, ...], int]] = []
    for J in flags(P, dim_cap):
        if J.dim < 1:
            continue
        for k in range(J.dim + 1):
            t = classify_horn(J, k)
            if inner_only:
                use = t.inner
            else:
                use = t.admissible or (structure == "categorical" and t.inner)
            if not use:
                continue
            checked += 1
            h = strat_horn(J, k)
            A, B = h.source, h.target
            for uimg in _homs_over(A, X, ident, budget=budget):
                fixed = {x: uimg[x] for x in A.sset.ids}
                ext = next(iter(_homs_over(B, X, ident, fixed=fixed, budget=budget)), None)
                if ext is None:
                    failing.append((J.entries, k))
                    if witness is None:
                        witness = (J.entries, k, uimg)
                    break
    return FibrancyResult(not failing, checked, witness, failing)


@dataclass
class CofibrancyReport:
    kind: str
    cofibrant: bool
    cells: list[tuple[str, tuple[str, ...]]]
    blocking: dict | None

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "cofibrant": self.cofibrant,
            "cells": [{"id": x, "flag": list(l)} for x, l in self.cells],
            "blocking": self.blocking,
        }


def cofibrancy_report(X: StratSSet, kind: str = "unrefined") -> CofibrancyReport:
    """Skeletal cell presentation; the refined kind also needs ``is_refined``."""
    if kind not in ("unrefined", "refined"):
        raise StratError(f"unknown cofibrancy kind {kind!r}")
    cells = [(x, tuple(X.labels[x])) for x in X.sset.ids]
    if kind == "unrefined":
        return CofibrancyReport(kind, True, cells, None)
    r = refine(X)
    if r.pmap.is_iso():
        return CofibrancyReport(kind, True, cells, None)
    fibers: dict[str, list[str]] = {p: [] for p in X.poset.elements}
    for e in r.source.poset.elements:
        fibers[r.pmap(e)].append(e)
    blocking = {
        "empty_strata": sorted(p for p, v in fibers.items() if not v),
        "split_strata": {p: sorted(v) for p, v in sorted(fibers.items()) if len(v) > 1},
        "refined_poset": str(r.source.poset),
    }
    return CofibrancyReport(kind, False, cells, blocking)


@dataclass
class CFFReport:
    cellular: int
    frontier_connected: bool
    inner_filling: FibrancyResult

    @property
    def passed(self) -> bool:
        return self.frontier_connected and self.inner_filling.passed

    def as_dict(self) -> dict:
        return {
            "cellular": self.cellular,
            "frontier_connected": self.frontier_connected,
            "inner_filling": self.inner_filling.as_dict(),
            "passed": self.passed,
        }


def cff_report(X: StratSSet, dim_cap: int, *, budget: int | None = None) -> CFFReport:
    cells = len(cofibrancy_report(X, "unrefined").cells)
    fr = frontier_report(X)
    connected = all(len(pi0(stratum(X, p))) == 1 for p in X.poset.elements)
    inner = fibrancy_certificate(X, "categorical", dim_cap, inner_only=True, budget=budget)
    return CFFReport(cells, fr.frontier and connected, inner)


# -- horn decomposition --------------------------------------------------------------------------


@dataclass
class HornStep:
    horn: str
    flag: tuple[str, ...]
    k: int
    inner: bool
    added: tuple[str, str]
    pushout_iso: bool


@dataclass
class HornDecomposition:
    J: tuple[str, ...]
    k: int
    s: int
    J_prime: tuple[str, ...]
    J_second: tuple[str, ...]
    size_A: int
    size_B: int
    steps: list[HornStep]
    passed: bool

    def as_dict(self) -> dict:
        return {
            "J": list(self.J),
            "k": self.k,
            "s": self.s,
            "J_prime": list(self.J_prime),
            "J_second": list(self.J_second),
            "size_A": self.size_A,
            "size_B": self.size_B,
            "steps": [
                {"horn": st.horn, "flag": list(st.flag), "k": st.k, "inner": st.inner,
                 "added": list(st.added), "pushout_iso": st.pushout_iso}
                for st in self.steps
            ],
            "passed": self.passed,
        }


def _second_highest_index(e: Sequence[str], P: Poset) -> int:
    distinct = sorted(set(e), key=lambda x: e.index(x))
    second = distinct[-2]
    return max(i for i, x in enumerate(e) if x == second)


def horn_decomposition_verify(J: Flag, k: int) -> HornDecomposition:
    """Glue ``Delta^J u_{Delta^J''} Delta^J'`` from a sub-complex by three inner horns.

    Raises ``StratError`` when ``(J, k)`` does not meet the hypotheses of the
    inductive step.
    """
    P, e = J.poset, J.entries
    n = J.dim
    if not 0 < k < n:
        raise StratError(f"k={k} must satisfy 0 < k < n={n}")
    if e[0] != e[k]:
        raise StratError("the k-th entry must equal the first entry")
    if len(set(e)) < 3:
        raise StratError("J needs at least three distinct entries")
    s = _second_highest_index(e, P)
    if s < 2:
        raise StratError(f"s={s} must be at least 2")
    if s <= k:
        raise StratError(f"s={s} must exceed k={k}")
    top = e[-1]
    Jp = e[:s] + (top,) + e[s + 1 :]
    Jpp = e[:s] + e[s + 1 :]
    # B as an ordered complex on vertices 0..n and the new vertex n'
    names = [str(t) for t in range(n + 1)] + [f"{n}'"]
    order = {v: i for i, v in enumerate(names)}
    label = {str(t): e[t] for t in range(n + 1)}
    label[f"{n}'"] = top
    vJ = [str(t) for t in range(n + 1)]
    vJp = [str(t) for t in range(n + 1) if t != s] + [f"{n}'"]
    Bs = from_complex([vJ, vJp], key=order.get)
    B = StratSSet(Bs, P, {x: tuple(label[v] for v in Bs.vertex_ids(x)) for x in Bs.ids})

    def cid(vs: Sequence[str]) -> str:
        return ",".join(vs)

    def drop(vs: Sequence[str], i: int) -> list[str]:
        return list(vs[:i]) + list(vs[i + 1 :])

    vJk = drop(vJ, k)
    vJpp = drop(vJ, s)
    removed = {
        cid(vJ), cid(vJp), cid(vJk), cid(drop(vJp, k)), cid(vJpp), cid(drop(vJpp, k)),
    }
    if len(removed) != 6:
        raise StratError("the six removed simplices are not distinct")
    A_ids = [x for x in Bs.ids if x not in removed]
    if Bs.closure(A_ids) != set(A_ids):
        raise StratError("removing the six simplices does not leave a subcomplex")
    current = set(A_ids)
    plan = [(vJk, s - 1), (vJ, s), (vJp, k)]
    steps: list[HornStep] = []
    ok = True
    for verts, h in plan:
        fl = tuple(label[v] for v in verts)
        F = Flag(P, fl)
        horn = strat_horn(F, h)
        cur = B.sub(current)
        # attaching map: vertex t of the horn goes to verts[t]
        imgs = {x: (_ident(horn.source.sset.dim(x)), cid([verts[int(t)] for t in x.split(",")]))
                for x in horn.source.sset.ids}
        lands = all(y in current for _, y in imgs.values())
        added = (cid(verts), cid(drop(verts, h)))
        iso = False
        if lands:
            u = StratMap(SMap(horn.source.sset, cur.sset, imgs, check=False), PosetMap.identity(P), horn.source, cur)
            po = strat_pushout(horn, u, prefix="new:")
            # canonical map from the pushout into B
            cell = {x: (_ident(horn.target.sset.dim(x)), cid([verts[int(t)] for t in x.split(",")]))
                    for x in horn.target.sset.ids}
            canon = {z: Bs.simp(z) for z in cur.sset.ids}
            for b, nm in po.new_names.items():
                canon[nm] = cell[b]
            cm = SMap(po.obj.sset, Bs, canon)
            image = {y for _, y in canon.values()}
            iso = cm.is_mono() and image == current | set(added) and not (set(added) & current)
        ok &= iso and classify_horn(F, h).inner
        steps.append(HornStep(f"Lambda^{flag_name(fl)}_{h}", fl, h, classify_horn(F, h).inner, added, iso))
        current |= set(added)
    ok &= current == set(Bs.ids) and len(Bs) == len(A_ids) + 6
    return HornDecomposition(e, k, s, Jp, Jpp, len(A_ids), len(Bs), steps, bool(ok))


def valid_horn_decomposition_inputs(P: Poset, max_len: int) -> list[tuple[Flag, int]]:
    """Every ``(J, k)`` meeting the hypotheses with ``|J| <= max_len``."""
    out = []
    for J in flags(P, max_len - 1):
        e = J.entries
        n = J.dim
        if n < 2 or len(set(e)) < 3:
            continue
        s = _second_highest_index(e, P)
        for k in range(1, n):
            if e[k] == e[0] and s >= 2 and s > k:
                out.append((J, k))
    return out


# -- circle -------------------------------------------------------------------------------------


@dataclass
class CirclePushout:
    circle: StratSSet
    poset_is_singleton: bool
    legs_commute: bool
    left: StratMap
    right: StratMap


def circle_pushout() -> CirclePushout:
    """Two stratified intervals glued along their boundary with a twist.

    The boundary sits over the antichain ``{0, 1}`` so the twist swapping its
    points is a stratified map.
    """
    I = strat_simplex(Flag(chain(1), ("0", "1")))
    anti = antichain(["0", "1"])
    bd = StratSSet(standard("boundary", 1), anti, {"0": ("0",), "1": ("1",)})
    inc = StratMap(SMap(bd.sset, I.sset, {"0": I.sset.simp("0"), "1": I.sset.simp("1")}),
                   PosetMap(anti, I.poset, {"0": "0", "1": "1"}), bd, I)
    twist = StratMap(SMap(bd.sset, bd.sset, {"0": bd.sset.simp("1"), "1": bd.sset.simp("0")}),
                     PosetMap(anti, anti, {"0": "1", "1": "0"}), bd, bd)
    po = strat_pushout(inc, twist.then(inc))
    po.obj.validate()
    lhs = inc.then(po.left)
    rhs = twist.then(inc).then(po.right)
    commute = lhs.smap.images == rhs.smap.images and lhs.pmap.assignment == rhs.pmap.assignment
    return CirclePushout(po.obj, len(po.obj.poset) == 1, commute, po.left, po.right)
