"""Finite simplicial sets presented by their nondegenerate simplices.

A simplex of ``X`` is a pair ``(alpha, x)`` with ``x`` the id of a
nondegenerate simplex of dimension ``d`` and ``alpha`` a monotone surjection
``[m] -> [d]`` stored as a tuple of length ``m + 1``. This is the
Eilenberg-Zilber normal form: ``(alpha, x)`` stands for ``alpha^* x`` and the
degeneracy word of ``alpha`` is the decreasing list of ``j`` with
``alpha[j] == alpha[j + 1]``. Faces of nondegenerate simplices are stored in
that normal form; all other simplicial operators are derived from them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Simp",
    "SimplicialError",
    "BudgetExceeded",
    "SimplicialSet",
    "SMap",
    "EdgePath",
    "word_to_surjection",
    "surjection_to_word",
    "standard",
    "from_complex",
    "yoneda",
    "Product",
    "product",
    "product_map",
    "Pushout",
    "pushout",
    "hom_enumerate",
    "iter_homs",
    "pi0",
    "delete_vertex_star",
    "disjoint_union",
]

Simp = tuple[tuple[int, ...], str]


class SimplicialError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """A combinatorial search exceeded its node budget."""


def _ident(d: int) -> tuple[int, ...]:
    return tuple(range(d + 1))


def word_to_surjection(word: Sequence[int], d: int) -> tuple[int, ...]:
    """Surjection for ``s_{i_k} ... s_{i_1}`` applied to a ``d``-simplex."""
    ws = list(word)
    if any(a <= b for a, b in zip(ws, ws[1:])):
        raise SimplicialError(f"degeneracy word {ws} is not strictly decreasing")
    m = d + len(ws)
    if ws and (ws[-1] < 0 or ws[0] >= m):
        raise SimplicialError(f"degeneracy word {ws} out of range for dimension {m}")
    rep = set(ws)
    out = [0]
    for j in range(m):
        out.append(out[-1] if j in rep else out[-1] + 1)
    return tuple(out)


def surjection_to_word(alpha: Sequence[int]) -> list[int]:
    return [j for j in range(len(alpha) - 2, -1, -1) if alpha[j] == alpha[j + 1]]


def _is_surjection(alpha: Sequence[int], d: int) -> bool:
    return (
        len(alpha) >= 1
        and alpha[0] == 0
        and alpha[-1] == d
        and all(b - a in (0, 1) for a, b in zip(alpha, alpha[1:]))
    )


def _coface(m: int, i: int) -> tuple[int, ...]:
    """delta^i : [m-1] -> [m] as a tuple."""
    return tuple(t if t < i else t + 1 for t in range(m))


def _codegen(m: int, i: int) -> tuple[int, ...]:
    """sigma^i : [m+1] -> [m] as a tuple."""
    return tuple(t if t <= i else t - 1 for t in range(m + 2))


class SimplicialSet:
    """A finite simplicial set.

    ``faces`` maps every nondegenerate simplex id to the tuple of its faces
    ``(d_0 x, ..., d_n x)`` in normal form; vertices map to ``()``.
    """

    def __init__(self, faces: Mapping[str, Sequence[Simp]], *, check: bool = True):
        self._faces: dict[str, tuple[Simp, ...]] = {
            k: tuple((tuple(a), t) for a, t in v) for k, v in faces.items()
        }
        self._dim: dict[str, int] = {}
        for k, fs in self._faces.items():
            self._dim[k] = len(fs) - 1 if fs else 0
        by_dim: dict[int, list[str]] = {}
        for k, d in self._dim.items():
            by_dim.setdefault(d, []).append(k)
        self.by_dim: dict[int, list[str]] = {d: sorted(v) for d, v in sorted(by_dim.items())}
        self._restrict_cache: dict[tuple[str, tuple[int, ...]], Simp] = {}
        self._index_cache: dict[int, dict[tuple[Simp, ...], list[Simp]]] = {}
        if check:
            self.validate()

    # -- basic data -------------------------------------------------------
    @property
    def ids(self) -> list[str]:
        return [x for d in self.by_dim for x in self.by_dim[d]]

    @property
    def max_dim(self) -> int:
        return max(self.by_dim, default=-1)

    def nondeg(self, n: int) -> list[str]:
        return self.by_dim.get(n, [])

    def dim(self, x: str) -> int:
        return self._dim[x]

    def faces_of(self, x: str) -> tuple[Simp, ...]:
        return self._faces[x]

    def __contains__(self, x: object) -> bool:
        return x in self._faces

    def __len__(self) -> int:
        return len(self._faces)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimplicialSet) and self._faces == other._faces

    def __hash__(self) -> int:  # pragma: no cover - identity semantics suffice
        return id(self)

    def __repr__(self) -> str:
        counts = ", ".join(f"{d}:{len(v)}" for d, v in self.by_dim.items())
        return f"SimplicialSet({counts})"

    def simp(self, x: str) -> Simp:
        """The nondegenerate simplex ``x`` as a simplex."""
        return (_ident(self._dim[x]), x)

    def is_empty(self) -> bool:
        return not self._faces

    # -- simplicial operators ---------------------------------------------
    def _restrict(self, x: str, gamma: tuple[int, ...]) -> Simp:
        key = (x, gamma)
        hit = self._restrict_cache.get(key)
        if hit is not None:
            return hit
        d = self._dim[x]
        img = set(gamma)
        if len(img) == d + 1:
            out = (gamma, x)
        else:
            missing = max(set(range(d + 1)) - img)
            beta, y = self._faces[x][missing]
            g2 = tuple(v if v < missing else v - 1 for v in gamma)
            out = self._restrict(y, tuple(beta[t] for t in g2))
        self._restrict_cache[key] = out
        return out

    def apply(self, s: Simp, op: Sequence[int]) -> Simp:
        """``s o op`` for a monotone ``op : [k] -> [m]`` given as a tuple."""
        alpha, x = s
        return self._restrict(x, tuple(alpha[t] for t in op))

    def face(self, s: Simp, i: int) -> Simp:
        m = len(s[0]) - 1
        if not 0 <= i <= m or m == 0:
            raise SimplicialError(f"face d_{i} undefined in dimension {m}")
        return self.apply(s, _coface(m, i))

    def degen(self, s: Simp, i: int) -> Simp:
        m = len(s[0]) - 1
        if not 0 <= i <= m:
            raise SimplicialError(f"degeneracy s_{i} undefined in dimension {m}")
        return self.apply(s, _codegen(m, i))

    def vertices(self, s: Simp) -> tuple[str, ...]:
        return tuple(self.apply(s, (t,))[1] for t in range(len(s[0])))

    def vertex_ids(self, x: str) -> tuple[str, ...]:
        return self.vertices(self.simp(x))

    def simplices(self, m: int) -> list[Simp]:
        """All ``m``-simplices, degenerate ones included."""
        out = []
        for d in range(min(m, self.max_dim) + 1):
            for jumps in combinations(range(m), d):
                js = set(jumps)
                alpha = [0]
                for t in range(m):
                    alpha.append(alpha[-1] + (1 if t in js else 0))
                a = tuple(alpha)
                out.extend((a, x) for x in self.by_dim.get(d, []))
        return out

    def face_index(self, m: int) -> dict[tuple[Simp, ...], list[Simp]]:
        """``m``-simplices keyed by their face tuples (``m >= 1``)."""
        idx = self._index_cache.get(m)
        if idx is None:
            idx = {}
            for s in self.simplices(m):
                key = tuple(self.face(s, i) for i in range(m + 1))
                idx.setdefault(key, []).append(s)
            self._index_cache[m] = idx
        return idx

    # -- checks -----------------------------------------------------------
    def validate(self) -> None:
        for x, fs in self._faces.items():
            d = self._dim[x]
            if d == 0:
                continue
            for i, (alpha, y) in enumerate(fs):
                if y not in self._faces:
                    raise SimplicialError(f"face d_{i} of {x!r} references unknown simplex {y!r}")
                if len(alpha) != d or not _is_surjection(alpha, self._dim[y]):
                    raise SimplicialError(f"face d_{i} of {x!r} has malformed degeneracy data")
        # simplicial identities d_i d_j = d_{j-1} d_i for i < j
        for x in self.ids:
            d = self._dim[x]
            s = self.simp(x)
            for j in range(d + 1):
                for i in range(j):
                    if d < 2:
                        continue
                    lhs = self.face(self.face(s, j), i)
                    rhs = self.face(self.face(s, i), j - 1)
                    if lhs != rhs:
                        raise SimplicialError(
                            f"simplicial identity d_{i}d_{j} = d_{j-1}d_{i} fails on {x!r}"
                        )

    def is_complex(self) -> bool:
        """True iff every nondegenerate simplex is determined by distinct vertices."""
        seen: set[frozenset[str]] = set()
        for x in self.ids:
            vs = self.vertex_ids(x)
            if len(set(vs)) != len(vs):
                return False
            fs = frozenset(vs)
            if fs in seen:
                return False
            seen.add(fs)
            if any(a != _ident(len(a) - 1) for a, _ in self._faces[x]):
                return False
        return True

    # -- sub-objects --------------------------------------------------------
    def closure(self, ids: Iterable[str]) -> set[str]:
        out: set[str] = set()
        stack = list(ids)
        while stack:
            x = stack.pop()
            if x in out:
                continue
            out.add(x)
            stack.extend(y for _, y in self._faces[x])
        return out

    def sub(self, ids: Iterable[str]) -> "SimplicialSet":
        """The sub-simplicial set on a face-closed set of nondegenerate ids."""
        keep = set(ids)
        if self.closure(keep) != keep:
            raise SimplicialError("subset is not closed under faces")
        return SimplicialSet({x: self._faces[x] for x in keep}, check=False)

    def inclusion_of(self, sub: "SimplicialSet") -> "SMap":
        return SMap(sub, self, {x: sub.simp(x) for x in sub.ids}, check=False)


def standard(kind: str, n: int, k: int | None = None) -> SimplicialSet:
    """``Delta^n``, ``dDelta^n`` or ``Lambda^n_k`` with vertex-subset ids."""
    if n < 0:
        raise SimplicialError("n must be >= 0")
    verts = [str(i) for i in range(n + 1)]
    subsets = [c for r in range(1, n + 2) for c in combinations(range(n + 1), r)]
    if kind == "simplex":
        keep = subsets
    elif kind == "boundary":
        keep = [c for c in subsets if len(c) < n + 1]
    elif kind == "horn":
        if k is None or not 0 <= k <= n:
            raise SimplicialError(f"horn index k={k} out of range for n={n}")
        keep = [c for c in subsets if len(c) <= n and not (len(c) == n and k not in c)]
    else:
        raise SimplicialError(f"unknown standard object {kind!r}")
    return from_complex([tuple(verts[i] for i in c) for c in keep], close=False)


def _cid(vs: Sequence[str]) -> str:
    return ",".join(vs)


def from_complex(
    facets: Iterable[Sequence[str]],
    *,
    close: bool = True,
    key: Callable[[str], object] | None = None,
) -> SimplicialSet:
    """Ordered simplicial complex from vertex tuples.

    Each tuple is sorted with ``key`` (default: as given when ``key`` is
    None and the tuple is already in order). Simplex ids are the comma-joined
    vertex names.
    """
    simplices: set[tuple[str, ...]] = set()
    for f in facets:
        vs = tuple(sorted(f, key=key)) if key is not None else tuple(f)
        if len(set(vs)) != len(vs):
            raise SimplicialError(f"repeated vertex in {vs}")
        if close:
            for r in range(1, len(vs) + 1):
                simplices.update(combinations(vs, r))
        else:
            simplices.add(vs)
    faces: dict[str, list[Simp]] = {}
    for vs in simplices:
        d = len(vs) - 1
        if d == 0:
            faces[_cid(vs)] = []
        else:
            faces[_cid(vs)] = [(_ident(d - 1), _cid(vs[:i] + vs[i + 1 :])) for i in range(d + 1)]
    return SimplicialSet(faces, check=False)


@dataclass(frozen=True)
class SMap:
    """A simplicial map given on nondegenerate simplices."""

    source: SimplicialSet
    target: SimplicialSet
    images: Mapping[str, Simp]
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.check:
            self.validate()

    def validate(self) -> None:
        X, Y = self.source, self.target
        for x in X.ids:
            if x not in self.images:
                raise SimplicialError(f"map undefined on {x!r}")
            alpha, y = self.images[x]
            if y not in Y or len(alpha) != X.dim(x) + 1 or not _is_surjection(alpha, Y.dim(y)):
                raise SimplicialError(f"image of {x!r} is malformed")
        for x in X.ids:
            s = X.simp(x)
            for i in range(X.dim(x) + 1 if X.dim(x) > 0 else 0):
                if self(X.face(s, i)) != Y.face(self.images[x], i):
                    raise SimplicialError(f"map does not commute with d_{i} on {x!r}")

    def __call__(self, s: Simp) -> Simp:
        alpha, x = s
        return self.target.apply(self.images[x], alpha)

    def then(self, other: "SMap") -> "SMap":
        """``other o self``."""
        return SMap(
            self.source,
            other.target,
            {x: other(self.images[x]) for x in self.source.ids},
            check=False,
        )

    def is_mono(self) -> bool:
        seen = set()
        for x in self.source.ids:
            alpha, y = self.images[x]
            if alpha != _ident(len(alpha) - 1) or y in seen:
                return False
            seen.add(y)
        return True

    def image_ids(self) -> set[str]:
        return self.target.closure(y for _, y in self.images.values())

    def key(self) -> tuple:
        return tuple(sorted(self.images.items()))

    @staticmethod
    def identity(X: SimplicialSet) -> "SMap":
        return SMap(X, X, {x: X.simp(x) for x in X.ids}, check=False)


def yoneda(X: SimplicialSet, s: Simp) -> SMap:
    """The map ``Delta^m -> X`` classifying the ``m``-simplex ``s``."""
    m = len(s[0]) - 1
    D = standard("simplex", m)
    imgs = {}
    for c in D.ids:
        idx = tuple(int(v) for v in c.split(","))
        imgs[c] = X.apply(s, idx)
    return SMap(D, X, imgs, check=False)


# -- products -----------------------------------------------------------------


def _sname(s: Simp) -> str:
    alpha, x = s
    if alpha == _ident(len(alpha) - 1):
        return x
    return x + "." + "".join(f"s{j}" for j in surjection_to_word(alpha))


def _lattice_paths(d: int, e: int, m: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    def rec(a: list[int], b: list[int]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        if len(a) == m + 1:
            if a[-1] == d and b[-1] == e:
                yield tuple(a), tuple(b)
            return
        left = m + 1 - len(a)
        for da, db in ((1, 0), (0, 1), (1, 1)):
            na, nb = a[-1] + da, b[-1] + db
            if na <= d and nb <= e and (d - na) + (e - nb) >= left - 1 and max(d - na, e - nb) <= left - 1:
                yield from rec(a + [na], b + [nb])

    yield from rec([0], [0])


@dataclass
class Product:
    sset: SimplicialSet
    left: SimplicialSet
    right: SimplicialSet
    components: dict[str, tuple[Simp, Simp]]
    pr1: SMap
    pr2: SMap
    _lookup: dict[tuple[Simp, Simp], str] = field(repr=False, default_factory=dict)

    def pair(self, sx: Simp, sy: Simp) -> Simp:
        """Normal form of the product simplex ``(sx, sy)`` (equal dimensions)."""
        a, x = sx
        b, y = sy
        if len(a) != len(b):
            raise SimplicialError("components of a product simplex must have equal dimension")
        gamma = [0]
        reps = [0]
        for t in range(1, len(a)):
            if a[t] == a[t - 1] and b[t] == b[t - 1]:
                gamma.append(gamma[-1])
            else:
                gamma.append(gamma[-1] + 1)
                reps.append(t)
        ra = tuple(a[t] for t in reps)
        rb = tuple(b[t] for t in reps)
        key = ((ra, x), (rb, y))
        try:
            return tuple(gamma), self._lookup[key]
        except KeyError:
            raise SimplicialError("product simplex beyond the dimension cap") from None


def product(X: SimplicialSet, Y: SimplicialSet, dim_cap: int | None = None) -> Product:
    """``X x Y`` truncated above ``dim_cap`` (no truncation when None)."""
    cap = X.max_dim + Y.max_dim if dim_cap is None else dim_cap
    comps: dict[str, tuple[Simp, Simp]] = {}
    lookup: dict[tuple[Simp, Simp], str] = {}
    for x in X.ids:
        d = X.dim(x)
        for y in Y.ids:
            e = Y.dim(y)
            for m in range(max(d, e), min(d + e, cap) + 1):
                for a, b in _lattice_paths(d, e, m):
                    sx, sy = (a, x), (b, y)
                    pid = f"({_sname(sx)};{_sname(sy)})"
                    comps[pid] = (sx, sy)
                    lookup[(sx, sy)] = pid
    prod = Product(SimplicialSet({}, check=False), X, Y, comps, None, None, lookup)  # type: ignore[arg-type]
    faces: dict[str, list[Simp]] = {}
    for pid, (sx, sy) in comps.items():
        m = len(sx[0]) - 1
        if m == 0:
            faces[pid] = []
        else:
            faces[pid] = [prod.pair(X.face(sx, i), Y.face(sy, i)) for i in range(m + 1)]
    P = SimplicialSet(faces, check=False)
    prod.sset = P
    prod.pr1 = SMap(P, X, {p: comps[p][0] for p in P.ids}, check=False)
    prod.pr2 = SMap(P, Y, {p: comps[p][1] for p in P.ids}, check=False)
    return prod


def product_map(f: SMap, g: SMap, src: Product, tgt: Product) -> SMap:
    """``f x g : src -> tgt``."""
    imgs = {}
    for pid, (sx, sy) in src.components.items():
        imgs[pid] = tgt.pair(f(sx), g(sy))
    return SMap(src.sset, tgt.sset, imgs, check=False)


# -- pushouts -----------------------------------------------------------------


@dataclass
class Pushout:
    sset: SimplicialSet
    left: SMap  # B -> Z
    right: SMap  # C -> Z
    new_names: dict[str, str]  # B-id -> Z-id for cells not in the image of f


def pushout(f: SMap, g: SMap, *, prefix: str = "") -> Pushout:
    """Pushout of ``B <-f- A -g-> C`` with ``f`` a monomorphism.

    ``C`` keeps its ids; simplices of ``B`` outside ``f(A)`` keep their ids
    (with ``prefix`` prepended and primes appended on collision).
    """
    if f.source is not g.source and f.source != g.source:
        raise SimplicialError("pushout legs must share a source")
    if not f.is_mono():
        raise SimplicialError("first pushout leg must be a monomorphism")
    B, C = f.target, g.target
    inv = {f.images[a][1]: a for a in f.source.ids}
    used = set(C.ids)
    names: dict[str, str] = {}
    for b in B.ids:
        if b in inv:
            continue
        nm = prefix + b
        while nm in used:
            nm += "'"
        used.add(nm)
        names[b] = nm

    def image(s: Simp) -> Simp:
        beta, b = s
        if b in inv:
            return C.apply(g.images[inv[b]], beta)
        return beta, names[b]

    faces: dict[str, list[Simp]] = {c: list(C.faces_of(c)) for c in C.ids}
    for b, nm in names.items():
        faces[nm] = [image(s) for s in B.faces_of(b)]
    Z = SimplicialSet(faces, check=False)
    left = SMap(B, Z, {b: image(B.simp(b)) for b in B.ids}, check=False)
    right = SMap(C, Z, {c: C.simp(c) for c in C.ids}, check=False)
    return Pushout(Z, left, right, names)


def disjoint_union(X: SimplicialSet, Y: SimplicialSet) -> tuple[SimplicialSet, SMap, SMap]:
    empty = SimplicialSet({}, check=False)
    po = pushout(SMap(empty, X, {}, check=False), SMap(empty, Y, {}, check=False))
    return po.sset, po.left, po.right


# -- hom sets -------------------------------------------------------------------


def iter_homs(
    X: SimplicialSet,
    Y: SimplicialSet,
    *,
    budget: int | None = None,
    fixed: Mapping[str, Simp] | None = None,
    allowed: Callable[[str, Simp, dict[str, Simp]], bool] | None = None,
) -> Iterator[dict[str, Simp]]:
    """Yield image dictionaries of all simplicial maps ``X -> Y``.

    Nondegenerate simplices are assigned by increasing dimension; a
    candidate for ``x`` is looked up from the images of its faces, so every
    partial assignment is already face-compatible. ``fixed`` pins images,
    ``allowed(x, candidate, partial)`` prunes.
    """
    order = X.ids
    fixed = dict(fixed or {})
    nodes = 0
    asg: dict[str, Simp] = {}
    vertex_cands = [((0,), v) for v in Y.nondeg(0)]

    def cands(x: str) -> list[Simp]:
        d = X.dim(x)
        if d == 0:
            base = vertex_cands
        else:
            key = []
            for alpha, y in X.faces_of(x):
                key.append(Y.apply(asg[y], alpha))
            base = Y.face_index(d).get(tuple(key), [])
        if x in fixed:
            return [fixed[x]] if fixed[x] in base else []
        return base

    def rec(i: int) -> Iterator[dict[str, Simp]]:
        nonlocal nodes
        if i == len(order):
            yield dict(asg)
            return
        x = order[i]
        for c in cands(x):
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(f"hom enumeration exceeded {budget} search nodes")
            if allowed is not None and not allowed(x, c, asg):
                continue
            asg[x] = c
            yield from rec(i + 1)
            del asg[x]

    yield from rec(0)


def hom_enumerate(
    X: SimplicialSet,
    Y: SimplicialSet,
    budget: int | None = None,
    **kw,
) -> list[SMap]:
    """All simplicial maps ``X -> Y`` in deterministic search order."""
    return [SMap(X, Y, m, check=False) for m in iter_homs(X, Y, budget=budget, **kw)]


# -- connectivity ---------------------------------------------------------------


def pi0(X: SimplicialSet) -> list[list[str]]:
    """Connected components as sorted vertex lists, ordered by first vertex."""
    parent = {v: v for v in X.nondeg(0)}

    def find(v: str) -> str:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in X.nondeg(1):
        a, b = X.vertex_ids(e)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    comps: dict[str, list[str]] = {}
    for v in X.nondeg(0):
        comps.setdefault(find(v), []).append(v)
    return sorted((sorted(c) for c in comps.values()), key=lambda c: c[0])


def delete_vertex_star(X: SimplicialSet, v: str) -> SimplicialSet:
    """Full subcomplex on the simplices not containing ``v`` (complexes only)."""
    if v not in X or X.dim(v) != 0:
        raise SimplicialError(f"unknown vertex {v!r}")
    if not X.is_complex():
        raise SimplicialError("delete_vertex_star needs a simplicial complex")
    keep = [x for x in X.ids if v not in X.vertex_ids(x)]
    return X.sub(keep)


# -- edge paths -------------------------------------------------------------------


@dataclass(frozen=True)
class EdgePath:
    """A path of 1-simplices; ``+1`` traverses an edge from ``d_1`` to ``d_0``."""

    ambient: SimplicialSet
    steps: tuple[tuple[str, int], ...]
    start: str

    def __post_init__(self) -> None:
        X = self.ambient
        if self.start not in X or X.dim(self.start) != 0:
            raise SimplicialError(f"path start {self.start!r} is not a vertex")
        cur = self.start
        for e, sign in self.steps:
            if e not in X or X.dim(e) != 1:
                raise SimplicialError(f"{e!r} is not a nondegenerate edge")
            a, b = X.vertex_ids(e)
            if sign not in (1, -1):
                raise SimplicialError("orientation must be +1 or -1")
            src, dst = (a, b) if sign == 1 else (b, a)
            if src != cur:
                raise SimplicialError(f"step {e!r} does not start at {cur!r}")
            cur = dst

    @property
    def end(self) -> str:
        return self.vertices[-1]

    @property
    def vertices(self) -> list[str]:
        out = [self.start]
        for e, sign in self.steps:
            a, b = self.ambient.vertex_ids(e)
            out.append(b if sign == 1 else a)
        return out

    def is_closed(self) -> bool:
        return self.end == self.start

    def chain(self) -> dict[str, int]:
        c: dict[str, int] = {}
        for e, sign in self.steps:
            c[e] = c.get(e, 0) + sign
        return {k: v for k, v in c.items() if v}

    def reversed(self) -> "EdgePath":
        return EdgePath(self.ambient, tuple((e, -s) for e, s in reversed(self.steps)), self.end)

    def __add__(self, other: "EdgePath") -> "EdgePath":
        if other.start != self.end:
            raise SimplicialError("paths are not composable")
        return EdgePath(self.ambient, self.steps + other.steps, self.start)

    @staticmethod
    def through(X: SimplicialSet, vertices: Sequence[str]) -> "EdgePath":
        """The path visiting ``vertices`` in order (complexes: edges by endpoints)."""
        by_ends: dict[tuple[str, str], str] = {}
        for e in X.nondeg(1):
            a, b = X.vertex_ids(e)
            by_ends.setdefault((a, b), e)
        steps = []
        for u, w in zip(vertices, vertices[1:]):
            if (u, w) in by_ends:
                steps.append((by_ends[(u, w)], 1))
            elif (w, u) in by_ends:
                steps.append((by_ends[(w, u)], -1))
            else:
                raise SimplicialError(f"no edge between {u!r} and {w!r}")
        return EdgePath(X, tuple(steps), vertices[0])
