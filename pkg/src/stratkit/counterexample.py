"""A finite triangulated model of the planar counterexample over ``{p < q}``.

Geometry (planar coordinates kept as vertex metadata):

* ``a = (0, sqrt 3)``, ``b = (-1, 0)``, ``c = (1, 0)``, ``b' = (-2, 0)``,
  ``c' = (2, 0)`` and ``a'`` the barycenter of ``a, b, c``;
* ``b_n = (-1.5 / 2^n, (1 - 2^-n) sqrt 3)`` inside the triangle ``a b b'`` and
  ``c_n`` its mirror image inside ``a c c'``.

Above the height of ``a'`` each half carries a grid of rows ``0..2N+1`` and
columns ``0..3``; column 0 lies on the outer boundary, column 1 contains
``b_n`` (``c_n``) on row ``2n``, column 2 lies on the edge ``a b`` (``a c``)
and column 3 sits between that edge and the segment ``a' a``. A strip joins
row 0 to the base line ``b' ... c'``. The p-stratum of ``X`` is ``a``, ``a'``,
the edge ``a' a`` and the points ``b_n``, ``c_n``; ``Y`` contracts ``a' a``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .homology import Homology, homology
from .poset import PosetMap, chain
from .simplicial import EdgePath, SimplicialError, SimplicialSet, SMap, delete_vertex_star, from_complex, pi0
from .stratified import StratMap, StratSSet

__all__ = [
    "CounterexampleInstance",
    "build_counterexample",
    "above_region_components",
    "AboveRegion",
    "Zigzag",
    "build_zigzag",
    "straight_path",
    "winding_vector",
    "sample_exit_path",
    "obstruction_check",
]

SQ3 = math.sqrt(3.0)
COLS = 4
BASE = ["b'", "z1", "b", "z3", "z4", "z5", "c", "z7", "c'"]


@dataclass
class CounterexampleInstance:
    N: int
    X: StratSSet
    Y: StratSSet
    r: StratMap
    coords: dict[str, tuple[float, float]]
    marked: dict[str, str]
    grid: dict[str, list[list[str]]]  # "L"/"R" -> rows -> columns
    _punctures: dict[str, tuple[Homology, np.ndarray, int]] = field(default_factory=dict, repr=False)

    def height(self, v: str) -> float:
        return self.coords[v][1]

    @property
    def rows(self) -> int:
        return 2 * self.N + 2

    def label(self, v: str) -> str:
        return self.X.vertex_label(v) if v in self.X.sset else self.Y.vertex_label(v)


def _row_heights(N: int) -> list[float]:
    levels = [SQ3 / 3] + [(1 - 2.0**-n) * SQ3 for n in range(1, N + 1)]
    hs = []
    for n in range(N + 1):
        hs.append(levels[n])
        nxt = levels[n + 1] if n < N else SQ3
        hs.append((levels[n] + nxt) / 2)
    return hs


def _grid_name(side: str, r: int, j: int) -> str:
    return f"{side}{r}.{j}"


def build_counterexample(N: int) -> CounterexampleInstance:
    if N < 1:
        raise ValueError("N must be at least 1")
    coords: dict[str, tuple[float, float]] = {"a": (0.0, SQ3), "a'": (0.0, SQ3 / 3)}
    for k, nm in enumerate(BASE):
        coords[nm] = (-2.0 + 0.5 * k, 0.0)
    hs = _row_heights(N)
    R = len(hs) - 1
    grid: dict[str, list[list[str]]] = {"L": [], "R": []}
    for side, sgn in (("L", -1.0), ("R", 1.0)):
        for r, y in enumerate(hs):
            row = []
            xl = 2.0 * (SQ3 - y) / SQ3
            for j in range(COLS):
                if j == 1 and r % 2 == 0 and r >= 2:
                    nm = f"{'b' if side == 'L' else 'c'}{r // 2}"
                else:
                    nm = _grid_name(side, r, j)
                coords[nm] = (sgn * xl * (1 - j / 4), y)
                row.append(nm)
            grid[side].append(row)
    p_vertices = {"a", "a'"} | {f"b{n}" for n in range(1, N + 1)} | {f"c{n}" for n in range(1, N + 1)}

    tris: list[tuple[str, ...]] = []
    for side in ("L", "R"):
        G = grid[side]
        for r in range(R):
            for j in range(COLS - 1):
                tris.append((G[r][j], G[r][j + 1], G[r + 1][j]))
                tris.append((G[r][j + 1], G[r + 1][j], G[r + 1][j + 1]))
            tris.append(("a'", G[r][3], G[r + 1][3]))
        tris.append(("a'", G[R][3], "a"))
        for j in range(COLS - 1):
            tris.append(("a", G[R][j], G[R][j + 1]))
    row0 = grid["L"][0] + ["a'"] + grid["R"][0][::-1]
    for k in range(len(BASE) - 1):
        if k < 4:
            tris.append((BASE[k], BASE[k + 1], row0[k]))
            tris.append((BASE[k + 1], row0[k], row0[k + 1]))
        else:
            tris.append((BASE[k], BASE[k + 1], row0[k + 1]))
            tris.append((BASE[k], row0[k], row0[k + 1]))

    def key(v: str) -> tuple:
        return (v not in p_vertices, v)

    Xs = from_complex(tris, key=key)
    P = chain(1, ["p", "q"])
    vlab = {v: ("p" if v in p_vertices else "q") for v in Xs.nondeg(0)}
    X = StratSSet(Xs, P, {x: tuple(vlab[v] for v in Xs.vertex_ids(x)) for x in Xs.ids})

    def rv(v: str) -> str:
        return "a" if v == "a'" else v

    ytris = []
    for t in tris:
        img = tuple(dict.fromkeys(rv(v) for v in t))
        ytris.append(img)
    Ys = from_complex(ytris, key=key)
    Y = StratSSet(Ys, P, {x: tuple(vlab[v] for v in Ys.vertex_ids(x)) for x in Ys.ids})
    imgs = {}
    for x in Xs.ids:
        vs = [rv(v) for v in Xs.vertex_ids(x)]
        distinct = list(dict.fromkeys(vs))
        alpha = tuple(distinct.index(v) for v in vs)
        imgs[x] = (alpha, ",".join(distinct))
    r = StratMap(SMap(Xs, Ys, imgs), PosetMap.identity(P), X, Y)
    marked = {m: m for m in ["a", "a'", "b", "b'", "c", "c'"]}
    for n in range(1, N + 1):
        marked[f"b{n}"] = f"b{n}"
        marked[f"c{n}"] = f"c{n}"
    return CounterexampleInstance(N, X, Y, r, coords, marked, grid)


# -- the region above a' ----------------------------------------------------------------


@dataclass
class AboveRegion:
    components: int
    separated: bool
    sides: dict[str, int]


def above_region_components(inst: CounterexampleInstance, which: str = "X") -> AboveRegion:
    """Components of the q-stratum strictly above the height of ``a'``."""
    Z = inst.X if which == "X" else inst.Y
    h0 = inst.coords["a'"][1] + 1e-9
    keep = {v for v in Z.sset.nondeg(0) if Z.vertex_label(v) == "q" and inst.height(v) > h0}
    sub = Z.sset.sub(x for x in Z.sset.ids if set(Z.sset.vertex_ids(x)) <= keep)
    comps = pi0(sub)
    comp_of = {v: i for i, c in enumerate(comps) for v in c}
    side_comps = {}
    for side in ("L", "R"):
        cs = {comp_of[v] for v in keep if v.startswith(side)}
        side_comps[side] = cs
    separated = all(len(s) == 1 for s in side_comps.values()) and not (side_comps["L"] & side_comps["R"])
    return AboveRegion(len(comps), separated, {k: len(v) for k, v in side_comps.items()})


# -- paths --------------------------------------------------------------------------------


def straight_path(inst: CounterexampleInstance) -> EdgePath:
    """``b`` to ``a`` straight up the edge ``a b`` (column 2 of the left half)."""
    G = inst.grid["L"]
    verts = ["b"] + [G[r][2] for r in range(len(G))] + ["a"]
    return EdgePath.through(inst.Y.sset, verts)


@dataclass
class Zigzag:
    path: EdgePath
    sides: list[tuple[int, str]]  # (level n, "left"/"right")


def build_zigzag(inst: CounterexampleInstance) -> Zigzag:
    """Path from ``b`` to ``a`` passing left of ``b_1``, right of ``c_2``, and so on.

    Each level is visited by an excursion around the outer side of the
    marked point; consecutive excursions switch halves through the base
    strip, the only way across below the contracted segment.
    """
    N = inst.N
    if N < 2:
        raise ValueError("the zigzag needs N >= 2")
    base_in = {"L": "z3", "R": "z5"}
    verts = ["b", "z3"]
    sides = []
    for n in range(1, N + 1):
        side = "L" if n % 2 else "R"
        G = inst.grid[side]
        if n > 1:
            # climb from the base strip to row 2n - 1 on this side
            verts += [G[r][3] for r in range(0, 2 * n)]
        else:
            verts += [G[0][3], G[1][3]]
        lo, hi = 2 * n - 1, 2 * n + 1
        verts += [G[lo][2], G[lo][1], G[lo][0], G[2 * n][0], G[hi][0], G[hi][1], G[hi][2], G[hi][3]]
        sides.append((n, "left" if side == "L" else "right"))
        if n < N:
            other = "R" if side == "L" else "L"
            verts += [G[r][3] for r in range(hi - 1, -1, -1)]
            verts += [base_in[side], "z4", base_in[other]]
    verts.append("a")
    return Zigzag(EdgePath.through(inst.Y.sset, verts), sides)


def _puncture(inst: CounterexampleInstance, v: str) -> tuple[Homology, np.ndarray, int]:
    """H_1 of ``Y`` minus the open star of ``v``, its functional and orientation sign."""
    hit = inst._punctures.get(v)
    if hit is not None:
        return hit
    Ys = inst.Y.sset
    comp = delete_vertex_star(Ys, v)
    H = homology(comp, 1)
    if H.rank != 1 or H.torsion:
        raise SimplicialError(f"complement of {v} has H1 {H.descriptor()}, expected Z")
    F = H.functionals()[0]
    # orient so that the link of v, taken counterclockwise, counts +1
    cx, cy = inst.coords[v]
    link = sorted(
        {u for e in Ys.nondeg(1) for u in Ys.vertex_ids(e) if v in Ys.vertex_ids(e) and u != v},
        key=lambda u: math.atan2(inst.coords[u][1] - cy, inst.coords[u][0] - cx),
    )
    loop = EdgePath.through(comp, link + [link[0]])
    idx = {x: i for i, x in enumerate(H.basis)}
    val = sum(F[idx[e]] * s for e, s in loop.chain().items())
    if abs(val) != 1:
        raise SimplicialError(f"link of {v} does not generate H1 of its complement")
    out = (H, F, int(val))
    inst._punctures[v] = out
    return out


def winding_vector(inst: CounterexampleInstance, path: EdgePath, family: str) -> tuple[int, ...]:
    """Winding of ``path`` (closed by the straight segment) around each ``b_n`` or ``c_n``.

    Paths from ``a`` to ``b`` are reversed first, so the value describes the
    path read from ``b`` to ``a``.
    """
    if family not in ("b", "c"):
        raise ValueError("family must be 'b' or 'c'")
    if path.start == "a" and path.end == "b":
        path = path.reversed()
    if path.start != "b" or path.end != "a":
        raise SimplicialError("winding vectors need a path between b and a")
    Yp = EdgePath(inst.Y.sset, path.steps, path.start) if path.ambient is not inst.Y.sset else path
    loop = Yp + straight_path(inst).reversed()
    chain = loop.chain()
    out = []
    for n in range(1, inst.N + 1):
        H, F, sign = _puncture(inst, f"{family}{n}")
        idx = {x: i for i, x in enumerate(H.basis)}
        total = 0
        for e, s in chain.items():
            if e not in idx:
                raise SimplicialError(f"path meets the puncture {family}{n}")
            total += int(F[idx[e]]) * s
        out.append(sign * total)
    return tuple(out)


# -- sampling ---------------------------------------------------------------------------------


def _adjacency(S: SimplicialSet) -> dict[str, list[str]]:
    adj: dict[str, list[str]] = {v: [] for v in S.nondeg(0)}
    for e in S.nondeg(1):
        u, w = S.vertex_ids(e)
        adj[u].append(w)
        adj[w].append(u)
    return {v: sorted(ns) for v, ns in adj.items()}


def sample_exit_path(inst: CounterexampleInstance, rng: random.Random, adj: dict[str, list[str]] | None = None) -> list[str]:
    """A random exit path in ``X`` from ``a`` to ``b`` (vertex list).

    The path stays in the p-stratum ``{a, a'}`` for a prefix, exits into the
    q-stratum and then never gains height and never revisits a vertex until
    it reaches the base line, along which it walks to ``b``.
    """
    X = inst.X
    adj = adj or _adjacency(X.sset)
    for _ in range(1000):
        verts = ["a"]
        if rng.random() < 0.5:
            verts.append("a'")
        exits = [w for w in adj[verts[-1]] if X.vertex_label(w) == "q"]
        cur = rng.choice(exits)
        verts.append(cur)
        seen = set(verts)
        ok = True
        while inst.height(cur) > 1e-9:
            h = inst.height(cur)
            options = [
                w for w in adj[cur]
                if w not in seen and X.vertex_label(w) == "q" and inst.height(w) <= h + 1e-9
            ]
            if not options:
                ok = False
                break
            cur = rng.choice(options)
            verts.append(cur)
            seen.add(cur)
        if not ok:
            continue
        i, j = BASE.index(cur), BASE.index("b")
        step = 1 if j > i else -1
        verts += BASE[i + step : j + step : step] if i != j else []
        return verts
    raise RuntimeError("sampler could not complete a path")


def obstruction_check(inst: CounterexampleInstance, samples: int = 1000, seed: int = 0) -> dict:
    """Structural facts of the obstruction plus sampled evidence."""
    ax, ay = above_region_components(inst, "X"), above_region_components(inst, "Y")
    report: dict = {
        "N": inst.N,
        "above_region": {
            "X": {"components": ax.components, "separated": ax.separated},
            "Y": {"components": ay.components, "separated": ay.separated},
        },
    }
    zig_b = zig_c = None
    if inst.N >= 2:
        z = build_zigzag(inst)
        zig_b, zig_c = winding_vector(inst, z.path, "b"), winding_vector(inst, z.path, "c")
        report["zigzag"] = {
            "length": len(z.path.steps),
            "sides": [[n, s] for n, s in z.sides],
            "winding_b": list(zig_b),
            "winding_c": list(zig_c),
            "dual_support": any(zig_b) and any(zig_c),
        }
    st = straight_path(inst)
    report["straight"] = {"winding_b": list(winding_vector(inst, st, "b")), "winding_c": list(winding_vector(inst, st, "c"))}
    rng = random.Random(seed)
    adj = _adjacency(inst.X.sset)
    rmap = {v: inst.r.smap.images[v][1] for v in inst.X.sset.nondeg(0)}
    violations = matches = nonzero_b = nonzero_c = 0
    for _ in range(samples):
        vs = sample_exit_path(inst, rng, adj)
        pushed = [rmap[v] for v in vs]
        pushed = [v for k, v in enumerate(pushed) if k == 0 or v != pushed[k - 1]]
        path = EdgePath.through(inst.Y.sset, pushed)
        wb, wc = winding_vector(inst, path, "b"), winding_vector(inst, path, "c")
        nonzero_b += any(wb)
        nonzero_c += any(wc)
        if any(wb) and any(wc):
            violations += 1
        if zig_b is not None and _same_up_to_sign(wb, zig_b) and _same_up_to_sign(wc, zig_c):
            matches += 1
    report["samples"] = {
        "count": samples,
        "seed": seed,
        "dual_support_violations": violations,
        "zigzag_matches": matches,
        "with_b_winding": nonzero_b,
        "with_c_winding": nonzero_c,
    }
    ok = (
        ax.components == 2 and ax.separated and ay.components == 2 and ay.separated
        and violations == 0 and matches == 0
        and not any(report["straight"]["winding_b"]) and not any(report["straight"]["winding_c"])
    )
    if inst.N >= 2:
        ok = ok and report["zigzag"]["dual_support"]
    report["verdict"] = "pass" if ok else "fail"
    return report


def _same_up_to_sign(u: Sequence[int], v: Sequence[int]) -> bool:
    return tuple(u) == tuple(v) or tuple(u) == tuple(-x for x in v)
