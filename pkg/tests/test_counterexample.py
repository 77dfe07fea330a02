from __future__ import annotations

import math
import random

import pytest

from stratkit.counterexample import (
    _adjacency,
    above_region_components,
    build_counterexample,
    build_zigzag,
    obstruction_check,
    sample_exit_path,
    straight_path,
    winding_vector,
)
from stratkit.homology import homology
from stratkit.links import diagrammatic_equiv_check
from stratkit.simplicial import EdgePath, pi0
from stratkit.stratified import stratum


@pytest.fixture(scope="module")
def inst4():
    return build_counterexample(4)


def planar_winding(inst, vertices: list[str], point: str) -> int:
    """Winding number of the closed planar polygon through ``vertices`` around ``point``."""
    px, py = inst.coords[point]
    total = 0.0
    for u, w in zip(vertices, vertices[1:]):
        ux, uy = inst.coords[u]
        wx, wy = inst.coords[w]
        a = math.atan2(uy - py, ux - px)
        b = math.atan2(wy - py, wx - px)
        d = (b - a + math.pi) % (2 * math.pi) - math.pi
        total += d
    return round(total / (2 * math.pi))


def closed_loop(inst, path: EdgePath) -> list[str]:
    return path.vertices + straight_path(inst).reversed().vertices[1:]


@pytest.mark.parametrize("N", [1, 2, 3])
def test_instance_invariants(N):
    inst = build_counterexample(N)
    marked = [f"b{n}" for n in range(1, N + 1)] + [f"c{n}" for n in range(1, N + 1)]
    pX = stratum(inst.X, "p")
    assert sorted(pX.nondeg(0)) == sorted(["a", "a'"] + marked)
    assert len(pX.nondeg(1)) == 1 and sorted(pX.vertex_ids(pX.nondeg(1)[0])) == sorted(["a", "a'"])
    assert pX.max_dim == 1
    pY = stratum(inst.Y, "p")
    assert sorted(pY.nondeg(0)) == sorted(["a"] + marked) and pY.max_dim == 0
    inst.r.validate()
    img = {v: inst.r.smap.images[v][1] for v in inst.X.sset.nondeg(0)}
    assert img["a'"] == "a"
    for v in ["a", "b", "c", "b'", "c'"] + marked:
        assert img[v] == v
    assert inst.r.pmap.is_iso()


def test_n1_pstratum_shape():
    inst = build_counterexample(1)
    pX = stratum(inst.X, "p")
    assert len(pX.nondeg(0)) == 4 and len(pX.nondeg(1)) == 1
    assert len(pi0(pX)) == 3


@pytest.mark.parametrize("N", range(1, 7))
def test_above_region_splits(N):
    inst = build_counterexample(N)
    for which in ("X", "Y"):
        ar = above_region_components(inst, which)
        assert ar.components == 2 and ar.separated, (N, which)


def test_underlying_spaces_are_discs(inst4):
    for Z in (inst4.X, inst4.Y):
        assert len(pi0(Z.sset)) == 1
        assert homology(Z.sset, 1).rank == 0 and homology(Z.sset, 2).rank == 0


def test_zigzag_windings(inst4):
    z = build_zigzag(inst4)
    assert z.path.start == "b" and z.path.end == "a"
    assert [s for _, s in z.sides] == ["left", "right", "left", "right"]
    wb, wc = winding_vector(inst4, z.path, "b"), winding_vector(inst4, z.path, "c")
    assert wb in {(1, 0, 1, 0), (-1, 0, -1, 0)}
    assert wc in {(0, 1, 0, 1), (0, -1, 0, -1)}
    # reading the path backwards describes the same path
    assert winding_vector(inst4, z.path.reversed(), "b") == wb
    st = straight_path(inst4)
    assert not any(winding_vector(inst4, st, "b")) and not any(winding_vector(inst4, st, "c"))


@pytest.mark.parametrize("N", [2, 3, 5])
def test_zigzag_alternates(N):
    inst = build_counterexample(N)
    z = build_zigzag(inst)
    wb, wc = winding_vector(inst, z.path, "b"), winding_vector(inst, z.path, "c")
    assert [abs(x) for x in wb] == [n % 2 for n in range(1, N + 1)]
    assert [abs(x) for x in wc] == [(n + 1) % 2 for n in range(1, N + 1)]


def test_zigzag_needs_two_levels():
    with pytest.raises(ValueError):
        build_zigzag(build_counterexample(1))


def test_windings_match_planar_winding_numbers(inst4):
    rng = random.Random(11)
    adj = _adjacency(inst4.X.sset)
    rmap = {v: inst4.r.smap.images[v][1] for v in inst4.X.sset.nondeg(0)}
    paths = [build_zigzag(inst4).path, straight_path(inst4)]
    for _ in range(40):
        vs = [rmap[v] for v in sample_exit_path(inst4, rng, adj)]
        vs = [v for k, v in enumerate(vs) if k == 0 or v != vs[k - 1]]
        paths.append(EdgePath.through(inst4.Y.sset, vs).reversed())
    for path in paths:
        loop = closed_loop(inst4, path)
        for fam in ("b", "c"):
            got = winding_vector(inst4, path, fam)
            want = tuple(planar_winding(inst4, loop, f"{fam}{n}") for n in range(1, 5))
            assert got == want


def test_sampled_paths_are_exit_paths(inst4):
    rng = random.Random(5)
    X = inst4.X
    for _ in range(100):
        vs = sample_exit_path(inst4, rng)
        assert vs[0] == "a" and vs[-1] == "b"
        labels = [X.vertex_label(v) for v in vs]
        k = labels.index("q")
        assert set(labels[:k]) == {"p"} and set(labels[k:]) == {"q"}
        hs = [inst4.height(v) for v in vs[k:]]
        assert all(h2 <= h1 + 1e-9 for h1, h2 in zip(hs, hs[1:]))
        EdgePath.through(X.sset, vs)


def test_obstruction_check_n4(inst4):
    rep = obstruction_check(inst4, samples=200, seed=3)
    assert rep["verdict"] == "pass"
    assert rep["zigzag"]["dual_support"]
    s = rep["samples"]
    assert s["dual_support_violations"] == 0 and s["zigzag_matches"] == 0
    assert s["with_b_winding"] > 0 and s["with_c_winding"] > 0


def test_obstruction_check_n1_is_vacuous():
    rep = obstruction_check(build_counterexample(1), samples=50, seed=0)
    assert rep["verdict"] == "pass" and "zigzag" not in rep


def test_r_is_consistent_with_a_diagrammatic_equivalence():
    # the collapse of a'a does not change pi0 or H_1 of any link
    v = diagrammatic_equiv_check(build_counterexample(1).r, 2, 2)
    assert v.passed and v.h1_iso is True and v.flags_failing == []


def test_r_at_n4_pi0_only(inst4):
    v = diagrammatic_equiv_check(inst4.r, 2, 1)
    assert v.pi0_bijective and v.h1_iso is None and v.passed
    assert v.entries["[p<q]"]["pi0"] == [9, 9]
