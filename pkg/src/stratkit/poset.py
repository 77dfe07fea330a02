"""Finite posets, monotone maps, flags and subdivisions.

Elements are strings. Every enumeration is emitted in a deterministic
(lexicographic) order so that downstream constructions are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as _cartesian
from typing import Iterable, Mapping, Sequence

__all__ = [
    "PosetError",
    "Poset",
    "PosetMap",
    "Flag",
    "make_poset",
    "chain",
    "antichain",
    "flags",
    "regular_flags",
    "subdivision",
    "depth",
    "poset_pushout",
    "poset_maps",
    "product_poset",
]


class PosetError(ValueError):
    """Raised for malformed posets, maps or flags."""


@dataclass(frozen=True)
class Poset:
    elements: tuple[str, ...]
    # strict and non-strict pairs, closed; a <= a for all a
    le: frozenset[tuple[str, str]]
    _index: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.elements)})

    def __contains__(self, x: object) -> bool:
        return x in self._index

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, a: str, b: str) -> bool:
        return (a, b) in self.le

    def lt(self, a: str, b: str) -> bool:
        return a != b and (a, b) in self.le

    def index(self, a: str) -> int:
        try:
            return self._index[a]
        except KeyError:
            raise PosetError(f"unknown element {a!r}") from None

    def check(self, a: str) -> str:
        if a not in self._index:
            raise PosetError(f"unknown element {a!r}")
        return a

    def covers(self) -> list[tuple[str, str]]:
        """Hasse diagram edges, sorted."""
        out = []
        for a, b in sorted(self.le):
            if a == b:
                continue
            if not any(self.lt(a, c) and self.lt(c, b) for c in self.elements):
                out.append((a, b))
        return out

    def up(self, a: str) -> list[str]:
        return [b for b in self.elements if self.leq(a, b)]

    def subposet(self, keep: Iterable[str]) -> "Poset":
        keep = set(keep)
        for k in keep:
            self.check(k)
        elems = tuple(e for e in self.elements if e in keep)
        return Poset(elems, frozenset((a, b) for a, b in self.le if a in keep and b in keep))

    def is_chain(self, entries: Sequence[str]) -> bool:
        return all(self.leq(a, b) for a, b in zip(entries, entries[1:]))

    def linear_extension(self) -> list[str]:
        """Elements sorted by (number of elements below, name)."""
        below = {e: sum(1 for d in self.elements if self.lt(d, e)) for e in self.elements}
        return sorted(self.elements, key=lambda e: (below[e], e))

    def __str__(self) -> str:
        rel = ", ".join(f"{a}<{b}" for a, b in self.covers())
        return "{" + ", ".join(self.elements) + (" | " + rel if rel else "") + "}"


def make_poset(elements: Iterable[str], relation_pairs: Iterable[tuple[str, str]] = ()) -> Poset:
    """Poset generated by ``relation_pairs`` (reflexive-transitive closure).

    Raises :class:`PosetError` on unknown ids or on a cycle.
    """
    elems = tuple(sorted(set(elements)))
    idx = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    reach = [[i == j for j in range(n)] for i in range(n)]
    for a, b in relation_pairs:
        if a not in idx or b not in idx:
            missing = a if a not in idx else b
            raise PosetError(f"relation references unknown element {missing!r}")
        reach[idx[a]][idx[b]] = True
    # Warshall closure; n is small
    for k in range(n):
        rk = reach[k]
        for i in range(n):
            if reach[i][k]:
                ri = reach[i]
                for j in range(n):
                    if rk[j]:
                        ri[j] = True
    for i in range(n):
        for j in range(i + 1, n):
            if reach[i][j] and reach[j][i]:
                raise PosetError(f"cycle between {elems[i]!r} and {elems[j]!r}")
    le = frozenset((elems[i], elems[j]) for i in range(n) for j in range(n) if reach[i][j])
    return Poset(elems, le)


def chain(n: int, names: Sequence[str] | None = None) -> Poset:
    """The chain ``[n] = {0 < 1 < ... < n}``."""
    names = list(names) if names is not None else [str(i) for i in range(n + 1)]
    if len(names) != n + 1:
        raise PosetError("need n+1 names")
    return make_poset(names, zip(names, names[1:]))


def antichain(names: Iterable[str]) -> Poset:
    return make_poset(names)


@dataclass(frozen=True)
class PosetMap:
    source: Poset
    target: Poset
    assignment: Mapping[str, str]

    def __post_init__(self) -> None:
        for a in self.source.elements:
            if a not in self.assignment:
                raise PosetError(f"poset map undefined on {a!r}")
            self.target.check(self.assignment[a])
        for a, b in self.source.le:
            if not self.target.leq(self.assignment[a], self.assignment[b]):
                raise PosetError(f"poset map not monotone on {a!r} <= {b!r}")

    def __call__(self, a: str) -> str:
        return self.assignment[a]

    def on_flag(self, entries: Sequence[str]) -> tuple[str, ...]:
        return tuple(self.assignment[a] for a in entries)

    def then(self, other: "PosetMap") -> "PosetMap":
        return PosetMap(self.source, other.target, {a: other(self(a)) for a in self.source.elements})

    def is_iso(self) -> bool:
        img = [self.assignment[a] for a in self.source.elements]
        if len(set(img)) != len(img) or len(img) != len(self.target):
            return False
        inv = {v: k for k, v in self.assignment.items()}
        return all(self.source.leq(inv[a], inv[b]) for a, b in self.target.le)

    @staticmethod
    def identity(P: Poset) -> "PosetMap":
        return PosetMap(P, P, {a: a for a in P.elements})

    def key(self) -> tuple[tuple[str, str], ...]:
        return tuple(sorted(self.assignment.items()))


@dataclass(frozen=True)
class Flag:
    poset: Poset
    entries: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise PosetError("flags are nonempty")
        for e in self.entries:
            self.poset.check(e)
        if not self.poset.is_chain(self.entries):
            raise PosetError(f"entries {self.entries} are not weakly increasing")

    @property
    def dim(self) -> int:
        return len(self.entries) - 1

    @property
    def regular(self) -> bool:
        return len(set(self.entries)) == len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        parts = [self.entries[0]]
        for a, b in zip(self.entries, self.entries[1:]):
            parts.append(("<=" if a == b else "<") + b)
        return "[" + "".join(parts) + "]"


def _multichains(P: Poset, length: int) -> list[tuple[str, ...]]:
    out: list[tuple[str, ...]] = [(e,) for e in P.elements]
    for _ in range(length - 1):
        out = [c + (b,) for c in out for b in P.elements if P.leq(c[-1], b)]
    return out


def flags(P: Poset, max_len: int) -> list[Flag]:
    """All flags ``[p0 <= ... <= pn]`` with ``n <= max_len``, by length then lexicographically."""
    if max_len < 0:
        raise PosetError("max_len must be >= 0")
    out = []
    for n in range(max_len + 1):
        out.extend(Flag(P, c) for c in sorted(_multichains(P, n + 1)))
    return out


def regular_flags(P: Poset, max_len: int | None = None) -> list[Flag]:
    """Strictly increasing flags with at most ``max_len`` entries."""
    top = len(P) if max_len is None else max_len
    out = []
    chains: list[tuple[str, ...]] = [(e,) for e in P.elements]
    n = 1
    while chains and n <= top:
        out.extend(Flag(P, c) for c in sorted(chains))
        chains = [c + (b,) for c in chains for b in P.elements if P.lt(c[-1], b)]
        n += 1
    return out


def flag_name(entries: Sequence[str]) -> str:
    return "[" + "<".join(entries) + "]" if len(set(entries)) == len(entries) else (
        "[" + ",".join(entries) + "]"
    )


def subdivision(P: Poset) -> Poset:
    """``sd(P)``: regular flags ordered by inclusion (as subsequences)."""
    regs = [f.entries for f in regular_flags(P)]
    names = {c: flag_name(c) for c in regs}
    rel = []
    for a in regs:
        sa = set(a)
        for b in regs:
            if a != b and sa <= set(b):
                rel.append((names[a], names[b]))
    return make_poset(names.values(), rel)


def depth(P: Poset, p: str) -> int:
    """Length of the longest strictly increasing chain starting at ``p``."""
    P.check(p)
    memo: dict[str, int] = {}

    def go(a: str) -> int:
        if a not in memo:
            memo[a] = max((1 + go(b) for b in P.elements if P.lt(a, b)), default=0)
        return memo[a]

    return go(p)


def poset_maps(P: Poset, Q: Poset) -> list[PosetMap]:
    """All monotone maps ``P -> Q`` in lexicographic order of assignments."""
    order = P.linear_extension()
    out = []

    def rec(i: int, asg: dict[str, str]) -> None:
        if i == len(order):
            out.append(PosetMap(P, Q, dict(asg)))
            return
        a = order[i]
        for b in Q.elements:
            if all(Q.leq(asg[c], b) for c in order[:i] if P.leq(c, a)):
                asg[a] = b
                rec(i + 1, asg)
                del asg[a]

    rec(0, {})
    out.sort(key=PosetMap.key)
    return out


def product_poset(P: Poset, Q: Poset) -> tuple[Poset, dict[tuple[str, str], str]]:
    """Product order on ``P x Q``; elements are named ``(p,q)``."""
    names = {(p, q): f"({p},{q})" for p, q in _cartesian(P.elements, Q.elements)}
    rel = [
        (names[a], names[b])
        for a in names
        for b in names
        if P.leq(a[0], b[0]) and Q.leq(a[1], b[1])
    ]
    return make_poset(names.values(), rel), names


@dataclass(frozen=True)
class PosetPushout:
    poset: Poset
    left: PosetMap  # from the target of f
    right: PosetMap  # from the target of g


def poset_pushout(f: PosetMap, g: PosetMap) -> PosetPushout:
    """Pushout of ``A <-f- S -g-> B`` in Pos.

    The quotient of ``A + B`` by ``f(s) ~ g(s)`` carries the preorder generated
    by both orders; its strongly connected components are collapsed so that
    the result is antisymmetric. A class is named after its ``B`` members when
    it has any (joined by ``=``), otherwise after its ``A`` members.
    """
    if f.source != g.source:
        raise PosetError("pushout legs must share a source")
    A, B = f.target, g.target
    nodes = [("A", a) for a in A.elements] + [("B", b) for b in B.elements]
    parent = {n: n for n in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for s in f.source.elements:
        union(("A", f(s)), ("B", g(s)))
    edges = [(("A", a), ("A", b)) for a, b in A.le] + [(("B", a), ("B", b)) for a, b in B.le]
    # transitive closure on the quotient, then collapse mutual reachability
    reps = sorted({find(n) for n in nodes})
    ri = {r: i for i, r in enumerate(reps)}
    m = len(reps)
    reach = [[i == j for j in range(m)] for i in range(m)]
    for x, y in edges:
        reach[ri[find(x)]][ri[find(y)]] = True
    for k in range(m):
        for i in range(m):
            if reach[i][k]:
                for j in range(m):
                    if reach[k][j]:
                        reach[i][j] = True
    for x in nodes:
        for y in nodes:
            i, j = ri[find(x)], ri[find(y)]
            if reach[i][j] and reach[j][i]:
                union(x, y)
    classes: dict[tuple[str, str], list[tuple[str, str]]] = {}
    for n in nodes:
        classes.setdefault(find(n), []).append(n)
    names: dict[tuple[str, str], str] = {}
    used: set[str] = set()
    for root in sorted(classes, key=lambda r: (r[0] != "B", r)):
        members = classes[root]
        bs = sorted(x for side, x in members if side == "B")
        name = "=".join(bs) if bs else "=".join(sorted(x for _, x in members))
        while name in used:
            name += "'"
        used.add(name)
        names[root] = name
    cls_rel = []
    for x, y in edges:
        cls_rel.append((names[find(x)], names[find(y)]))
    Q = make_poset(names.values(), cls_rel)
    left = PosetMap(A, Q, {a: names[find(("A", a))] for a in A.elements})
    right = PosetMap(B, Q, {b: names[find(("B", b))] for b in B.elements})
    return PosetPushout(Q, left, right)
