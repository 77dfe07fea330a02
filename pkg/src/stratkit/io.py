"""JSON documents for posets, simplicial sets, stratified sets, maps and reports.

Every file holds one document ``{"format_version": 1, "kind": K, "payload": {...}}``.
Serialization is canonical (sorted keys and ids), so ``dumps(loads(s))`` is
stable and equal objects produce identical bytes.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from typing import Any, Callable, Mapping

from .poset import Poset, PosetError, PosetMap, make_poset
from .simplicial import SimplicialError, SimplicialSet, SMap, Simp, surjection_to_word, word_to_surjection
from .stratified import StratError, StratMap, StratSSet

__all__ = [
    "FORMAT_VERSION",
    "KINDS",
    "DocumentError",
    "Document",
    "dumps",
    "loads",
    "read_document",
    "write_document",
    "encode",
    "decode",
]

FORMAT_VERSION = 1
KINDS = ("poset", "sset", "strat", "map", "generator_set", "report", "diagram")


class DocumentError(ValueError):
    """Schema violation; ``path`` points at the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass
class Document:
    kind: str
    payload: dict


# -- field helpers ---------------------------------------------------------------------------


def _obj(v: Any, path: str, required: set[str], optional: set[str] = frozenset()) -> dict:
    if not isinstance(v, dict):
        raise DocumentError(path, "expected an object")
    extra = set(v) - required - set(optional)
    if extra:
        raise DocumentError(f"{path}.{sorted(extra)[0]}", "unknown field")
    for k in sorted(required):
        if k not in v:
            raise DocumentError(f"{path}.{k}", "missing field")
    return v


def _list(v: Any, path: str) -> list:
    if not isinstance(v, list):
        raise DocumentError(path, "expected a list")
    return v


def _str(v: Any, path: str) -> str:
    if not isinstance(v, str):
        raise DocumentError(path, "expected a string")
    return v


def _int(v: Any, path: str) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise DocumentError(path, "expected an integer")
    return v


def _wrap(path: str, fn: Callable[[], Any]) -> Any:
    try:
        return fn()
    except (PosetError, SimplicialError, StratError) as e:
        raise DocumentError(path, str(e)) from None


# -- poset ---------------------------------------------------------------------------------------


def poset_to(P: Poset) -> dict:
    return {
        "elements": sorted(P.elements),
        "le": sorted([a, b] for a, b in P.le if a != b),
    }


def poset_from(v: Any, path: str = "payload") -> Poset:
    d = _obj(v, path, {"elements", "le"})
    els = [_str(e, f"{path}.elements[{i}]") for i, e in enumerate(_list(d["elements"], f"{path}.elements"))]
    if len(set(els)) != len(els):
        raise DocumentError(f"{path}.elements", "duplicate element")
    pairs = []
    for i, pr in enumerate(_list(d["le"], f"{path}.le")):
        p = f"{path}.le[{i}]"
        pr = _list(pr, p)
        if len(pr) != 2:
            raise DocumentError(p, "expected a pair")
        a, b = _str(pr[0], p + "[0]"), _str(pr[1], p + "[1]")
        for j, e in enumerate((a, b)):
            if e not in els:
                raise DocumentError(f"{p}[{j}]", f"unknown element {e!r}")
        pairs.append((a, b))
    return _wrap(f"{path}.le", lambda: make_poset(sorted(els), pairs))


# -- simplicial sets -------------------------------------------------------------------------


def _simp_to(s: Simp) -> list:
    alpha, x = s
    return [surjection_to_word(alpha), x]


def _simp_from(v: Any, path: str, dims: Mapping[str, int]) -> Simp:
    pr = _list(v, path)
    if len(pr) != 2:
        raise DocumentError(path, "expected [degeneracy word, id]")
    word = [_int(w, f"{path}[0][{i}]") for i, w in enumerate(_list(pr[0], f"{path}[0]"))]
    x = _str(pr[1], f"{path}[1]")
    if x not in dims:
        raise DocumentError(f"{path}[1]", f"unknown simplex {x!r}")
    return _wrap(path, lambda: (word_to_surjection(word, dims[x]), x))


def sset_to(X: SimplicialSet) -> dict:
    return {
        "dims": {
            str(n): [{"id": x, "faces": [_simp_to(s) for s in X.faces_of(x)] if n else []} for x in sorted(X.nondeg(n))]
            for n in sorted(X.by_dim)
        }
    }


def sset_from(v: Any, path: str = "payload") -> SimplicialSet:
    d = _obj(v, path, {"dims"})
    dims_doc = _obj(d["dims"], f"{path}.dims", set(), set(d["dims"]) if isinstance(d["dims"], dict) else set())
    dims: dict[str, int] = {}
    raw: list[tuple[str, int, list, str]] = []
    for n_s, cells in dims_doc.items():
        p = f"{path}.dims.{n_s}"
        try:
            n = int(n_s)
        except ValueError:
            raise DocumentError(p, "dimension keys must be integers") from None
        for i, c in enumerate(_list(cells, p)):
            cp = f"{p}[{i}]"
            c = _obj(c, cp, {"id", "faces"})
            x = _str(c["id"], f"{cp}.id")
            if x in dims:
                raise DocumentError(f"{cp}.id", f"duplicate simplex {x!r}")
            faces = _list(c["faces"], f"{cp}.faces")
            if len(faces) != (n + 1 if n else 0):
                raise DocumentError(f"{cp}.faces", f"a {n}-simplex needs {n + 1 if n else 0} faces")
            dims[x] = n
            raw.append((x, n, faces, cp))
    table: dict[str, list[Simp]] = {}
    for x, n, faces, cp in raw:
        table[x] = [_simp_from(f, f"{cp}.faces[{j}]", dims) for j, f in enumerate(faces)]
    return _wrap(path, lambda: SimplicialSet(table))


# -- stratified sets and maps ---------------------------------------------------------------------


def strat_to(X: StratSSet) -> dict:
    return {
        "sset": sset_to(X.sset),
        "poset": poset_to(X.poset),
        "labels": {x: list(X.labels[x]) for x in sorted(X.sset.ids)},
    }


def strat_from(v: Any, path: str = "payload") -> StratSSet:
    d = _obj(v, path, {"sset", "poset", "labels"})
    S = sset_from(d["sset"], f"{path}.sset")
    P = poset_from(d["poset"], f"{path}.poset")
    labs_doc = _obj(d["labels"], f"{path}.labels", set(), set(d["labels"]) if isinstance(d["labels"], dict) else set())
    labels = {}
    for x in S.ids:
        if x not in labs_doc:
            raise DocumentError(f"{path}.labels.{x}", f"missing label for simplex {x!r}")
    for x, lab in labs_doc.items():
        if x not in S:
            raise DocumentError(f"{path}.labels.{x}", f"label for unknown simplex {x!r}")
        labels[x] = tuple(_str(e, f"{path}.labels.{x}[{i}]") for i, e in enumerate(_list(lab, f"{path}.labels.{x}")))
    return _wrap(f"{path}.labels", lambda: StratSSet(S, P, labels))


def _images_to(f: SMap) -> dict:
    return {x: _simp_to(f.images[x]) for x in sorted(f.source.ids)}


def _images_from(v: Any, path: str, A: SimplicialSet, B: SimplicialSet) -> dict[str, Simp]:
    d = _obj(v, path, set(A.ids))
    dims = {x: B.dim(x) for x in B.ids}
    return {x: _simp_from(d[x], f"{path}.{x}", dims) for x in A.ids}


def map_to(f: StratMap) -> dict:
    return {
        "source": strat_to(f.source),
        "target": strat_to(f.target),
        "pmap": dict(sorted(f.pmap.assignment.items())),
        "smap": _images_to(f.smap),
    }


def map_from(v: Any, path: str = "payload") -> StratMap:
    d = _obj(v, path, {"source", "target", "pmap", "smap"})
    A = strat_from(d["source"], f"{path}.source")
    B = strat_from(d["target"], f"{path}.target")
    pm = _obj(d["pmap"], f"{path}.pmap", set(A.poset.elements))
    asg = {a: _str(pm[a], f"{path}.pmap.{a}") for a in A.poset.elements}
    pmap = _wrap(f"{path}.pmap", lambda: PosetMap(A.poset, B.poset, asg))
    imgs = _images_from(d["smap"], f"{path}.smap", A.sset, B.sset)
    smap = _wrap(f"{path}.smap", lambda: SMap(A.sset, B.sset, imgs))
    return _wrap(path, lambda: StratMap(smap, pmap, A, B))


# -- generator sets ---------------------------------------------------------------------------


def generator_set_to(G) -> dict:
    out = {"kind": G.name, "max_dim": G.max_dim}
    if G.poset is not None:
        out["poset"] = poset_to(G.poset)
    return out


def generator_set_from(v: Any, path: str = "payload"):
    from .factorization import GENERATOR_KINDS, builtin_generators

    d = _obj(v, path, {"kind", "max_dim"}, {"poset"})
    kind = _str(d["kind"], f"{path}.kind")
    if kind not in GENERATOR_KINDS:
        raise DocumentError(f"{path}.kind", f"expected one of {', '.join(GENERATOR_KINDS)}")
    P = poset_from(d["poset"], f"{path}.poset") if "poset" in d else None
    return _wrap(path, lambda: builtin_generators(kind, P, _int(d["max_dim"], f"{path}.max_dim")))


# -- link diagrams ------------------------------------------------------------------------------


def diagram_to(D) -> dict:
    from .poset import flag_name

    return {
        "poset": poset_to(_diagram_poset(D)),
        "values": [{"flag": list(I), "sset": sset_to(S)} for I, S in sorted(D.values.items())],
        "restrictions": [
            {"source": list(I), "target": list(K), "smap": _images_to(m)}
            for (I, K), m in sorted(D.restrictions.items(), key=lambda t: (flag_name(t[0][0]), flag_name(t[0][1])))
        ],
    }


def _diagram_poset(D) -> Poset:
    els = sorted({e for I in D.values for e in I})
    pairs = [(I[i], I[j]) for I in D.values for i in range(len(I)) for j in range(i + 1, len(I))]
    return make_poset(els, pairs)


def diagram_from(v: Any, path: str = "payload"):
    """A diagram over the regular flags of a poset.

    Restrictions may be omitted when they are forced: out of an empty entry,
    or into an entry that is a single point.
    """
    from .links import LinkDiagram, _subflags
    from .poset import flag_name, subdivision

    d = _obj(v, path, {"poset", "values"}, {"restrictions"})
    P = poset_from(d["poset"], f"{path}.poset")
    values: dict[tuple[str, ...], SimplicialSet] = {}
    for i, item in enumerate(_list(d["values"], f"{path}.values")):
        p = f"{path}.values[{i}]"
        item = _obj(item, p, {"flag", "sset"})
        I = tuple(_str(e, f"{p}.flag[{j}]") for j, e in enumerate(_list(item["flag"], f"{p}.flag")))
        if not I or any(e not in P for e in I) or not all(P.lt(I[j], I[j + 1]) for j in range(len(I) - 1)):
            raise DocumentError(f"{p}.flag", "expected a regular flag of the poset")
        if I in values:
            raise DocumentError(f"{p}.flag", f"duplicate entry {flag_name(I)}")
        values[I] = sset_from(item["sset"], f"{p}.sset")
    for I in values:
        for K in _subflags(I):
            if K not in values:
                raise DocumentError(f"{path}.values", f"entry {flag_name(K)} is missing")
    given: dict[tuple, SMap] = {}
    for i, item in enumerate(_list(d.get("restrictions", []), f"{path}.restrictions")):
        p = f"{path}.restrictions[{i}]"
        item = _obj(item, p, {"source", "target", "smap"})
        I = tuple(_list(item["source"], f"{p}.source"))
        K = tuple(_list(item["target"], f"{p}.target"))
        if I not in values or K not in _subflags(I):
            raise DocumentError(p, "restriction must go from a flag to one of its subflags")
        A, B = values[I], values[K]
        imgs = _images_from(item["smap"], f"{p}.smap", A, B)
        given[(I, K)] = _wrap(f"{p}.smap", lambda: SMap(A, B, imgs))
    restr: dict[tuple, SMap] = {}
    for I in values:
        for K in _subflags(I):
            if (I, K) in given:
                restr[(I, K)] = given[(I, K)]
                continue
            A, B = values[I], values[K]
            if not A.ids:
                restr[(I, K)] = SMap(A, B, {}, check=False)
            elif len(B.ids) == 1:
                pt = B.ids[0]
                restr[(I, K)] = SMap(A, B, {x: ((0,) * (A.dim(x) + 1), pt) for x in A.ids})
            else:
                raise DocumentError(f"{path}.restrictions", f"restriction {flag_name(I)} -> {flag_name(K)} is missing")
    sd = subdivision(P)
    D = LinkDiagram(sd.subposet([flag_name(I) for I in values]), values, restr, 0)
    bad = D.check_functorial()
    if bad:
        raise DocumentError(f"{path}.restrictions", f"restrictions do not compose at {[flag_name(f) for f in bad[0]]}")
    return D


# -- documents -------------------------------------------------------------------------------------

_ENCODERS = {
    Poset: ("poset", poset_to),
    SimplicialSet: ("sset", sset_to),
    StratSSet: ("strat", strat_to),
    StratMap: ("map", map_to),
}

_DECODERS = {
    "poset": poset_from,
    "sset": sset_from,
    "strat": strat_from,
    "map": map_from,
    "generator_set": generator_set_from,
    "diagram": diagram_from,
    "report": lambda v, path="payload": _obj(v, path, set(), set(v) if isinstance(v, dict) else set()),
}


def encode(obj: Any) -> Document:
    from .factorization import GeneratorSet
    from .links import LinkDiagram

    if isinstance(obj, Document):
        return obj
    if isinstance(obj, GeneratorSet):
        return Document("generator_set", generator_set_to(obj))
    if isinstance(obj, LinkDiagram):
        return Document("diagram", diagram_to(obj))
    if isinstance(obj, dict):
        return Document("report", obj)
    for cls, (kind, fn) in _ENCODERS.items():
        if isinstance(obj, cls):
            return Document(kind, fn(obj))
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def decode(doc: Any, expect: str | tuple[str, ...] | None = None) -> tuple[str, Any]:
    d = _obj(doc, "$", {"format_version", "kind", "payload"})
    ver = d["format_version"]
    if ver != FORMAT_VERSION:
        raise DocumentError("$.format_version", f"unsupported version {ver!r}; expected {FORMAT_VERSION}")
    kind = _str(d["kind"], "$.kind")
    if kind not in KINDS:
        raise DocumentError("$.kind", f"unknown kind {kind!r}")
    if expect is not None:
        allowed = (expect,) if isinstance(expect, str) else expect
        if kind not in allowed:
            raise DocumentError("$.kind", f"expected {' or '.join(allowed)}, got {kind!r}")
    return kind, _DECODERS[kind](d["payload"], "$.payload")


def dumps(obj: Any) -> str:
    doc = encode(obj)
    return json.dumps(
        {"format_version": FORMAT_VERSION, "kind": doc.kind, "payload": doc.payload},
        sort_keys=True,
        indent=1,
    ) + "\n"


def loads(text: str, expect: str | tuple[str, ...] | None = None) -> Any:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError("$", f"invalid JSON: {e}") from None
    return decode(raw, expect)[1]


def read_document(path: str, expect: str | tuple[str, ...] | None = None) -> Any:
    """Read a document from a file, or from stdin when ``path`` is ``-``."""
    if path == "-":
        return loads(sys.stdin.read(), expect)
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), expect)


def write_document(obj: Any, path: str) -> None:
    text = dumps(obj)
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
