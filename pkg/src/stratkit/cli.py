"""Command line interface.

Each subcommand writes a JSON report (``--report``, default stdout) and, where a
picture helps, a PNG figure. Exit codes: 0 all checks pass, 1 a checked
property fails, 2 input or usage error, 3 budget exhausted or inconclusive.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Callable, Sequence

from . import io as sio
from .homology import homology
from .poset import Flag, PosetError, flag_name
from .simplicial import BudgetExceeded, SimplicialError, pi0
from .stratified import StratError, frontier_report, is_refined, refine, stratum

__all__ = ["main", "build_parser", "EXIT_OK", "EXIT_FAIL", "EXIT_INPUT", "EXIT_BUDGET"]

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class _Result:
    def __init__(self, code: int, report: dict, figure: Callable[[str], Any] | None = None):
        self.code = code
        self.report = report
        self.figure = figure


def _verdict(code: int) -> str:
    return {EXIT_OK: "pass", EXIT_FAIL: "fail", EXIT_BUDGET: "inconclusive"}.get(code, "error")


def _parse_flag(text: str, X_poset) -> Flag:
    entries = tuple(e.strip() for e in text.strip("[]").replace("<", ",").split(",") if e.strip())
    return Flag(X_poset, entries)


def _sset_summary(S) -> dict:
    out = {"f_vector": [len(S.nondeg(n)) for n in range(S.max_dim + 1)], "pi0": len(pi0(S))}
    if S.max_dim >= 1:
        H = homology(S, 1)
        out["h1"] = H.descriptor()
    return out


def _entry_row(S, with_h1: bool) -> dict:
    row = {"simplices": len(S), "pi0": len(pi0(S))}
    if with_h1:
        H = homology(S, 1)
        row["h1_rank"] = H.rank
        row["h1_torsion"] = list(H.torsion)
    return row


# -- subcommands ------------------------------------------------------------------------------


def cmd_info(args) -> _Result:
    kind, obj = sio.decode(_load_raw(args.file))
    rep: dict = {"kind": kind}
    if kind == "poset":
        rep.update({"elements": list(obj.elements), "covers": [list(c) for c in obj.covers()]})
    elif kind == "sset":
        rep.update(_sset_summary(obj))
    elif kind == "strat":
        rep.update(_sset_summary(obj.sset))
        rep["strata"] = {p: len(stratum(obj, p)) for p in obj.poset.elements}
        rep["refined"] = is_refined(obj)
        rep["frontier"] = frontier_report(obj).as_dict()
    elif kind == "map":
        rep.update({
            "source": _sset_summary(obj.source.sset),
            "target": _sset_summary(obj.target.sset),
            "pmap": dict(obj.pmap.assignment),
            "mono": obj.is_mono(),
        })
    elif kind == "generator_set":
        rep.update({
            "name": obj.name,
            "scope": obj.scope,
            "cofibrations": [g.name for g in obj.cofibrations],
            "acyclic": [g.name for g in obj.acyclic],
        })
    elif kind == "diagram":
        rep["entries"] = {flag_name(I): _entry_row(S, True) for I, S in obj.values.items()}
    else:
        rep["fields"] = sorted(obj)
    fig = None
    if kind == "strat":
        from .plotting import plot_stratified

        fig = lambda p: plot_stratified(obj, p)  # noqa: E731
    return _Result(EXIT_OK, rep, fig)


def cmd_refine(args) -> _Result:
    X = sio.read_document(args.file, "strat")
    r = refine(X)
    sio.write_document(r.source, args.output)
    rep = {
        "refined_poset": sio.poset_to(r.source.poset),
        "over": dict(sorted(r.pmap.assignment.items())),
        "already_refined": r.pmap.is_iso(),
        "output": args.output,
    }
    # the refined document itself may occupy stdout
    if args.output == "-" and args.report == "-":
        args.report = None
    return _Result(EXIT_OK, rep)


def cmd_check(args) -> _Result:
    from .factorization import cff_report, fibrancy_certificate

    X = sio.read_document(args.file, "strat")
    if args.property == "refined":
        r = refine(X)
        ok = r.pmap.is_iso()
        rep = {"refined": ok, "refined_poset": sio.poset_to(r.source.poset)}
    elif args.property == "frontier":
        fr = frontier_report(X)
        ok = fr.frontier
        rep = fr.as_dict()
    elif args.property == "cff":
        cr = cff_report(X, args.dim, budget=args.budget)
        ok = cr.passed
        rep = cr.as_dict()
    else:
        fr = fibrancy_certificate(X, args.kind, args.dim, budget=args.budget)
        ok = fr.passed
        rep = fr.as_dict()
    rep = {"property": args.property, "kind": args.kind, "dim": args.dim, **rep}
    return _Result(EXIT_OK if ok else EXIT_FAIL, rep)


def cmd_links(args) -> _Result:
    from .links import hol

    X = sio.read_document(args.file, "strat")
    J = _parse_flag(args.flag, X.poset)
    h = hol(X, J, args.dim, budget=args.budget)
    rep = {"flag": flag_name(J.entries), "dim": args.dim, **_sset_summary(h.sset)}
    if args.output:
        sio.write_document(h.sset, args.output)
        rep["output"] = args.output
    return _Result(EXIT_OK, rep)


def _diagram_from_file(args):
    from .links import link_diagram

    kind, obj = sio.decode(_load_raw(args.file), ("strat", "diagram"))
    if kind == "strat":
        return link_diagram(obj, args.maxflag, args.dim, budget=args.budget)
    return obj


def cmd_diagram(args) -> _Result:
    D = _diagram_from_file(args)
    with_h1 = args.dim >= 2
    rows = {I: _entry_row(S, with_h1) for I, S in sorted(D.values.items(), key=lambda t: (len(t[0]), t[0]))}
    bad = D.check_functorial()
    rep = {
        "maxflag": args.maxflag,
        "dim": args.dim,
        "entries": {flag_name(I): r for I, r in rows.items()},
        "h1_note": None if with_h1 else "H1 needs --dim >= 2",
        "functorial": not bad,
        "non_commuting": [[flag_name(f) for f in t] for t in bad],
    }
    if args.output:
        sio.write_document(D, args.output)
        rep["output"] = args.output

    def fig(p: str) -> str:
        from .plotting import plot_entry_table

        return plot_entry_table(rows, p, "link diagram")

    return _Result(EXIT_OK if not bad else EXIT_FAIL, rep, fig)


def cmd_decollage(args) -> _Result:
    from .links import decollage_check_pi0

    D = _diagram_from_file(args)
    r = decollage_check_pi0(D)
    rep = {
        "maxflag": args.maxflag,
        "dim": args.dim,
        "result": r.verdict,
        "failures": [flag_name(I) for I in r.failures],
        "inconclusive": [flag_name(I) for I in r.inconclusive],
        "details": {flag_name(I): msg for I, msg in sorted(r.details.items())},
    }
    code = {True: EXIT_OK, False: EXIT_FAIL, None: EXIT_BUDGET}[r.holds_at_pi0]
    return _Result(code, rep)


def cmd_factorize(args) -> _Result:
    from .factorization import builtin_generators, replay, soa_factorize

    f = sio.read_document(args.mapfile, "map")
    P = f.target.poset if args.generators in ("D_P", "C_P") else None
    G = builtin_generators(args.generators, P, args.dim)
    fac = soa_factorize(f, G, args.stages, args.dim, family=args.family, budget=args.budget)
    Z2, i2 = replay(f.source, G, fac.log, args.family)
    replay_ok = sio.dumps(Z2) == sio.dumps(fac.Z) and i2.smap.images == fac.i.smap.images
    commutes = fac.check_commutes()
    rep = {
        "generators": args.generators,
        "family": args.family,
        "stages_run": fac.stages_run,
        "attachments": [a.as_dict() for a in fac.log],
        "complete": fac.complete,
        "residual": [{"generator": s.generator} for s in fac.residual],
        "commutes": commutes,
        "replay_exact": replay_ok,
        "middle": {"f_vector": [len(fac.Z.sset.nondeg(n)) for n in range(fac.Z.sset.max_dim + 1)]},
    }
    if args.output:
        sio.write_document(fac.i, args.output)
        rep["output"] = args.output
    if not (commutes and replay_ok):
        code = EXIT_FAIL
    else:
        code = EXIT_OK if fac.complete else EXIT_BUDGET
    return _Result(code, rep)


def cmd_horn_decomp(args) -> _Result:
    from .factorization import horn_decomposition_verify

    P = sio.read_document(args.poset, "poset")
    J = _parse_flag(args.flag, P)
    try:
        hd = horn_decomposition_verify(J, args.k)
    except StratError as e:
        raise _InputError(str(e)) from None
    return _Result(EXIT_OK if hd.passed else EXIT_FAIL, hd.as_dict())


def cmd_equiv(args) -> _Result:
    from .links import diagrammatic_equiv_check

    f = sio.read_document(args.mapfile, "map")
    levels = {s.strip() for s in args.level.split(",") if s.strip()}
    unknown = levels - {"pi0", "h1"}
    if unknown:
        raise _InputError(f"unknown level {sorted(unknown)[0]!r}; use pi0 and/or h1")
    v = diagrammatic_equiv_check(f, args.maxflag, args.dim, mode=args.mode, budget=args.budget)
    failed = ("pi0" in levels and not v.pi0_bijective) or ("h1" in levels and v.h1_iso is False)
    unassessed = "h1" in levels and v.h1_iso is None
    rep = {
        "mode": v.mode,
        "levels": sorted(levels),
        "pi0_bijective": v.pi0_bijective,
        "h1_iso": v.h1_iso,
        "h1_note": None if args.dim >= 2 else "H1 of links needs --dim >= 2",
        "flags_failing": [flag_name(f) for f in v.flags_failing],
        "entries": v.entries,
        "summary": v.summary(),
    }
    code = EXIT_FAIL if failed else (EXIT_BUDGET if unassessed else EXIT_OK)
    return _Result(code, rep)


def cmd_counterexample(args) -> _Result:
    from .counterexample import build_counterexample, build_zigzag, obstruction_check, straight_path

    if args.n < 1:
        raise _InputError("--n must be at least 1")
    inst = build_counterexample(args.n)
    rep = obstruction_check(inst, args.samples, args.seed)
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        for name, obj in (("X", inst.X), ("Y", inst.Y), ("r", inst.r)):
            sio.write_document(obj, os.path.join(args.out_dir, f"{name}.json"))
        with open(os.path.join(args.out_dir, "coordinates.json"), "w", encoding="utf-8") as fh:
            json.dump({v: list(c) for v, c in sorted(inst.coords.items())}, fh, indent=1, sort_keys=True)
        rep["instance_files"] = ["X.json", "Y.json", "r.json", "coordinates.json"]

    def fig(p: str) -> str:
        from .plotting import plot_counterexample, plot_winding

        paths = {"straight": straight_path(inst).vertices}
        if inst.N >= 2:
            paths["zigzag"] = build_zigzag(inst).path.vertices
            root, ext = os.path.splitext(p)
            plot_winding({"b-family": rep["zigzag"]["winding_b"], "c-family": rep["zigzag"]["winding_c"]},
                         f"{root}_winding{ext or '.png'}")
        return plot_counterexample(inst, p, paths)

    return _Result(EXIT_OK if rep["verdict"] == "pass" else EXIT_FAIL, rep, fig)


# -- plumbing -------------------------------------------------------------------------------------


class _InputError(ValueError):
    pass


def _load_raw(path: str) -> Any:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise sio.DocumentError("$", f"invalid JSON: {e}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="stratkit", description="Finite stratified simplicial sets: checks and constructions.")
    ap.add_argument("--budget", type=int, default=None, help="cap on enumeration nodes per search")
    ap.add_argument("--report", default="-", help="where to write the JSON report ('-' for stdout)")
    ap.add_argument("--figure", default=None, help="PNG path for the figure (default: next to --report when it is a file)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="summarize a document")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("refine", help="write the refinement of a stratified set")
    p.add_argument("file")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_refine)

    p = sub.add_parser("check", help="check a property of a stratified set")
    p.add_argument("property", choices=["refined", "frontier", "cff", "fibrant"])
    p.add_argument("file")
    p.add_argument("--kind", choices=["diagrammatic", "categorical"], default="diagrammatic")
    p.add_argument("--dim", type=int, default=2)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("links", help="homotopy link at one flag")
    p.add_argument("file")
    p.add_argument("--flag", required=True, help="e.g. 'p<q' or 'p,p,q'")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_links)

    for name, fn, hlp in (("diagram", cmd_diagram, "link diagram summary"), ("decollage", cmd_decollage, "decollage condition at pi0")):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("file", help="stratified set or diagram document")
        p.add_argument("--maxflag", type=int, default=3)
        p.add_argument("--dim", type=int, default=1)
        if name == "diagram":
            p.add_argument("-o", "--output", default=None)
        p.set_defaults(func=fn)

    p = sub.add_parser("factorize", help="finite small object argument")
    p.add_argument("mapfile")
    p.add_argument("--generators", required=True, choices=["D_P", "C_P", "D_global", "C_global", "DR", "CR"])
    p.add_argument("--family", choices=["cofibrations", "acyclic"], default="cofibrations")
    p.add_argument("--stages", type=int, default=5)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("-o", "--output", default=None, help="write the cofibration part i")
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("horn-decomp", help="verify the inner horn decomposition at (J, k)")
    p.add_argument("--poset", required=True)
    p.add_argument("--flag", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_horn_decomp)

    p = sub.add_parser("equiv", help="compare link invariants along a map")
    p.add_argument("mapfile")
    p.add_argument("--level", default="pi0,h1")
    p.add_argument("--maxflag", type=int, default=2)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--mode", choices=["poset", "extended"], default="poset")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("counterexample", help="build the planar model and verify the obstruction")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-dir", default=None, help="directory for the instance documents")
    p.set_defaults(func=cmd_counterexample)
    return ap


def _emit(result: _Result, args, command: str) -> None:
    doc = {"command": command, "verdict": _verdict(result.code), "exit_code": result.code, **result.report}
    fig_path = args.figure
    if fig_path is None and args.report not in (None, "-"):
        fig_path = os.path.splitext(args.report)[0] + ".png"
    if result.figure is not None and fig_path:
        doc["figure"] = result.figure(fig_path)
    if args.report is None:
        print(f"{command}: {doc['verdict']}", file=sys.stderr)
        return
    sio.write_document(doc, args.report)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_INPUT
    try:
        result = args.func(args)
    except BudgetExceeded as e:
        result = _Result(EXIT_BUDGET, {"error": f"budget exhausted: {e}"})
    except (sio.DocumentError, _InputError, PosetError, StratError, SimplicialError, OSError) as e:
        print(f"stratkit: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    _emit(result, args, args.command)
    return result.code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
