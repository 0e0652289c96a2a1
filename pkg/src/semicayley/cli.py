"""Command-line front end.

Exit codes: 0 success (every verdict pass/skipped), 1 a check failed,
2 invalid input, 3 a size guard was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import core, dsl
from . import graph as G
from . import theorems as T
from .matrix import GuardExceeded

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3

INVARIANT_ALIASES = {
    "connected": "connected", "diam": "diameter", "diameter": "diameter",
    "girth": "girth", "omega": "omega", "clique": "omega", "alpha": "alpha",
    "independence": "alpha", "degrees": "degrees", "degree": "degrees",
}


class InputError(Exception):
    pass


def _add_source(p: argparse.ArgumentParser):
    p.add_argument("file", nargs="?", help="semiring definition (.sr)")
    p.add_argument("--builtin", metavar="SPEC",
                   help="boolean | trivial | boolx2 | trunc:N | bounds:R | zmod:N "
                        "| product:SPEC,SPEC")


def _add_guards(p: argparse.ArgumentParser):
    p.add_argument("--max-vertices", type=int, default=G.MAX_VERTICES)
    p.add_argument("--max-clique-vertices", type=int, default=G.MAX_CLIQUE_VERTICES)
    p.add_argument("--max-alpha-vertices", type=int, default=G.MAX_ALPHA_VERTICES)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="semicayley",
                                 description="Unitary Cayley graphs of finite semirings")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a definition file against the axioms")
    p.add_argument("file")

    p = sub.add_parser("info", help="print the semiring profile and units")
    _add_source(p)

    p = sub.add_parser("graph", help="build Gamma(S) or Gamma(M_k(S))")
    _add_source(p)
    p.add_argument("--matrix", type=int, metavar="K")
    p.add_argument("--invariants", default="connected,diam,girth,omega,alpha,degrees",
                   help="comma-separated subset of " + ",".join(sorted(INVARIANT_ALIASES)))
    p.add_argument("--format", choices=("json", "dot", "csv"), default="json")
    p.add_argument("--out")
    _add_guards(p)

    p = sub.add_parser("check", help="run theorem checks")
    _add_source(p)
    p.add_argument("--matrix", type=int, metavar="K", default=2)
    p.add_argument("--theorem", required=True,
                   choices=("diamS", "diammatS", "girth", "clique", "independence", "all"))
    p.add_argument("--out")
    _add_guards(p)

    p = sub.add_parser("natwindow", help="bounded window of Gamma(M_k(N_0))")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--check", choices=("girth",), default="girth")
    p.add_argument("--out")

    p = sub.add_parser("construct", help="write a builtin semiring as a definition file")
    p.add_argument("--builtin", required=True, metavar="SPEC")
    p.add_argument("--out")
    return ap


def _load(args) -> core.SemiringTable:
    if bool(args.file) == bool(args.builtin):
        raise InputError("give exactly one of FILE or --builtin")
    if args.builtin:
        try:
            return core.builtin(args.builtin)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    try:
        s = dsl.load(args.file)
    except OSError as exc:
        raise InputError(str(exc)) from None
    except dsl.DSLError as exc:
        raise InputError(f"{args.file}: {exc}") from None
    _require_valid(s, args.file)
    return s


def _require_valid(s: core.SemiringTable, where: str):
    try:
        bad = core.validate(s)
    except core.StructureError as exc:
        raise InputError(f"{where}: {exc}") from None
    if bad:
        lines = [v.describe(s.elems) for v in bad]
        raise InputError(f"{where}: not a semiring\n  " + "\n  ".join(lines))


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def cmd_validate(args) -> int:
    try:
        with open(args.file, "rb") as fh:
            s = dsl.to_table(dsl.parse(fh.read()))
    except OSError as exc:
        raise InputError(str(exc)) from None
    except dsl.DSLError as exc:
        raise InputError(f"{args.file}: {exc}") from None
    _require_valid(s, args.file)
    print(f"{args.file}: valid semiring {s.name} with {s.n} elements")
    return EXIT_OK


def cmd_info(args) -> int:
    s = _load(args)
    us = core.units(s)
    _emit(_dumps({
        "name": s.name,
        "size": s.n,
        "elements": list(s.elems),
        "profile": core.profile(s).as_dict(),
        "units": [s.elems[u] for u in us],
        "inverse": {s.elems[u]: s.elems[v] for u, v in us.inverse.items()},
    }), None)
    return EXIT_OK


def cmd_graph(args) -> int:
    s = _load(args)
    if args.matrix is None:
        g = G.cayley_graph(s, max_vertices=args.max_vertices)
    else:
        if args.matrix < 1:
            raise InputError("--matrix must be positive")
        g = T.matrix_graph(s, args.matrix, args.max_vertices)
    if args.format == "dot":
        _emit(G.to_dot(g), args.out)
    elif args.format == "csv":
        _emit(G.to_csv(g), args.out)
    else:
        which = set()
        for name in filter(None, (x.strip() for x in args.invariants.split(","))):
            if name not in INVARIANT_ALIASES:
                raise InputError(f"unknown invariant {name!r}")
            which.add(INVARIANT_ALIASES[name])
        rep = G.invariants(g, which, args.max_clique_vertices, args.max_alpha_vertices)
        _emit(_dumps(rep.as_dict()), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    s = _load(args)
    guards = dict(max_vertices=args.max_vertices,
                  clique_guard=args.max_clique_vertices,
                  alpha_guard=args.max_alpha_vertices)
    if args.theorem == "all":
        reports = T.check_all(s, args.matrix, **guards)
        payload = [r.as_dict() for r in reports]
    else:
        reports = [T.run_check(args.theorem, s, args.matrix, **guards)]
        payload = reports[0].as_dict()
    _emit(_dumps(payload), args.out)
    return EXIT_FAIL if any(r.verdict is T.Verdict.FAIL for r in reports) else EXIT_OK


def cmd_natwindow(args) -> int:
    if args.k < 1 or args.bound < 1:
        raise InputError("--k and --bound must be positive")
    rep = T.nat_window_check(args.k, args.bound)
    _emit(_dumps(rep.as_dict()), args.out)
    return EXIT_FAIL if rep.verdict is T.Verdict.FAIL else EXIT_OK


def cmd_construct(args) -> int:
    try:
        s = core.builtin(args.builtin)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(dsl.serialize(s), args.out)
    return EXIT_OK


COMMANDS = {"validate": cmd_validate, "info": cmd_info, "graph": cmd_graph,
            "check": cmd_check, "natwindow": cmd_natwindow, "construct": cmd_construct}


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
