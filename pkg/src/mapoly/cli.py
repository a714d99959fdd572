"""Command-line front end: ``mapoly <command> [flags] <mapfile>``.

Exit status is 0 on success, 2 on usage or input errors (bad arguments,
malformed map file, unknown group) and 1 when a computation fails (an
expansion cap or search budget is exceeded, or cross-checks disagree).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import flows, invariants
from .errors import GroupError, InternalError, LimitExceededError, MapError, MapolyError
from .fixtures import named_fixtures
from .groups import group_from_selector
from .maps import classify, dual, format_map, read_map

VERIFY_LIMIT = 10 ** 5


class UsageError(Exception):
    pass


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit a JSON document")
    parser.add_argument("--cap", type=int, default=invariants.DEFAULT_CAP,
                        help="maximum edge count for subset expansions (default %(default)s)")
    parser.add_argument("--force", action="store_true", help="ignore the expansion cap")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mapoly",
                                     description="Surface Tutte polynomial and local flow counts of maps.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="print v e f k g r n r* n*")
    _common(p)
    p.add_argument("mapfile")

    p = sub.add_parser("poly", help="print a polynomial invariant")
    _common(p)
    p.add_argument("--kind", default="surface-tutte", choices=sorted(invariants.POLYNOMIAL_KINDS))
    p.add_argument("mapfile")

    p = sub.add_parser("eval", help="count local flows or tensions in a finite group")
    _common(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--flows", dest="mode", action="store_const", const=flows.FLOW,
                      help="count local flows (default)")
    mode.add_argument("--tensions", dest="mode", action="store_const", const=flows.TENSION,
                      help="count local tensions")
    p.add_argument("--group", required=True, help="z<n>, d<2n>, q8, s3, s4, z<a>xz<b>, file:<path>")
    p.add_argument("--allow-identity", action="store_true",
                   help="count all local flows/tensions, not only nowhere-identity ones")
    p.add_argument("--method", default="formula", choices=["formula", "bruteforce", "tutte"])
    p.add_argument("--no-verify", action="store_true",
                   help=f"skip the brute-force cross-check done when |G|^e <= {VERIFY_LIMIT}")
    p.add_argument("--budget", type=int, default=flows.DEFAULT_BUDGET,
                   help="node budget for brute-force search")
    p.add_argument("mapfile")

    p = sub.add_parser("count", help="quasi-tree profile or substructure counts")
    _common(p)
    p.add_argument("--what", required=True, choices=["quasi-trees", "substructures"])
    p.add_argument("mapfile")

    p = sub.add_parser("dual", help="print the surface dual in map format")
    _common(p)
    p.add_argument("mapfile")

    p = sub.add_parser("selftest", help="check identities on the shipped fixture maps")
    _common(p)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _load(path: str):
    try:
        return read_map(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except MapError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(args, result, text: str, m=None) -> None:
    if args.json:
        doc = {
            "command": args.command,
            "input": getattr(args, "mapfile", None),
            "result": result,
            "parameters": m.parameters().as_dict() if m is not None else None,
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        print(text)


def _cmd_params(args) -> int:
    m = _load(args.mapfile)
    p = m.parameters()
    result = p.as_dict()
    result.update(classify(m).__dict__)
    _emit(args, result, str(p), m)
    return 0


def _cmd_poly(args) -> int:
    m = _load(args.mapfile)
    poly = invariants.POLYNOMIAL_KINDS[args.kind](m, args.cap, args.force)
    text = str(poly)
    _emit(args, {"kind": args.kind, "polynomial": text}, text, m)
    return 0


def _cmd_eval(args) -> int:
    m = _load(args.mapfile)
    try:
        g = group_from_selector(args.group)
    except GroupError as exc:
        raise UsageError(str(exc)) from None
    mode = args.mode or flows.FLOW
    nowhere = not args.allow_identity
    value = flows.count(m, g, mode, nowhere, args.method, args.cap, args.force, args.budget)
    verified = None
    if not args.no_verify and args.method != "bruteforce" and g.order ** m.num_edges <= VERIFY_LIMIT:
        check = flows.local_count_bruteforce(m, g, mode, nowhere, args.budget)
        if check != value:
            raise InternalError(f"{args.method} gave {value} but brute force gave {check}")
        verified = True
    result = {"count": value, "mode": mode, "group": g.name, "nowhere_identity": nowhere,
              "method": args.method, "verified": verified}
    _emit(args, result, str(value), m)
    return 0


def _cmd_count(args) -> int:
    m = _load(args.mapfile)
    if args.what == "quasi-trees":
        try:
            profile = invariants.quasi_tree_genus_profile(m, args.cap, args.force)
        except MapError as exc:
            raise UsageError(str(exc)) from None
        text = " ".join(f"g{h}={c}" for h, c in enumerate(profile))
        _emit(args, list(profile), text, m)
    else:
        counts = invariants.substructure_counts(m, args.cap, args.force)
        d = counts.as_dict()
        _emit(args, d, " ".join(f"{k}={v}" for k, v in d.items()), m)
    return 0


def _cmd_dual(args) -> int:
    m = _load(args.mapfile)
    text = format_map(dual(m)).rstrip("\n")
    _emit(args, text, text, m)
    return 0


def _cmd_selftest(args) -> int:
    rng = random.Random(args.seed)
    points = invariants.random_sample_points(rng, 3)
    lines = []
    ok_all = True
    z3 = group_from_selector("z3")
    s3 = group_from_selector("s3")
    for name, m in named_fixtures().items():
        if m.num_edges > 6:
            continue
        ok = invariants.verify_specialization_identities(m, points)
        for g in (z3, s3):
            for mode in flows.MODES:
                counts = {flows.local_count_bruteforce(m, g, mode),
                          flows.nowhere_identity_count_formula(m, g, mode),
                          flows.count_via_surface_tutte(m, g, mode)}
                ok = ok and len(counts) == 1
        ok_all &= ok
        lines.append({"fixture": name, "ok": ok})
    if args.json:
        print(json.dumps({"command": "selftest", "input": None, "result": lines,
                          "parameters": None}, sort_keys=True))
    else:
        for line in lines:
            print(f"{'PASS' if line['ok'] else 'FAIL'} {line['fixture']}")
    return 0 if ok_all else 1


COMMANDS = {
    "params": _cmd_params,
    "poly": _cmd_poly,
    "eval": _cmd_eval,
    "count": _cmd_count,
    "dual": _cmd_dual,
    "selftest": _cmd_selftest,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"mapoly: error: {exc}", file=sys.stderr)
        return 2
    except LimitExceededError as exc:
        print(f"mapoly: {exc.limit} exceeded: {exc}", file=sys.stderr)
        return 1
    except MapolyError as exc:
        print(f"mapoly: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
