"""Command-line front end.

Exit codes: 0 affirmative / success, 1 negative verdict or failed check,
2 usage or configuration error. ``--format json`` prints exactly one JSON
document on standard output.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from . import families
from .catalog import CATALOG_NAMES, build_group, catalog_spec, parse_spec, spec_label
from .errors import (
    CutGroupsError,
    InvalidParams,
    SpecError,
    UnknownCatalogName,
)
from .groups import FiniteGroup, conjugacy_classes, normal_subgroups, subgroup
from .ring import (
    GroupRingElement,
    bass_unit,
    delta_product_membership,
    star,
    theta,
)
from .rs import (
    is_cut,
    is_rs_element,
    is_rs_subgroup,
    q_classes,
    r_classes,
    rank_central_units,
    rank_preserved,
)
from .verdict import Verdict
from .verify import DEFAULT_MAX_ORDER, SUITES, run_suite

CONFIG_ERRORS = (SpecError, UnknownCatalogName, InvalidParams)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- argument helpers -------------------------------------------------------


def _common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("json", "text"), default="text")


def _group_args(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--spec", metavar="FILE", help="group-spec JSON file ('-' for stdin) or inline JSON")
    src.add_argument("--catalog", nargs="+", metavar=("NAME", "PARAM"),
                     help=f"catalog group, one of: {', '.join(CATALOG_NAMES)}")


def _read_text(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    if value.lstrip().startswith(("{", "[")):
        return value
    if value.startswith("@"):
        value = value[1:]
    if not os.path.exists(value):
        raise UsageError(f"no such file: {value}")
    with open(value, encoding="utf-8") as fh:
        return fh.read()


def _load_spec(args) -> dict:
    if args.spec is not None:
        return parse_spec(_read_text(args.spec))
    if args.catalog:
        name, *params = args.catalog
        try:
            values = [int(p) for p in params]
        except ValueError as exc:
            raise UsageError(f"catalog parameters must be integers: {params}") from exc
        return catalog_spec(name, *values)
    raise UsageError("a group is required: use --catalog NAME PARAMS or --spec FILE")


def _load_group(args) -> FiniteGroup:
    spec = _load_spec(args)
    try:
        return build_group(spec)
    except CONFIG_ERRORS:
        raise
    except CutGroupsError as exc:
        # a spec that cannot be realized is a configuration problem
        raise SpecError(f"{type(exc).__name__}: {exc}") from exc


def _element(G: FiniteGroup, i: int) -> int:
    if not 0 <= i < G.order:
        raise UsageError(f"element index {i} outside 0..{G.order - 1}")
    return i


def _ring_element(G: FiniteGroup, text: str) -> GroupRingElement:
    try:
        data = json.loads(_read_text(text))
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed group ring element: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(t, dict) and {"elem", "coeff"} <= set(t) for t in data):
        raise UsageError('group ring elements are lists of {"elem": i, "coeff": c}')
    try:
        return GroupRingElement.from_json(G, data)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _subgroup_from_args(G: FiniteGroup, gens):
    return subgroup(G, [_element(G, g) for g in gens])


# -- output -----------------------------------------------------------------


def _verdict_text(v: Verdict) -> str:
    lines = [f"outcome: {v.status}"]
    if v.witness:
        lines.append("witness: " + json.dumps(v.witness, sort_keys=True))
    for step in v.derivation:
        lines.append(f"  - {step}")
    return "\n".join(lines)


def _verdict_result(v: Verdict, extra: dict | None = None) -> tuple[Any, str, int]:
    doc = v.to_dict()
    if extra:
        doc.update(extra)
    text = _verdict_text(v)
    if extra:
        text = "\n".join(f"{k}: {val}" for k, val in extra.items()) + "\n" + text
    return doc, text, 0 if v.outcome is True else 1


def _ring_text(u: GroupRingElement) -> str:
    return repr(u)


# -- command handlers ----------------------------------------------------------
# Each returns (json document, text, exit code).


def cmd_group(args):
    G = _load_group(args)
    label = G.name
    if args.action == "show":
        gens = [G.element(g).cycles() for g in G.generator_indices]
        doc = {"group": label, "order": G.order, "degree": G.degree, "generators": gens,
               "abelian": G.is_abelian(), "exponent": G.exponent()}
        text = (f"{label}: order {G.order}, degree {G.degree}, exponent {G.exponent()}"
                f"{', abelian' if G.is_abelian() else ''}\ngenerators: {gens}")
        return doc, text, 0
    if args.action == "classes":
        kinds = {"conjugacy": conjugacy_classes, "rational": q_classes, "real": r_classes}
        classes = [list(map(int, c)) for c in kinds[args.kind](G)]
        doc = {"group": label, "kind": args.kind, "classes": classes}
        text = f"{label}: {len(classes)} {args.kind} classes\n" + "\n".join(str(c) for c in classes)
        return doc, text, 0
    normals = [list(N.members) for N in normal_subgroups(G)]
    doc = {"group": label, "normal_subgroups": normals}
    text = f"{label}: {len(normals)} normal subgroups\n" + "\n".join(
        f"order {len(m)}: {m}" for m in normals)
    return doc, text, 0


def cmd_cut(args):
    G = _load_group(args)
    return _verdict_result(is_cut(G), {"group": G.name})


def cmd_rs(args):
    G = _load_group(args)
    if args.action == "element":
        return _verdict_result(is_rs_element(G, _element(G, args.element)), {"group": G.name})
    A = _subgroup_from_args(G, args.gens)
    return _verdict_result(is_rs_subgroup(G, A), {"group": G.name, "subgroup_order": A.order})


def cmd_rank(args):
    G = _load_group(args)
    r = rank_central_units(G)
    return {"group": G.name, "rank": r}, f"{G.name}: rank {r}", 0


def cmd_rank_preserved(args):
    G = _load_group(args)
    A = _subgroup_from_args(G, args.gens)
    return _verdict_result(rank_preserved(G, A), {"group": G.name, "subgroup_order": A.order})


def cmd_ring(args):
    G = _load_group(args)
    if args.action == "mul":
        w = _ring_element(G, args.u) * _ring_element(G, args.v)
    elif args.action == "star":
        w = star(_ring_element(G, args.u))
    elif args.action == "theta":
        w = theta(_ring_element(G, args.u))
    elif args.action == "bass":
        w = bass_unit(G, _element(G, args.g), args.k)
    else:
        u = _ring_element(G, args.u)
        A = _subgroup_from_args(G, args.gens)
        v = delta_product_membership(G, A, u)
        return _verdict_result(Verdict(v, {"subgroup_order": A.order}), {"group": G.name})
    return w.to_json(), _ring_text(w), 0


def cmd_families(args):
    if args.family == "metacyclic":
        p = families.MetacyclicParams(args.m, args.n, args.r)
        v = families.metacyclic_is_cut(p)
        return _verdict_result(v, {"family": "metacyclic", "params": [p.m, p.n, p.r]})
    if args.family == "bs":
        v = families.baumslag_solitar_is_cut(args.m, args.n)
        return _verdict_result(v, {"family": "bs", "params": [args.m, args.n]})
    if args.preset:
        shape = families.preset(args.preset)
    else:
        if args.indices is None:
            raise UsageError("amalgam needs --preset or --indices I J")
        shape = families.ExtensionShape("amalgam", amalgam_indices=tuple(args.indices),
                                        amalgam_rs_in_factor=args.rs_in_factor)
    v = families.extension_is_cut(shape)
    doc, text, _ = _verdict_result(v, {"family": "amalgam"})
    return doc, text, 0 if v.outcome is True else 1


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.max_order is not None and args.max_order < 1:
        raise UsageError("--max-order must be positive")
    reports = [run_suite(n, args.max_order, seed=args.seed) for n in names]
    ok = all(r.passed for r in reports)
    text = "\n".join(r.summary() for r in reports)
    if len(reports) == 1:
        doc = reports[0].to_dict(timing=args.timing)
    else:
        doc = {"passed": ok, "suites": [r.to_dict(timing=args.timing) for r in reports]}
    return doc, text, 0 if ok else 1


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    _common(common)
    grp = _Parser(add_help=False)
    _group_args(grp)
    both = [common, grp]

    parser = _Parser(prog="cutgroups", description="Cut-property and RS-property decisions for groups.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("group", help="inspect a finite group")
    gsub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    gsub.add_parser("show", parents=both)
    pc = gsub.add_parser("classes", parents=both)
    pc.add_argument("--kind", choices=("conjugacy", "rational", "real"), default="conjugacy")
    gsub.add_parser("normals", parents=both)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("cut", help="decide the cut-property")
    csub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    csub.add_parser("check", parents=both)
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("rs", help="decide the RS-property")
    rsub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    pe = rsub.add_parser("element", parents=both)
    pe.add_argument("--element", type=int, required=True, help="element index")
    ps = rsub.add_parser("subgroup", parents=both)
    ps.add_argument("--gens", type=int, nargs="+", required=True, help="generator indices")
    p.set_defaults(func=cmd_rs)

    p = sub.add_parser("rank", parents=both, help="rank of the central units of Z[G]")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("rank-preserved", parents=both, help="is rank(G) = rank(G/A)")
    p.add_argument("--gens", type=int, nargs="+", required=True, help="generators of normal A")
    p.set_defaults(func=cmd_rank_preserved)

    p = sub.add_parser("ring", help="integral group ring arithmetic")
    ringsub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    elem_help = 'JSON list of {"elem", "coeff"}, inline or a file path'
    pm = ringsub.add_parser("mul", parents=both)
    pm.add_argument("--u", required=True, help=elem_help)
    pm.add_argument("--v", required=True, help=elem_help)
    for name in ("star", "theta"):
        pu = ringsub.add_parser(name, parents=both)
        pu.add_argument("--u", required=True, help=elem_help)
    pb = ringsub.add_parser("bass", parents=both)
    pb.add_argument("--g", type=int, required=True, help="element index")
    pb.add_argument("--k", type=int, required=True)
    pd = ringsub.add_parser("delta-member", parents=both)
    pd.add_argument("--u", required=True, help=elem_help)
    pd.add_argument("--gens", type=int, nargs="+", required=True, help="generators of normal A")
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("families", help="symbolic decisions for infinite families")
    fsub = p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    pm = fsub.add_parser("metacyclic", parents=[common])
    for flag in ("--m", "--n", "--r"):
        pm.add_argument(flag, type=int, required=True)
    pb = fsub.add_parser("bs", parents=[common])
    pb.add_argument("--m", type=int, required=True)
    pb.add_argument("--n", type=int, required=True)
    pa = fsub.add_parser("amalgam", parents=[common])
    pa.add_argument("--preset", choices=("sl2z", "psl2z"))
    pa.add_argument("--indices", type=int, nargs=2, metavar=("I", "J"),
                    help="indices of the amalgamated subgroup in each factor (0 = infinite)")
    pa.add_argument("--rs-in-factor", action="store_true",
                    help="the amalgamated subgroup is RS in one factor")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("verify", parents=[common], help="run theorem suites")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--max-order", type=int, default=None,
                   help="catalog order cap (defaults: " +
                        ", ".join(f"{k}={v}" for k, v in DEFAULT_MAX_ORDER.items()) + ")")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="include elapsed seconds in JSON")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    fmt = "text"
    try:
        args = parser.parse_args(argv)
        fmt = args.format
        doc, text, code = args.func(args)
    except UsageError as exc:
        return _fail(fmt, stdout, stderr, "usage", str(exc), 2)
    except CONFIG_ERRORS as exc:
        return _fail(fmt, stdout, stderr, type(exc).__name__, str(exc), 2)
    except CutGroupsError as exc:
        return _fail(fmt, stdout, stderr, type(exc).__name__, str(exc), 1)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if fmt == "json":
        stdout.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        stdout.write(text + "\n")
    return code


def _fail(fmt, stdout, stderr, kind, message, code) -> int:
    stderr.write(f"error: {message}\n")
    if fmt == "json":
        stdout.write(json.dumps({"error": {"type": kind, "message": message}}, sort_keys=True) + "\n")
    return code


def main() -> None:
    sys.exit(run())
