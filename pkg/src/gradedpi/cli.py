"""Command-line interface: ``graded-pi <command> ...``.

Exit status is 0 for definitive answers, 2 when a verdict is Inconclusive
and 1 on errors (including failed certificate rechecks and experiment
anomalies that are not inconclusive searches).
"""

from __future__ import annotations

import argparse
import os
import re
import sys

from . import fileio
from .algebra import (
    make_direct_sum,
    make_elementary_matrix,
    make_group_algebra,
    make_sl2,
    named_bicharacter,
    validate,
)
from .catalogue import default_field, full_catalogue, simple_catalogue
from .centroid import graded_centroid
from .errors import ConfigurationError, GradedPIError
from .groups import GradeGroup
from .identities import (
    MAX_CAP,
    DegreeSignature,
    compare_identities,
    identity_space,
    signatures,
)
from .isomorphism import DEFAULT_BUDGET, INCONCLUSIVE, ANOMALY, search_iso, theorem_experiment
from .multiplication import check_graded_simple, mult_algebra
from .report import dumps, experiment_table, format_table, write_experiment
from .scalars import FieldSpec

OK, ERROR, UNDECIDED = 0, 1, 2


def _field(text):
    if text is None:
        return default_field()
    if re.fullmatch(r"\d+", text.strip()):
        return FieldSpec.cyclotomic(int(text))
    return FieldSpec.parse(text)


def _split_degrees(text):
    """Split ``e,g`` or ``(0,0),(1,0)`` at top-level commas or semicolons."""
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch in ",;" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [p.strip() for p in parts if p.strip()]


def _degrees(group, text):
    return [group.parse_degree(p) for p in _split_degrees(text)]


def _cap(n):
    if not 1 <= n <= MAX_CAP:
        raise ConfigurationError(f"--cap must lie in 1..{MAX_CAP}, got {n}")
    return n


# commands -----------------------------------------------------------------


def cmd_generate(args):
    kind = args.kind
    if kind == "direct-sum":
        if len(args.files) != 2:
            raise ConfigurationError("direct-sum needs exactly two algebra files")
        A, B = (fileio.load(f) for f in args.files)
        alg = make_direct_sum(A, B, name=args.name)
    else:
        if args.files:
            raise ConfigurationError(f"{kind} takes no input files")
        F = _field(args.field)
        G = GradeGroup.parse(args.group) if args.group else None
        if kind == "elementary":
            if args.n is None or args.degs is None:
                raise ConfigurationError("elementary needs --n and --degs")
            G = G or GradeGroup()
            alg = make_elementary_matrix(args.n, _degrees(G, args.degs), G, F, name=args.name)
        elif kind == "group-algebra":
            if G is None:
                raise ConfigurationError("group-algebra needs --group")
            alg = make_group_algebra(G, field=F, name=args.name)
        elif kind == "twisted":
            if G is None or args.bicharacter is None:
                raise ConfigurationError("twisted needs --group and --bicharacter")
            alg = make_group_algebra(G, named_bicharacter(G, args.bicharacter, F), field=F,
                                     name=args.name)
        elif kind == "sl2":
            G = G or GradeGroup()
            degs = _degrees(G, args.degs) if args.degs else [G.identity] * 3
            alg = make_sl2(G, degs, F, name=args.name)
        else:  # pragma: no cover - argparse restricts choices
            raise ConfigurationError(f"unknown generator {kind}")
        validate(alg)
    text = fileio.render(alg)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK, None


def cmd_catalogue(args):
    F = _field(args.field)
    entries = full_catalogue(F) if args.negatives else simple_catalogue(F)
    os.makedirs(args.out, exist_ok=True)
    written = []
    for name, A in entries:
        path = os.path.join(args.out, name + ".json")
        fileio.save(A, path)
        written.append(path)
    return OK, {"written": written}


def cmd_validate(args):
    A = fileio.load(args.file)
    return OK, {"name": A.name, "field": str(A.field), "group": str(A.group), "dim": A.dim,
                **validate(A).as_dict(A.group)}


def cmd_simple(args):
    A = fileio.load(args.file)
    v = check_graded_simple(A, seed=args.seed)
    out = {"name": A.name, **v.to_json(A)}
    code = UNDECIDED if v.verdict == INCONCLUSIVE else OK
    if args.recheck:
        out["rechecked"] = v.recheck(A)
        if not out["rechecked"]:
            code = ERROR
    return code, out


def cmd_centroid(args):
    A = fileio.load(args.file)
    C = graded_centroid(A, args.method)
    G = A.group
    status = C.division_status()
    out = {
        "name": A.name,
        "method": C.method,
        "dims": {G.format_degree(g): d for g, d in C.dims.items()},
        "dim": C.dim,
        "commutative": C.is_commutative(),
        "graded_division": status,
    }
    code = OK
    v = check_graded_simple(A, seed=args.seed)
    out["dim_over_gamma"] = A.dim // C.dim if v.is_simple else None
    if status is None:
        code = UNDECIDED
    return code, out


def cmd_identities(args):
    A = fileio.load(args.file)
    cap = _cap(args.cap)
    assoc = True if args.associative else (False if args.free else None)
    if args.ordinary:
        A = A.trivially_graded()
    if args.signature:
        sigs = [tuple(_degrees(A.group, args.signature))]
    else:
        sigs = list(signatures(A.group, A.support, cap))
    mode = A.is_associative if assoc is None else assoc
    spaces = []
    for degs in sigs:
        S = identity_space(A, DegreeSignature(degs, mode))
        rec = S.to_json(A)
        if args.limit is not None and len(rec["identities"]) > args.limit:
            rec["identities"] = rec["identities"][: args.limit]
            rec["truncated"] = True
        spaces.append(rec)
    return OK, {"name": A.name, "cap": cap, "associative": mode, "spaces": spaces,
                "note": "multilinear identities only"}


def cmd_compare(args):
    A, B = fileio.load(args.a), fileio.load(args.b)
    cap = _cap(args.cap)
    if args.ordinary:
        A, B = A.trivially_graded(), B.trivially_graded()
    r = compare_identities(A, B, cap)
    out = {"a": A.name, "b": B.name, **r.to_json(A, B)}
    code = OK
    if args.recheck:
        out["rechecked"] = r.recheck(A, B)
        code = OK if out["rechecked"] else ERROR
    return code, out


def cmd_iso(args):
    A, B = fileio.load(args.a), fileio.load(args.b)
    v = search_iso(A, B, _cap(args.cap), args.budget)
    out = {"a": A.name, "b": B.name, **v.to_json(A, B)}
    code = UNDECIDED if v.kind == INCONCLUSIVE else OK
    if args.recheck:
        out["rechecked"] = v.recheck(A, B)
        if not out["rechecked"]:
            code = ERROR
    return code, out


def cmd_experiment(args):
    if args.directory:
        algebras, names = fileio.load_dir(args.directory)
        if not algebras:
            raise ConfigurationError(f"no .json algebra files in {args.directory}")
    else:
        entries = simple_catalogue(_field(args.field))
        names = [n for n, _ in entries]
        algebras = [A for _, A in entries]
    rep = theorem_experiment(algebras, cap=_cap(args.cap), budget=args.budget, names=names,
                             recheck=args.recheck, seed=args.seed)
    data = rep.to_json()
    if args.out:
        data["files"] = sorted(os.path.basename(p) for p in
                               write_experiment(rep, args.out, figures=not args.no_figures))
    code = OK
    if any(p.rechecked is False for p in rep.pairs):
        code = ERROR
    elif rep.anomalies:
        inconclusive = all(p.iso.kind == INCONCLUSIVE for p in rep.pairs if p.verdict_class == ANOMALY)
        code = UNDECIDED if inconclusive else ERROR
    return code, ("experiment", data)


def cmd_mult(args):
    A = fileio.load(args.file)
    M = mult_algebra(A)
    G = A.group
    dims = {}
    for g in M.degrees:
        key = G.format_degree(g)
        dims[key] = dims.get(key, 0) + 1
    out = {"name": A.name, "dim": M.dim, "dims": dict(sorted(dims.items())),
           "contains_identity": M.contains_identity()}
    if args.out:
        fileio.save(M.as_algebra(), args.out)
        out["written"] = args.out
    return OK, out


# rendering ----------------------------------------------------------------


def _flat(prefix, value, rows):
    if isinstance(value, dict) and value:
        for k, v in value.items():
            _flat(f"{prefix}.{k}" if prefix else str(k), v, rows)
    elif isinstance(value, list) and value and any(isinstance(v, (dict, list)) for v in value):
        for i, v in enumerate(value):
            _flat(f"{prefix}[{i}]", v, rows)
    else:
        if isinstance(value, list):
            value = ", ".join(str(v) for v in value)
        rows.append([prefix, "" if value is None else value])


def render_table(out):
    if isinstance(out, tuple) and out[0] == "experiment":
        return experiment_table(out[1])
    rows = []
    _flat("", out, rows)
    return format_table(["key", "value"], rows)


def _payload(out):
    return out[1] if isinstance(out, tuple) else out


# parser -------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default="json",
                        help="output format (default json)")
    common.add_argument("--seed", type=int, default=0, help="seed for pseudorandom probes")
    common.add_argument("--field", default=None,
                        help="field such as 'Q(z12)' or a cyclotomic order "
                             "(default: $GRADEDPI_FIELD_ORDER or 12)")

    p = argparse.ArgumentParser(prog="graded-pi", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", parents=[common], help="write an algebra file")
    g.add_argument("kind", choices=["elementary", "group-algebra", "twisted", "direct-sum", "sl2"])
    g.add_argument("files", nargs="*", help="input files (direct-sum)")
    g.add_argument("--n", type=int, help="matrix size (elementary)")
    g.add_argument("--degs", help="comma-separated degrees, e.g. 'e,g' or '(0,0),(1,0)'")
    g.add_argument("--group", help="grading group, e.g. 'Z/2 x Z/2'")
    g.add_argument("--bicharacter", help="named bicharacter (twisted): pauli, pauli-t, clock, sign, cyclic")
    g.add_argument("--name", help="algebra name stored in the file")
    g.add_argument("--out", "-o", help="output file (default stdout)")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("catalogue", parents=[common], help="write the built-in catalogue")
    c.add_argument("--out", "-o", required=True, help="output directory")
    c.add_argument("--negatives", action="store_true", help="also write the direct-sum negatives")
    c.set_defaults(func=cmd_catalogue)

    for name, fn, helptext in (("validate", cmd_validate, "check the grading axiom"),
                               ("simple", cmd_simple, "decide graded simplicity"),
                               ("centroid", cmd_centroid, "graded centroid summary"),
                               ("mult", cmd_mult, "multiplication algebra summary")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("file")
        s.set_defaults(func=fn)
        if name == "simple":
            s.add_argument("--recheck", action="store_true", help="re-verify the certificate")
        if name == "centroid":
            s.add_argument("--method", choices=["auto", "commutant", "center"], default="auto")
        if name == "mult":
            s.add_argument("--out", "-o", help="write M(U) as an algebra file")

    i = sub.add_parser("identities", parents=[common], help="multilinear identity spaces")
    i.add_argument("file")
    i.add_argument("--cap", type=int, default=4)
    mode = i.add_mutually_exclusive_group()
    mode.add_argument("--associative", action="store_true", help="associative monomials")
    mode.add_argument("--free", action="store_true", help="bracketed (non-associative) monomials")
    i.add_argument("--signature", help="a single signature, e.g. '0,1,1'")
    i.add_argument("--ordinary", action="store_true", help="forget the grading")
    i.add_argument("--limit", type=int, default=10, help="identities printed per signature")
    i.set_defaults(func=cmd_identities)

    cp = sub.add_parser("compare", parents=[common], help="compare identity spaces")
    cp.add_argument("a")
    cp.add_argument("b")
    cp.add_argument("--cap", type=int, default=4)
    cp.add_argument("--ordinary", action="store_true", help="forget the gradings")
    cp.add_argument("--recheck", action="store_true")
    cp.set_defaults(func=cmd_compare)

    s = sub.add_parser("iso", parents=[common], help="search for a graded isomorphism")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--cap", type=int, default=4)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")
    s.add_argument("--recheck", action="store_true")
    s.set_defaults(func=cmd_iso)

    e = sub.add_parser("experiment", parents=[common],
                       help="identities-vs-isomorphism experiment over a catalogue")
    e.add_argument("directory", nargs="?", help="directory of algebra files (default: built-in)")
    e.add_argument("--cap", type=int, default=4)
    e.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    e.add_argument("--out", "-o", help="write report.json, TSV files and figures here")
    e.add_argument("--no-figures", action="store_true")
    e.add_argument("--recheck", action="store_true")
    e.set_defaults(func=cmd_experiment)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "budget", 1) < 1:
        print("error: --budget must be positive", file=sys.stderr)
        return ERROR
    try:
        code, out = args.func(args)
    except (GradedPIError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR
    if out is not None:
        if args.format == "table":
            sys.stdout.write(render_table(out))
        else:
            sys.stdout.write(dumps(_payload(out)))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
