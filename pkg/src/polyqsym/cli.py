"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
All numeric output is exact; rationals cross the JSON boundary as strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import polytopes as pb
from .exprs import ExprError, format_sum, parse_expression
from .ring import JOIN_RING, PRODUCT_RING
from .suites import SUITES, run_suite
from .transforms import (bb_basis, ehrenborg_F, f_poly,
                         f_poly_operator_route, f_rp)
from . import lyndon
from . import transforms

CACHE_SCHEMA = 1


class CliIOError(RuntimeError):
    pass


def _load_cache(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliIOError("cannot read cache %s: %s" % (path, exc)) from None
    if data.get("schema") != CACHE_SCHEMA:
        raise CliIOError("cache %s has schema %r, expected %r"
                         % (path, data.get("schema"), CACHE_SCHEMA))
    count = pb.registry_restore(data.get("registry", []))
    for entry in data.get("bb", []):
        basis = transforms.BBBasis(
            entry["n"], tuple(tuple(s) for s in entry["psi"]),
            tuple(entry["omega"]),
            tuple(pb.from_word(w) for w in entry["omega"]),
            tuple(tuple(r) for r in entry["matrix"]))
        with transforms._bb_lock:
            transforms._bb_cache.setdefault(entry["n"], basis)
    return count


def _save_cache(path):
    data = {"schema": CACHE_SCHEMA,
            "registry": pb.registry_snapshot(),
            "bb": [b.to_json_obj()
                   for b in transforms._bb_cache.values()]}
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(data, fh)
        os.replace(tmp, path)
    except OSError as exc:
        raise CliIOError("cannot write cache %s: %s" % (path, exc)) from None
    return len(data["registry"])


def _qsym_out(q, as_json):
    if as_json:
        return json.dumps(q.to_json_obj())
    return repr(q)


def _parse(text, ambient=None):
    return parse_expression(text, ambient=ambient)


def _cmd_build(args):
    s = _parse(args.expr)
    rows = []
    for poly, coeff in sorted(s.terms.items(),
                              key=lambda pc: (pc[0].dim, pc[0].key)):
        entry = {"coeff": coeff, "dim": poly.dim,
                 "vertices": poly.vertex_count, "facets": poly.facet_count,
                 "faces": poly.lattice.n,
                 "f_vector": pb.f_vector(poly)}
        if poly.name:
            entry["expr"] = poly.name
        rows.append(entry)
    if args.json:
        print(json.dumps(rows))
    else:
        for e in rows:
            print("%+d * dim %d: %d vertices, %d facets, f = %s"
                  % (e["coeff"], e["dim"], e["vertices"], e["facets"],
                     e["f_vector"]))
    return 0


def _cmd_flag(args):
    s = _parse(args.expr)
    dims = s.dims()
    if len(dims) != 1:
        print("flag vectors need a homogeneous sum", file=sys.stderr)
        return 2
    n = dims[0]
    table = {}
    import itertools
    for k in range(max(n, 0) + 1):
        for subset in itertools.combinations(range(max(n, 0)), k):
            table[subset] = transforms.flag_number_of_sum(s, subset)
    if args.json:
        print(json.dumps([{"S": list(k), "value": v}
                          for k, v in sorted(table.items())]))
    else:
        for k, v in sorted(table.items()):
            print("f_%s = %d" % ("{" + ",".join(map(str, k)) + "}", v))
    return 0


def _cmd_fpoly(args):
    s = _parse(args.expr, ambient=PRODUCT_RING)
    if args.route == "operator":
        dims = s.dims()
        if len(dims) != 1:
            print("operator route needs a homogeneous sum", file=sys.stderr)
            return 2
        r = args.r if args.r is not None else max(dims[0], 0)
        acc = None
        for poly, coeff in s.terms.items():
            piece = coeff * f_poly_operator_route(poly, r)
            acc = piece if acc is None else acc + piece
        print(json.dumps(_multipoly_json(acc)) if args.json else repr(acc))
        return 0
    q = f_poly(s)
    if args.r is not None:
        print(json.dumps(_multipoly_json(q.expand(args.r))) if args.json
              else repr(q.expand(args.r)))
    else:
        print(_qsym_out(q, args.json))
    return 0


def _multipoly_json(p):
    return [{"alpha": a, "exps": list(e), "coeff": v}
            for (a, e), v in sorted(p.terms.items())]


def _cmd_ehrenborg(args):
    s = _parse(args.expr, ambient=JOIN_RING)
    print(_qsym_out(ehrenborg_F(s), args.json))
    return 0


def _cmd_frp(args):
    s = _parse(args.expr, ambient=JOIN_RING)
    print(_qsym_out(f_rp(s), args.json))
    return 0


def _cmd_lyndon(args):
    if args.k_table is not None:
        ks = lyndon.series_exponents(
            lyndon.fibonacci_series(args.k_table), args.k_table)
        print(json.dumps(ks))
        return 0
    if args.weight is None:
        print("lyndon needs --weight or --k-table", file=sys.stderr)
        return 2
    alphabet = lyndon.ODD if args.alphabet == "odd" \
        else tuple(int(a) for a in args.alphabet.split(","))
    words = lyndon.lyndon_words(alphabet, args.weight)
    print(json.dumps([list(w) for w in words]))
    return 0


def _cmd_bb_matrix(args):
    basis = bb_basis(args.n)
    if args.det:
        print(json.dumps({"n": args.n, "det": basis.det()}) if args.json
              else "det K^%d = %d" % (args.n, basis.det()))
        return 0
    if args.json:
        print(json.dumps(basis.to_json_obj()))
    else:
        print("rows:", " ".join(basis.omega_words))
        print("cols:", " ".join("{" + ",".join(map(str, s)) + "}"
                                for s in basis.psi_sets))
        for row in basis.matrix:
            print(" ".join("%6d" % v for v in row))
    return 0


def _cmd_project(args):
    s = _parse(args.expr, ambient=PRODUCT_RING)
    out = transforms.project_bb(s, args.dim)
    if args.json:
        print(json.dumps([{"expr": p.name, "coeff": c}
                          for p, c in out.terms.items()]))
    else:
        print(format_sum(out))
    return 0


def _cmd_verify(args):
    if args.suite not in SUITES:
        print("unknown suite %r; available: %s"
              % (args.suite, ", ".join(sorted(SUITES))), file=sys.stderr)
        return 2
    checks = run_suite(args.suite, jobs=args.jobs)
    failed = sum(1 for c in checks if not c.ok)
    if args.json:
        print(json.dumps({
            "suite": args.suite,
            "checks": [{"name": c.name,
                        "status": "pass" if c.ok else "fail",
                        "detail": c.detail} for c in checks],
            "failed": failed}))
    else:
        for c in checks:
            mark = "ok  " if c.ok else "FAIL"
            line = "%s %s (%.0f ms)" % (mark, c.name, c.elapsed * 1000)
            if c.detail and not c.ok:
                line += " :: " + c.detail
            print(line)
        print("suite %s: %d checks, %d failed"
              % (args.suite, len(checks), failed))
    return 1 if failed else 0


def _cmd_cache(args):
    if args.action == "save":
        n = _save_cache(args.path)
        print("saved %d lattices to %s" % (n, args.path))
    else:
        n = _load_cache(args.path)
        print("loaded %d lattices from %s" % (n, args.path))
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--cache", metavar="PATH",
                        default=argparse.SUPPRESS,
                        help="load this lattice cache before the command "
                             "and save it afterwards")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help="worker threads for verification suites")
    ap = argparse.ArgumentParser(
        prog="polyqsym",
        description="Exact flag-vector and quasi-symmetric function "
                    "calculator for combinatorial polytopes")
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--cache", metavar="PATH")
    ap.add_argument("--jobs", type=int, default=1)
    sub = ap.add_subparsers(dest="verb", required=True,
                            parser_class=lambda **kw: argparse.ArgumentParser(
                                parents=[common], **kw))

    p = sub.add_parser("build", help="materialize a polytope expression")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("flag", help="flag numbers of a homogeneous sum")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_flag)

    p = sub.add_parser("fpoly", help="generalized flag polynomial")
    p.add_argument("expr")
    p.add_argument("--r", type=int, default=None,
                   help="expand in this many variables")
    p.add_argument("--route", choices=("flag", "operator"), default="flag")
    p.set_defaults(fn=_cmd_fpoly)

    p = sub.add_parser("ehrenborg", help="chain transform of the lattice")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_ehrenborg)

    p = sub.add_parser("frp", help="join-ring transform")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_frp)

    p = sub.add_parser("lyndon", help="Lyndon word enumeration")
    p.add_argument("--alphabet", default="1,2",
                   help="'odd' or comma-separated letters")
    p.add_argument("--weight", type=int, default=None)
    p.add_argument("--k-table", dest="k_table", type=int, default=None,
                   help="emit generator counts up to this degree")
    p.set_defaults(fn=_cmd_lyndon)

    p = sub.add_parser("bb-matrix", help="sparse flag basis matrix")
    p.add_argument("n", type=int)
    p.add_argument("--det", action="store_true")
    p.set_defaults(fn=_cmd_bb_matrix)

    p = sub.add_parser("project", help="project onto the basis polytopes")
    p.add_argument("expr")
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(fn=_cmd_project)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("cache", help="save or load the lattice registry")
    p.add_argument("action", choices=("save", "load"))
    p.add_argument("path")
    p.set_defaults(fn=_cmd_cache)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.cache and args.verb != "cache" and os.path.exists(args.cache):
            _load_cache(args.cache)
        code = args.fn(args)
        if args.cache and args.verb != "cache" and code == 0:
            _save_cache(args.cache)
        return code
    except ExprError as exc:
        print("syntax error: %s" % exc, file=sys.stderr)
        return 2
    except CliIOError as exc:
        print(str(exc), file=sys.stderr)
        return 3
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
