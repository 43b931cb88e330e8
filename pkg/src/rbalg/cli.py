"""Command-line driver.

    rb check <file> --object <name> --check <name> [--out <path>]
    rb derive <construction> <file> [--object <name>] [--out <path>]
    rb search <space> <file> [--object <name>] --weight <w>
              [--budget N] [--workers K] [--out <path>]
    rb report <file>

Exit codes: 0 the check passed, 1 it failed, 2 an error (bad file,
unknown check, violated precondition).  Output is UTF-8 with stable
ordering; derived files carry certificates that their defining checks
pass.
"""

import argparse
import sys

from . import structfile as sfmod
from .bialgebra import build_double_construction, build_matched_product, double_bialgebra, \
    dual_bialgebra
from .certificate import certificate_text, run_check, verify_certificate
from .dendriform import four_bialgebras, induced_dendriform
from .errors import RBError
from .rota_baxter import RBAlgebra, semidirect_product
from .search import search_antisym_aybe, search_rb_operators
from .structfile import (Realizer, StructureFile, algebra_decl, bundle_decl, coalgebra_decl,
                         dendriform_decl, emit_text, operator_decl, parse, rb_algebra_decls,
                         rb_asi_bialgebra_decls, tensor2_decl)
from .yang_baxter import coboundary_delta, cons2_bialgebra, lift_o_operator


def _unique_bundle(sf, subkind, kind="bundle"):
    names = [d.name for d in sf.objects.values()
             if d.kind == kind and (kind != "bundle" or d.subkind == subkind)]
    if len(names) != 1:
        raise RBError(f"give --object: need exactly one {subkind or kind}, found {len(names)}")
    return names[0]


def _resolve_target(sf, args, subkind, kind="bundle"):
    return args.object if args.object else _unique_bundle(sf, subkind, kind)


def cmd_check(args):
    sf = parse(args.file)
    report, cert = run_check(sf, args.object, args.check)
    sys.stdout.write(certificate_text(cert))
    if args.out:
        sf.certificates.append(cert)
        sfmod.emit(sf, args.out)
    return 0 if cert.passed else 1


def _certify(out_sf, name, check):
    report, cert = run_check(out_sf, name, check)
    if not report.passed:
        raise RBError(f"derived object {name} fails its defining check {check}")
    out_sf.certificates.append(cert)


def cmd_derive(args):
    sf = parse(args.file)
    realizer = Realizer(sf)
    construction = args.construction
    out = StructureFile(sf.field)

    if construction == "semidirect":
        name = _resolve_target(sf, args, "rb-representation")
        rb = semidirect_product(realizer.rb_representation(name))
        rb_algebra_decls(out, "semidirect", rb)
        _certify(out, "semidirect", "rb-algebra")
    elif construction == "matched-product":
        name = _resolve_target(sf, args, "matched-pair")
        product = build_matched_product(realizer.matched_pair(name))
        if isinstance(product, RBAlgebra):
            rb_algebra_decls(out, "product", product)
            _certify(out, "product", "rb-algebra")
        else:
            out.declare(algebra_decl("product", product))
            _certify(out, "product", "associativity")
    elif construction == "double-construction":
        name = _resolve_target(sf, args, "double")
        a_rb, astar_rb = realizer.double(name)
        rb, frob = build_double_construction(a_rb, astar_rb)
        rb_algebra_decls(out, "double", rb)
        out.declare(sfmod.form_decl("double.form", frob.form))
        out.declare(bundle_decl("double.frobenius", "frobenius",
                                {"rb-algebra": "double", "form": "double.form"}))
        _certify(out, "double", "rb-algebra")
        _certify(out, "double.frobenius", "frobenius")
    elif construction == "dual-bialgebra":
        name = _resolve_target(sf, args, "rb-asi-bialgebra")
        b = dual_bialgebra(realizer.rb_asi_bialgebra(name))
        rb_asi_bialgebra_decls(out, "dual", b)
        _certify(out, "dual", "rb-asi-bialgebra")
    elif construction == "double-bialgebra":
        name = _resolve_target(sf, args, "rb-asi-bialgebra")
        b = double_bialgebra(realizer.rb_asi_bialgebra(name))
        rb_asi_bialgebra_decls(out, "double", b)
        _certify(out, "double", "rb-asi-bialgebra")
    elif construction == "coboundary-delta":
        name = _resolve_target(sf, args, "r-element")
        algebra, r = realizer.r_element(name)
        cop = coboundary_delta(algebra, r)
        out.declare(coalgebra_decl("delta", cop))
        _certify(out, "delta", "coassociativity")
    elif construction == "lift-o-operator":
        name = _resolve_target(sf, args, "lift")
        d, q, beta = realizer.lift(name)
        result = lift_o_operator(d, q, beta)
        rb_algebra_decls(out, "lifted", result.algebra)
        out.declare(tensor2_decl("lifted.r", result.r.tensor))
        out.declare(operator_decl("lifted.q",
                                  q.block_diag(d.rep.alpha.transpose())))
        out.declare(bundle_decl("lifted.solution", "admissible-r",
                                {"rb-algebra": "lifted", "q": "lifted.q",
                                 "tensor": "lifted.r"}))
        _certify(out, "lifted", "rb-algebra")
        if result.bialgebra is not None:
            rb_asi_bialgebra_decls(out, "lifted.bialgebra", result.bialgebra)
            _certify(out, "lifted.bialgebra", "rb-asi-bialgebra")
            _certify(out, "lifted.solution", "admissible-aybe")
    elif construction == "cons2":
        name = _resolve_target(sf, args, "o-operator")
        b = cons2_bialgebra(realizer.o_operator(name))
        rb_asi_bialgebra_decls(out, "cons2", b)
        _certify(out, "cons2", "rb-asi-bialgebra")
    elif construction == "induced-dendriform":
        name = _resolve_target(sf, args, "rb-algebra")
        rbd = induced_dendriform(realizer.rb_algebra(name))
        out.declare(dendriform_decl("induced.dend", rbd.dend))
        out.declare(operator_decl("induced.op", rbd.operator))
        out.declare(bundle_decl("induced", "rb-dendriform",
                                {"dendriform": "induced.dend", "operator": "induced.op"},
                                {"weight": sf.field.format(rbd.weight)}))
        _certify(out, "induced", "rb-dendriform")
    elif construction == "four-bialgebras":
        name = _resolve_target(sf, args, "rb-algebra")
        quad = four_bialgebras(realizer.rb_algebra(name))
        for idx, b in enumerate(quad, start=1):
            rb_asi_bialgebra_decls(out, f"four{idx}", b)
            _certify(out, f"four{idx}", "rb-asi-bialgebra")
    else:
        raise RBError(f"unknown construction {construction!r}")

    text = emit_text(out)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_search(args):
    sf = parse(args.file)
    realizer = Realizer(sf)
    name = args.object if args.object else _unique_bundle(sf, None, kind="algebra")
    algebra = realizer.algebra(name)
    out = StructureFile(sf.field)
    out.declare(sf.objects[name])
    if args.space == "rb-operators":
        weight = sf.field.parse(args.weight)
        hits = search_rb_operators(algebra, weight, budget=args.budget,
                                   workers=args.workers)
        for idx, m in enumerate(hits, start=1):
            out.declare(operator_decl(f"found{idx:04d}", m))
            out.declare(bundle_decl(f"rb{idx:04d}", "rb-algebra",
                                    {"algebra": name, "operator": f"found{idx:04d}"},
                                    {"weight": args.weight}))
    elif args.space == "antisym-aybe":
        hits = search_antisym_aybe(algebra, budget=args.budget, workers=args.workers)
        for idx, t in enumerate(hits, start=1):
            out.declare(tensor2_decl(f"found{idx:04d}", t))
            out.declare(bundle_decl(f"r{idx:04d}", "r-element",
                                    {"algebra": name, "tensor": f"found{idx:04d}"}))
    else:
        raise RBError(f"unknown search space {args.space!r}")
    sys.stdout.write(f"count {len(hits)}\n")
    text = emit_text(out)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_report(args):
    sf = parse(args.file)
    ok = True
    for decl in sf.objects.values():
        kind = decl.kind if decl.subkind is None else f"{decl.kind} {decl.subkind}"
        size = ""
        if decl.sizes:
            size = " " + " ".join(f"{k}={v}" for k, v in sorted(decl.sizes.items()))
        sys.stdout.write(f"object {decl.name}: {kind}{size}\n")
    for cert in sf.certificates:
        good = verify_certificate(sf, cert)
        ok = ok and good
        state = "verified" if good else "STALE"
        sys.stdout.write(f"certificate {cert.check} on {cert.target}: "
                         f"{cert.verdict} ({state})\n")
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="rb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run a named check on a named object")
    p_check.add_argument("file")
    p_check.add_argument("--object", required=True)
    p_check.add_argument("--check", required=True)
    p_check.add_argument("--out")
    p_check.set_defaults(func=cmd_check)

    p_derive = sub.add_parser("derive", help="run a construction and certify its output")
    p_derive.add_argument("construction")
    p_derive.add_argument("file")
    p_derive.add_argument("--object")
    p_derive.add_argument("--out")
    p_derive.set_defaults(func=cmd_derive)

    p_search = sub.add_parser("search", help="enumerate a candidate space exhaustively")
    p_search.add_argument("space", choices=["rb-operators", "antisym-aybe"])
    p_search.add_argument("file")
    p_search.add_argument("--object")
    p_search.add_argument("--weight", default="0")
    p_search.add_argument("--budget", type=int, default=None)
    p_search.add_argument("--workers", type=int, default=1)
    p_search.add_argument("--out")
    p_search.set_defaults(func=cmd_search)

    p_report = sub.add_parser("report", help="summarize a file and re-verify certificates")
    p_report.add_argument("file")
    p_report.set_defaults(func=cmd_report)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RBError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except AssertionError as exc:
        sys.stderr.write(f"internal consistency failure: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
