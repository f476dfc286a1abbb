"""Command line front end.

Exit codes: 0 ok, 1 axiom violation or failed certificate, 2 parse error,
3 unmet theorem hypothesis.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .algebra import group_algebra, verify_algebra_module, verify_hom_algebra
from .complexes import (assemble_window, dual_left_family, dual_right_family,
                        hochschild_chain_family, hochschild_cochain_family, kg_dual_family,
                        left_family, right_family)
from .documents import (DocumentError, doc_kind, dumps, homgroup_to_doc, load_json,
                        parse_algebra, parse_group_endo, parse_homgroup, parse_module,
                        parse_window, window_to_doc)
from .homgroup import (HomGroupMorphism, NotHomomorphism, check_group, enumerate_morphisms,
                       twist_group, verify_hom_group, verify_morphism)
from .linalg import betti_numbers, parse_field
from .modules import scalar_module, verify_module
from .reports import AxiomReport, HypothesisUnmet, ShapeError
from .theorems import (Certificate, check_simplicial_identities, cocycle_certificate,
                       functoriality_certificate, hochschild_reduction, run_certificate,
                       transport_certificate)

OK, AXIOM, PARSE, HYPOTHESIS = 0, 1, 2, 3


class Abort(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _emit(args, doc, table_lines):
    if args.format == "json":
        print(dumps(doc))
    else:
        print("\n".join(table_lines))


def _field(args):
    try:
        return parse_field(args.field)
    except ValueError as e:
        raise Abort(PARSE, str(e)) from None


def _load_group(path, twist_optional=False):
    doc = load_json(path)
    if doc_kind(doc) != "homgroup":
        raise DocumentError(f"{path}: expected a Hom-group document")
    return parse_homgroup(doc, twist_optional)


def _checked_group(args, path):
    G = _load_group(path)
    rep = verify_hom_group(G, args.bound)
    if rep.violations:
        raise Abort(AXIOM, f"{path}: not a Hom-group ({', '.join(rep.axioms())})")
    return G


def _checked_module(G, path):
    doc = load_json(path)
    if doc_kind(doc) != "module":
        raise DocumentError(f"{path}: expected a module document")
    M = parse_module(doc)
    rep = verify_module(G, M)
    if rep.violations:
        raise Abort(AXIOM, f"{path}: module fails {M.flavor} axioms ({', '.join(rep.axioms())})")
    return M


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args):
    reports = []
    context = None  # last Hom-group or algebra seen, for module documents
    for path in args.paths:
        doc = load_json(path)
        kind = doc_kind(doc)
        if kind == "homgroup":
            G = parse_homgroup(doc)
            rep, context = verify_hom_group(G, args.bound), G
        elif kind == "group_endo":
            Gp, endo = parse_group_endo(doc)
            rep = check_group(Gp)
            rep.subject = "group_endo"
            rep.violations += verify_morphism(endo, Gp, Gp).violations
        elif kind == "algebra":
            A = parse_algebra(doc)
            rep, context = verify_hom_algebra(A), A
        elif kind == "module":
            M = parse_module(doc)
            if context is None:
                raise DocumentError(f"{path}: a module needs a preceding Hom-group or algebra")
            try:
                if hasattr(context, "constants"):
                    rep = verify_algebra_module(context, M)
                else:
                    rep = verify_module(context, M)
            except ValueError as e:
                raise DocumentError(f"{path}: {e}") from None
        else:
            W = parse_window(doc)
            rep = AxiomReport("window")
            if not W.composites_vanish():
                rep.add("square_zero", (), "nonzero", "zero")
        reports.append((path, rep))
    doc = {"command": "verify",
           "reports": [{"path": str(p), **r.to_doc()} for p, r in reports]}
    lines = []
    for p, r in reports:
        lines.append(f"{p}: {r.subject} {'ok' if r.ok else 'VIOLATED'}")
        for v in r.violations:
            lines.append(f"  {v.axiom} at {list(v.witness)}")
    _emit(args, doc, lines)
    return OK if all(r.ok for _, r in reports) else AXIOM


# ---------------------------------------------------------------------------
# twist and enumerate


def cmd_twist(args):
    doc = load_json(args.path)
    if doc_kind(doc) != "group_endo":
        raise DocumentError(f"{args.path}: expected a group document with 'endo'")
    group, endo = parse_group_endo(doc)
    rep = check_group(group)
    if rep.violations:
        raise Abort(AXIOM, f"not an associative group ({', '.join(rep.axioms())})")
    try:
        G = twist_group(group, endo)
    except NotHomomorphism as e:
        raise Abort(AXIOM, f"endo is not a homomorphism: {e}") from None
    rep = verify_hom_group(G, args.bound)
    out = {"command": "twist", "homgroup": homgroup_to_doc(G), "report": rep.to_doc()}
    lines = [f"order {G.order}", f"alpha {list(G.alpha)}"]
    lines += [" ".join(map(str, r)) for r in G.mul]
    lines.append("ok" if rep.ok else f"VIOLATED {rep.axioms()}")
    _emit(args, out, lines)
    return OK if rep.ok else AXIOM


def cmd_enumerate(args):
    G = _load_group(args.path, twist_optional=True)
    H = _load_group(args.target, twist_optional=True) if args.target else G
    maps = enumerate_morphisms(G, H)
    doc = {"command": "enumerate", "count": len(maps), "morphisms": [list(m) for m in maps]}
    lines = [f"{len(maps)} morphisms"] + [" ".join(map(str, m)) for m in maps]
    _emit(args, doc, lines)
    return OK


# ---------------------------------------------------------------------------
# (co)homology


_COCHAIN = {"dual_left": dual_left_family, "dual_right": dual_right_family,
            "dual_bimodule": dual_left_family}
_CHAIN = {"right": right_family, "left": left_family, "bimodule": right_family}


def _report_window(args, command, W, name):
    betti = betti_numbers(W)
    if args.export_window:
        Path(args.export_window).write_text(dumps(window_to_doc(W)) + "\n")
    doc = {"command": command, "builder": name, "direction": W.direction,
           "field": W.field.to_doc(), "max_degree": W.max_degree,
           "dims": list(W.dims), "betti": betti}
    lines = [f"{command} ({name}, {W.field!r}, N={W.max_degree})", "degree  dim  betti"]
    lines += [f"{n:>6}  {W.dims[n]:>3}  {b:>5}" for n, b in enumerate(betti)]
    _emit(args, doc, lines)
    return OK


def _from_window(args, command, direction):
    W = parse_window(load_json(args.from_window))
    if W.direction != direction:
        raise DocumentError(f"expected a {direction} window")
    if not W.composites_vanish():
        raise Abort(AXIOM, "window differentials do not compose to zero")
    return _report_window(args, command, W, "imported")


def cmd_cohomology(args):
    if args.from_window:
        return _from_window(args, "cohomology", "cochain")
    if not args.group:
        raise Abort(PARSE, "cohomology needs a Hom-group document or --from-window")
    G = _checked_group(args, args.group)
    if args.kg_dual:
        fam = kg_dual_family(G, _field(args))
    else:
        if args.module:
            M = _checked_module(G, args.module)
        else:
            M = scalar_module(G, _field(args), 1, "dual_left")
        if M.flavor not in _COCHAIN:
            raise Abort(PARSE, f"cohomology needs a dual module, got {M.flavor}")
        fam = _COCHAIN[M.flavor](G, M)
    return _report_window(args, "cohomology", assemble_window(fam, args.max_degree), fam.name)


def cmd_homology(args):
    if args.from_window:
        return _from_window(args, "homology", "chain")
    if not args.group:
        raise Abort(PARSE, "homology needs a Hom-group document or --from-window")
    G = _checked_group(args, args.group)
    if args.module:
        doc = load_json(args.module)
        if doc_kind(doc) != "module":
            raise DocumentError(f"{args.module}: expected a module document")
        M = parse_module(doc)
    else:
        M = scalar_module(G, _field(args), 1, "right")
    if M.flavor not in _CHAIN:
        raise Abort(PARSE, f"homology needs a left, right or bimodule, got {M.flavor}")
    if M.flavor == "bimodule":
        M = M.as_flavor("right")
    # the builders test the equivariance hypothesis before the module axioms
    try:
        fam = _CHAIN[M.flavor](G, M)
    except HypothesisUnmet:
        raise
    except ValueError as e:
        raise Abort(AXIOM, f"{args.module}: {e}") from None
    return _report_window(args, "homology", assemble_window(fam, args.max_degree), fam.name)


def cmd_hochschild(args):
    doc = load_json(args.algebra)
    kind = doc_kind(doc)
    mdoc = load_json(args.module)
    if doc_kind(mdoc) != "module":
        raise DocumentError(f"{args.module}: expected a module document")
    M = parse_module(mdoc)
    if kind == "algebra":
        A = parse_algebra(doc)
        rep = verify_hom_algebra(A)
    elif kind == "homgroup":
        G = parse_homgroup(doc)
        rep = verify_hom_group(G, args.bound)
        A = group_algebra(G, M.field)
    else:
        raise DocumentError(f"{args.algebra}: expected an algebra or Hom-group document")
    if rep.violations:
        raise Abort(AXIOM, f"{args.algebra}: axioms fail ({', '.join(rep.axioms())})")
    if A.field != M.field:
        raise Abort(PARSE, "algebra and module fields differ")
    try:
        if M.flavor == "dual_bimodule":
            fam = hochschild_cochain_family(A, M)
        elif M.flavor == "bimodule":
            fam = hochschild_chain_family(A, M)
        else:
            raise Abort(PARSE, f"Hochschild coefficients must be a (dual) bimodule, got {M.flavor}")
    except HypothesisUnmet:
        raise
    except ValueError as e:  # the module fails the algebra-module axioms
        raise Abort(AXIOM, str(e)) from None
    return _report_window(args, "hochschild", assemble_window(fam, args.max_degree), fam.name)


# ---------------------------------------------------------------------------
# theorems


THEOREMS = ("simplicial", "transport", "hochschild", "H0", "H1", "trace", "functorial")


def _module_as(G, M, flavor):
    """View M as ``flavor`` when its data allows it, else None."""
    if M.flavor == flavor:
        return M
    parent = {"dual_left": "dual_bimodule", "dual_right": "dual_bimodule",
              "left": "bimodule", "right": "bimodule"}
    if parent.get(flavor) == M.flavor:
        return M.as_flavor(flavor)
    return None


def _theorem_certificates(args, G, M, which):
    N, field = args.max_degree, (M.field if M else _field(args))

    def mod(flavor):
        if M is None:
            return scalar_module(G, field, 1, flavor)
        return _module_as(G, M, flavor)

    certs = []
    for name in which:
        if name == "simplicial":
            for flavor, fam in (("dual_left", dual_left_family), ("dual_right", dual_right_family),
                                ("right", right_family), ("left", left_family)):
                X = mod(flavor)
                if X is None:
                    continue
                try:
                    certs.append(check_simplicial_identities(fam(G, X), N, f"group/{flavor}"))
                except HypothesisUnmet as e:
                    certs.append(Certificate("simplicial_identities", f"group/{flavor}",
                                             "hypothesis_unmet", e.witness))
        elif name == "transport":
            for flavor, variant in (("dual_right", "cochain"), ("right", "chain")):
                X = mod(flavor)
                if X is not None:
                    certs.append(transport_certificate(G, X, variant, N, flavor))
        elif name == "hochschild":
            for flavor, variant in (("dual_left", "cochain"), ("right", "chain")):
                X = mod(flavor)
                if X is not None:
                    certs.append(run_certificate(hochschild_reduction, G, X, variant, N,
                                                 instance=flavor))
        elif name in ("H0", "H1"):
            X = mod("dual_right")
            if X is not None:
                kind = "H0_invariants" if name == "H0" else "H1_crossed"
                certs.append(cocycle_certificate(G, X, kind, instance="dual_right"))
        elif name == "trace":
            certs.append(cocycle_certificate(G, None, "trace", field, instance="kg_dual"))
        elif name == "functorial":
            for label, f in (("identity", tuple(G.elements)), ("alpha", G.alpha)):
                phi = HomGroupMorphism(G, G, f)
                for variant in ("cochain_kgdual", "chain_kg"):
                    certs.append(functoriality_certificate(phi, variant, N, field, label))
    return certs


def cmd_theorems(args):
    G = _checked_group(args, args.group)
    M = _checked_module(G, args.module) if args.module else None
    which = THEOREMS if args.which == "all" else tuple(args.which.split(","))
    unknown = [w for w in which if w not in THEOREMS]
    if unknown:
        raise Abort(PARSE, f"unknown theorem(s) {unknown}; choose from {', '.join(THEOREMS)}")
    certs = _theorem_certificates(args, G, M, which)
    if not certs:
        raise Abort(PARSE, "no selected theorem applies to this module")
    doc = {"command": "theorems", "certificates": [c.to_doc() for c in certs]}
    lines = []
    for c in certs:
        extra = ""
        if "dimension" in c.details:
            extra = f" dimension={c.details['dimension']}"
        if c.witness is not None:
            extra += f" witness={c.witness}"
        lines.append(f"{c.theorem:<36} {str(c.instance):<16} {c.status}{extra}")
    _emit(args, doc, lines)
    statuses = {c.status for c in certs}
    if "failed" in statuses:
        return AXIOM
    if "hypothesis_unmet" in statuses and not args.allow_unmet:
        return HYPOTHESIS
    return OK


# ---------------------------------------------------------------------------
# parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--field", default="rational", help="rational or gf:p")
    common.add_argument("--bound", type=int, default=None,
                        help="search bound for the Hom-invertibility exponent")
    common.add_argument("--max-degree", type=int, default=3, dest="max_degree")

    p = argparse.ArgumentParser(prog="homgroups", description="Hom-group (co)homology toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", parents=[common], help="check axioms of documents")
    s.add_argument("paths", nargs="+")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("twist", parents=[common], help="twist a group by an endomorphism")
    s.add_argument("path")
    s.set_defaults(func=cmd_twist)

    s = sub.add_parser("enumerate", parents=[common], help="list morphisms between Hom-groups")
    s.add_argument("path")
    s.add_argument("--target", default=None)
    s.set_defaults(func=cmd_enumerate)

    for name, func in (("cohomology", cmd_cohomology), ("homology", cmd_homology)):
        s = sub.add_parser(name, parents=[common], help=f"Betti numbers of {name}")
        s.add_argument("group", nargs="?")
        s.add_argument("module", nargs="?")
        s.add_argument("--export-window", default=None, dest="export_window")
        s.add_argument("--from-window", default=None, dest="from_window")
        if name == "cohomology":
            s.add_argument("--kg-dual", action="store_true", dest="kg_dual",
                           help="coefficients in (KG)* (functions on G^{n+1})")
        s.set_defaults(func=func)

    s = sub.add_parser("hochschild", parents=[common], help="Hom-Hochschild (co)homology")
    s.add_argument("algebra", help="algebra document or Hom-group document (uses KG)")
    s.add_argument("module")
    s.add_argument("--export-window", default=None, dest="export_window")
    s.set_defaults(func=cmd_hochschild)

    s = sub.add_parser("theorems", parents=[common], help="run theorem certificates")
    s.add_argument("group")
    s.add_argument("module", nargs="?")
    s.add_argument("--which", default="all", help=f"comma list of {','.join(THEOREMS)}")
    s.add_argument("--allow-unmet", action="store_true", dest="allow_unmet",
                   help="exit 0 when a hypothesis is unmet but nothing failed")
    s.set_defaults(func=cmd_theorems)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_degree < 0:
        print("error: --max-degree must be >= 0", file=sys.stderr)
        return PARSE
    try:
        _field(args)
        return args.func(args)
    except Abort as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except DocumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return PARSE
    except ShapeError as e:
        print(f"error: {e}", file=sys.stderr)
        return PARSE
    except HypothesisUnmet as e:
        print(f"hypothesis unmet: {e} (witness {e.witness})", file=sys.stderr)
        return HYPOTHESIS


if __name__ == "__main__":
    sys.exit(main())
