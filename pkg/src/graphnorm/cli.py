"""Command line front end.

Every report is one JSON object on stdout. Errors go to stderr as JSON with
a stable ``error`` code. Exit status: 0 success, 1 domain error, 2 usage or
parse error.
"""

import argparse
import json
import os
import sys
from math import gcd

from . import __version__
from .bundle import (BundleClass, SWFunction, baldridge_sum, bound_rhs, limit_certificate,
                     separating_k, sw_gate, twist_euler)
from .corpus import random_graph
from .covers import ObstructionReport, glue_character
from .errors import GraphNormError, NotComposite, NotCoprime, SchemaError, ValidationError
from .field import w_equal
from .graph import CohClass, classify, from_document, homology_h1, to_document, validate_structure
from .norms import (default_modulus, thurston_norm, torsion_via_engine,
                    verify_norm_equality)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    code = "USAGE_ERROR"


class ParseError(Exception):
    code = "PARSE_ERROR"

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line, self.column = line, column


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(obj, pretty):
    json.dump(obj, sys.stdout, indent=2 if pretty else None, sort_keys=True,
              separators=None if pretty else (",", ":"))
    sys.stdout.write("\n")


def load_graph(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (path, exc.strerror)) from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return from_document(doc)


def _ints(text, what):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError("%s must be a comma separated list of integers" % what) from None


def parse_sigma(g, text):
    """``fibres=v1,...`` (one value per block, not checked against homology)
    or ``class=v1,...`` (one value per homology generator, validated)."""
    if text is None:
        raise UsageError("--sigma is required")
    kind, _, rest = text.partition("=")
    if kind == "fibres":
        vals = _ints(rest, "--sigma fibres")
        if len(vals) != len(g.blocks):
            raise UsageError("--sigma fibres needs %d values" % len(g.blocks))
        return {b.id: v for b, v in zip(g.blocks, vals)}
    if kind == "class":
        return CohClass(homology_h1(g), _ints(rest, "--sigma class"))
    raise UsageError("--sigma must start with fibres= or class=")


def _check_d(g, d):
    bad = [t.id for t in g.tori if gcd(d, t.c) != 1]
    if bad:
        raise NotCoprime("d = %d shares a factor with c(T) for %s" % (d, ", ".join(map(str, bad))),
                         tori=bad, suggested_d=default_modulus(g))


def _group_dict(grp):
    return {"free_rank": grp.free_rank, "torsion": list(grp.torsion_factors)}


def cmd_validate(args):
    g = load_graph(args.path)
    rep = validate_structure(g)
    out = {"structure": rep.as_dict(), "classification": classify(g).as_dict()}
    _emit(out, args.pretty)
    return EXIT_OK if rep.composite else EXIT_DOMAIN


def _pipeline(g, args):
    rep = classify(g)
    if rep.kind != "COMPOSITE":
        raise NotComposite("graph is not composite: %s" % ", ".join(rep.reasons),
                           reasons=list(rep.reasons))
    h1 = homology_h1(g)
    d = args.d if args.d is not None else default_modulus(g)
    if d < 2:
        raise UsageError("--d must be >= 2")
    _check_d(g, d)
    sigma = parse_sigma(g, args.sigma)
    alpha = glue_character(g, d)
    out = {"h1": dict(_group_dict(h1.group), b1=h1.b1, labels=list(h1.labels)), "d": d}
    if isinstance(alpha, ObstructionReport):
        out["character"] = {"obstruction": alpha.as_dict(), "validated": False}
        alpha = {b.id: 1 for b in g.blocks}
    else:
        out["character"] = {"residues": list(alpha.residues),
                            "fibre_residues": {str(b.id): alpha.fibre(b.id) for b in g.blocks},
                            "validated": True}
    return h1, d, sigma, alpha, out


def cmd_invariants(args):
    g = load_graph(args.path)
    h1, d, sigma, alpha, out = _pipeline(g, args)
    report = verify_norm_equality(g, sigma, alpha, d)
    out.update(report.as_dict())
    if report.acyclic:
        out["engine_agrees"] = w_equal(torsion_via_engine(g, sigma, alpha, d).rep,
                                       report.torsion_value.rep, d)
    out["status"] = "VALIDATED" if isinstance(sigma, CohClass) else "UNVALIDATED"
    _emit(out, args.pretty)
    return EXIT_OK


def _element(sw, text, flag):
    coords = _ints(text, flag)
    try:
        return sw.group.from_coordinates(coords)
    except ValueError as exc:
        raise UsageError("%s: %s" % (flag, exc)) from None


def cmd_bundle(args):
    g = load_graph(args.path)
    h1, d, sigma, alpha, out = _pipeline(g, args)
    cls = BundleClass(args.self_intersection, sigma)
    rhs = bound_rhs(g, cls)
    out.update({"self_intersection": args.self_intersection,
                "thurston": thurston_norm(g, sigma), "rhs": rhs, "gate": sw_gate(g),
                "status": "VALIDATED" if isinstance(sigma, CohClass) else "UNVALIDATED"})
    if args.sw:
        if args.euler is None or args.gamma is None:
            raise UsageError("--sw needs --euler and --gamma")
        try:
            with open(args.sw) as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise UsageError("cannot read %s: %s" % (args.sw, exc.strerror)) from None
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
        sw = SWFunction.from_json(doc)
        e = _element(sw, args.euler, "--euler")
        gamma = _element(sw, args.gamma, "--gamma")
        pts = sw.points()
        before = {str(x): baldridge_sum(sw, e, x) for x in pts}
        k = separating_k(sw, e, gamma, args.cap)
        f = twist_euler(e, gamma, k)
        after = {str(x): baldridge_sum(sw, f, x) for x in pts}
        out["sw"] = {"sums": before, "separating_k": k, "twisted_euler": str(f),
                     "sums_after": after, "restored": all(after[str(x)] == sw(x) for x in pts)}
    if args.chi_candidate is not None:
        out["certificate"] = limit_certificate(args.chi_candidate, args.m, rhs).as_dict()
    _emit(out, args.pretty)
    return EXIT_OK


def cmd_corpus(args):
    if args.blocks < 2:
        raise UsageError("--blocks must be >= 2")
    seed = os.environ.get("GRAPHNORM_SEED")
    seed = int(seed) if seed not in (None, "") else args.seed
    import random
    rng = random.Random(seed)
    for _ in range(args.count):
        g = random_graph(args.blocks, rng, p_unipotent=args.p_unipotent)
        json.dump(to_document(g), sys.stdout, sort_keys=True, separators=(",", ":"))
        sys.stdout.write("\n")
    return EXIT_OK


def build_parser():
    p = _Parser(prog="graphnorm", description="Invariants of composite graph manifolds.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command")

    v = sub.add_parser("validate", help="check structure and classify")
    v.add_argument("path")
    v.add_argument("--pretty", action="store_true")
    v.set_defaults(func=cmd_validate)

    for name, func, helptext in (("invariants", cmd_invariants, "norms and torsion"),
                                 ("bundle", cmd_bundle, "genus bound for a circle bundle")):
        q = sub.add_parser(name, help=helptext)
        q.add_argument("path")
        q.add_argument("--sigma", help="fibres=v1,... or class=v1,...")
        q.add_argument("--d", type=int, help="modulus of the character")
        q.add_argument("--pretty", action="store_true")
        q.set_defaults(func=func)
        if name == "bundle":
            q.add_argument("--self-intersection", type=int, required=True)
            q.add_argument("--sw", help="SW function JSON file")
            q.add_argument("--euler", help="Euler class coordinates")
            q.add_argument("--gamma", help="loop class coordinates")
            q.add_argument("--cap", type=int, default=10 ** 4)
            q.add_argument("--chi-candidate", type=int)
            q.add_argument("--m", type=int, default=0)

    c = sub.add_parser("corpus", help="random composite graphs, one JSON document per line")
    c.add_argument("--blocks", type=int, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--count", type=int, default=1)
    c.add_argument("--p-unipotent", type=float, default=0.5)
    c.set_defaults(func=cmd_corpus)
    return p


def _fail(code, message, status, **extra):
    obj = {"error": code, "message": message}
    obj.update(extra)
    json.dump(obj, sys.stderr, sort_keys=True, default=str)
    sys.stderr.write("\n")
    return status


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("a subcommand is required")
        return args.func(args)
    except UsageError as exc:
        return _fail(UsageError.code, str(exc), EXIT_USAGE)
    except ParseError as exc:
        return _fail(ParseError.code, str(exc), EXIT_USAGE, line=exc.line, column=exc.column)
    except SchemaError as exc:
        return _fail(exc.code, str(exc), EXIT_USAGE, **exc.details)
    except GraphNormError as exc:
        return _fail(exc.code, str(exc), EXIT_DOMAIN, **exc.details)


if __name__ == "__main__":
    sys.exit(main())
