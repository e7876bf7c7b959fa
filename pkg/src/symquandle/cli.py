"""Command-line interface: one JSON report per invocation on stdout.

Exit codes: 0 success, 1 domain error (bad input file, failed validation,
theorem violation), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import associated as asg
from .coset import BoundExceeded, todd_coxeter
from .corpus import run_corpus
from .fileio import (digest, involution_to_json, load_presentation_file, load_quandle_file,
                     quandle_to_json)
from .homology import DEFAULT_MATRIX_BUDGET, NotConnected, SizeLimit, h2_chain, h2_crosscheck
from .quandle import (AxiomViolation, FormatError, LimitExceeded, enumerate_quandles,
                      is_connected, is_involutive, orbits)
from .symmetric import (InvolutionError, enumerate_good_involutions, orbit_trichotomy_check,
                        sym_classes)
from .wirtinger import classify_wirtinger
from .words import PresentationSyntaxError, UnknownGenerator

BOUND_CAVEAT = ("BoundExceeded means the enumeration did not close within the coset budget; "
                "it is not evidence that the group is infinite")

DOMAIN_ERRORS = (FormatError, AxiomViolation, InvolutionError, PresentationSyntaxError,
                 UnknownGenerator, NotConnected, SizeLimit, LimitExceeded,
                 asg.NotTwistedWirtinger, asg.ContainsIdentity, OSError)


class DomainFailure(Exception):
    """Command ran but its result is a failure (exit 1)."""

    def __init__(self, result):
        self.result = result


def _inputs(*paths):
    return {p: digest(p) for p in paths if p is not None}


def _need_rho(args, q, rho, warnings):
    if rho is not None:
        return rho
    invs = enumerate_good_involutions(q)
    if not invs:
        raise DomainFailure({"error": "NoGoodInvolution",
                             "message": "no --rho given and the quandle has no good involution"})
    warnings.append(f"no --rho given; using the first good involution {list(invs[0].images)}")
    return invs[0]


def cmd_check(args, warnings):
    try:
        q, _ = load_quandle_file(args.quandle)
    except AxiomViolation as exc:
        raise DomainFailure({"valid": False, "violations": [
            {"axiom": v.axiom, "witness": list(v.witness)} for v in exc.violations]})
    return {"valid": True, "size": q.size, "involutive": is_involutive(q),
            "connected": is_connected(q), "orbits": [list(o) for o in orbits(q)]}


def cmd_goodinv(args, warnings):
    q, _ = load_quandle_file(args.quandle)
    invs = enumerate_good_involutions(q)
    return {"count": len(invs), "involutions": [list(r.images) for r in invs]}


def cmd_classes(args, warnings):
    q, rho = load_quandle_file(args.quandle, args.rho)
    rho = _need_rho(args, q, rho, warnings)
    data = sym_classes(q, rho)
    cert = orbit_trichotomy_check(q, rho, data)
    return {"rho": list(rho.images), "orbits": [list(o) for o in data.orbits],
            "classes": [list(c) for c in data.classes], "reps": list(data.reps),
            "lambda1": list(data.lambda1), "lambda2": list(data.lambda2),
            "trichotomy_reps": list(data.trichotomy_reps),
            "trichotomy": {str(x): {"case": c, "class": lam} for x, (c, lam) in cert.items()}}


def cmd_ab(args, warnings):
    q, rho = load_quandle_file(args.quandle, args.rho)
    asq, asq_ok = asg.asq_abelianization_check(q)
    out = {"quandle": quandle_to_json(q), "orbits": len(orbits(q)), "asq_ab": asq.to_json(),
           "asq_check": asq_ok}
    if rho is None:
        out["rho"] = None
        return out
    rep = asg.central_kernel_report(q, rho)
    _, sym_ok = asg.symas_abelianization_check(q, rho)
    out.update(rep.to_json())
    out["rho"] = involution_to_json(rho)["rho"]
    out["symas_check"] = sym_ok
    if not (asq_ok and sym_ok and rep.identity_holds):
        raise DomainFailure(out)
    return out


def cmd_order(args, warnings):
    q, rho = load_quandle_file(args.quandle, args.rho)
    rho = _need_rho(args, q, rho, warnings)
    try:
        group, images = asg.finite_symas_group(q, rho, args.bound)
    except BoundExceeded:
        warnings.append(BOUND_CAVEAT)
        return {"rho": list(rho.images), "order": "BoundExceeded", "bound": args.bound}
    return {"rho": list(rho.images), "order": group.order, "abelian": group.is_abelian(),
            "generator_images": list(images)}


def cmd_embed(args, warnings):
    q, rho = load_quandle_file(args.quandle, args.rho)
    rho = _need_rho(args, q, rho, warnings)
    verdict = asg.embeddability(q, rho, args.bound)
    if verdict.group_order is None:
        warnings.append(BOUND_CAVEAT)
    out = {"rho": list(rho.images)}
    out.update(verdict.to_json())
    return out


def cmd_h2(args, warnings):
    q, rho = load_quandle_file(args.quandle, args.rho)
    chain = h2_chain(q, args.matrix_budget)
    out = {"h2_chain": chain.to_json(), "h2_group": None, "agree": None}
    if not is_connected(q):
        warnings.append("quandle is not connected; the group formula does not apply")
        return out
    invs = [rho] if rho is not None else enumerate_good_involutions(q)
    if not invs:
        warnings.append("no good involution; the group formula needs one")
        return out
    cc = h2_crosscheck(q, invs[0], args.bound)
    out.update(cc.to_json())
    out["rho"] = list(invs[0].images)
    if cc.agree is None:
        warnings.append(BOUND_CAVEAT)
    elif not cc.agree:
        raise DomainFailure(out)
    return out


def cmd_covering(args, warnings):
    p = load_presentation_file(args.presentation)
    rep = asg.covering_group_check(p, args.bound)
    warnings.extend(rep.warnings)
    if rep.is_covering is None:
        warnings.append(BOUND_CAVEAT)
    return rep.to_json()


def cmd_wirtinger(args, warnings):
    p = load_presentation_file(args.presentation)
    tags, overall = classify_wirtinger(p)
    return {"relators": [p.word_str(r) for r in p.relators], "tags": list(tags), "overall": overall}


def cmd_enumerate(args, warnings):
    qs = enumerate_quandles(args.order, limit=args.limit)
    return {"order": args.order, "count": len(qs), "quandles": [quandle_to_json(q) for q in qs]}


def cmd_corpus(args, warnings):
    out = run_corpus(args.max_size, args.bound, args.finite_bound)
    if out["theorem_violations"]:
        raise DomainFailure(out)
    return out


def build_parser():
    ap = argparse.ArgumentParser(prog="symquandle", description=__doc__.splitlines()[0])
    ap.add_argument("--pretty", action="store_true", help="indent the JSON report")
    sub = ap.add_subparsers(dest="command", required=True)

    def quandle_cmd(name, fn, help, rho=True):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("quandle")
        if rho:
            sp.add_argument("--rho", help="involution JSON file")
        sp.add_argument("--bound", type=int, default=asg.DEFAULT_BOUND, help="coset budget")
        sp.add_argument("--matrix-budget", type=int, default=DEFAULT_MATRIX_BUDGET)
        sp.set_defaults(func=fn, files=("quandle", "rho"))
        return sp

    quandle_cmd("check", cmd_check, "validate a quandle file", rho=False)
    quandle_cmd("goodinv", cmd_goodinv, "list good involutions", rho=False)
    quandle_cmd("classes", cmd_classes, "classes, Lambda split and orbit trichotomy")
    quandle_cmd("ab", cmd_ab, "abelianizations and central kernel rank")
    quandle_cmd("order", cmd_order, "order of As(Q, rho) by coset enumeration")
    quandle_cmd("embed", cmd_embed, "embeddability of Q in As(Q, rho)")
    quandle_cmd("h2", cmd_h2, "second quandle homology, both ways")
    for name, fn, help in (("covering", cmd_covering, "covering-group check"),
                           ("wirtinger", cmd_wirtinger, "classify relator shapes")):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("presentation")
        sp.add_argument("--bound", type=int, default=asg.DEFAULT_BOUND)
        sp.set_defaults(func=fn, files=("presentation",))
    sp = sub.add_parser("enumerate", help="all quandles of a given order")
    sp.add_argument("order", type=int)
    sp.add_argument("--limit", type=int, default=5)
    sp.set_defaults(func=cmd_enumerate, files=())
    sp = sub.add_parser("corpus", help="theorem sweep over all small quandles")
    sp.add_argument("--max-size", type=int, default=4)
    sp.add_argument("--bound", type=int, default=asg.DEFAULT_BOUND)
    sp.add_argument("--finite-bound", type=int, default=10**5)
    sp.set_defaults(func=cmd_corpus, files=())
    return ap


def dispatch(argv=None, out=None):
    """Run one command; returns the exit code and writes the report to ``out``."""
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    warnings = []
    code = 0
    try:
        result = args.func(args, warnings)
    except DomainFailure as exc:
        result, code = exc.result, 1
    except DOMAIN_ERRORS as exc:
        result, code = {"error": type(exc).__name__, "message": str(exc)}, 1
    paths = [getattr(args, f, None) for f in args.files]
    try:
        inputs = _inputs(*paths)
    except OSError:
        inputs = {}
    report = {"command": args.command, "inputs": inputs, "result": result, "warnings": warnings}
    json.dump(report, out, indent=2 if args.pretty else None, sort_keys=True)
    out.write("\n")
    return code


def main(argv=None):
    sys.exit(dispatch(argv))


if __name__ == "__main__":
    main()
