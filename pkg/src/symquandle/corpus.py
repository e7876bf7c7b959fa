"""Exhaustive theorem checks over all small quandles and their good involutions."""

from __future__ import annotations

import itertools
from collections import Counter

from . import associated as asg
from .coset import BoundExceeded, todd_coxeter
from .homology import h2_crosscheck, quandle_boundary_matrices
from .quandle import enumerate_quandles, is_connected, is_involutive, orbit_index
from .symmetric import (Permutation, check_equivariance, enumerate_good_involutions,
                        orbit_trichotomy_check, sym_classes, validate_good_involution)
from .wirtinger import twisted_wirtinger_rewrite


def corpus(max_size=4):
    """Yield ``(q, [good involutions])`` for every quandle of order <= max_size."""
    for n in range(1, max_size + 1):
        for q in enumerate_quandles(n, limit=max(5, max_size)):
            yield q, enumerate_good_involutions(q)


def _matmul_zero(a, b):
    if not a or not b:
        return True
    inner = len(b)
    return all(sum(a[i][k] * b[k][j] for k in range(inner)) == 0
               for i in range(len(a)) for j in range(len(b[0])))


def check_pair(q, rho, bound):
    """All per-(Q, rho) checks; returns ``{check_name: bool}`` (None = skipped)."""
    out = {}
    data = sym_classes(q, rho)
    out["symas_abelianization"] = asg.symas_abelianization_check(q, rho)[1]
    out["orbit_count"] = len(data.orbits) == len(data.lambda1) + 2 * len(data.lambda2)
    try:
        orbit_trichotomy_check(q, rho, data)
        out["trichotomy"] = True
    except RuntimeError:
        out["trichotomy"] = False
    out["central_kernel"] = asg.central_kernel_report(q, rho).identity_holds
    out["equivariance"] = check_equivariance(q, rho)
    out["covering_round_trip"] = None
    if not data.lambda2:  # a Z summand in the abelianization already proves infiniteness
        try:
            todd_coxeter(asg.symas_presentation(q, rho), (), bound)
        except BoundExceeded:
            pass
        else:
            rewritten = twisted_wirtinger_rewrite(asg.symas_presentation(q, rho), rho)
            out["covering_round_trip"] = asg.covering_group_check(rewritten, bound).is_covering is True
    if is_connected(q):
        out["h2_crosscheck"] = h2_crosscheck(q, rho, bound).agree
    return out


def embedding_consistency(q, bound=10**5):
    """Collisions s_x = s_y in As(Q, id) must come with [e_x] = [e_y] and co-orbitality."""
    identity = validate_good_involution(q, Permutation.identity(q.size))
    group, images = asg.finite_symas_group(q, identity, bound)
    ab = asg.abelian_generator_images(q)
    orb = orbit_index(q)
    for x, y in itertools.combinations(range(q.size), 2):
        if images[x] == images[y] and (ab[x] != ab[y] or orb[x] != orb[y]):
            return False
    return True


def run_corpus(max_size=4, bound=10_000, finite_bound=10**5):
    """Sweep the corpus; returns a JSON-ready summary with any violations listed."""
    counts = Counter()
    per_order = {}
    violations = []
    pairs = 0
    for q, invs in corpus(max_size):
        per_order[q.size] = per_order.get(q.size, 0) + 1
        key = [list(r) for r in q.table]

        def record(name, ok, rho=None):
            if ok is None:
                counts[name + ":skipped"] += 1
            elif ok:
                counts[name + ":pass"] += 1
            else:
                counts[name + ":fail"] += 1
                violations.append({"check": name, "quandle": key,
                                   "rho": list(rho.images) if rho is not None else None})

        record("asq_abelianization", asg.asq_abelianization_check(q)[1])
        bp = quandle_boundary_matrices(q)
        record("d2_d3_zero", _matmul_zero(bp.d2, bp.d3))
        if is_involutive(q):
            try:
                ok = embedding_consistency(q, finite_bound)
                record("finite_as_id", True)
                record("embedding_consistency", ok)
            except BoundExceeded:
                record("finite_as_id", False)
        for rho in invs:
            pairs += 1
            for name, ok in check_pair(q, rho, bound).items():
                record(name, ok, rho)
    checks = {}
    for k, v in sorted(counts.items()):
        name, status = k.rsplit(":", 1)
        checks.setdefault(name, {"pass": 0, "fail": 0, "skipped": 0})[status] = v
    return {"max_size": max_size, "quandles_per_order": {str(k): v for k, v in sorted(per_order.items())},
            "pairs": pairs, "checks": checks, "violations": violations,
            "theorem_violations": len(violations)}
