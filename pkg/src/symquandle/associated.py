"""Associated groups As(Q) and As(Q, rho) and the structure checks built on them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .coset import BoundExceeded, coset_group_table, todd_coxeter
from .finite_group import closure, conjugacy_closure
from .quandle import Permutation, conjugation_quandle, orbit_index, orbits
from .snf import AbelianInvariants, abelian_invariants, abelianization_map
from .symmetric import GoodInvolution, sym_classes
from .wirtinger import classify_wirtinger
from .words import Presentation, Word, free_reduce

DEFAULT_BOUND = 10_000


class ContainsIdentity(ValueError):
    pass


class NotTwistedWirtinger(ValueError):
    pass


def _conjugation_relators(q):
    rels = []
    for x in range(q.size):
        for y in range(q.size):
            w = Word(((y, -1), (x, 1), (y, 1), (q.table[x][y], -1)))
            if len(free_reduce(w)):
                rels.append(w)
    return rels


def as_presentation(q):
    """<e_x | e_y^-1 e_x e_y e_{x*y}^-1>, pairs (x, y) in lexicographic order."""
    return Presentation(tuple(f"e{x}" for x in range(q.size)), tuple(_conjugation_relators(q)))


def symas_presentation(q, rho):
    """As(Q, rho): the conjugation relators plus ``s_rho(x) s_x`` for every x."""
    rels = _conjugation_relators(q)
    rels += [Word(((rho(x), 1), (x, 1))) for x in range(q.size)]
    return Presentation(tuple(f"s{x}" for x in range(q.size)), tuple(rels))


def asq_abelianization_check(q):
    inv = abelian_invariants(as_presentation(q))
    return inv, inv == AbelianInvariants((), len(orbits(q)))


def expected_symas_abelianization(q, rho):
    data = sym_classes(q, rho)
    return AbelianInvariants((2,) * len(data.lambda1), len(data.lambda2))


def symas_abelianization_check(q, rho):
    inv = abelian_invariants(symas_presentation(q, rho))
    return inv, inv == expected_symas_abelianization(q, rho)


@dataclass(frozen=True)
class CentralKernelReport:
    kernel_rank: int
    asq_ab: AbelianInvariants
    symas_ab: AbelianInvariants
    identity_holds: bool
    orbits: int
    lambda1: int
    lambda2: int

    def to_json(self):
        return {"orbits": self.orbits, "lambda1": self.lambda1, "lambda2": self.lambda2,
                "asq_ab": self.asq_ab.to_json(), "symas_ab": self.symas_ab.to_json(),
                "kernel_rank": self.kernel_rank, "identity_holds": self.identity_holds}


def central_kernel_report(q, rho):
    """Rank of the kernel of As(Q) -> As(Q, rho) and the counting identities around it.

    The kernel is free abelian on one element per class, so its rank is the
    class count.  Since Z meets the commutator subgroup trivially,
    rank As(Q)_Ab - free rank As(Q,rho)_Ab - |L1| = |L2|, which is the same as
    |orbits| = |L1| + 2|L2|.
    """
    data = sym_classes(q, rho)
    asq = abelian_invariants(as_presentation(q))
    sym = abelian_invariants(symas_presentation(q, rho))
    k = len(data.classes)
    l1, l2 = len(data.lambda1), len(data.lambda2)
    holds = (len(data.orbits) == l1 + 2 * l2 and k == l1 + l2
             and asq.free_rank - sym.free_rank - l1 == l2)
    return CentralKernelReport(k, asq, sym, holds, len(data.orbits), l1, l2)


def finite_symas_group(q, rho, max_cosets=DEFAULT_BOUND):
    """Realize As(Q, rho) as a group table; raises BoundExceeded."""
    ct = todd_coxeter(symas_presentation(q, rho), (), max_cosets)
    return coset_group_table(ct)


@dataclass(frozen=True)
class EmbeddabilityVerdict:
    status: str                  # Embeddable / NotEmbeddable / Unknown
    witness: tuple | None
    method: str                  # finite-group / abelianization / none
    group_order: int | None = None
    separated_pairs: tuple = ()
    unseparated_pairs: tuple = ()
    abelian_images: tuple = ()

    def to_json(self):
        return {"status": self.status, "witness": list(self.witness) if self.witness else None,
                "method": self.method, "group_order": self.group_order,
                "separated_pairs": [list(p) for p in self.separated_pairs],
                "unseparated_pairs": [list(p) for p in self.unseparated_pairs],
                "abelian_images": [list(v) for v in self.abelian_images]}


def embeddability(q, rho, max_cosets=DEFAULT_BOUND):
    """Is x -> s_x injective on Q?  The same answer holds for x -> e_x in As(Q).

    NotEmbeddable is only reported from a completed enumeration of As(Q, rho)
    itself; without one, pairs separated in the abelianization are reported and
    the verdict is Embeddable only if every pair is separated there.
    """
    pairs = list(itertools.combinations(range(q.size), 2))
    try:
        group, images = finite_symas_group(q, rho, max_cosets)
    except BoundExceeded:
        _, ab = abelianization_map(symas_presentation(q, rho))
        sep = tuple(p for p in pairs if ab[p[0]] != ab[p[1]])
        unsep = tuple(p for p in pairs if ab[p[0]] == ab[p[1]])
        status = "Embeddable" if not unsep else "Unknown"
        return EmbeddabilityVerdict(status, None, "abelianization" if not unsep else "none",
                                    None, sep, unsep, tuple(ab))
    for x, y in pairs:
        if images[x] == images[y]:
            return EmbeddabilityVerdict("NotEmbeddable", (x, y), "finite-group", group.order)
    return EmbeddabilityVerdict("Embeddable", None, "finite-group", group.order, tuple(pairs))


def conj_symmetric_closure(group, x_gens):
    """Q = union of g^-1 X^{+-} g with rho = inversion restricted to Q.

    Returns ``(quandle, rho, labels)`` where labels[i] is the group element of
    quandle element i.
    """
    base = set(x_gens) | {group.inv[x] for x in x_gens}
    if group.id in base:
        raise ContainsIdentity("X^{+-} contains the identity")
    labels = conjugacy_closure(group, base)
    q = conjugation_quandle(group, labels)
    pos = {g: i for i, g in enumerate(labels)}
    rho = GoodInvolution(Permutation(pos[group.inv[g]] for g in labels))
    return q, rho, labels


@dataclass(frozen=True)
class CoveringReport:
    group_order: int | None
    quandle_size: int | None
    symas_order: int | None
    is_covering: bool | None
    identity_free: bool | None = None
    generates: bool | None = None
    warnings: tuple = field(default=())

    def to_json(self):
        def fmt(v):
            return "BoundExceeded" if v is None else v
        return {"group_order": fmt(self.group_order), "quandle_size": self.quandle_size,
                "symas_order": fmt(self.symas_order),
                "is_covering": "Unknown" if self.is_covering is None else self.is_covering,
                "identity_free": self.identity_free, "generates": self.generates}


def covering_group_check(p, max_cosets=DEFAULT_BOUND):
    """Check that p_Q: As(Q, inv) -> G is an isomorphism for Q built from the generators."""
    _, overall = classify_wirtinger(p)
    if overall not in ("Wirtinger", "TwistedWirtinger"):
        raise NotTwistedWirtinger(f"presentation is {overall}")
    try:
        group, images = coset_group_table(todd_coxeter(p, (), max_cosets))
    except BoundExceeded as exc:
        return CoveringReport(None, None, None, None, warnings=(str(exc),))
    identity_free = group.id not in images
    if not identity_free:
        return CoveringReport(group.order, None, None, False, False, None)
    q, rho, labels = conj_symmetric_closure(group, images)
    generates = len(closure(group, labels)) == group.order
    try:
        sym_ct = todd_coxeter(symas_presentation(q, rho), (), max_cosets)
    except BoundExceeded as exc:
        return CoveringReport(group.order, q.size, None, None, True, generates, (str(exc),))
    ok = sym_ct.count == group.order and generates and identity_free
    return CoveringReport(group.order, q.size, sym_ct.count, ok, identity_free, generates)


def abelian_generator_images(q):
    """Image of each e_x in As(Q)_Ab (free abelian, one coordinate per orbit)."""
    return abelianization_map(as_presentation(q))[1]


def co_orbital(q, x, y):
    idx = orbit_index(q)
    return idx[x] == idx[y]
