"""Good involutions and the orbit bookkeeping of a symmetric quandle."""

from __future__ import annotations

from dataclasses import dataclass

from .quandle import Permutation, UnionFind, orbit_index, orbits, translations


class InvolutionError(Exception):
    def __init__(self, msg, witness=None):
        self.witness = witness
        super().__init__(msg if witness is None else f"{msg} at {witness}")


class NotInvolution(InvolutionError):
    pass


class Axiom1Violation(InvolutionError):
    """rho(x*y) != rho(x)*y"""


class Axiom2Violation(InvolutionError):
    """x*rho(y) != S_y^-1(x)"""


class TrichotomyFailure(RuntimeError):
    """Internal error: the orbit trichotomy cannot fail for a good involution."""


@dataclass(frozen=True)
class GoodInvolution:
    rho: Permutation

    def __call__(self, x):
        return self.rho.images[x]

    @property
    def images(self):
        return self.rho.images


def validate_good_involution(q, rho):
    """Check rho against q; return a GoodInvolution or raise the first failure.

    Axiom 2 is tested before axiom 1: as a statement about translations it reads
    S_{rho(y)} = S_y^-1, a cheap column comparison.
    """
    if not isinstance(rho, Permutation):
        rho = Permutation(rho)
    n = q.size
    if len(rho) != n:
        raise ValueError(f"involution has size {len(rho)}, quandle has size {n}")
    r = rho.images
    for x in range(n):
        if r[r[x]] != x:
            raise NotInvolution("rho^2 != id", (x,))
    t = q.table
    for y in range(n):
        for x in range(n):
            # S_y^-1(x) is the unique z with z*y == x
            if t[t[x][r[y]]][y] != x:
                raise Axiom2Violation("x*rho(y) != S_y^-1(x)", (x, y))
    for x in range(n):
        for y in range(n):
            if r[t[x][y]] != t[r[x]][y]:
                raise Axiom1Violation("rho(x*y) != rho(x)*y", (x, y))
    return GoodInvolution(rho)


def involutions(n):
    """All involutions of range(n) (identity included), in lexicographic order."""
    out = []

    def rec(im, i):
        if i == n:
            out.append(tuple(im))
            return
        if im[i] is not None:
            rec(im, i + 1)
            return
        im[i] = i
        rec(im, i + 1)
        for j in range(i + 1, n):
            if im[j] is None:
                im[i], im[j] = j, i
                rec(im, i + 1)
                im[j] = None
        im[i] = None

    rec([None] * n, 0)
    return sorted(out)


def enumerate_good_involutions(q, prefilter=True):
    n = q.size
    S = translations(q)
    Sinv = [s.inverse() for s in S]
    out = []
    for im in involutions(n):
        if prefilter and any(S[im[y]] != Sinv[y] for y in range(n)):
            continue
        try:
            out.append(validate_good_involution(q, Permutation(im)))
        except InvolutionError:
            pass
    return out


@dataclass(frozen=True)
class SymClassData:
    orbits: tuple
    classes: tuple
    reps: tuple
    lambda1: tuple
    lambda2: tuple
    trichotomy_reps: tuple

    @property
    def orbit_of(self):
        idx = {}
        for i, block in enumerate(self.orbits):
            for x in block:
                idx[x] = i
        return idx


def sym_classes(q, rho):
    """Classes of the relation generated by x ~ x*y and x ~ rho(x).

    Representatives are the minimal element of each class; class ids index
    ``classes``.
    """
    n = q.size
    uf = UnionFind(n)
    for x in range(n):
        uf.union(x, rho(x))
        for y in range(n):
            uf.union(x, q.table[x][y])
    classes = tuple(uf.blocks())
    reps = tuple(c[0] for c in classes)
    orb = orbit_index(q)
    lam1 = tuple(i for i, r in enumerate(reps) if orb[rho(r)] == orb[r])
    lam2 = tuple(i for i, r in enumerate(reps) if orb[rho(r)] != orb[r])
    tri = tuple(sorted(set(reps) | {rho(reps[i]) for i in lam2}))
    return SymClassData(tuple(orbits(q)), classes, reps, lam1, lam2, tri)


def orbit_trichotomy_check(q, rho, data=None):
    """Place every x in exactly one of O(x_l) for l in L1, O(x_l) or O(rho(x_l)) for l in L2.

    Returns ``{x: (case, class_id)}`` with case in {1, 2, 3}.
    """
    if data is None:
        data = sym_classes(q, rho)
    orb = orbit_index(q)
    out = {}
    for x in range(q.size):
        hits = []
        for lam in data.lambda1:
            if orb[x] == orb[data.reps[lam]]:
                hits.append((1, lam))
        for lam in data.lambda2:
            if orb[x] == orb[data.reps[lam]]:
                hits.append((2, lam))
            if orb[x] == orb[rho(data.reps[lam])]:
                hits.append((3, lam))
        if len(hits) != 1:
            raise TrichotomyFailure(f"element {x} matches {hits}")
        out[x] = hits[0]
    if len({orb[x] for x in data.trichotomy_reps}) != len(data.orbits) or \
            len(data.trichotomy_reps) != len(data.orbits):
        raise TrichotomyFailure("trichotomy representatives do not meet every orbit once")
    return out


def check_equivariance(q, rho):
    S = translations(q)
    R = rho.rho if isinstance(rho, GoodInvolution) else rho
    for s in S:
        si = s.inverse()
        if R * s != s * R or R * si != si * R:
            return False
    return True
