"""Second quandle homology, from the chain complex and from As(Q, rho).

Chain convention: right-action rack complex

    d(x1..xn) = sum_{i=2..n} (-1)^i [(x1..^xi..xn) - (x1*xi, .., x(i-1)*xi, x(i+1), .., xn)]

modulo the subcomplex spanned by tuples with an adjacent repeat.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .associated import DEFAULT_BOUND, finite_symas_group
from .coset import BoundExceeded
from .finite_group import closure, derived_subgroup
from .quandle import is_connected
from .snf import AbelianInvariants, invariants_from_matrix, smith_normal_form

DEFAULT_MATRIX_BUDGET = 10**6


class SizeLimit(ValueError):
    pass


class NotConnected(ValueError):
    pass


def nondegenerate_tuples(n, k):
    return [t for t in itertools.product(range(n), repeat=k)
            if all(t[i] != t[i + 1] for i in range(k - 1))]


def rack_boundary(q, t):
    """Boundary of the basis tuple ``t`` as a dict tuple -> coefficient (unreduced)."""
    out = {}
    k = len(t)
    for i in range(1, k):  # 0-based position; the sign uses the 1-based position i+1
        sign = 1 if (i + 1) % 2 == 0 else -1
        face = t[:i] + t[i + 1:]
        out[face] = out.get(face, 0) + sign
        moved = tuple(q.table[a][t[i]] for a in t[:i]) + t[i + 1:]
        out[moved] = out.get(moved, 0) - sign
    return out


@dataclass(frozen=True)
class BoundaryPair:
    d2: tuple           # rows: 1-chains, cols: 2-chains
    d3: tuple           # rows: 2-chains, cols: 3-chains
    basis1: tuple
    basis2: tuple
    basis3: tuple


def _matrix(q, src, dst):
    pos = {t: i for i, t in enumerate(dst)}
    m = [[0] * len(src) for _ in dst]
    for j, t in enumerate(src):
        for face, c in rack_boundary(q, t).items():
            if c and face in pos:  # degenerate faces are zero in the quotient
                m[pos[face]][j] += c
    return tuple(tuple(r) for r in m)


def quandle_boundary_matrices(q, budget=DEFAULT_MATRIX_BUDGET):
    n = q.size
    if n ** 4 > budget:
        raise SizeLimit(f"n^4 = {n ** 4} exceeds matrix budget {budget}")
    b1 = nondegenerate_tuples(n, 1)
    b2 = nondegenerate_tuples(n, 2)
    b3 = nondegenerate_tuples(n, 3)
    return BoundaryPair(_matrix(q, b2, b1), _matrix(q, b3, b2), tuple(b1), tuple(b2), tuple(b3))


def _rank(m):
    if not m or not m[0]:
        return 0
    return sum(1 for d in smith_normal_form(m) if d)


def h2_chain(q, budget=DEFAULT_MATRIX_BUDGET):
    """H_2 = ker d2 / im d3; torsion is that of coker d3 since C_2 / ker d2 is free."""
    bp = quandle_boundary_matrices(q, budget)
    n2 = len(bp.basis2)
    if n2 == 0:
        return AbelianInvariants()
    kernel_dim = n2 - _rank(bp.d2)
    if not bp.basis3:
        return AbelianInvariants((), kernel_dim)
    diag = smith_normal_form([list(r) for r in bp.d3])
    rank3 = sum(1 for d in diag if d)
    return AbelianInvariants(tuple(d for d in diag if d > 1), kernel_dim - rank3)


def quandle_action(q, group, images):
    """Permutation of Q induced by each group element, via x . s_y = x * y.

    Raises ValueError if the assignment is not a well-defined right action.
    """
    n = group.order
    acts = [None] * n
    acts[group.id] = tuple(range(q.size))
    frontier = [group.id]
    while frontier:
        nxt = []
        for g in frontier:
            for y, gy in enumerate(images):
                h = group.mul[g][gy]
                a = tuple(q.table[acts[g][x]][y] for x in range(q.size))
                if acts[h] is None:
                    acts[h] = a
                    nxt.append(h)
                elif acts[h] != a:
                    raise ValueError("action of As(Q, rho) on Q is not well defined")
        frontier = nxt
    if any(a is None for a in acts):
        raise ValueError("generator images do not generate the group")
    for g in range(n):
        for h in range(n):
            gh = group.mul[g][h]
            if acts[gh] != tuple(acts[h][acts[g][x]] for x in range(q.size)):
                raise ValueError("action is not a homomorphism")
    return acts


def subgroup_abelianization(group, elements):
    """Abelianize a subgroup from its own multiplication table.

    Presentation: one generator per element, relators k_a k_b k_ab^-1.
    """
    elements = list(elements)
    pos = {g: i for i, g in enumerate(elements)}
    rows = []
    for a in elements:
        for b in elements:
            row = [0] * len(elements)
            row[pos[a]] += 1
            row[pos[b]] += 1
            row[pos[group.mul[a][b]]] -= 1
            rows.append(row)
    return invariants_from_matrix(rows, len(elements))


def h2_group_formula(q, rho, x0=0, max_cosets=DEFAULT_BOUND, realized=None):
    """(Stab(x0) meet [G, G])_Ab for G = As(Q, rho); None when G was not realized.

    ``realized`` may pass a precomputed ``(group, images)`` pair.
    """
    if not is_connected(q):
        raise NotConnected("H2 group formula needs a connected quandle")
    if realized is None:
        try:
            realized = finite_symas_group(q, rho, max_cosets)
        except BoundExceeded:
            return None
    group, images = realized
    acts = quandle_action(q, group, images)
    stab = {g for g in range(group.order) if acts[g][x0] == x0}
    derived = set(derived_subgroup(group))
    inter = sorted(stab & derived)
    assert tuple(inter) == closure(group, inter)
    return subgroup_abelianization(group, inter)


@dataclass(frozen=True)
class H2Crosscheck:
    chain: AbelianInvariants
    group: dict          # basepoint -> AbelianInvariants or None
    agree: bool | None   # None: As(Q, rho) not realized within budget

    def to_json(self):
        first = next(iter(self.group.values()))
        return {"h2_chain": self.chain.to_json(),
                "h2_group": first.to_json() if first is not None else "Unknown",
                "h2_group_by_basepoint": {str(k): (v.to_json() if v is not None else "Unknown")
                                          for k, v in self.group.items()},
                "agree": "Unknown" if self.agree is None else self.agree}


def h2_crosscheck(q, rho, max_cosets=DEFAULT_BOUND):
    if not is_connected(q):
        raise NotConnected("H2 cross-check needs a connected quandle")
    chain = h2_chain(q)
    try:
        realized = finite_symas_group(q, rho, max_cosets)
    except BoundExceeded:
        return H2Crosscheck(chain, {x: None for x in range(q.size)}, None)
    values = {x: h2_group_formula(q, rho, x, realized=realized) for x in range(q.size)}
    return H2Crosscheck(chain, values, all(v == chain for v in values.values()))
