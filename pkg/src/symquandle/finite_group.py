"""Finite groups as explicit multiplication tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class FiniteGroupTable:
    mul: tuple
    inv: tuple
    id: int

    @property
    def order(self):
        return len(self.mul)

    def conj(self, g, h):
        """h^-1 g h"""
        return self.mul[self.mul[self.inv[h]][g]][h]

    def commutator(self, g, h):
        """g^-1 h^-1 g h"""
        m, i = self.mul, self.inv
        return m[m[m[i[g]][i[h]]][g]][h]

    def is_abelian(self):
        n = self.order
        return all(self.mul[a][b] == self.mul[b][a] for a in range(n) for b in range(a + 1, n))

    def element_order(self, g):
        k, x = 1, g
        while x != self.id:
            x = self.mul[x][g]
            k += 1
        return k


def from_mul(mul):
    """Validate a multiplication table and derive identity and inverses."""
    mul = tuple(tuple(r) for r in mul)
    n = len(mul)
    ids = [e for e in range(n) if all(mul[e][g] == g and mul[g][e] == g for g in range(n))]
    if len(ids) != 1:
        raise ValueError("no unique two-sided identity")
    e = ids[0]
    inv = []
    for g in range(n):
        hs = [h for h in range(n) if mul[g][h] == e and mul[h][g] == e]
        if len(hs) != 1:
            raise ValueError(f"element {g} has no two-sided inverse")
        inv.append(hs[0])
    for a, b, c in itertools.product(range(n), repeat=3):
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            raise ValueError(f"not associative at {(a, b, c)}")
    return FiniteGroupTable(mul, tuple(inv), e)


def cyclic_group(n):
    return FiniteGroupTable(
        tuple(tuple((a + b) % n for b in range(n)) for a in range(n)),
        tuple((-a) % n for a in range(n)), 0)


def symmetric_group(k):
    """S_k on sorted tuples of images; composition applies the left factor first."""
    elems = sorted(itertools.permutations(range(k)))
    pos = {p: i for i, p in enumerate(elems)}
    mul = tuple(tuple(pos[tuple(q[p[i]] for i in range(k))] for q in elems) for p in elems)
    inv = []
    for p in elems:
        r = [0] * k
        for i, j in enumerate(p):
            r[j] = i
        inv.append(pos[tuple(r)])
    return FiniteGroupTable(mul, tuple(inv), pos[tuple(range(k))]), elems


def closure(group, gens):
    """Subgroup generated by ``gens``, as a sorted tuple of element indices."""
    seen = {group.id}
    frontier = [group.id]
    gens = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = group.mul[a][g]
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return tuple(sorted(seen))


def derived_subgroup(group):
    n = group.order
    comms = {group.commutator(a, b) for a in range(n) for b in range(n)}
    return closure(group, comms)


def conjugacy_closure(group, subset):
    """Smallest superset of ``subset`` closed under conjugation by all of G."""
    out = set(subset)
    frontier = list(out)
    while frontier:
        nxt = []
        for a in frontier:
            for h in range(group.order):
                c = group.conj(a, h)
                if c not in out:
                    out.add(c)
                    nxt.append(c)
        frontier = nxt
    return tuple(sorted(out))
