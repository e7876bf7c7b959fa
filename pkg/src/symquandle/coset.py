"""Todd-Coxeter coset enumeration (HLT strategy with lookahead).

Columns are laid out as ``2*g`` for generator ``g`` and ``2*g + 1`` for its
inverse, so ``c ^ 1`` is the inverse column of ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .finite_group import FiniteGroupTable

UNDEF = -1


class BoundExceeded(Exception):
    """The enumeration did not close within the coset budget.

    This is not evidence that the index is infinite.
    """

    def __init__(self, max_cosets):
        self.max_cosets = max_cosets
        super().__init__(f"coset enumeration exceeded {max_cosets} cosets "
                         "(not shown finite within budget; this does not prove infiniteness)")


class NotRegular(Exception):
    pass


@dataclass(frozen=True)
class CosetTable:
    count: int
    action: tuple          # action[g][i] = coset i . g
    inverse_action: tuple  # inverse_action[g][i] = coset i . g^-1
    trivial_subgroup: bool

    @property
    def ngens(self):
        return len(self.action)

    def apply(self, coset, word):
        for g, e in word:
            coset = self.action[g][coset] if e == 1 else self.inverse_action[g][coset]
        return coset


def _columns(word):
    return [2 * g + (0 if e == 1 else 1) for g, e in word]


class _Enumerator:
    def __init__(self, ngens, max_cosets, max_definitions):
        self.ncols = 2 * ngens
        self.table = [[UNDEF] * self.ncols]
        self.parent = [0]
        self.live = 1
        self.max_cosets = max_cosets
        self.max_definitions = max_definitions

    def rep(self, c):
        p = self.parent
        root = c
        while p[root] != root:
            root = p[root]
        while p[c] != root:
            p[c], c = root, p[c]
        return root

    def is_live(self, c):
        return self.parent[c] == c

    def define(self, a, col):
        if self.live >= self.max_cosets or len(self.table) >= self.max_definitions:
            raise _OutOfSpace
        b = len(self.table)
        self.table.append([UNDEF] * self.ncols)
        self.parent.append(b)
        self.live += 1
        self.table[a][col] = b
        self.table[b][col ^ 1] = a

    def merge(self, k, l, queue):
        k, l = self.rep(k), self.rep(l)
        if k != l:
            lo, hi = min(k, l), max(k, l)
            self.parent[hi] = lo
            self.live -= 1
            queue.append(hi)

    def coincidence(self, a, b):
        queue = []
        self.merge(a, b, queue)
        t = self.table
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            for col in range(self.ncols):
                d = t[g][col]
                if d == UNDEF:
                    continue
                if t[d][col ^ 1] == g:
                    t[d][col ^ 1] = UNDEF
                mu, nu = self.rep(g), self.rep(d)
                if t[mu][col] != UNDEF:
                    self.merge(nu, t[mu][col], queue)
                elif t[nu][col ^ 1] != UNDEF:
                    self.merge(mu, t[nu][col ^ 1], queue)
                else:
                    t[mu][col] = nu
                    t[nu][col ^ 1] = mu

    def scan(self, a, cols, fill):
        """Scan relator ``cols`` at coset ``a``; define cosets if ``fill``."""
        t = self.table
        f, i = a, 0
        b, j = a, len(cols) - 1
        while True:
            while i <= j and t[f][cols[i]] != UNDEF:
                f = t[f][cols[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and t[b][cols[j] ^ 1] != UNDEF:
                b = t[b][cols[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][cols[i]] = b
                t[b][cols[i] ^ 1] = f
                return
            if not fill:
                return
            self.define(f, cols[i])

    def lookahead(self, relators):
        for a in range(len(self.table)):
            if not self.is_live(a):
                continue
            for cols in relators:
                self.scan(a, cols, fill=False)
                if not self.is_live(a):
                    break


class _OutOfSpace(Exception):
    pass


def todd_coxeter(p, subgroup_gens=(), max_cosets=10_000, max_definitions=None):
    """Enumerate the cosets of <subgroup_gens> in the group presented by ``p``.

    Raises BoundExceeded if more than ``max_cosets`` cosets are ever live at once
    (after a lookahead pass), or if ``max_definitions`` (default 50 * max_cosets)
    cosets have been defined in total.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets >= 1")
    if max_definitions is None:
        max_definitions = 50 * max_cosets
    ngens = p.ngens
    rels = [_columns(r) for r in p.relators if len(r)]
    sub = [_columns(w) for w in subgroup_gens if len(w)]
    en = _Enumerator(ngens, max_cosets, max_definitions)

    def make_room():
        before = en.live
        en.lookahead(rels)
        if en.live >= before:
            raise BoundExceeded(max_cosets) from None

    k = 0
    while k < len(sub):
        try:
            en.scan(0, sub[k], fill=True)
        except _OutOfSpace:
            make_room()
            continue
        k += 1

    a = 0
    while a < len(en.table):
        try:
            if en.is_live(a):
                for cols in rels:
                    en.scan(a, cols, fill=True)
                    if not en.is_live(a):
                        break
                else:
                    for col in range(en.ncols):
                        if en.table[a][col] == UNDEF:
                            en.define(a, col)
        except _OutOfSpace:
            make_room()
            continue
        a += 1
    return _standardize(en, ngens, trivial=not sub)


def _standardize(en, ngens, trivial):
    """Renumber live cosets in breadth-first order from coset 0, columns in order."""
    t = en.table
    order = {0: 0}
    queue = [0]
    i = 0
    while i < len(queue):
        c = queue[i]
        i += 1
        for col in range(en.ncols):
            d = en.rep(t[c][col])
            if d not in order:
                order[d] = len(queue)
                queue.append(d)
    count = len(queue)
    act = [[0] * count for _ in range(ngens)]
    inv = [[0] * count for _ in range(ngens)]
    for c in queue:
        for g in range(ngens):
            act[g][order[c]] = order[en.rep(t[c][2 * g])]
            inv[g][order[c]] = order[en.rep(t[c][2 * g + 1])]
    return CosetTable(count, tuple(map(tuple, act)), tuple(map(tuple, inv)), trivial)


def coset_group_table(ct):
    """Group table of the regular action; element i is the coset reached from 0.

    Returns ``(group, generator_images)``.  Raises NotRegular when the coset
    action is not a regular action of a group of order ``ct.count``.
    """
    n = ct.count
    # right-multiplication permutation of each element, built along a BFS tree
    right = [None] * n
    right[0] = tuple(range(n))
    queue = [0]
    i = 0
    while i < len(queue):
        c = queue[i]
        i += 1
        for g in range(ct.ngens):
            for act in (ct.action[g], ct.inverse_action[g]):
                d = act[c]
                if right[d] is None:
                    right[d] = tuple(act[x] for x in right[c])
                    queue.append(d)
    for c in range(n):
        for g in range(ct.ngens):
            d = ct.action[g][c]
            if right[d] != tuple(ct.action[g][x] for x in right[c]):
                raise NotRegular("coset action is not regular; subgroup is not trivial")
    # mul[a][b] = a * b = coset a moved by element b
    mul = tuple(tuple(right[b][a] for b in range(n)) for a in range(n))
    inverse = [0] * n
    for a in range(n):
        inverse[right[a].index(0)] = a
    group = FiniteGroupTable(mul, tuple(inverse), 0)
    return group, tuple(ct.action[g][0] for g in range(ct.ngens))
