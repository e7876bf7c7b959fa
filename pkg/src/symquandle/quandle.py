"""Finite quandles stored as 0-indexed operation tables.

``table[x][y]`` is ``x * y``.  The right translation ``S_y`` is the column map
``x -> x * y``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class QuandleError(Exception):
    pass


class FormatError(QuandleError):
    """Wrong shape or out-of-range entry; raised before any axiom is checked."""


@dataclass(frozen=True)
class Violation:
    axiom: int
    witness: tuple

    def __str__(self):
        names = {1: "idempotence", 2: "right-invertibility", 3: "self-distributivity"}
        return f"axiom {self.axiom} ({names[self.axiom]}) fails at {self.witness}"


class AxiomViolation(QuandleError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))

    @property
    def axiom(self):
        return self.violations[0].axiom

    @property
    def witness(self):
        return self.violations[0].witness


class NotClosed(QuandleError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"conjugation leaves the subset at {pair}")


class LimitExceeded(QuandleError):
    pass


@dataclass(frozen=True)
class Permutation:
    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection: {self.images}")

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def transposition(cls, n, a, b):
        im = list(range(n))
        im[a], im[b] = b, a
        return cls(im)

    def __len__(self):
        return len(self.images)

    def __call__(self, x):
        return self.images[x]

    def __mul__(self, other):
        # apply self first, then other (right actions throughout)
        return Permutation(other.images[i] for i in self.images)

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self):
        seen, out = set(), []
        for i in range(len(self.images)):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out


@dataclass(frozen=True)
class QuandleTable:
    table: tuple
    labels: tuple | None = field(default=None, compare=False)

    @property
    def size(self):
        return len(self.table)

    def op(self, x, y):
        return self.table[x][y]

    def to_json(self):
        return {"size": self.size, "table": [list(row) for row in self.table]}


def _check_format(table):
    if not isinstance(table, (list, tuple)) or not table:
        raise FormatError("table must be a non-empty list of rows")
    n = len(table)
    for x, row in enumerate(table):
        if not isinstance(row, (list, tuple)) or len(row) != n:
            raise FormatError(f"row {x} must have length {n}")
        for y, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int):
                raise FormatError(f"entry ({x},{y}) is not an integer: {v!r}")
            if not 0 <= v < n:
                raise FormatError(f"entry ({x},{y}) = {v} out of range 0..{n - 1}")
    return tuple(tuple(row) for row in table)


def quandle_violations(table):
    """All axiom failures of ``table``, one witness per failure.

    Axiom 1 is reported per element, axiom 2 per column, axiom 3 for the first
    failing triple only (the cube is otherwise noisy).
    """
    t = _check_format(table)
    n = len(t)
    out = [Violation(1, (x,)) for x in range(n) if t[x][x] != x]
    for y in range(n):
        if len({t[x][y] for x in range(n)}) != n:
            out.append(Violation(2, (y,)))
    for x, y, z in itertools.product(range(n), repeat=3):
        if t[t[x][y]][z] != t[t[x][z]][t[y][z]]:
            out.append(Violation(3, (x, y, z)))
            break
    return out


def validate_quandle(table, labels=None):
    t = _check_format(table)
    bad = quandle_violations(t)
    if bad:
        raise AxiomViolation(bad)
    return QuandleTable(t, tuple(labels) if labels is not None else None)


def trivial_quandle(n):
    if n < 1:
        raise ValueError("n >= 1")
    return QuandleTable(tuple(tuple(x for _ in range(n)) for x in range(n)))


def dihedral_quandle(n):
    if n < 1:
        raise ValueError("n >= 1")
    return QuandleTable(tuple(tuple((2 * y - x) % n for y in range(n)) for x in range(n)))


def conjugation_quandle(group, subset):
    """Subquandle of Conj(G) on ``subset`` with ``x * y = y^-1 x y``.

    Returns the quandle; its ``labels`` are the group element indices.
    """
    elems = sorted(set(subset))
    pos = {g: i for i, g in enumerate(elems)}
    rows = []
    for g in elems:
        row = []
        for h in elems:
            c = group.conj(g, h)
            if c not in pos:
                raise NotClosed((g, h))
            row.append(pos[c])
        rows.append(tuple(row))
    return QuandleTable(tuple(rows), tuple(elems))


def inner_translation(q, y):
    return Permutation(q.table[x][y] for x in range(q.size))


def translations(q):
    return [inner_translation(q, y) for y in range(q.size)]


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller index wins so blocks are keyed by their minimum
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra
        return ra

    def blocks(self):
        out = {}
        for x in range(len(self.parent)):
            out.setdefault(self.find(x), []).append(x)
        return [tuple(b) for b in sorted(out.values())]


def orbits(q):
    """Connected components: blocks of the partition generated by x ~ x*y."""
    uf = UnionFind(q.size)
    for x in range(q.size):
        for y in range(q.size):
            uf.union(x, q.table[x][y])
    return uf.blocks()


def orbit_index(q):
    """Map element -> index of its orbit in ``orbits(q)``."""
    idx = [0] * q.size
    for i, block in enumerate(orbits(q)):
        for x in block:
            idx[x] = i
    return idx


def is_connected(q):
    return len(orbits(q)) == 1


def is_involutive(q):
    t = q.table
    return all(t[t[x][y]][y] == x for x in range(q.size) for y in range(q.size))


def relabel(q, perm):
    """The isomorphic copy obtained by renaming element x as perm[x]."""
    n = q.size
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    return QuandleTable(tuple(
        tuple(perm[q.table[inv[a]][inv[b]]] for b in range(n)) for a in range(n)))


def canonical_form(q):
    """Lexicographically least relabeled table, by brute force over S_n."""
    return min(relabel(q, p).table for p in itertools.permutations(range(q.size)))


def is_isomorphic(q1, q2):
    if q1.size != q2.size:
        return False
    return any(relabel(q1, p).table == q2.table
               for p in itertools.permutations(range(q1.size)))


def _fixing_perms(n, y):
    rest = [i for i in range(n) if i != y]
    for p in itertools.permutations(rest):
        im = list(p)
        im.insert(y, y)
        yield tuple(im)


def enumerate_quandles(n, limit=5):
    """All quandles of order ``n`` up to isomorphism, sorted by canonical table.

    A quandle is the same thing as a tuple of permutations (S_0, ..., S_{n-1})
    with S_y(y) = y and S_z S_y = S_{S_z(y)} S_z; columns are assigned one at a
    time and the compatibility condition checked on every assigned pair.
    """
    if n < 1:
        raise ValueError("n >= 1")
    if n > limit:
        raise LimitExceeded(f"order {n} exceeds enumeration limit {limit}")
    cols = [list(_fixing_perms(n, y)) for y in range(n)]
    found = set()
    chosen = [None] * n

    def compatible(y, z):
        # S_z is an automorphism: (x*y)*z == (x*z)*(y*z) for all x
        sy, sz = chosen[y], chosen[z]
        syz = chosen[sz[y]]
        if syz is None:
            return True
        return all(sz[sy[x]] == syz[sz[x]] for x in range(n))

    def ok(k):
        # recheck every assigned pair; cheap at desk scale
        return all(compatible(a, b) for a in range(k + 1) for b in range(k + 1))

    def rec(k):
        if k == n:
            table = tuple(tuple(chosen[y][x] for y in range(n)) for x in range(n))
            found.add(canonical_form(QuandleTable(table)))
            return
        for perm in cols[k]:
            chosen[k] = perm
            if ok(k):
                rec(k + 1)
        chosen[k] = None

    rec(0)
    out = [QuandleTable(t) for t in sorted(found)]
    for q in out:
        assert not quandle_violations(q.table)
    return out
