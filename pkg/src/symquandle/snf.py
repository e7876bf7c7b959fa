"""Smith normal form over the integers and abelian invariants of presentations."""

from __future__ import annotations

from dataclasses import dataclass

from .words import relation_matrix


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(m, transforms=False):
    """Diagonal (d_1 | d_2 | ...) of length min(rows, cols), exact Python ints.

    With ``transforms=True`` also return unimodular U, V with U*M*V = diag.
    """
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    U = _identity(rows)
    V = _identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):
        # row_dst += k * row_src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, k):
        for r in a:
            r[dst] += k * r[src]
        for r in V:
            r[dst] += k * r[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty |= a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty |= a[t][j] != 0
            if dirty:
                continue
            bad = next((i for i in range(t + 1, rows)
                        for j in range(t + 1, cols) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
    diag = tuple(a[i][i] for i in range(min(rows, cols)))
    if transforms:
        return diag, U, V
    return diag


@dataclass(frozen=True)
class AbelianInvariants:
    torsion: tuple = ()
    free_rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        for d in self.torsion:
            if d < 2:
                raise ValueError("torsion coefficients must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"divisibility chain broken: {a} does not divide {b}")

    @property
    def is_trivial(self):
        return not self.torsion and self.free_rank == 0

    @property
    def order(self):
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def to_json(self):
        return {"torsion": list(self.torsion), "free_rank": self.free_rank}

    def __str__(self):
        parts = [f"Z{d}" for d in self.torsion] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


def invariants_from_matrix(m, ncols):
    diag = smith_normal_form(m) if m else ()
    rank = sum(1 for d in diag if d)
    return AbelianInvariants(tuple(d for d in diag if d > 1), ncols - rank)


def abelian_invariants(p):
    return invariants_from_matrix(relation_matrix(p), p.ngens)


def abelianization_map(p):
    """Invariants plus the image of each generator in Z_d1 + ... + Z_dk + Z^r.

    Images are tuples: torsion coordinates reduced mod d_i, then free ones.
    """
    m = relation_matrix(p)
    n = p.ngens
    if m:
        diag, _, V = smith_normal_form(m, transforms=True)
    else:
        diag, V = (), _identity(n)
    diag = list(diag) + [0] * (n - len(diag))
    inv = AbelianInvariants(tuple(d for d in diag if d > 1), sum(1 for d in diag if d == 0))
    images = []
    for j in range(n):
        tors = tuple(V[j][i] % d for i, d in enumerate(diag) if d > 1)
        free = tuple(V[j][i] for i, d in enumerate(diag) if d == 0)
        images.append(tors + free)
    return inv, images
