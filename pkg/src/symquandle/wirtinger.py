"""Recognition of (twisted) Wirtinger presentations by relator shape.

A relator has Wirtinger shape if, after free and cyclic reduction, some
rotation of it or of its inverse reads ``w^-1 x w y^-1`` with ``x, y`` positive
generators, and twisted shape if it reads ``w^-1 x w y`` instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Presentation, Word, free_cyclic_reduce

WIRTINGER = "wirtinger"
TWISTED = "twisted"
NEITHER = "neither"


@dataclass(frozen=True)
class ShapeMatch:
    tag: str
    conjugator: Word = Word()
    x: int = -1
    y: int = -1
    epsilon: int = 0


def _match_literal(letters):
    """Match ``w^-1 x w y^(-eps)`` exactly; return (w, x, y, eps) or None."""
    n = len(letters)
    if n < 2 or n % 2:
        return None
    k = (n - 2) // 2
    xg, xe = letters[k]
    if xe != 1:
        return None
    for i in range(k):
        g, e = letters[k - 1 - i]
        if letters[k + 1 + i] != (g, -e):
            return None
    yg, ye = letters[-1]
    w = Word(letters[k + 1:2 * k + 1])
    return w, xg, yg, -ye


def match_relator(r):
    w = free_cyclic_reduce(r)
    if not len(w):
        return ShapeMatch(NEITHER)
    best = None
    for cand in (w, w.inverse()):
        for k in range(len(cand)):
            m = _match_literal(cand.rotate(k).letters)
            if m is None:
                continue
            conj, x, y, eps = m
            tag = WIRTINGER if eps == 1 else TWISTED
            if tag == WIRTINGER:
                return ShapeMatch(tag, conj, x, y, eps)
            if best is None:
                best = ShapeMatch(tag, conj, x, y, eps)
    return best or ShapeMatch(NEITHER)


def classify_wirtinger(p):
    """Return ``(tags, overall)``; overall is Wirtinger, TwistedWirtinger or General.

    Relators that reduce to the empty word carry the tag "neither" but do not
    affect the overall class.
    """
    tags = []
    counted = []
    for r in p.relators:
        tag = match_relator(r).tag
        tags.append(tag)
        if len(free_cyclic_reduce(r)):
            counted.append(tag)
    if all(t == WIRTINGER for t in counted):
        overall = "Wirtinger"
    elif all(t in (WIRTINGER, TWISTED) for t in counted):
        overall = "TwistedWirtinger"
    else:
        overall = "General"
    return tuple(tags), overall


def twisted_wirtinger_rewrite(p, rho):
    """Rewrite a symmetric associated-group presentation into literal twisted shape.

    Each relator ``s_rho(x) s_x`` becomes ``s_rho(x)^-1 s_rho(x) s_rho(x) s_x``,
    i.e. the relation ``s_rho(x)^-1 s_rho(x) s_rho(x) = s_x^-1``.  Conjugation
    relators already have Wirtinger shape and are kept.
    """
    n = len(rho.images)
    out = []
    for r in p.relators:
        if len(r) == 2 and r[0][1] == 1 and r[1][1] == 1 and rho(r[1][0]) == r[0][0] and r[0][0] < n:
            a, b = r[0][0], r[1][0]
            out.append(Word(((a, -1), (a, 1), (a, 1), (b, 1))))
        else:
            out.append(r)
    return Presentation(p.generators, tuple(out))
