"""Free-group words, finite presentations and their text format.

Text format::

    # comment
    gens: a b
    rel: a a
    rel: a b a b^-1 a^-1 b^-1

Relators are stored verbatim; nothing is reduced on parse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
TOKEN_RE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(\^-1)?$")


class PresentationSyntaxError(ValueError):
    def __init__(self, line, column, message):
        self.line, self.column, self.message = line, column, message
        super().__init__(f"line {line}, column {column}: {message}")


class UnknownGenerator(ValueError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown generator {name!r}")


@dataclass(frozen=True)
class Word:
    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((int(g), int(e)) for g, e in self.letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __add__(self, other):
        return Word(self.letters + tuple(other))

    def inverse(self):
        return Word((g, -e) for g, e in reversed(self.letters))

    def rotate(self, k):
        return Word(self.letters[k:] + self.letters[:k])

    @classmethod
    def gen(cls, g, e=1):
        return cls(((g, e),))


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(
            r if isinstance(r, Word) else Word(r) for r in self.relators))
        n = len(self.generators)
        for r in self.relators:
            for g, e in r:
                if not 0 <= g < n or e not in (1, -1):
                    raise ValueError(f"bad letter {(g, e)} for {n} generators")

    @property
    def ngens(self):
        return len(self.generators)

    def word_str(self, w):
        return " ".join(self.generators[g] + ("" if e == 1 else "^-1") for g, e in w)

    def to_text(self):
        lines = ["gens: " + " ".join(self.generators)]
        lines += ["rel: " + self.word_str(r) if len(r) else "rel:" for r in self.relators]
        return "\n".join(lines) + "\n"


def parse_presentation(text):
    gens = None
    index = {}
    rels = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        head, sep, rest = line.partition(":")
        key = head.strip()
        if not sep or key not in ("gens", "rel"):
            raise PresentationSyntaxError(lineno, 1, "expected 'gens:' or 'rel:'")
        col0 = len(head) + 2
        if key == "gens":
            if gens is not None:
                raise PresentationSyntaxError(lineno, 1, "duplicate 'gens:' line")
            gens = []
            for m in re.finditer(r"\S+", rest):
                name = m.group()
                if not NAME_RE.fullmatch(name):
                    raise PresentationSyntaxError(lineno, col0 + m.start(), f"bad generator name {name!r}")
                if name in index:
                    raise PresentationSyntaxError(lineno, col0 + m.start(), f"duplicate generator {name!r}")
                index[name] = len(gens)
                gens.append(name)
            continue
        if gens is None:
            raise PresentationSyntaxError(lineno, 1, "'rel:' before 'gens:'")
        letters = []
        for m in re.finditer(r"\S+", rest):
            tm = TOKEN_RE.match(m.group())
            if tm is None:
                raise PresentationSyntaxError(lineno, col0 + m.start(), f"bad token {m.group()!r}")
            name = tm.group(1)
            if name not in index:
                raise UnknownGenerator(name)
            letters.append((index[name], -1 if tm.group(2) else 1))
        rels.append(Word(letters))
    if gens is None:
        raise PresentationSyntaxError(1, 1, "missing 'gens:' line")
    return Presentation(tuple(gens), tuple(rels))


def free_reduce(w):
    out = []
    for g, e in w:
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return Word(out)


def free_cyclic_reduce(w):
    letters = list(free_reduce(w).letters)
    i, j = 0, len(letters) - 1
    while i < j and letters[i][0] == letters[j][0] and letters[i][1] == -letters[j][1]:
        i += 1
        j -= 1
    return Word(letters[i:j + 1])


def relation_matrix(p):
    """Exponent-sum matrix, one row per relator, one column per generator."""
    rows = []
    for r in p.relators:
        row = [0] * p.ngens
        for g, e in r:
            row[g] += e
        rows.append(row)
    return rows
