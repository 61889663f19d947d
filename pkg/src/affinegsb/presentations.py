"""Coxeter-type presentations and a line-oriented text format.

A presentation is an alphabet (precedence = listed order, first
greatest) plus a duplicate-free list of relations, each a pair of words.
Built-in constructors cover the finite type A and the affine cycle
presentation; arbitrary Coxeter matrices are also supported.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .words import Alphabet, DegLexOrder, WordSyntaxError, affine_alphabet, deglex_key
from .rewriting import RuleSet, make_rule

INFINITY = 0  # Coxeter matrix entry meaning "no relation"


class PresentationError(ValueError):
    """Malformed presentation data; carries a line number when parsing."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass
class Presentation:
    alphabet: Alphabet
    relations: list = field(default_factory=list)

    def __post_init__(self):
        seen = set()
        for u, v in self.relations:
            if (u, v) in seen:
                raise PresentationError(f"duplicate relation {u!r} = {v!r}")
            seen.add((u, v))

    @property
    def order(self):
        return DegLexOrder(self.alphabet.size)

    def to_rules(self):
        """Orient each relation by deg-lex into a RuleSet."""
        order = self.order
        return RuleSet([make_rule(u, v, order) for u, v in self.relations], order)


def _braid_word(i, j, m):
    # alternating word r_i r_j r_i ... of length m
    return bytes((i if t % 2 == 0 else j) for t in range(m))


def affine_a(n):
    """The affine cycle presentation on generators r0..rn.

    Involutions, commuting relations for non-adjacent pairs on the
    (n+1)-cycle, braid relations for adjacent pairs, and the wrap-around
    braid relation between r0 and rn.
    """
    if n < 2:
        raise PresentationError(f"affine presentation needs rank >= 2, got {n}")
    rels = []
    for i in range(n + 1):
        rels.append((bytes([i, i]), b""))
    for i in range(n + 1):
        for j in range(i + 2, n + 1):
            if (i, j) != (0, n):
                rels.append((bytes([i, j]), bytes([j, i])))
    for i in range(n):
        rels.append((_braid_word(i, i + 1, 3), _braid_word(i + 1, i, 3)))
    rels.append((_braid_word(0, n, 3), _braid_word(n, 0, 3)))
    return Presentation(affine_alphabet(n), rels)


def finite_a(n):
    """The symmetric-group presentation on generators r1..rn."""
    if n < 1:
        raise PresentationError(f"finite type A needs rank >= 1, got {n}")
    alphabet = Alphabet([f"r{i}" for i in range(1, n + 1)])
    rels = []
    for i in range(n):
        rels.append((bytes([i, i]), b""))
    for i in range(n):
        for j in range(i + 2, n):
            rels.append((bytes([i, j]), bytes([j, i])))
    for i in range(n - 1):
        rels.append((_braid_word(i, i + 1, 3), _braid_word(i + 1, i, 3)))
    return Presentation(alphabet, rels)


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of braid exponents; diagonal 1, INFINITY omits a relation."""

    entries: tuple

    def __post_init__(self):
        m = self.entries
        g = len(m)
        if any(len(row) != g for row in m):
            raise PresentationError("Coxeter matrix must be square")
        for i in range(g):
            if m[i][i] != 1:
                raise PresentationError("Coxeter matrix diagonal must be 1")
            for j in range(g):
                if m[i][j] != m[j][i]:
                    raise PresentationError("Coxeter matrix must be symmetric")
                if i != j and m[i][j] != INFINITY and m[i][j] < 2:
                    raise PresentationError(f"off-diagonal entry m[{i}][{j}] < 2")

    @property
    def size(self):
        return len(self.entries)


def from_coxeter_matrix(matrix):
    """Presentation with involutions and one braid relation per finite entry."""
    g = matrix.size
    alphabet = Alphabet([f"r{i}" for i in range(g)])
    rels = [(bytes([i, i]), b"") for i in range(g)]
    for i in range(g):
        for j in range(i + 1, g):
            m = matrix.entries[i][j]
            if m != INFINITY:
                rels.append((_braid_word(i, j, m), _braid_word(j, i, m)))
    return Presentation(alphabet, rels)


def parse(text):
    """Parse the presentation file format.

    ``# comment`` and blank lines are ignored; the first content line
    must be ``generators: tok tok ...`` (precedence in listed order),
    followed by ``rel: w = w`` lines where an empty side is the identity.
    """
    alphabet = None
    rels = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if alphabet is None:
            if not line.startswith("generators:"):
                raise PresentationError("expected a generators: line", lineno)
            names = line[len("generators:"):].split()
            if not names:
                raise PresentationError("no generators listed", lineno)
            try:
                alphabet = Alphabet(names)
            except ValueError as e:
                raise PresentationError(str(e), lineno) from None
            continue
        if not line.startswith("rel:"):
            raise PresentationError(f"unrecognized line {line!r}", lineno)
        body = line[len("rel:"):]
        if body.count("=") != 1:
            raise PresentationError("relation must contain exactly one '='", lineno)
        left, right = body.split("=")
        try:
            u = alphabet.word(left)
            v = alphabet.word(right)
        except WordSyntaxError as e:
            raise PresentationError(str(e), lineno) from None
        rels.append((u, v))
    if alphabet is None:
        raise PresentationError("empty presentation: no generators line")
    return Presentation(alphabet, rels)


def serialize(p):
    """Emit the file format; relations sorted by deg-lex of the left side."""
    lines = ["generators: " + " ".join(p.alphabet.names)]
    rels = sorted(p.relations, key=lambda uv: (deglex_key(uv[0]), deglex_key(uv[1])))
    for u, v in rels:
        lines.append(f"rel: {p.alphabet.text(u)} = {p.alphabet.text(v)}")
    return "\n".join(lines) + "\n"
