"""Words over a finite ranked alphabet and the deg-lex order.

A word is a ``bytes`` object whose entries are symbol ids.  Symbol ids
double as precedence ranks: id 0 is the greatest symbol, id 1 the next,
and so on.  For the built-in generator names ``r0 > r1 > ... > rn`` the
id of ``ri`` is simply ``i``.  The empty word is the monoid identity and
prints as ``"1"``.
"""

from __future__ import annotations

from dataclasses import dataclass

EMPTY = b""


class RankMismatchError(ValueError):
    """A word contains symbols outside the alphabet it is used with."""


class WordSyntaxError(ValueError):
    """A word string does not parse over the given alphabet."""


class Alphabet:
    """Translates between symbol names and ids.

    ``names`` is listed in precedence order, greatest first, so the id of
    a symbol equals its precedence rank.
    """

    def __init__(self, names):
        names = list(names)
        if len(names) != len(set(names)):
            raise ValueError("duplicate generator names")
        if not names:
            raise ValueError("alphabet must be nonempty")
        if len(names) > 255:
            raise ValueError("alphabet too large")
        self.names = names
        self._ids = {name: i for i, name in enumerate(names)}

    @property
    def size(self):
        return len(self.names)

    def id(self, name):
        try:
            return self._ids[name]
        except KeyError:
            raise WordSyntaxError(f"unknown generator {name!r}") from None

    def word(self, text):
        """Parse whitespace-separated tokens; ``"1"`` is the empty word."""
        text = text.strip()
        if text == "1" or not text:
            return EMPTY
        return bytes(self.id(tok) for tok in text.split())

    def text(self, word):
        """Format a word; the empty word prints as ``"1"``."""
        if not word:
            return "1"
        return " ".join(self.names[c] for c in word)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names

    def __repr__(self):
        return f"Alphabet({self.names!r})"


def affine_alphabet(n):
    """The alphabet r0 > r1 > ... > rn of the rank-n affine presentation."""
    return Alphabet([f"r{i}" for i in range(n + 1)])


def deglex_key(w):
    """Sort key: ascending order under this key is ascending deg-lex.

    Longer words are greater; equal lengths compare left-to-right with
    lower ids (higher precedence) greater.
    """
    return (len(w), bytes(255 - c for c in w))


@dataclass(frozen=True)
class DegLexOrder:
    """Deg-lex order on words over an alphabet of the given size.

    Precedence is the symbol id itself (id 0 greatest), matching the
    convention r0 > r1 > ... > rn.
    """

    alphabet_size: int

    def check(self, w):
        if w and max(w) >= self.alphabet_size:
            raise RankMismatchError(
                f"symbol id {max(w)} outside alphabet of size {self.alphabet_size}"
            )

    def compare(self, u, v):
        """Return -1, 0 or 1 as u <, =, > v under deg-lex."""
        self.check(u)
        self.check(v)
        ku, kv = deglex_key(u), deglex_key(v)
        if ku < kv:
            return -1
        if ku > kv:
            return 1
        return 0

    def greater(self, u, v):
        return self.compare(u, v) > 0

    def key(self, w):
        self.check(w)
        return deglex_key(w)


def find_factors(w, f):
    """All 0-based start positions of the factor f in w, ascending.

    Overlapping occurrences are all reported.  f must be nonempty.
    """
    if not f:
        raise ValueError("factor must be nonempty")
    out = []
    p = w.find(f)
    while p >= 0:
        out.append(p)
        p = w.find(f, p + 1)
    return out
