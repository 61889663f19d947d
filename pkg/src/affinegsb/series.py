"""Exact truncated power series, growth counting, and the factor automaton.

All coefficients are exact Python integers.  Growth counting builds a
deterministic automaton recognizing words that avoid every leading word
of a rule set, then counts accepted words per length by dynamic
programming; a brute-force closure of the defining relations serves as
an independent oracle in tests.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer power series truncated at degree D (inclusive)."""

    coefficients: tuple
    degree: int

    def __post_init__(self):
        if len(self.coefficients) != self.degree + 1:
            raise ValueError("coefficient count must be degree + 1")

    @classmethod
    def from_list(cls, coeffs, degree=None):
        coeffs = list(coeffs)
        if degree is None:
            degree = len(coeffs) - 1
        coeffs = (coeffs + [0] * (degree + 1))[: degree + 1]
        return cls(tuple(coeffs), degree)

    @classmethod
    def one(cls, degree):
        return cls.from_list([1], degree)

    def __getitem__(self, d):
        return self.coefficients[d]

    def __add__(self, other):
        d = min(self.degree, other.degree)
        return TruncatedSeries.from_list(
            [self[i] + other[i] for i in range(d + 1)], d
        )

    def __mul__(self, other):
        d = min(self.degree, other.degree)
        out = [0] * (d + 1)
        for i, a in enumerate(self.coefficients[: d + 1]):
            if a:
                for j, b in enumerate(other.coefficients[: d + 1 - i]):
                    if b:
                        out[i + j] += a * b
        return TruncatedSeries.from_list(out, d)

    def div_exact(self, other):
        """Exact series division; the divisor needs a unit constant term."""
        d = min(self.degree, other.degree)
        c0 = other[0]
        if c0 == 0:
            raise ZeroDivisionError("divisor has zero constant term")
        out = [0] * (d + 1)
        for i in range(d + 1):
            acc = self[i] - sum(out[j] * other[i - j] for j in range(i))
            q, r = divmod(acc, c0)
            if r:
                raise ValueError(f"division not exact at degree {i}")
            out[i] = q
        return TruncatedSeries.from_list(out, d)

    def tsv(self):
        """degree<TAB>coefficient lines, degree ascending."""
        return "\n".join(f"{d}\t{c}" for d, c in enumerate(self.coefficients))


def geometric_factor(k, degree):
    """The polynomial 1 - x^k as a truncated series."""
    coeffs = [0] * (degree + 1)
    coeffs[0] = 1
    if k <= degree:
        coeffs[k] = -1
    return TruncatedSeries.from_list(coeffs, degree)


def series_expand_rational(numerator, denominator_factors, degree):
    """Expand numerator / prod(denominators) exactly to the given degree.

    The numerator is a coefficient list; each denominator factor is a
    coefficient list with unit constant term.
    """
    s = TruncatedSeries.from_list(numerator, degree)
    for f in denominator_factors:
        s = s.div_exact(TruncatedSeries.from_list(f, degree))
    return s


def poincare_affine_a(n, degree):
    """Growth series of the rank-n affine group.

    prod_{i=1..n} (1 + x + ... + x^i) / prod_{i=1..n} (1 - x^i).
    """
    s = TruncatedSeries.one(degree)
    for i in range(1, n + 1):
        s = s * TruncatedSeries.from_list([1] * (i + 1), degree)
    for i in range(1, n + 1):
        s = s.div_exact(geometric_factor(i, degree))
    return s


class FactorAutomaton:
    """Deterministic automaton accepting words avoiding a set of factors.

    States are the proper prefixes of the forbidden words (plus a dead
    state); transitions follow the longest suffix of the input that is
    still a prefix of some forbidden word.
    """

    def __init__(self, forbidden, alphabet_size):
        if not forbidden:
            raise ValueError("need at least one forbidden word")
        if any(not f for f in forbidden):
            raise ValueError("forbidden words must be nonempty")
        self.alphabet_size = alphabet_size
        prefixes = {b""}
        for f in forbidden:
            for t in range(1, len(f)):
                prefixes.add(f[:t])
        forbidden = set(forbidden)
        # drop prefixes that already contain a shorter forbidden factor
        live = sorted(
            (p for p in prefixes if not any(f in p for f in forbidden)),
            key=lambda p: (len(p), p),
        )
        index = {p: i for i, p in enumerate(live)}
        self.dead = len(live)
        self.start = index[b""]
        table = []
        for p in live:
            row = []
            for c in range(alphabet_size):
                w = p + bytes([c])
                if any(f in w for f in forbidden):
                    row.append(self.dead)
                else:
                    while w not in index:
                        w = w[1:]
                    row.append(index[w])
            table.append(row)
        table.append([self.dead] * alphabet_size)  # dead state is absorbing
        self.table = table

    @property
    def state_count(self):
        return len(self.table)

    def accepts(self, w):
        s = self.start
        for c in w:
            s = self.table[s][c]
            if s == self.dead:
                return False
        return True

    def count_by_length(self, max_len):
        """Number of accepted words of each length 0..max_len, exact."""
        counts = [0] * self.state_count
        counts[self.start] = 1
        out = [1]
        for _ in range(max_len):
            nxt = [0] * self.state_count
            for s, c in enumerate(counts):
                if c:
                    for t in self.table[s]:
                        nxt[t] += c
            nxt[self.dead] = 0
            counts = nxt
            out.append(sum(counts))
        return out


def build_factor_automaton(forbidden, alphabet_size):
    return FactorAutomaton(forbidden, alphabet_size)


def count_reduced(rs, max_len):
    """Growth series of words avoiding every leading word of the rule set.

    For a completed basis this counts group elements by length.
    """
    auto = FactorAutomaton(sorted(rs.leading_words()), rs.order.alphabet_size)
    return TruncatedSeries.from_list(auto.count_by_length(max_len), max_len)


def bfs_count_oracle(p, max_len):
    """Count equivalence classes of words by minimal length, brute force.

    Builds the closure of the defining relations (applied in both
    directions, at every position) over all words of length <= max_len
    and counts classes by their shortest member.  Test oracle only.
    """
    g = p.alphabet.size
    rewrites = []
    for u, v in p.relations:
        rewrites.append((u, v))
        rewrites.append((v, u))

    parent = {}

    def find(w):
        root = w
        while parent[root] is not root:
            root = parent[root]
        while parent[w] is not root:
            parent[w], w = root, parent[w]
        return root

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra is not rb:
            # keep the deg-lex-smaller root so minimal lengths are easy
            if (len(ra), ra) <= (len(rb), rb):
                parent[rb] = ra
            else:
                parent[ra] = rb

    words = [b""]
    parent[b""] = b""
    frontier = [b""]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for c in range(g):
                w2 = w + bytes([c])
                parent[w2] = w2
                nxt.append(w2)
        words.extend(nxt)
        frontier = nxt

    for w in words:
        for u, v in rewrites:
            if not u:
                if len(w) + len(v) <= max_len:
                    for pos in range(len(w) + 1):
                        union(w, w[:pos] + v + w[pos:])
                continue
            start = w.find(u)
            while start >= 0:
                w2 = w[:start] + v + w[start + len(u):]
                if len(w2) <= max_len:
                    union(w, w2)
                start = w.find(u, start + 1)

    by_min_len = {}
    for w in words:
        r = find(w)
        best = by_min_len.get(r)
        if best is None or len(w) < best:
            by_min_len[r] = len(w)
    counts = [0] * (max_len + 1)
    for length in by_min_len.values():
        counts[length] += 1
    return TruncatedSeries.from_list(counts, max_len)
