"""Classification of reduced words in the rank-n affine group.

Every reduced word splits as an r0-free part followed by an "arranged"
product of r0-initiated blocks.  A block is r0 followed by a descending
run from rn and an ascending run from r1; arranged words are built from
a component skeleton with exponents and a trailing chain of short
blocks, with marking constraints that make the expansion unique.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .affine_basis import g_families, r_range
from .rewriting import find_first_forbidden
from .words import EMPTY

K_STEP = "k"  # next component narrows the descending run (k -> k+1)
L_STEP = "l"  # next component shortens the ascending run (l -> l-1)


class NotReducedError(ValueError):
    """A word contains a leading word of the basis as a factor."""

    def __init__(self, word, position, rule):
        super().__init__(
            f"word is not reduced: forbidden factor at position {position}"
        )
        self.word = word
        self.position = position
        self.rule = rule


class InvalidSequenceError(ValueError):
    """A block or marked sequence violates its monotonicity constraints."""


@dataclass(frozen=True, order=True)
class Block:
    """The word r0 . (rn ... rk) . (r1 ... rl) at rank n.

    k = n+1 means the descending run is empty, l = 0 the ascending one.
    """

    n: int
    k: int
    l: int

    def __post_init__(self):
        if not (2 <= self.k <= self.n + 1):
            raise InvalidSequenceError(f"block k={self.k} outside [2, {self.n + 1}]")
        if not (0 <= self.l <= self.n):
            raise InvalidSequenceError(f"block l={self.l} outside [0, {self.n}]")

    def word(self):
        n = self.n
        return b"\x00" + r_range(n, self.k, n) + r_range(1, self.l, n)

    def __len__(self):
        middle = self.n - self.k + 1 if self.k <= self.n else 0
        return 1 + middle + self.l

    def is_tail_type(self):
        # tail blocks are the ones with q - p < -1 (short ascending run)
        return self.l - self.k < -1


def block_pair_reduced(w1, w2):
    """Whether the two-block word w1 w2 is reduced, by the (k,l,p,q) case table."""
    if w1.n != w2.n:
        raise InvalidSequenceError("blocks have different ranks")
    k, l = w1.k, w1.l
    p, q = w2.k, w2.l
    d1 = l - k
    d2 = q - p
    if d2 < d1 < -1:
        return k < p and l > q
    if d2 < -1 <= d1:
        return k <= p and l > q
    if d1 >= d2 >= -1:
        # equality (d1 == d2) only survives for a repeated block, i.e. a square
        return k <= p and l >= q
    return False


def skeletons(n):
    """All component chains: 2^(n-1) step-choice vectors.

    A chain starts at Block(k=2, l=n) (position n) and takes n-1 steps,
    each either K_STEP or L_STEP, ending at a position-1 component with
    l - k = -1.  Returned as tuples of Blocks, position n first.
    """
    out = []
    for steps in itertools.product((K_STEP, L_STEP), repeat=n - 1):
        chain = [Block(n, 2, n)]
        for s in steps:
            prev = chain[-1]
            if s == K_STEP:
                chain.append(Block(n, prev.k + 1, prev.l))
            else:
                chain.append(Block(n, prev.k, prev.l - 1))
        out.append(tuple(chain))
    return out


def _steps_of(chain):
    # step taken into each component after the first
    steps = []
    for prev, cur in zip(chain, chain[1:]):
        if (cur.k, cur.l) == (prev.k + 1, prev.l):
            steps.append(K_STEP)
        elif (cur.k, cur.l) == (prev.k, prev.l - 1):
            steps.append(L_STEP)
        else:
            raise InvalidSequenceError(f"invalid chain step {prev} -> {cur}")
    return steps


def _chain_ok(chain):
    """Validate a tail chain: strictly widening blocks, all tail-type."""
    if not chain:
        return True
    if not chain[0].is_tail_type():
        return False
    for a, b in zip(chain, chain[1:]):
        if not (b.k > a.k and b.l < a.l):
            return False
    return True


@dataclass(frozen=True)
class ArrangedWord:
    """A skeleton with exponents followed by a (possibly empty) tail chain.

    ``skeleton`` lists the n components from position n down to 1;
    ``exponents`` aligns with it.  ``chain`` is the tail v-part, empty
    for the formal identity.
    """

    n: int
    skeleton: tuple
    exponents: tuple
    chain: tuple

    def __post_init__(self):
        if len(self.skeleton) != self.n or len(self.exponents) != self.n:
            raise InvalidSequenceError("skeleton and exponents must have length n")
        if self.skeleton[0] != Block(self.n, 2, self.n):
            raise InvalidSequenceError("skeleton must start at Block(2, n)")
        _steps_of(self.skeleton)
        if any(m < 0 for m in self.exponents):
            raise InvalidSequenceError("exponents must be >= 0")
        if not _chain_ok(self.chain):
            raise InvalidSequenceError("invalid tail chain")
        p, q = self.head_pq()
        a1 = self.skeleton[-1]
        if not (p >= a1.k and q < a1.l):
            raise InvalidSequenceError("tail head incompatible with last component")
        for pos in self.marked_positions():
            if self.exponent_at(pos) < 1:
                raise InvalidSequenceError(
                    f"component at position {pos} must have exponent >= 1"
                )

    def head_pq(self):
        """(p, q) of the tail head; the formal identity acts as (inf, -1)."""
        if self.chain:
            return (self.chain[0].k, self.chain[0].l)
        return (float("inf"), -1)

    def exponent_at(self, pos):
        # position i (1..n) lives at index n - i
        return self.exponents[self.n - pos]

    def marked_positions(self):
        """Positions whose exponent is forced to be >= 1.

        Interior: a component entered by an L_STEP and left by a K_STEP.
        Boundary: position 1 entered by an L_STEP when the tail head has
        p > k.
        """
        steps = _steps_of(self.skeleton)
        marked = []
        for idx in range(1, len(steps)):
            # component at skeleton index idx, position n - idx
            if steps[idx - 1] == L_STEP and steps[idx] == K_STEP:
                marked.append(self.n - idx)
        if steps and steps[-1] == L_STEP:
            p, _ = self.head_pq()
            if p > self.skeleton[-1].k:
                marked.append(1)
        return marked

    def word(self):
        parts = []
        for blk, m in zip(self.skeleton, self.exponents):
            parts.append(blk.word() * m)
        for blk in self.chain:
            parts.append(blk.word())
        return b"".join(parts)

    def __len__(self):
        u = sum(len(b) * m for b, m in zip(self.skeleton, self.exponents))
        return u + sum(len(b) for b in self.chain)


def empty_arranged(n):
    """The arranged word expanding to the identity."""
    # the all-K_STEP skeleton is the only one valid with all exponents 0
    skel = tuple(Block(n, k, n) for k in range(2, n + 2))
    return ArrangedWord(n, skel, (0,) * n, ())


def _tail_chains(n, max_len):
    """All valid tail chains (including the empty one) of total length <= max_len."""
    blocks = [
        Block(n, k, l)
        for k in range(2, n + 2)
        for l in range(0, n + 1)
        if l - k < -1
    ]
    out = [()]

    def extend(chain, remaining):
        last = chain[-1]
        for b in blocks:
            if b.k > last.k and b.l < last.l and len(b) <= remaining:
                nxt = chain + (b,)
                out.append(nxt)
                extend(nxt, remaining - len(b))

    for b in blocks:
        if len(b) <= max_len:
            out.append((b,))
            extend((b,), max_len - len(b))
    return out


def enumerate_arranged(n, max_len):
    """All arranged words of expanded length <= max_len, no duplicates."""
    chains = _tail_chains(n, max_len)
    out = []
    for skel in skeletons(n):
        steps = _steps_of(skel)
        interior = [
            n - idx
            for idx in range(1, len(steps))
            if steps[idx - 1] == L_STEP and steps[idx] == K_STEP
        ]
        a1 = skel[-1]
        for chain in chains:
            tail_len = sum(len(b) for b in chain)
            if tail_len > max_len:
                continue
            p, q = (chain[0].k, chain[0].l) if chain else (float("inf"), -1)
            if not (p >= a1.k and q < a1.l):
                continue
            required = set(interior)
            if steps and steps[-1] == L_STEP and p > a1.k:
                required.add(1)
            budget = max_len - tail_len
            base = sum(len(skel[n - pos]) for pos in required)
            if base > budget:
                continue
            for expo in _exponent_vectors(skel, required, budget):
                out.append(ArrangedWord(n, skel, expo, chain))
    out.sort(key=lambda a: (len(a), a.word()))
    return out


def _exponent_vectors(skel, required, budget):
    """All exponent tuples with required positions >= 1 and total length <= budget."""
    n = len(skel)
    lens = [len(b) for b in skel]

    def rec(idx, remaining, acc):
        if idx == n:
            yield tuple(acc)
            return
        pos = n - idx
        m = 1 if pos in required else 0
        while m * lens[idx] <= remaining:
            acc.append(m)
            yield from rec(idx + 1, remaining - m * lens[idx], acc)
            acc.pop()
            m += 1

    yield from rec(0, budget, [])


def r0free_enumerate(n, max_len):
    """All r0-free reduced words of length <= max_len.

    Such a word is a product, for i = n down to 1, of an optional
    ascending run r_i ... r_{j_i} with i <= j_i <= n.
    """
    words = [EMPTY]
    for i in range(n, 0, -1):
        nxt = []
        for w in words:
            nxt.append(w)
            for j in range(i, n + 1):
                seg = bytes(range(i, j + 1))
                if len(w) + len(seg) <= max_len:
                    nxt.append(w + seg)
        words = nxt
    return sorted((w for w in words if len(w) <= max_len), key=lambda w: (len(w), w))


@dataclass(frozen=True)
class MarkedSeq:
    """The marked components of an arranged word plus its tail chain.

    Marks are listed leftmost first: strictly increasing k, strictly
    decreasing l, with the last mark's k below the tail head's p and the
    head's q below the last mark's l.
    """

    n: int
    marks: tuple
    chain: tuple

    def __post_init__(self):
        for a, b in zip(self.marks, self.marks[1:]):
            if not (a.k < b.k and a.l > b.l):
                raise InvalidSequenceError("marks must have increasing k, decreasing l")
        for b in self.marks:
            if b.is_tail_type():
                raise InvalidSequenceError("marks must be component-shaped blocks")
            if b.l >= self.n:
                raise InvalidSequenceError("mark l must be < n")
        if not _chain_ok(self.chain):
            raise InvalidSequenceError("invalid tail chain")
        if self.marks:
            last = self.marks[-1]
            p, q = (self.chain[0].k, self.chain[0].l) if self.chain else (float("inf"), -1)
            if not (last.k < p and q < last.l):
                raise InvalidSequenceError("last mark incompatible with tail head")

    def word(self):
        return b"".join(b.word() for b in self.marks) + b"".join(
            b.word() for b in self.chain
        )

    def __len__(self):
        return sum(len(b) for b in self.marks) + sum(len(b) for b in self.chain)


def enumerate_marked(n, max_len):
    """All marked sequences of total expanded length <= max_len.

    A marked sequence is a strictly monotone block sequence (k rising, l
    falling, l < n throughout); the component-shaped prefix gives the
    marks and the rest the tail chain.
    """
    blocks = sorted(
        (Block(n, k, l) for k in range(2, n + 2) for l in range(0, n)),
        key=lambda b: (b.k, -b.l),
    )
    seqs = [()]

    def extend(seq, remaining):
        last = seq[-1]
        for b in blocks:
            if b.k > last.k and b.l < last.l and len(b) <= remaining:
                nxt = seq + (b,)
                seqs.append(nxt)
                extend(nxt, remaining - len(b))

    for b in blocks:
        if len(b) <= max_len:
            seqs.append((b,))
            extend((b,), max_len - len(b))

    out = []
    for seq in seqs:
        split = next((i for i, b in enumerate(seq) if b.is_tail_type()), len(seq))
        out.append(MarkedSeq(n, seq[:split], seq[split:]))
    out.sort(key=lambda m: (len(m), m.word()))
    return out


def marked_components(aw):
    """The MarkedSeq of an arranged word."""
    marks = tuple(
        aw.skeleton[aw.n - pos] for pos in sorted(aw.marked_positions(), reverse=True)
    )
    return MarkedSeq(aw.n, marks, aw.chain)


def rebuild(ms):
    """The unique arranged word with the given marked components and tail.

    Inverse of marked_components: fills the skeleton between marks with
    the run of K_STEPs followed by L_STEPs dictated by uniqueness, and
    gives marked positions exponent 1, all others 0.
    """
    n = ms.n
    p, q = (ms.chain[0].k, ms.chain[0].l) if ms.chain else (float("inf"), -1)
    chain = [Block(n, 2, n)]

    def fill_to(k, l):
        # K_STEPs first, then L_STEPs: introduces no new marked position
        cur = chain[-1]
        for kk in range(cur.k + 1, k + 1):
            chain.append(Block(n, kk, cur.l))
        cur = chain[-1]
        for ll in range(cur.l - 1, l - 1, -1):
            chain.append(Block(n, cur.k, ll))

    for mark in ms.marks:
        fill_to(mark.k, mark.l)
        if chain[-1] != mark:
            raise InvalidSequenceError(f"mark {mark} unreachable in skeleton")
    # descend from the last mark (or the top) to position 1 without
    # creating a marked position: all K_STEPs if the tail head allows it,
    # otherwise stop the K_STEPs exactly at k = p
    cur = chain[-1]
    if p > cur.l:
        fill_to(cur.l + 1, cur.l)
    else:
        fill_to(p, p - 1)
    skel = tuple(chain)
    if len(skel) != n:
        raise InvalidSequenceError("marked sequence does not fill a skeleton")
    mark_set = set(ms.marks)
    expo = tuple(1 if b in mark_set else 0 for b in skel)
    return ArrangedWord(n, skel, expo, ms.chain)


def _parse_blocks(w, n):
    """Split a word starting with r0 into its r0-initiated block segments."""
    assert w and w[0] == 0
    starts = [i for i, c in enumerate(w) if c == 0]
    starts.append(len(w))
    blocks = []
    for s, e in zip(starts, starts[1:]):
        seg = w[s + 1:e]
        # descending run from rn, then ascending run from r1
        i = 0
        k = n + 1
        if i < len(seg) and seg[i] == n:
            k = n
            i += 1
            while i < len(seg) and seg[i] == seg[i - 1] - 1 and seg[i] >= 2:
                k = seg[i]
                i += 1
        l = 0
        if i < len(seg) and seg[i] == 1:
            l = 1
            i += 1
            while i < len(seg) and seg[i] == seg[i - 1] + 1:
                l = seg[i]
                i += 1
        if i != len(seg):
            raise InvalidSequenceError(
                f"segment at position {s} is not a block: {seg!r}"
            )
        blocks.append(Block(n, k, l))
    return blocks


@dataclass(frozen=True)
class Classification:
    r0free: bytes
    arranged: ArrangedWord


def classify(w, n, basis=None):
    """Decompose a reduced word into its r0-free prefix and arranged part.

    Raises NotReducedError (with the offending factor's position and
    rule) if the word contains a leading word of the explicit basis.
    """
    if basis is None:
        basis = g_families(n)
    hit = find_first_forbidden(w, basis)
    if hit is not None:
        pos, rule = hit
        raise NotReducedError(w, pos, rule)
    cut = w.find(b"\x00")
    if cut < 0:
        return Classification(w, empty_arranged(n))
    prefix, rest = w[:cut], w[cut:]
    blocks = _parse_blocks(rest, n)
    comps = []  # (block, multiplicity) for component-shaped blocks, in order
    chain = []
    for b in blocks:
        if b.is_tail_type():
            chain.append(b)
        else:
            if chain:
                raise InvalidSequenceError("component block after tail chain")
            if comps and comps[-1][0] == b:
                comps[-1][1] += 1
            else:
                comps.append([b, 1])
    chain = tuple(chain)
    p, q = (chain[0].k, chain[0].l) if chain else (float("inf"), -1)
    skel = [Block(n, 2, n)]

    def fill_to(k, l):
        cur = skel[-1]
        for kk in range(cur.k + 1, k + 1):
            skel.append(Block(n, kk, cur.l))
        cur = skel[-1]
        for ll in range(cur.l - 1, l - 1, -1):
            skel.append(Block(n, cur.k, ll))

    for b, _ in comps:
        fill_to(b.k, b.l)
        if skel[-1] != b:
            raise InvalidSequenceError(f"blocks of {w!r} do not fit one skeleton")
    cur = skel[-1]
    if p > cur.l:
        fill_to(cur.l + 1, cur.l)
    else:
        fill_to(p, p - 1)
    if len(skel) != n:
        raise InvalidSequenceError(f"blocks of {w!r} do not fill a skeleton")
    by_block = {b: m for b, m in comps}
    expo = tuple(by_block.get(b, 0) for b in skel)
    aw = ArrangedWord(n, tuple(skel), expo, chain)
    return Classification(prefix, aw)
