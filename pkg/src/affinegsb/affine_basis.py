"""The explicit confluent basis of the rank-n affine presentation.

Besides the defining relations (involutions f1, commuting f2, braid f3,
wrap-around braid f4) the basis consists of ten derived families g1-g10
built from consecutive-index runs.  ``verify_explicit_basis`` checks the
explicit families against machine completion for concrete n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .presentations import affine_a
from .rewriting import RuleSet, complete, interreduce, make_rule
from .words import DegLexOrder


def r_range(i, j, n):
    """The run word between generator indices i and j (inclusive).

    Ascending if i < j, descending if i > j, a single letter if i == j.
    The two conventions (1, 0) and (n, n+1) denote the empty word.
    """
    if (i, j) == (1, 0) or (i, j) == (n, n + 1):
        return b""
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError(f"run indices ({i}, {j}) outside alphabet of rank {n}")
    step = 1 if j >= i else -1
    return bytes(range(i, j + step, step))


def _f_rules(n, order):
    rules = []
    for i in range(n + 1):
        rules.append(make_rule(bytes([i, i]), b"", order))
    for i in range(n + 1):
        for j in range(i + 2, n + 1):
            if (i, j) != (0, n):
                rules.append(make_rule(bytes([i, j]), bytes([j, i]), order))
    for i in range(n):
        rules.append(make_rule(bytes([i, i + 1, i]), bytes([i + 1, i, i + 1]), order))
    rules.append(make_rule(bytes([0, n, 0]), bytes([n, 0, n]), order))
    return rules


def _g_rules(n, order):
    R = lambda i, j: r_range(i, j, n)
    rules = []
    # g1: a run followed by its own first letter commutes past, shifted up
    for i in range(n + 1):
        for j in range(i + 2, n + 1):
            if (i, j) != (0, n):
                rules.append(make_rule(R(i, j) + bytes([i]),
                                       bytes([i + 1]) + R(i, j), order))
    # g2
    rules.append(make_rule(R(0, n) + bytes([0, n]),
                           bytes([1]) + R(0, n) + bytes([0]), order))
    # g3: j < k-1 < n, so k runs from j+2 up to n
    for j in range(2, n + 1):
        for k in range(j + 2, n + 1):
            rules.append(make_rule(bytes([0]) + R(n, k) + bytes([j]),
                                   bytes([j, 0]) + R(n, k), order))
    # g4
    for j in range(2, n):
        rules.append(make_rule(bytes([0]) + R(n, j) + bytes([j + 1]),
                               bytes([j, 0]) + R(n, j), order))
    # g5
    for k in range(2, n):
        rules.append(make_rule(bytes([0]) + R(n, k) + bytes([0]),
                               bytes([n, 0]) + R(n, k), order))
    # g6
    for k in range(2, n + 1):
        for l in range(1, n):
            rules.append(make_rule(
                bytes([0]) + R(n, k) + R(1, l) + R(0, l),
                bytes([n, 0]) + R(n, k) + R(1, l) + R(0, l - 1), order))
    # g7
    for k in range(2, n + 1):
        for l in range(1, k - 1):
            rules.append(make_rule(
                bytes([0]) + R(n, k) + R(1, l) + bytes([0]) + R(n, k),
                bytes([1, 0]) + R(n, k) + R(1, l) + bytes([0]) + R(n, k + 1), order))
    # g8
    for k in range(3, n + 1):
        for l in range(k - 1, n + 1):
            rules.append(make_rule(
                bytes([0]) + R(n, k) + R(1, l) + bytes([0]) + R(n, k - 1),
                bytes([1, 0]) + R(n, k) + R(1, l) + bytes([0]) + R(n, k), order))
    # g9
    for k in range(2, n):
        for j in range(k + 1, n + 1):
            for l in range(1, j - 1):
                rules.append(make_rule(
                    bytes([0]) + R(n, k) + R(1, l) + bytes([0]) + R(n, j) + R(1, l),
                    bytes([n, 0]) + R(n, k) + R(1, l) + bytes([0]) + R(n, j) + R(1, l - 1),
                    order))
    # g10
    for k in range(2, n + 1):
        for j in range(k, n + 1):
            for l in range(j - 1, n):
                rules.append(make_rule(
                    bytes([0]) + R(n, k) + R(1, l) + bytes([0]) + R(n, j) + R(1, l + 1),
                    bytes([n, 0]) + R(n, k) + R(1, l) + bytes([0]) + R(n, j) + R(1, l),
                    order))
    return rules


def g_families(n):
    """The full explicit rule set (defining relations plus g1-g10) at rank n."""
    if n < 2:
        raise ValueError(f"rank must be >= 2, got {n}")
    order = DegLexOrder(n + 1)
    return RuleSet(_f_rules(n, order) + _g_rules(n, order), order)


@dataclass
class BasisReport:
    """Outcome of comparing machine completion against the explicit families."""

    n: int
    match: bool
    missing: list  # expected (explicit) rules the engine did not produce
    extra: list    # engine rules absent from the explicit families
    computed: RuleSet
    expected: RuleSet


def verify_explicit_basis(n, max_rules=100000, max_degree=64):
    """Complete and interreduce the defining relations, compare with g_families."""
    computed = interreduce(complete(affine_a(n).to_rules(),
                                    max_rules=max_rules, max_degree=max_degree))
    expected = g_families(n)
    got = set(computed.rules)
    want = set(expected.rules)
    return BasisReport(
        n=n,
        match=(got == want),
        missing=sorted(want - got),
        extra=sorted(got - want),
        computed=computed,
        expected=expected,
    )
