"""Rules, compositions, Buchberger-Shirshov completion and normal forms.

Rules are binomial semigroup relations: a deg-lex-greater leading word
rewrites to a smaller word.  Completion repeatedly resolves ambiguities
(overlaps and inclusions of leading words) until every composition is
trivial, which makes rewriting confluent and normal forms unique.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .words import DegLexOrder, deglex_key

INCLUSION = "inclusion"
INTERSECTION = "intersection"


class Rule(NamedTuple):
    lhs: bytes
    rhs: bytes


class CompletionLimitError(RuntimeError):
    """Raised when completion exceeds its resource limits.

    The partial rule set reached so far is attached as ``partial``.
    """

    def __init__(self, message, partial):
        super().__init__(message)
        self.partial = partial


def make_rule(u, v, order):
    """Orient the relation u = v into a Rule, larger side first."""
    c = order.compare(u, v)
    if c == 0:
        raise ValueError("rule sides must differ")
    lhs, rhs = (u, v) if c > 0 else (v, u)
    if not lhs:
        raise ValueError("rule lhs must be nonempty")
    return Rule(lhs, rhs)


@dataclass
class RuleSet:
    rules: list
    order: DegLexOrder

    def __post_init__(self):
        seen = set()
        for r in self.rules:
            if not r.lhs:
                raise ValueError("rule lhs must be nonempty")
            if self.order.compare(r.lhs, r.rhs) <= 0:
                raise ValueError(f"rule not deg-lex oriented: {r}")
            if r in seen:
                raise ValueError(f"duplicate rule: {r}")
            seen.add(r)

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def leading_words(self):
        return {r.lhs for r in self.rules}

    def sorted_by_lhs(self):
        return sorted(self.rules, key=lambda r: (deglex_key(r.lhs), deglex_key(r.rhs)))


def reduce_once(w, rs):
    """One elimination of a leading word, or None if w is reduced.

    The lowest-index applicable rule wins and its leftmost occurrence is
    replaced.  The result is strictly deg-lex-smaller than w.
    """
    for rule in rs.rules:
        p = w.find(rule.lhs)
        if p >= 0:
            return w[:p] + rule.rhs + w[p + len(rule.lhs):]
    return None


def normal_form(w, rs):
    """Iterate reduce_once to a fixpoint.

    Terminates because every step is a strict deg-lex decrease; on a
    Groebner-Shirshov basis the result is strategy-independent.
    """
    while True:
        nxt = reduce_once(w, rs)
        if nxt is None:
            return w
        w = nxt


def is_reduced(w, rs):
    return all(w.find(r.lhs) < 0 for r in rs.rules)


def find_first_forbidden(w, rs):
    """Leftmost occurrence of any leading word in w, as (position, rule).

    Ties at the same position go to the lowest-index rule.  Returns None
    if w is reduced.
    """
    best = None
    for rule in rs.rules:
        p = w.find(rule.lhs)
        if p >= 0 and (best is None or p < best[0]):
            best = (p, rule)
    return best


@dataclass(frozen=True)
class Ambiguity:
    """An overlap or inclusion of the leading words of rules i and j.

    ``word`` contains lhs_i at ``offset_i`` and lhs_j at ``offset_j``.
    Inclusion: word == lhs_i contains lhs_j.  Intersection: a proper
    overlap, word = lhs_i . b = a . lhs_j with a, b nonempty.
    """

    i: int
    j: int
    word: bytes
    kind: str
    offset_i: int
    offset_j: int


def _pair_ambiguities(i, li, j, lj):
    """Ambiguities of the ordered rule pair (i, j) with leading words li, lj."""
    out = []
    if i != j:
        # inclusions of lhs_j in lhs_i (a and b may both be empty)
        if len(lj) <= len(li):
            p = li.find(lj)
            while p >= 0:
                out.append(Ambiguity(i, j, li, INCLUSION, 0, p))
                p = li.find(lj, p + 1)
    # proper intersections: a suffix of lhs_i equals a prefix of lhs_j
    for t in range(1, min(len(li), len(lj))):
        if li[-t:] == lj[:t]:
            out.append(Ambiguity(i, j, li + lj[t:], INTERSECTION, 0, len(li) - t))
    return out


def ambiguities(rs):
    """All ambiguities over ordered rule pairs, ascending by deg-lex of word."""
    out = []
    for i, ri in enumerate(rs.rules):
        for j, rj in enumerate(rs.rules):
            out.extend(_pair_ambiguities(i, ri.lhs, j, rj.lhs))
    out.sort(key=lambda a: (deglex_key(a.word), a.i, a.j, a.offset_j))
    return out


def _apply_at(w, offset, rule):
    return w[:offset] + rule.rhs + w[offset + len(rule.lhs):]


def composition_remainder(amb, rs):
    """Resolve an ambiguity: None if the composition is trivial, else a new Rule.

    Both one-step descendants of the ambiguity word are reduced to normal
    form; a difference of normal forms is the remainder rule.
    """
    ri = rs.rules[amb.i]
    rj = rs.rules[amb.j]
    x = normal_form(_apply_at(amb.word, amb.offset_i, ri), rs)
    y = normal_form(_apply_at(amb.word, amb.offset_j, rj), rs)
    if x == y:
        return None
    return make_rule(x, y, rs.order)


def is_gs_basis(rs):
    """Check confluence by exhaustive composition of all ambiguities.

    Returns (True, []) or (False, witnesses) with the failing ambiguities.
    """
    witnesses = [a for a in ambiguities(rs) if composition_remainder(a, rs) is not None]
    return (not witnesses, witnesses)


@dataclass
class _Completion:
    """Mutable completion state: active rules plus an ambiguity queue."""

    order: DegLexOrder
    max_rules: int
    max_degree: int
    rules: list = field(default_factory=list)
    active: list = field(default_factory=list)
    pending: list = field(default_factory=list)
    created: int = 0

    def active_ruleset(self):
        live = [r for r, a in zip(self.rules, self.active) if a]
        return RuleSet(live, self.order)

    def _nf(self, w):
        # normal form under active rules only
        changed = True
        while changed:
            changed = False
            for r, alive in zip(self.rules, self.active):
                if not alive:
                    continue
                p = w.find(r.lhs)
                if p >= 0:
                    w = w[:p] + r.rhs + w[p + len(r.lhs):]
                    changed = True
                    break
        return w

    def add_equation(self, u, v):
        u = self._nf(u)
        v = self._nf(v)
        if u == v:
            return
        rule = make_rule(u, v, self.order)
        for k, (r, alive) in enumerate(zip(self.rules, self.active)):
            if alive and r == rule:
                return
        self.created += 1
        if self.created > self.max_rules:
            raise CompletionLimitError(
                f"rule limit {self.max_rules} exceeded", self.active_ruleset()
            )
        idx = len(self.rules)
        self.rules.append(rule)
        self.active.append(True)
        # prune existing rules whose lhs became reducible; re-add as equations
        stale = []
        for k, (r, alive) in enumerate(zip(self.rules, self.active)):
            if alive and k != idx and rule.lhs in r.lhs:
                self.active[k] = False
                stale.append(r)
        for k, (r, alive) in enumerate(zip(self.rules, self.active)):
            if alive:
                for amb in _pair_ambiguities(idx, rule.lhs, k, r.lhs):
                    self._push(amb)
                if k != idx:
                    for amb in _pair_ambiguities(k, r.lhs, idx, rule.lhs):
                        self._push(amb)
        for r in stale:
            self.add_equation(r.lhs, r.rhs)

    def _push(self, amb):
        if len(amb.word) > self.max_degree:
            raise CompletionLimitError(
                f"ambiguity degree {len(amb.word)} exceeds limit {self.max_degree}",
                self.active_ruleset(),
            )
        heapq.heappush(
            self.pending,
            (deglex_key(amb.word), amb.i, amb.j, amb.offset_j, amb),
        )

    def drain(self):
        while self.pending:
            *_, amb = heapq.heappop(self.pending)
            if not (self.active[amb.i] and self.active[amb.j]):
                continue
            ri = self.rules[amb.i]
            rj = self.rules[amb.j]
            x = self._nf(_apply_at(amb.word, amb.offset_i, ri))
            y = self._nf(_apply_at(amb.word, amb.offset_j, rj))
            if x != y:
                self.add_equation(x, y)


def complete(rs, max_rules=100000, max_degree=64):
    """Buchberger-Shirshov completion.

    Processes ambiguities smallest-first (deg-lex of the ambiguity word),
    adding nontrivial composition remainders as new rules, until every
    composition is trivial.  May not terminate for arbitrary input; the
    limits raise CompletionLimitError carrying the partial state.
    """
    state = _Completion(rs.order, max_rules, max_degree)
    for r in rs.rules:
        state.add_equation(r.lhs, r.rhs)
    state.drain()
    # safety net: rule pruning during completion is heuristic, so certify
    # the result and feed any leftover nontrivial compositions back in
    while True:
        result = state.active_ruleset()
        ok, witnesses = is_gs_basis(result)
        if ok:
            return result
        for amb in witnesses:
            rem = composition_remainder(amb, result)
            if rem is not None:
                state.add_equation(rem.lhs, rem.rhs)
        state.drain()


def interreduce(rs):
    """Minimize a Groebner-Shirshov basis.

    Drops rules whose lhs properly contains another retained lhs (or
    duplicates one) and reduces every rhs to normal form under the
    retained rules.
    """
    kept = []
    for r in rs.sorted_by_lhs():
        if any(k.lhs in r.lhs for k in kept):
            continue
        kept.append(r)
    while True:
        base = RuleSet(kept, rs.order)
        reduced = []
        for r in kept:
            reduced.append(Rule(r.lhs, normal_form(r.rhs, base)))
        if reduced == kept:
            return base
        kept = reduced
