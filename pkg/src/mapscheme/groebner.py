"""Degree-bounded two-sided rewriting in free algebras.

Completion in a free algebra need not terminate, so every system is
completed only up to a degree bound: all critical pairs whose ambiguity
word fits under the bound are resolved.  The resulting normal form is
always a sound reduction (a zero result certifies ideal membership); it is
canonical — so a nonzero result certifies non-membership — exactly when no
critical pair was left pending above the bound, which the ``complete`` flag
reports.  Every verdict in the package funnels through `decide_zero` so the
truncation is never hidden.
"""

from __future__ import annotations

import enum
from typing import Iterable

from .freealg import AlgebraPresentation, GeneratorImageMap, NCPolynomial, Word


class BoundError(ValueError):
    pass


class Verdict(enum.Enum):
    VERIFIED = "verified"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"

    @property
    def ok(self) -> bool:
        return self is Verdict.VERIFIED

    @property
    def exit_code(self) -> int:
        return {"verified": 0, "refuted": 1, "inconclusive": 2}[self.value]


def combine_verdicts(verdicts: Iterable[Verdict]) -> Verdict:
    out = Verdict.VERIFIED
    for v in verdicts:
        if v is Verdict.REFUTED:
            return Verdict.REFUTED
        if v is Verdict.INCONCLUSIVE:
            out = Verdict.INCONCLUSIVE
    return out


class ReductionSystem:
    """Rewrite rules ``lead word -> tail`` completed up to `degree_bound`."""

    def __init__(self, pres: AlgebraPresentation, degree_bound: int):
        maxdeg = pres.max_relation_degree()
        if degree_bound < maxdeg:
            raise BoundError(
                f"degree bound {degree_bound} below relation degree {maxdeg}"
            )
        self.pres = pres
        self.alg = pres.algebra
        self.degree_bound = degree_bound
        self.rules: list[tuple[Word, NCPolynomial]] = []
        self._by_first: dict[str, list[int]] = {}
        self.pending_ambiguities = 0
        self.collapsed = False  # ideal contains a nonzero scalar
        self._build()

    @property
    def complete(self) -> bool:
        """True iff every critical pair of the final rule set was resolved."""
        return self.pending_ambiguities == 0

    # -- construction ----------------------------------------------------

    def _add_rule(self, f: NCPolynomial) -> int:
        f = f.monic()
        lead = f.leading_word()
        if not lead:
            # a nonzero scalar lies in the ideal: the quotient is zero
            self.collapsed = True
            return -1
        field = self.pres.field
        tail = NCPolynomial(
            self.alg,
            {w: field.neg(c) for w, c in f.terms.items() if w != lead},
        )
        idx = len(self.rules)
        self.rules.append((lead, tail))
        self._by_first.setdefault(lead[0], []).append(idx)
        return idx

    def _build(self):
        for r in self.pres.relations:
            nf = self.normal_form(r)
            if not nf.is_zero():
                self._add_rule(nf)
        # process critical pairs until no rule below the bound is missing
        i = 0
        while i < len(self.rules):
            for j in range(i + 1):
                self._resolve_pair(i, j)
                if i != j:
                    self._resolve_pair(j, i)
            i += 1

    def _resolve_pair(self, i: int, j: int):
        """Resolve all ambiguities of the ordered rule pair (i, j)."""
        u, tail_u = self.rules[i]
        v, tail_v = self.rules[j]
        alg = self.alg
        # overlaps: a proper suffix of u equals a proper prefix of v
        for k in range(1, min(len(u), len(v))):
            if u[len(u) - k :] != v[:k]:
                continue
            w_len = len(u) + len(v) - k
            if w_len > self.degree_bound:
                self.pending_ambiguities += 1
                continue
            c_part = v[k:]
            a_part = u[: len(u) - k]
            s = tail_u * alg.poly({c_part: self.pres.field.one}) - alg.poly(
                {a_part: self.pres.field.one}
            ) * tail_v
            self._absorb(s)
        # inclusions: v sits properly inside u
        if i != j and len(v) <= len(u):
            for pos in range(len(u) - len(v) + 1):
                if pos == 0 and len(v) == len(u):
                    continue
                if u[pos : pos + len(v)] != v:
                    continue
                pre = alg.poly({u[:pos]: self.pres.field.one})
                post = alg.poly({u[pos + len(v) :]: self.pres.field.one})
                self._absorb(tail_u - pre * tail_v * post)

    def _absorb(self, s: NCPolynomial):
        nf = self.normal_form(s)
        if not nf.is_zero():
            self._add_rule(nf)

    # -- reduction -------------------------------------------------------

    def _find_redex(self, w: Word):
        by_first = self._by_first
        rules = self.rules
        n = len(w)
        for pos in range(n):
            for idx in by_first.get(w[pos], ()):
                lead = rules[idx][0]
                ll = len(lead)
                if pos + ll <= n and w[pos : pos + ll] == lead:
                    return pos, idx
        return None

    def normal_form(self, p: NCPolynomial) -> NCPolynomial:
        """Fully reduce `p`; degree never increases along the way."""
        if self.collapsed:
            return self.alg.zero()
        field = self.pres.field
        terms = dict(p.terms)
        key = self.alg.word_key
        while True:
            hit = None
            for w in sorted(terms, key=key, reverse=True):
                found = self._find_redex(w)
                if found is not None:
                    hit = (w, found)
                    break
            if hit is None:
                break
            w, (pos, idx) = hit
            c = terms.pop(w)
            lead, tail = self.rules[idx]
            prefix = w[:pos]
            suffix = w[pos + len(lead) :]
            for tw, tc in tail.terms.items():
                nw = prefix + tw + suffix
                s = field.add(terms.get(nw, field.zero), field.mul(c, tc))
                if s == field.zero:
                    terms.pop(nw, None)
                else:
                    terms[nw] = s
        return NCPolynomial(self.alg, terms)


_SYSTEM_CACHE: dict = {}


def reduction_system(pres: AlgebraPresentation, degree_bound: int) -> ReductionSystem:
    key = (pres, degree_bound)
    sys = _SYSTEM_CACHE.get(key)
    if sys is None:
        sys = ReductionSystem(pres, degree_bound)
        _SYSTEM_CACHE[key] = sys
    return sys


def nf_bounded(
    p: NCPolynomial, pres: AlgebraPresentation, degree_bound: int
) -> tuple[NCPolynomial, bool]:
    """Normal form of `p` modulo the presentation's ideal, plus the
    completeness flag of the truncated system that produced it."""
    sys = reduction_system(pres, degree_bound)
    return sys.normal_form(p), sys.complete


def decide_zero(
    p: NCPolynomial, pres: AlgebraPresentation, degree_bound: int
) -> tuple[Verdict, NCPolynomial]:
    """Is `p` zero in the presented quotient?

    A zero normal form is an unconditional membership certificate, so it is
    VERIFIED even under a truncated completion; a nonzero normal form only
    REFUTES when the completion saturated.
    """
    nf, complete = nf_bounded(p, pres, degree_bound)
    if nf.is_zero():
        return Verdict.VERIFIED, nf
    if complete:
        return Verdict.REFUTED, nf
    return Verdict.INCONCLUSIVE, nf


def verify_morphism(m: GeneratorImageMap, degree_bound: int) -> Verdict:
    """Check that the generator images send every source relation to zero
    in the target quotient; updates ``m.verified_to_degree`` on success."""
    verdicts = []
    for r in m.source.relations:
        image = m.apply(r)
        v, _ = decide_zero(image, m.target, degree_bound)
        if v is Verdict.REFUTED:
            return Verdict.REFUTED
        verdicts.append(v)
    out = combine_verdicts(verdicts)
    if out is Verdict.VERIFIED:
        m.verified_to_degree = degree_bound
    return out
