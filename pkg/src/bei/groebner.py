"""Buchberger's algorithm and multivariate division.

The engine is tuned for the workloads in this package: mostly binomial
generators in up to ~15 variables, where S-polynomial reductions stay
short.  Pair selection is the normal strategy (smallest lcm first) with
the coprime-lead and chain criteria.  Every Groebner-basis call carries a
hard budget on S-pair reductions; exceeding it raises, it never returns a
truncated answer.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import (
    Mono,
    MonomialOrder,
    Polynomial,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

DEFAULT_PAIR_BUDGET = 200_000


class BudgetExceededError(RuntimeError):
    """A Groebner computation hit its S-pair reduction budget."""

    def __init__(self, budget: int):
        super().__init__(f"Groebner basis computation exceeded budget of {budget} S-pair reductions")
        self.budget = budget


def _reduce_dict(work: dict[Mono, Fraction],
                 prepared: list[tuple[Mono, Fraction, dict[Mono, Fraction]]],
                 keyfn) -> dict[Mono, Fraction]:
    """Full remainder of `work` modulo the prepared basis.

    prepared entries are (leading monomial, leading coefficient, terms).
    The maximum monomial of `work` strictly decreases every round, so new
    terms never collide with monomials already moved to the remainder.
    """
    remainder: dict[Mono, Fraction] = {}
    while work:
        m = max(work, key=keyfn)
        c = work.pop(m)
        for lm, lc, terms in prepared:
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                scale = c / lc
                for gm, gc in terms.items():
                    if gm is lm or gm == lm:
                        continue
                    mm = mono_mul(gm, q)
                    nv = work.get(mm, _F0) - scale * gc
                    if nv:
                        work[mm] = nv
                    elif mm in work:
                        del work[mm]
                break
        else:
            remainder[m] = c
    return remainder


_F0 = Fraction(0)


def _prepare(basis: list[Polynomial], order: MonomialOrder):
    keyfn = order.key
    prepared = []
    for g in basis:
        lm, lc = g.leading_term(order)
        prepared.append((lm, lc, g.terms))
    prepared.sort(key=lambda e: keyfn(e[0]))
    return prepared


def normal_form(f: Polynomial, basis: list[Polynomial], order: MonomialOrder) -> Polynomial:
    """Remainder of f on division by basis.

    No term of the result is divisible by any basis leading monomial.
    When basis is a Groebner basis, the result is the canonical normal
    form and f - result lies in the generated ideal.
    """
    live = [g for g in basis if not g.is_zero()]
    for g in live:
        if g.universe != f.universe:
            raise ValueError("universe mismatch between f and basis")
    if not live:
        return f
    rem = _reduce_dict(dict(f.terms), _prepare(live, order), order.key)
    return Polynomial(f.universe, rem)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lmf, lcf = f.leading_term(order)
    lmg, lcg = g.leading_term(order)
    l = mono_lcm(lmf, lmg)
    return f.mul_term(mono_div(l, lmf), Fraction(1) / lcf) \
        - g.mul_term(mono_div(l, lmg), Fraction(1) / lcg)


def buchberger(gens: list[Polynomial],
               order: MonomialOrder,
               budget: int | None = None) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by gens.

    Output is canonical for the given order: monic, auto-reduced, sorted
    by ascending leading monomial.  Deterministic for identical input.
    """
    if budget is None:
        budget = DEFAULT_PAIR_BUDGET
    keyfn = order.key

    basis: list[Polynomial] = []
    lms: list[Mono] = []
    for g in gens:
        if g.universe != gens[0].universe:
            raise ValueError("generators live in different universes")
        if not g.is_zero():
            gm = g.monic(order)
            if gm not in basis:
                basis.append(gm)
                lms.append(gm.leading_monomial(order))
    if not basis:
        return []

    pending: set[tuple[int, int]] = set()
    lcms: dict[tuple[int, int], Mono] = {}

    def push_pairs(j: int) -> None:
        for i in range(j):
            pair = (i, j)
            pending.add(pair)
            lcms[pair] = mono_lcm(lms[i], lms[j])

    for j in range(len(basis)):
        push_pairs(j)

    reductions = 0
    while pending:
        pair = min(pending, key=lambda p: (keyfn(lcms[p]), p))
        pending.discard(pair)
        i, j = pair
        lij = lcms[pair]

        if mono_deg(lij) == mono_deg(lms[i]) + mono_deg(lms[j]) \
                and lij == mono_mul(lms[i], lms[j]):
            continue  # coprime leads: S-pair reduces to zero

        # chain criterion: some k divides the lcm and both flanking pairs
        # are already settled
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if mono_divides(lms[k], lij):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pending and pjk not in pending:
                    skip = True
                    break
        if skip:
            continue

        if reductions >= budget:
            raise BudgetExceededError(budget)
        reductions += 1

        s = s_polynomial(basis[i], basis[j], order)
        h = normal_form(s, basis, order)
        if not h.is_zero():
            h = h.monic(order)
            basis.append(h)
            lms.append(h.leading_monomial(order))
            push_pairs(len(basis) - 1)

    return _reduce_basis(basis, order)


def _reduce_basis(basis: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Minimalize then tail-reduce: the canonical reduced basis."""
    keyfn = order.key
    lms = [g.leading_monomial(order) for g in basis]
    keep: list[int] = []
    for i, lm in enumerate(lms):
        dominated = False
        for j, other in enumerate(lms):
            if i == j:
                continue
            if mono_divides(other, lm) and (other != lm or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(i)

    minimal = [basis[i] for i in keep]
    reduced: list[Polynomial] = []
    for idx, g in enumerate(minimal):
        rest = minimal[:idx] + minimal[idx + 1:]
        h = normal_form(g, rest, order) if rest else g
        reduced.append(h.monic(order))
    reduced.sort(key=lambda g: keyfn(g.leading_monomial(order)))
    return reduced


def is_groebner_basis(basis: list[Polynomial], order: MonomialOrder) -> bool:
    """Exhaustive S-polynomial check; used by tests and cross-validation."""
    live = [g for g in basis if not g.is_zero()]
    for i in range(len(live)):
        for j in range(i + 1, len(live)):
            s = s_polynomial(live[i], live[j], order)
            if not normal_form(s, live, order).is_zero():
                return False
    return True
