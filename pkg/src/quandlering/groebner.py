"""Buchberger's algorithm over the rationals.

Division follows the textbook rule: at each step the current leading term is
divided by the first element of the divisor list whose leading monomial
divides it, otherwise it moves to the remainder.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Sequence

from .polynomial import (
    GREVLEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    as_order,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

DEFAULT_MAX_PAIRS = 10_000


class BudgetExceeded(RuntimeError):
    """A configured work limit ran out before the computation finished."""

    def __init__(self, kind: str, limit: int):
        super().__init__(f"{kind} budget of {limit} exhausted")
        self.kind = kind
        self.limit = limit


def divide(
    f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder | str = GREVLEX
) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division: ``f = sum(q_i * G[i]) + r``.

    Returns ``(quotients, remainder)``. No term of the remainder is divisible by a
    leading monomial of ``G``. Zero divisors get a zero quotient.
    """
    order = as_order(order)
    nvars = f.nvars
    divisors = []
    for idx, g in enumerate(G):
        if g.nvars != nvars:
            raise ValueError("all polynomials must share the same variables")
        if not g.is_zero():
            gm, gc = g.leading_term(order)
            divisors.append((idx, gm, gc, list(g.items())))
    p: dict[Monomial, Fraction] = f.terms
    quotients: list[dict[Monomial, Fraction]] = [{} for _ in G]
    rem: dict[Monomial, Fraction] = {}
    key = order.key
    while p:
        m = max(p, key=key)
        c = p[m]
        for idx, gm, gc, gterms in divisors:
            if mono_divides(gm, m):
                qm = mono_div(m, gm)
                qc = c / gc
                q = quotients[idx]
                q[qm] = q.get(qm, 0) + qc
                for hm, hc in gterms:
                    tm = mono_mul(hm, qm)
                    v = p.get(tm, 0) - qc * hc
                    if v:
                        p[tm] = v
                    else:
                        p.pop(tm, None)
                break
        else:
            rem[m] = c
            del p[m]
    return [Polynomial(q, nvars) for q in quotients], Polynomial(rem, nvars)


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder | str = GREVLEX) -> Polynomial:
    return divide(f, G, order)[1]


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | str = GREVLEX) -> Polynomial:
    order = as_order(order)
    fm, fc = f.leading_term(order)
    gm, gc = g.leading_term(order)
    lcm = mono_lcm(fm, gm)
    return f.scale(1 / fc, mono_div(lcm, fm)) - g.scale(1 / gc, mono_div(lcm, gm))


def reduce_basis(G: Sequence[Polynomial], order: MonomialOrder | str = GREVLEX) -> list[Polynomial]:
    """Turn a Groebner basis into the reduced one, sorted by decreasing leading monomial."""
    order = as_order(order)
    polys = [g.monic(order) for g in G if not g.is_zero()]
    if any(g.is_constant() for g in polys):
        return [Polynomial.constant(1, polys[0].nvars)]
    # drop elements whose leading monomial is a multiple of another's
    polys.sort(key=lambda g: order.key(g.leading_monomial(order)))
    minimal: list[Polynomial] = []
    for g in polys:
        lm = g.leading_monomial(order)
        if not any(mono_divides(h.leading_monomial(order), lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        reduced.append(normal_form(g, others, order).monic(order))
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return reduced


def buchberger(
    F: Sequence[Polynomial],
    order: MonomialOrder | str = GREVLEX,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by ``F``.

    Pairs are processed smallest lcm first (normal strategy); pairs with coprime
    leading monomials are skipped. Raises :class:`BudgetExceeded` once more than
    ``max_pairs`` pairs have been taken off the queue.
    """
    order = as_order(order)
    if not F:
        raise ValueError("need at least one generator")
    nvars = F[0].nvars
    G = [f.monic(order) for f in F if not f.is_zero()]
    if not G:
        return []
    lms = [g.leading_monomial(order) for g in G]

    queue: list = []

    def push(i, j):
        lcm = mono_lcm(lms[i], lms[j])
        heapq.heappush(queue, (sum(lcm), order.key(lcm), i, j))

    for j in range(len(G)):
        for i in range(j):
            push(i, j)
    processed = 0
    while queue:
        _, _, i, j = heapq.heappop(queue)
        processed += 1
        if processed > max_pairs:
            raise BudgetExceeded("pairs", max_pairs)
        if mono_coprime(lms[i], lms[j]):
            continue
        h = normal_form(s_polynomial(G[i], G[j], order), G, order)
        if h.is_zero():
            continue
        if h.is_constant():
            return [Polynomial.constant(1, nvars)]
        G.append(h.monic(order))
        lms.append(G[-1].leading_monomial(order))
        k = len(G) - 1
        for i2 in range(k):
            push(i2, k)
    return reduce_basis(G, order)


def is_groebner_basis(G: Sequence[Polynomial], order: MonomialOrder | str = GREVLEX) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    order = as_order(order)
    polys = [g for g in G if not g.is_zero()]
    for j in range(len(polys)):
        for i in range(j):
            s = s_polynomial(polys[i], polys[j], order)
            if not normal_form(s, polys, order).is_zero():
                return False
    return True


def ideal_membership(
    f: Polynomial,
    F: Sequence[Polynomial],
    order: MonomialOrder | str = GREVLEX,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> bool:
    order = as_order(order)
    G = buchberger(F, order, max_pairs)
    if not G:
        return f.is_zero()
    return normal_form(f, G, order).is_zero()
