"""Complete integer solving of zero-dimensional systems by case splitting.

Each branch computes a Groebner basis of the current system, picks a univariate
element, enumerates its integer roots, and recurses with that variable fixed.
A branch that runs out of univariate consequences (free variables left over)
falls back to a boxed search and the report is downgraded to ``bounded_only``.
"""

from __future__ import annotations

import itertools
import logging
from typing import Sequence

from .groebner import DEFAULT_MAX_PAIRS, BudgetExceeded, buchberger
from .idempotents import BOUNDED_ONLY, COMPLETE, DEFAULT_BOUND, SolutionReport
from .polynomial import GREVLEX, LEX, MonomialOrder, Polynomial, as_order, integer_roots

log = logging.getLogger(__name__)

DEFAULT_MAX_BRANCHES = 10_000


class _Search:
    def __init__(self, nvars, order, max_pairs, max_branches, fallback_bound):
        self.nvars = nvars
        self.order = order
        self.max_pairs = max_pairs
        self.max_branches = max_branches
        self.fallback_bound = fallback_bound
        self.branches = 0
        self.solutions: set[tuple[int, ...]] = set()
        self.complete = True
        self.notes: list[str] = []

    def tick(self):
        self.branches += 1
        if self.branches > self.max_branches:
            raise BudgetExceeded("branches", self.max_branches)

    def univariate(self, G: Sequence[Polynomial]) -> Polynomial | None:
        best = None
        for g in G:
            if g.univariate_variable() is not None:
                if best is None or g.total_degree() < best.total_degree():
                    best = g
        return best

    def run(self, polys: list[Polynomial], assignment: dict[int, int]):
        self.tick()
        polys = [p.substitute(assignment) for p in polys]
        polys = [p for p in polys if not p.is_zero()]
        if any(p.is_constant() for p in polys):
            return
        free = [v for v in range(self.nvars) if v not in assignment]
        if not polys:
            if free:
                self.boxed(polys, assignment, free)
            else:
                self.solutions.add(tuple(assignment[v] for v in range(self.nvars)))
            return
        G = buchberger(polys, self.order, self.max_pairs)
        if len(G) == 1 and G[0].is_constant():
            return
        uni = self.univariate(G)
        if uni is None and self.order != LEX:
            # a zero-dimensional ideal always has one in its lex basis
            G = buchberger(G, LEX, self.max_pairs)
            uni = self.univariate(G)
        if uni is None:
            self.boxed(G, assignment, free)
            return
        var = uni.univariate_variable()
        for root in integer_roots(uni):
            self.run(G, {**assignment, var: root})

    def boxed(self, polys, assignment, free):
        self.complete = False
        self.notes.append(
            f"free variables {['t%d' % v for v in free]} searched in box |t| <= {self.fallback_bound}"
        )
        rng = range(-self.fallback_bound, self.fallback_bound + 1)
        for values in itertools.product(rng, repeat=len(free)):
            self.tick()
            point = dict(assignment)
            point.update(zip(free, values))
            vec = [point[v] for v in range(self.nvars)]
            if all(p.evaluate(vec) == 0 for p in polys):
                self.solutions.add(tuple(vec))


def solve_integer_points(
    F: Sequence[Polynomial],
    max_branches: int = DEFAULT_MAX_BRANCHES,
    order: MonomialOrder | str = GREVLEX,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    fallback_bound: int = DEFAULT_BOUND,
) -> SolutionReport:
    """Every integer common zero of ``F``.

    ``completeness`` is ``complete`` only when every branch closed through a
    univariate consequence. Running out of either budget keeps the solutions
    found so far (all verified) and reports ``bounded_only``.
    """
    F = [f for f in F]
    if not F:
        raise ValueError("need at least one polynomial")
    nvars = F[0].nvars
    search = _Search(nvars, as_order(order), max_pairs, max_branches, fallback_bound)
    exhausted = False
    try:
        search.run(F, {})
    except BudgetExceeded as exc:
        log.warning("integer solve stopped early: %s", exc)
        search.complete = False
        search.notes.append(str(exc))
        exhausted = True
    # never report a point that does not satisfy the input
    sols = [s for s in search.solutions if all(f.evaluate(s) == 0 for f in F)]
    return SolutionReport(
        tuple(sols),
        COMPLETE if search.complete else BOUNDED_ONLY,
        bound=None if search.complete else fallback_bound,
        method="groebner",
        budget_exhausted=exhausted,
        notes=tuple(search.notes),
    )
