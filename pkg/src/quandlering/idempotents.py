"""The polynomial system whose integer solutions are the idempotents of Z[Q].

For each element ``k`` the coefficient of ``x_k`` in ``a * a`` is
``sum_j t_{S_j^{-1}(k)} * t_j`` where ``S_j`` is right translation by ``x_j``.
Dihedral quandles are involutory, so ``S_j^{-1}(k) = k * j`` and the sum is row
``k`` of ``B T`` with ``B[k][j] = t_{k*j}``. Equation ``k`` is stored as
``t_k - (B T)_k`` and the augmentation constraint as ``t_0 + ... + t_{n-1} - 1``.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .groebner import BudgetExceeded
from .polynomial import Polynomial, format_system, integer_roots, parse_system
from .quandle import Quandle, make_dihedral
from .ring import RingElement

DEFAULT_BOUND = 3
DEFAULT_WORK_LIMIT = 50_000_000

COMPLETE = "complete"
BOUNDED_ONLY = "bounded_only"


@dataclass(frozen=True)
class IdempotentSystem:
    n: int
    equations: tuple[Polynomial, ...]
    # rows[e] is the quandle element whose coefficient equation produced
    # equations[e]; None marks the augmentation constraint
    rows: tuple[int | None, ...]
    support: frozenset[int] | None = None

    def __post_init__(self):
        if len(self.equations) != len(self.rows):
            raise ValueError("equations and rows must line up")

    @property
    def nvars(self) -> int:
        return self.n

    def variables(self) -> tuple[int, ...]:
        """Variables that can be nonzero in a solution."""
        return tuple(sorted(self.support)) if self.support is not None else tuple(range(self.n))

    def augmentation(self) -> Polynomial | None:
        for eq, row in zip(self.equations, self.rows):
            if row is None:
                return eq
        return None

    def outside_support_equations(self) -> list[tuple[int, Polynomial]]:
        """Retained equations that came from rows outside the support."""
        if self.support is None:
            return []
        return [(r, eq) for eq, r in zip(self.equations, self.rows) if r is not None and r not in self.support]

    def is_solution(self, point: Sequence[int]) -> bool:
        return all(eq.evaluate(point) == 0 for eq in self.equations)

    def to_text(self) -> str:
        return format_system(self.equations)

    @classmethod
    def from_text(cls, text: str, n: int) -> IdempotentSystem:
        """Parse a system file; the last polynomial is taken as the augmentation row."""
        eqs = tuple(parse_system(text, n))
        rows = tuple(range(len(eqs) - 1)) + (None,)
        return cls(n, eqs, rows)


def _inverse_columns(q: Quandle) -> list[list[int]]:
    inv = [[0] * q.n for _ in range(q.n)]
    for j in range(q.n):
        seen = set()
        for i in range(q.n):
            k = q.table[i][j]
            seen.add(k)
            inv[j][k] = i
        if len(seen) != q.n:
            raise ValueError(f"column {j} is not a permutation; not a quandle")
    return inv


def build_system(q: Quandle) -> IdempotentSystem:
    n = q.n
    inv = _inverse_columns(q)
    t = [Polynomial.variable(i, n) for i in range(n)]
    equations = []
    for k in range(n):
        # collect t_a*t_b and t_b*t_a into one monomial
        quad = Polynomial.zero(n)
        for j in range(n):
            quad = quad + t[inv[j][k]] * t[j]
        equations.append(t[k] - quad)
    aug = Polynomial.zero(n)
    for v in t:
        aug = aug + v
    equations.append(aug - 1)
    return IdempotentSystem(n, tuple(equations), tuple(range(n)) + (None,))


def system_matrix(q: Quandle) -> list[list[Polynomial]]:
    """The matrix ``B`` with ``B[i][j] = t_{a_ij}``."""
    t = [Polynomial.variable(i, q.n) for i in range(q.n)]
    return [[t[q.table[i][j]] for j in range(q.n)] for i in range(q.n)]


# ---------------------------------------------------------------------------
# solution reports


@dataclass(frozen=True)
class SolutionReport:
    solutions: tuple[tuple[int, ...], ...]
    completeness: str
    bound: int | None = None
    method: str = ""
    budget_exhausted: bool = False
    notes: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.completeness not in (COMPLETE, BOUNDED_ONLY):
            raise ValueError(f"bad completeness flag {self.completeness!r}")
        object.__setattr__(self, "solutions", tuple(sorted(tuple(int(x) for x in s) for s in self.solutions)))

    @property
    def is_complete(self) -> bool:
        return self.completeness == COMPLETE

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "completeness": self.completeness,
            "bound": self.bound,
            "budget_exhausted": self.budget_exhausted,
            "count": len(self.solutions),
            "solutions": [RingElement.of(s).to_dict() for s in self.solutions],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def unit_vectors(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


# ---------------------------------------------------------------------------
# brute force


def _compile(equations: Iterable[Polynomial]) -> list[list[tuple[int, tuple[int, ...]]]]:
    """Polynomials as lists of (integer coefficient, variables with multiplicity)."""
    out = []
    for eq in equations:
        terms = []
        for m, c in eq.items():
            if c.denominator != 1:
                raise ValueError("brute force expects integer coefficients")
            vs = tuple(i for i, e in enumerate(m) for _ in range(e))
            terms.append((int(c), vs))
        out.append(terms)
    return out


def _satisfies(compiled, point) -> bool:
    for terms in compiled:
        total = 0
        for c, vs in terms:
            for v in vs:
                c *= point[v]
                if not c:
                    break
            total += c
        if total:
            return False
    return True


def _search_chunk(args):
    compiled, n, free, forced, bound, first_values = args
    found = []
    point = [0] * n
    inner = free[1:]
    for first in first_values:
        point[free[0]] = first
        for rest in itertools.product(range(-bound, bound + 1), repeat=len(inner)):
            for v, x in zip(inner, rest):
                point[v] = x
            last = 1 - first - sum(rest)
            if -bound <= last <= bound:
                point[forced] = last
                if _satisfies(compiled, point):
                    found.append(tuple(point))
    return found


def brute_force_search(
    system: IdempotentSystem,
    bound: int = DEFAULT_BOUND,
    work_limit: int = DEFAULT_WORK_LIMIT,
    jobs: int = 1,
) -> SolutionReport:
    """All integer solutions with every ``|t_i| <= bound``.

    Enumerates all but one of the live variables and fixes the last one from the
    augmentation constraint. Raises :class:`BudgetExceeded` when
    ``n * (2*bound + 1)**n`` exceeds ``work_limit``.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    variables = system.variables()
    work = len(variables) * (2 * bound + 1) ** len(variables)
    if work > work_limit:
        raise BudgetExceeded("work", work_limit)
    aug = system.augmentation()
    if aug is None:
        raise ValueError("system has no augmentation constraint to prune with")
    # the pruning below relies on the constraint being exactly sum(live t_i) - 1
    expected = {tuple(int(i == v) for i in range(system.n)): Fraction(1) for v in variables}
    expected[(0,) * system.n] = Fraction(-1)
    if aug.terms != expected:
        raise ValueError(f"augmentation constraint {aug} is not the sum of the live variables minus 1")

    compiled = _compile(system.equations)
    forced = variables[-1]
    free = list(variables[:-1])
    if not free:
        point = [0] * system.n
        point[forced] = 1
        sols = [tuple(point)] if _satisfies(compiled, point) else []
    else:
        values = list(range(-bound, bound + 1))
        chunks = [values[i::jobs] for i in range(jobs)] if jobs > 1 else [values]
        tasks = [(compiled, system.n, free, forced, bound, c) for c in chunks if c]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = list(pool.map(_search_chunk, tasks))
        else:
            parts = [_search_chunk(task) for task in tasks]
        sols = [s for part in parts for s in part]
    return SolutionReport(tuple(sols), BOUNDED_ONLY, bound=bound, method="brute_force")


# ---------------------------------------------------------------------------
# support restriction and the length-2 check


def restrict_to_support(system: IdempotentSystem, support: Iterable[int]) -> IdempotentSystem:
    """Set ``t_m = 0`` for every ``m`` outside ``support`` and drop equations that vanish."""
    support = frozenset(support)
    if not support:
        raise ValueError("support must be nonempty")
    if not support <= set(range(system.n)):
        raise ValueError(f"support {sorted(support)} is outside 0..{system.n - 1}")
    current = system.support if system.support is not None else frozenset(range(system.n))
    if support >= current:
        return system
    zeros = {m: 0 for m in range(system.n) if m not in support}
    eqs, rows = [], []
    for eq, row in zip(system.equations, system.rows):
        r = eq.substitute(zeros)
        if not r.is_zero():
            eqs.append(r)
            rows.append(row)
    return IdempotentSystem(system.n, tuple(eqs), tuple(rows), support & current)


def solve_two_variable(system: IdempotentSystem, i: int, j: int) -> set[tuple[int, int]] | None:
    """Every integer solution ``(t_i, t_j)`` of a system living on ``{i, j}``.

    Uses ``t_j = 1 - t_i`` from the augmentation constraint, which turns each
    remaining equation into a univariate polynomial in ``t_i``. Returns ``None``
    when every equation collapses to zero (infinitely many solutions).
    """
    n = system.n
    ti = Polynomial.variable(i, n)
    reduced = [eq.substitute({j: 1 - ti}) for eq in system.equations]
    nonzero = [r for r in reduced if not r.is_zero()]
    if not nonzero:
        return None
    if any(r.is_constant() for r in nonzero):
        return set()
    candidates = integer_roots(nonzero[0])
    out = set()
    for r in candidates:
        point = [0] * n
        point[i], point[j] = r, 1 - r
        if system.is_solution(point):
            out.add((r, 1 - r))
    return out


def verify_no_length2(n: int, q: Quandle | None = None) -> bool:
    """True if no integer idempotent of Z[Q_n] has exactly two nonzero coefficients.

    Every support pair is solved completely, so this is a proof by cases rather
    than a bounded search. Meant for odd n; even n runs but is exploratory.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    q = q if q is not None else make_dihedral(n)
    system = build_system(q)
    for i, j in itertools.combinations(range(n), 2):
        sols = solve_two_variable(restrict_to_support(system, {i, j}), i, j)
        if sols is None or any(a != 0 and b != 0 for a, b in sols):
            return False
    return True
