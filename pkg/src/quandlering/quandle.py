"""Finite quandles given by their operation tables.

Elements are the residues ``0 .. n-1`` and ``table[i][j]`` is ``x_i * x_j``.
The table doubles as the adjacency matrix of the quandle.
"""

from __future__ import annotations

import itertools
import json
import math
from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

ENUMERATION_LIMIT = 8


@dataclass(frozen=True)
class Quandle:
    n: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"quandle order must be positive, got {self.n}")
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        if len(table) != self.n or any(len(row) != self.n for row in table):
            raise ValueError(f"table must be {self.n}x{self.n}")
        for i, row in enumerate(table):
            for j, x in enumerate(row):
                if not 0 <= x < self.n:
                    raise ValueError(f"table[{i}][{j}] = {x} is outside 0..{self.n - 1}")
        object.__setattr__(self, "table", table)

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]]) -> Quandle:
        return cls(len(table), tuple(tuple(row) for row in table))

    def op(self, i: int, j: int) -> int:
        return self.table[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        """The right translation ``S_{x_j}: i -> i * j`` as an image tuple."""
        return tuple(row[j] for row in self.table)

    def as_array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64)


def make_dihedral(n: int) -> Quandle:
    """Dihedral quandle on Z_n with ``i * j = 2j - i mod n``."""
    if n < 1:
        raise ValueError(f"dihedral quandle needs n >= 1, got {n}")
    return Quandle(n, tuple(tuple((2 * j - i) % n for j in range(n)) for i in range(n)))


def trivial_quandle(n: int) -> Quandle:
    """``i * j = i``; a valid quandle that is not dihedral for n > 2."""
    return Quandle(n, tuple(tuple(i for _ in range(n)) for i in range(n)))


# ---------------------------------------------------------------------------
# axioms


@dataclass(frozen=True)
class Violation:
    axiom: str  # "bijectivity", "automorphism" or "idempotency"
    where: tuple[int, ...]
    detail: str

    def to_dict(self):
        return {"axiom": self.axiom, "where": list(self.where), "detail": self.detail}


def validate_axioms(q: Quandle) -> list[Violation]:
    """List every violated quandle axiom; empty means ``q`` is a quandle.

    Reports each non-idempotent element, each non-bijective column, and for
    each column the first pair ``(i, k)`` where ``S_{x_j}`` fails to preserve ``*``.
    """
    T = q.as_array()
    n = q.n
    out: list[Violation] = []
    for j in range(n):
        col = T[:, j]
        if len(np.unique(col)) != n:
            out.append(Violation("bijectivity", (j,), f"column {j} is not a permutation"))
        # S_j(i * k) == S_j(i) * S_j(k)
        lhs = T[np.ix_(col, col)]
        rhs = col[T]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            i, k = (int(x) for x in bad[0])
            out.append(
                Violation(
                    "automorphism",
                    (j, i, k),
                    f"S_{j} does not preserve {i}*{k}: {int(lhs[i, k])} != {int(rhs[i, k])}",
                )
            )
    for i in range(n):
        if T[i, i] != i:
            out.append(Violation("idempotency", (i,), f"{i}*{i} = {int(T[i, i])}"))
    out.sort(key=lambda v: (v.axiom, v.where))
    return out


def is_quandle(q: Quandle) -> bool:
    return not validate_axioms(q)


def is_connected(q: Quandle) -> bool:
    """Orbit of element 0 under all right translations is everything."""
    gens = [q.column(j) for j in range(q.n)]
    seen = {0}
    todo = deque([0])
    while todo:
        x = todo.popleft()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen) == q.n


# ---------------------------------------------------------------------------
# adjacency matrix


@dataclass(frozen=True)
class AdjacencyMatrix:
    """View of a quandle's table as ``a_ij = x_i * x_j``."""

    quandle: Quandle

    @property
    def n(self) -> int:
        return self.quandle.n

    @property
    def entries(self) -> tuple[tuple[int, ...], ...]:
        return self.quandle.table

    def first_row(self) -> tuple[int, ...]:
        return self.entries[0]

    def first_column(self) -> tuple[int, ...]:
        return self.quandle.column(0)

    def to_csv(self) -> str:
        return "".join(",".join(str(x) for x in row) + "\n" for row in self.entries)

    def to_dict(self) -> dict:
        return {"n": self.n, "entries": [list(row) for row in self.entries]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_csv(cls, text: str) -> AdjacencyMatrix:
        rows = [[int(x) for x in line.split(",")] for line in text.splitlines() if line.strip()]
        return cls(Quandle.from_table(rows))

    @classmethod
    def from_json(cls, text: str) -> AdjacencyMatrix:
        data = json.loads(text)
        q = Quandle.from_table(data["entries"])
        if q.n != data["n"]:
            raise ValueError(f"n = {data['n']} does not match a {q.n}x{q.n} matrix")
        return cls(q)


def adjacency_matrix(q: Quandle) -> AdjacencyMatrix:
    return AdjacencyMatrix(q)


@dataclass(frozen=True)
class RowColumnStructure:
    n: int
    sigma: tuple[int, ...]
    rho: tuple[int, ...] | None = None  # odd n
    rho1: tuple[int, ...] | None = None  # even n: first-row images, in order
    rho2: tuple[int, ...] | None = None

    def first_row(self) -> tuple[int, ...]:
        """First row of the adjacency matrix as predicted by the structure."""
        if self.rho is not None:
            return self.rho
        # 2j mod n runs through the evens twice for even n
        return tuple(self.rho1[j % len(self.rho1)] for j in range(self.n))

    def second_row(self) -> tuple[int, ...]:
        """Row of x_1; for even n it runs through rho2 starting one step back."""
        if self.rho is not None:
            return tuple((x - 1) % self.n for x in self.rho)
        return tuple(self.rho2[(j - 1) % len(self.rho2)] for j in range(self.n))


def row_column_structure(n: int) -> RowColumnStructure:
    """First row / first column permutations of the dihedral adjacency matrix.

    Odd n: ``rho[j] = 2j mod n``, i.e. the sequence ``0, 2, ..., n-1, 1, 3, ..., n-2``.
    Even n: ``rho1 = 0, 2, ..., n-2`` and ``rho2 = 1, 3, ..., n-1``.
    ``sigma[i] = -i mod n`` in both cases.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    sigma = tuple((-i) % n for i in range(n))
    if n % 2:
        return RowColumnStructure(n, sigma, rho=tuple((2 * j) % n for j in range(n)))
    return RowColumnStructure(n, sigma, rho1=tuple(range(0, n, 2)), rho2=tuple(range(1, n, 2)))


def verify_shift_structure(q: Quandle) -> bool:
    """Every row is the first row shifted: ``a[i][j] == a[0][j] - i mod n``."""
    n = q.n
    first = q.table[0]
    return all(q.table[i][j] == (first[j] - i) % n for i in range(n) for j in range(n))


def verify_row_column_lemma(q: Quandle) -> bool:
    """First row and column agree with :func:`row_column_structure`, rows shift."""
    s = row_column_structure(q.n)
    A = adjacency_matrix(q)
    if A.first_column() != s.sigma or A.first_row() != s.first_row():
        return False
    if q.n > 1 and A.entries[1] != s.second_row():
        return False
    return verify_shift_structure(q)


# ---------------------------------------------------------------------------
# automorphisms of the quandle itself


def is_quandle_automorphism(q: Quandle, perm: Sequence[int]) -> bool:
    t = q.table
    n = q.n
    return all(perm[t[i][j]] == t[perm[i]][perm[j]] for i in range(n) for j in range(n))


def dihedral_automorphisms(n: int) -> set[tuple[int, ...]]:
    """Affine maps ``i -> a*i + b mod n`` with ``a`` a unit mod n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return {
        tuple((a * i + b) % n for i in range(n))
        for a in range(n)
        for b in range(n)
        if math.gcd(a, n) == 1
    }


def quandle_automorphisms(q: Quandle, dihedral_fast_path: bool = False) -> set[tuple[int, ...]]:
    """All permutations ``p`` with ``p(i * j) = p(i) * p(j)``.

    Exhaustive over ``n!`` permutations, so refuses ``n > 8`` unless
    ``dihedral_fast_path`` is set and ``q`` is the dihedral quandle of its order.
    """
    if dihedral_fast_path:
        if q != make_dihedral(q.n):
            raise ValueError("dihedral fast path requested for a non-dihedral quandle")
        return dihedral_automorphisms(q.n)
    if q.n > ENUMERATION_LIMIT:
        raise ValueError(
            f"refusing to enumerate {q.n}! permutations (limit n <= {ENUMERATION_LIMIT}); "
            "use dihedral_fast_path for dihedral quandles"
        )
    return {p for p in itertools.permutations(range(q.n)) if is_quandle_automorphism(q, p)}
