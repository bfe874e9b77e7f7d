"""Checks of the eleven-polynomial basis quoted for the Q_5 idempotent system.

The quoted list is checked three ways:

* each quoted polynomial against the rational ideal of the system,
* the list itself against Buchberger's criterion under every order,
* the system generators against the ideal spanned by the list.

Two diagnostics accompany the verdicts. One evaluates the list at the rational
solution ``(1/5, ..., 1/5)`` of the system. The other evaluates it at the unit
vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .groebner import DEFAULT_MAX_PAIRS, buchberger, is_groebner_basis, normal_form
from .idempotents import build_system, unit_vectors
from .polynomial import ORDER_KINDS, Polynomial, as_order, format_polynomial, parse_polynomial
from .quandle import make_dihedral

REFERENCE_Q5_BASIS = (
    "t4^3 - t4^2",
    "t1^2 - t1",
    "t1*t2 + 3*t4^2 - 3*t4",
    "t2^2 - 3*t4^2 - t2 + 3*t4",
    "t1*t3 - t1^2 + t1",
    "t2*t3",
    "t3^2 - 4*t2^2 - t3 + 4*t2",
    "t1*t4 + t4^2 - t4",
    "t2*t4",
    "t3*t4",
    "5*t4^2 - 5*t4",
)


def reference_basis() -> list[Polynomial]:
    return [parse_polynomial(s, nvars=5) for s in REFERENCE_Q5_BASIS]


@dataclass(frozen=True)
class BasisCheck:
    order: str
    system_basis: tuple[str, ...]
    # quoted polynomial -> lies in the ideal of the system
    membership: tuple[tuple[str, bool], ...]
    # system generator -> lies in the ideal of the quoted list
    reverse_membership: tuple[tuple[str, bool], ...]
    is_groebner_by_order: tuple[tuple[str, bool], ...]
    uniform_point_is_solution: bool
    vanishing_at_uniform_point: tuple[tuple[str, bool], ...]
    vanishing_at_unit_vectors: tuple[tuple[str, bool], ...]

    @property
    def members(self) -> int:
        return sum(ok for _, ok in self.membership)

    @property
    def all_members(self) -> bool:
        return all(ok for _, ok in self.membership)

    @property
    def generators_recovered(self) -> bool:
        return all(ok for _, ok in self.reverse_membership)

    @property
    def ideals_equal(self) -> bool:
        return self.all_members and self.generators_recovered

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "system_basis": list(self.system_basis),
            "membership": [{"polynomial": p, "in_system_ideal": ok} for p, ok in self.membership],
            "members": self.members,
            "total": len(self.membership),
            "reverse_membership": [
                {"generator": p, "in_quoted_ideal": ok} for p, ok in self.reverse_membership
            ],
            "ideals_equal": self.ideals_equal,
            "is_groebner_basis": dict(self.is_groebner_by_order),
            "uniform_point_is_solution": self.uniform_point_is_solution,
            "vanishes_at_uniform_point": dict(self.vanishing_at_uniform_point),
            "vanishes_at_unit_vectors": dict(self.vanishing_at_unit_vectors),
        }


def verify_reference_basis_q5(order="grevlex", max_pairs: int = DEFAULT_MAX_PAIRS) -> BasisCheck:
    order = as_order(order)
    system = build_system(make_dihedral(5))
    gens = list(system.equations)
    quoted = reference_basis()

    G = buchberger(gens, order, max_pairs)
    membership = tuple((format_polynomial(p), normal_form(p, G, order).is_zero()) for p in quoted)
    H = buchberger(quoted, order, max_pairs)
    reverse = tuple((format_polynomial(g), normal_form(g, H, order).is_zero()) for g in gens)
    by_order = tuple((kind, is_groebner_basis(quoted, kind)) for kind in ORDER_KINDS)

    uniform = [Fraction(1, 5)] * 5
    at_uniform = tuple((format_polynomial(p), p.evaluate(uniform) == 0) for p in quoted)
    at_units = tuple(
        (format_polynomial(p), all(p.evaluate(u) == 0 for u in unit_vectors(5))) for p in quoted
    )
    return BasisCheck(
        order=str(order),
        system_basis=tuple(format_polynomial(g, order) for g in G),
        membership=membership,
        reverse_membership=reverse,
        is_groebner_by_order=by_order,
        uniform_point_is_solution=system.is_solution(uniform),
        vanishing_at_uniform_point=at_uniform,
        vanishing_at_unit_vectors=at_units,
    )
