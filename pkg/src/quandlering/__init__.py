"""Idempotents and automorphisms of integral rings of dihedral quandles."""

__version__ = "0.1.0"

from .quandle import Quandle, adjacency_matrix, make_dihedral, validate_axioms  # noqa: E402
from .ring import RingElement, is_idempotent, multiply  # noqa: E402
from .polynomial import MonomialOrder, Polynomial, parse_polynomial  # noqa: E402
from .groebner import buchberger, ideal_membership, normal_form  # noqa: E402
from .idempotents import brute_force_search, build_system, verify_no_length2  # noqa: E402
from .solve import solve_integer_points  # noqa: E402
from .automorphisms import enumerate_ring_automorphisms  # noqa: E402
