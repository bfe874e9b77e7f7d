"""Basis permutations vs multiplicative ones for Z[Q_n], n = 1..8."""

import math

from quandlering.automorphisms import compare_with_quandle_automorphisms
from quandlering.quandle import make_dihedral

print(f"{'n':>2} {'n!':>6} {'ring auts':>10} {'quandle auts':>13} {'n*phi(n)':>9} {'equal':>6}")
for n in range(1, 9):
    cmp = compare_with_quandle_automorphisms(make_dihedral(n))
    phi = sum(1 for a in range(n) if math.gcd(a, n) == 1)
    print(
        f"{n:>2} {cmp.all_permutations:>6} {len(cmp.ring_automorphisms):>10} "
        f"{len(cmp.quandle_automorphisms):>13} {n * phi:>9} {str(cmp.equal):>6}"
    )
