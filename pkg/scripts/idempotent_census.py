"""Integer idempotents of Z[Q_n] for a range of n, by both engines.

    python scripts/idempotent_census.py --max-n 7 --bound 2
"""

import argparse
import time

from quandlering.groebner import BudgetExceeded
from quandlering.idempotents import brute_force_search, build_system, unit_vectors
from quandlering.quandle import is_connected, make_dihedral
from quandlering.solve import solve_integer_points


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--min-n", type=int, default=1)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--bound", type=int, default=2)
    args = ap.parse_args()

    print(f"{'n':>3} {'conn':>5} {'solver':>8} {'complete':>9} {'brute':>6} {'nontrivial':>11} {'budget':>7} {'secs':>7}")
    for n in range(args.min_n, args.max_n + 1):
        q = make_dihedral(n)
        system = build_system(q)
        start = time.perf_counter()
        solved = solve_integer_points(system.equations, fallback_bound=args.bound)
        try:
            brute = len(brute_force_search(system, args.bound).solutions)
        except BudgetExceeded:
            brute = "-"
        nontrivial = sum(1 for s in solved.solutions if s not in set(unit_vectors(n)))
        print(
            f"{n:>3} {str(is_connected(q)):>5} {len(solved.solutions):>8} {str(solved.is_complete):>9} "
            f"{brute:>6} {nontrivial:>11} {'out' if solved.budget_exhausted else 'ok':>7} {time.perf_counter() - start:>7.2f}"
        )


if __name__ == "__main__":
    main()
