"""Everything computed about Z[Q_5] in one run; writes a JSON report.

    python scripts/reproduce_q5.py --out q5_report.json
"""

import argparse
import json
from pathlib import Path

from quandlering.automorphisms import compare_with_quandle_automorphisms
from quandlering.idempotents import brute_force_search, build_system, verify_no_length2
from quandlering.q5_basis import verify_reference_basis_q5
from quandlering.quandle import adjacency_matrix, make_dihedral
from quandlering.solve import solve_integer_points


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=None)
    ap.add_argument("--bound", type=int, default=3)
    args = ap.parse_args()

    q = make_dihedral(5)
    system = build_system(q)
    report = {
        "adjacency": adjacency_matrix(q).to_dict(),
        "system": system.to_text().splitlines(),
        "solver": solve_integer_points(system.equations).to_dict(),
        "brute_force": brute_force_search(system, args.bound).to_dict(),
        "no_length_two": verify_no_length2(5),
        "reference_basis": {kind: verify_reference_basis_q5(kind).to_dict() for kind in ("lex", "grlex", "grevlex")},
        "automorphisms": compare_with_quandle_automorphisms(q).to_dict(),
    }
    text = json.dumps(report, indent=2)
    if args.out:
        args.out.write_text(text + "\n")
        print(f"wrote {args.out}")
    else:
        print(text)


if __name__ == "__main__":
    main()
