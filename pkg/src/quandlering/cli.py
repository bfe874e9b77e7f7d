"""Command line entry point.

Exit codes: 0 everything requested passed, 1 a verification failed,
2 a work budget ran out, 3 invalid input.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import random
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .automorphisms import compare_with_quandle_automorphisms
from .groebner import DEFAULT_MAX_PAIRS, BudgetExceeded, buchberger
from .idempotents import (
    DEFAULT_BOUND,
    DEFAULT_WORK_LIMIT,
    brute_force_search,
    build_system,
    unit_vectors,
    verify_no_length2,
)
from .polynomial import ORDER_KINDS, PolynomialParseError, as_order, format_polynomial, parse_system
from .q5_basis import verify_reference_basis_q5
from .quandle import (
    ENUMERATION_LIMIT,
    adjacency_matrix,
    make_dihedral,
    validate_axioms,
    verify_row_column_lemma,
    verify_shift_structure,
)
from .ring import RingElement, is_idempotent
from .solve import DEFAULT_MAX_BRANCHES, solve_integer_points

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BUDGET = 2
EXIT_INVALID = 3


@dataclass
class RunConfig:
    n: int = 5
    bound: int = DEFAULT_BOUND
    order: str = "grevlex"
    method: str = "groebner"
    format: str = "text"
    jobs: int = 1
    budget_pairs: int = DEFAULT_MAX_PAIRS
    budget_branches: int = DEFAULT_MAX_BRANCHES
    work_limit: int = DEFAULT_WORK_LIMIT
    seed: int = 0
    verify: bool = False
    timing: bool = False


class InvalidInput(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # defaults are None so a config file can fill the gaps
    common.add_argument("--n", type=int, help="quandle order")
    common.add_argument("--bound", type=int, help="brute-force box radius (default 3)")
    common.add_argument("--order", choices=ORDER_KINDS, help="monomial order (default grevlex)")
    common.add_argument("--method", choices=("brute", "groebner", "both"))
    common.add_argument("--format", choices=("text", "json", "csv"))
    common.add_argument("--jobs", type=int, help="worker processes for brute force")
    common.add_argument("--budget-pairs", type=int, help="Buchberger pair budget")
    common.add_argument("--budget-branches", type=int, help="case-split branch budget")
    common.add_argument("--work-limit", type=int, help="brute-force work limit")
    common.add_argument("--seed", type=int, help="seed for randomized sampling")
    common.add_argument("--verify", action="store_true", default=None)
    common.add_argument("--timing", action="store_true", default=None, help="record wall-clock duration")
    common.add_argument("--config", type=Path, help="JSON file with default values for any flag")

    parser = _Parser(prog="quandlering", description="Idempotents and automorphisms of dihedral quandle rings.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("adjacency", parents=[common], help="print the adjacency matrix of Q_n")
    sub.add_parser("idempotents", parents=[common], help="integer idempotents of Z[Q_n]")
    sub.add_parser("verify-q5", parents=[common], help="consolidated checks for Z[Q_5]")
    sub.add_parser("automorphisms", parents=[common], help="basis-permutation automorphisms of Z[Q_n]")
    g = sub.add_parser("groebner", parents=[common], help="reduced Groebner basis of a polynomial file")
    g.add_argument("input", help="polynomial file, one per line ('-' for stdin)")
    return parser


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    values = {}
    if args.config is not None:
        try:
            data = json.loads(args.config.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidInput(f"cannot read config {args.config}: {exc}") from exc
        known = {f.name for f in dataclasses.fields(RunConfig)}
        unknown = set(data) - known
        if unknown:
            raise InvalidInput(f"unknown config keys: {sorted(unknown)}")
        values.update(data)
    for f in dataclasses.fields(RunConfig):
        v = getattr(args, f.name, None)
        if v is not None:
            values[f.name] = v
    cfg = RunConfig(**values)
    if cfg.n < 1:
        raise InvalidInput(f"--n must be at least 1, got {cfg.n}")
    if cfg.bound < 1:
        raise InvalidInput(f"--bound must be at least 1, got {cfg.bound}")
    if cfg.jobs < 1:
        raise InvalidInput(f"--jobs must be at least 1, got {cfg.jobs}")
    if cfg.order not in ORDER_KINDS:
        raise InvalidInput(f"unknown order {cfg.order!r}")
    if cfg.method not in ("brute", "groebner", "both"):
        raise InvalidInput(f"unknown method {cfg.method!r}")
    if cfg.format not in ("text", "json", "csv"):
        raise InvalidInput(f"unknown format {cfg.format!r}")
    return cfg


def _vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


# ---------------------------------------------------------------------------
# commands; each returns (exit code, result dict, text lines)


def cmd_adjacency(cfg: RunConfig):
    q = make_dihedral(cfg.n)
    A = adjacency_matrix(q)
    result = A.to_dict()
    lines = [" ".join(str(x) for x in row) for row in A.entries]
    code = EXIT_OK
    if cfg.verify:
        checks = {
            "axioms": not validate_axioms(q),
            "shift_structure": verify_shift_structure(q),
            "row_column_lemma": verify_row_column_lemma(q),
        }
        result["verification"] = checks
        lines += [f"{name}: {'pass' if ok else 'FAIL'}" for name, ok in checks.items()]
        if not all(checks.values()):
            code = EXIT_FAILED
    return code, result, lines


def _nontrivial(solutions, n):
    units = set(unit_vectors(n))
    return [s for s in solutions if s not in units and any(s)]


def cmd_idempotents(cfg: RunConfig):
    system = build_system(make_dihedral(cfg.n))
    result: dict = {"n": cfg.n, "method": cfg.method}
    lines = [f"Z[Q_{cfg.n}] idempotent system: {len(system.equations)} polynomials"]
    reports = {}
    if cfg.method in ("groebner", "both"):
        reports["groebner"] = solve_integer_points(
            system.equations, cfg.budget_branches, cfg.order, cfg.budget_pairs, cfg.bound
        )
    if cfg.method in ("brute", "both"):
        reports["brute"] = brute_force_search(system, cfg.bound, cfg.work_limit, cfg.jobs)
    code = EXIT_OK
    for name, rep in reports.items():
        result[name] = rep.to_dict()
        result[name]["nontrivial"] = [RingElement.of(s).to_dict() for s in _nontrivial(rep.solutions, cfg.n)]
        scope = f"bound {rep.bound}" if rep.bound is not None else "all integers"
        lines.append(f"{name}: {len(rep.solutions)} solutions, {rep.completeness} ({scope})")
        lines += [f"  {_vec(s)}" for s in rep.solutions]
        lines += [f"  note: {note}" for note in rep.notes]
        if rep.budget_exhausted:
            code = EXIT_BUDGET
    if len(reports) == 2:
        b = cfg.bound
        inside = {s for s in reports["groebner"].solutions if all(abs(x) <= b for x in s)}
        agree = inside == set(reports["brute"].solutions)
        result["agreement"] = agree
        lines.append(f"agreement inside |t| <= {b}: {'pass' if agree else 'FAIL'}")
        if not agree and code == EXIT_OK:
            code = EXIT_FAILED
    return code, result, lines


def _characterization_sample(n: int, count: int, seed: int, radius: int = 3) -> dict:
    """Random vectors: system solution iff idempotent with augmentation 1."""
    q = make_dihedral(n)
    system = build_system(q)
    rng = random.Random(seed)
    mismatches = 0
    hits = 0
    for _ in range(count):
        v = tuple(rng.randint(-radius, radius) for _ in range(n))
        in_system = system.is_solution(v)
        hits += in_system
        if in_system != (is_idempotent(q, RingElement.of(v)) and sum(v) == 1):
            mismatches += 1
    return {"n": n, "samples": count, "seed": seed, "solutions_hit": hits, "mismatches": mismatches}


def cmd_verify_q5(cfg: RunConfig):
    basis = verify_reference_basis_q5(cfg.order, cfg.budget_pairs)
    system = build_system(make_dihedral(5))
    solved = solve_integer_points(system.equations, cfg.budget_branches, cfg.order, cfg.budget_pairs, cfg.bound)
    no_len2 = verify_no_length2(5)
    autos = compare_with_quandle_automorphisms(make_dihedral(5))
    sample = _characterization_sample(5, 1000, cfg.seed)

    checks = {
        "reference_basis_membership": basis.all_members,
        "integer_solutions_are_unit_vectors": set(solved.solutions) == set(unit_vectors(5)) and solved.is_complete,
        "no_length_two_idempotents": no_len2,
        "characterization_sample": sample["mismatches"] == 0,
    }
    result = {
        "checks": checks,
        "reference_basis": basis.to_dict(),
        "integer_solutions": solved.to_dict(),
        "length_two": {"n": 5, "none_exist": no_len2},
        "automorphisms": autos.to_dict(),
        "characterization_sample": sample,
    }
    lines = [
        f"reference basis in system ideal ({basis.order}): {basis.members}/{len(basis.membership)}",
        *[f"  {'ok ' if ok else 'NO '} {p}" for p, ok in basis.membership],
        f"system generators in ideal of reference list: "
        f"{sum(ok for _, ok in basis.reverse_membership)}/{len(basis.reverse_membership)}",
        "reference list is a Groebner basis: "
        + ", ".join(f"{k}={'yes' if v else 'no'}" for k, v in basis.is_groebner_by_order),
        f"(1/5,...,1/5) solves the system: {'yes' if basis.uniform_point_is_solution else 'no'}",
        f"integer solutions ({solved.completeness}): " + " ".join(_vec(s) for s in solved.solutions),
        f"length-2 idempotents: {'none' if no_len2 else 'FOUND'}",
        f"permutations of the basis: {autos.all_permutations}; "
        f"multiplicative ones: {len(autos.ring_automorphisms)}; "
        f"quandle automorphisms: {len(autos.quandle_automorphisms)}; equal: {autos.equal}",
        f"characterization sample (seed {cfg.seed}): {sample['mismatches']} mismatches in {sample['samples']}",
    ]
    failed = [name for name, ok in checks.items() if not ok]
    lines += [f"FAILED: {name}" for name in failed] or ["all checks passed"]
    code = EXIT_FAILED if failed else EXIT_OK
    if solved.budget_exhausted:
        code = EXIT_BUDGET
    return code, result, lines


def cmd_automorphisms(cfg: RunConfig):
    if cfg.n > ENUMERATION_LIMIT:
        raise InvalidInput(f"automorphism enumeration is limited to n <= {ENUMERATION_LIMIT}, got {cfg.n}")
    cmp = compare_with_quandle_automorphisms(make_dihedral(cfg.n))
    result = cmp.to_dict()
    lines = [
        f"Q_{cfg.n}: {cmp.all_permutations} basis permutations",
        f"basis-permutation ring automorphisms: {len(cmp.ring_automorphisms)} "
        f"(group: {'yes' if cmp.closed_under_composition else 'no'})",
        *[f"  {_vec(p)}" for p in cmp.ring_automorphisms],
        f"quandle automorphisms: {len(cmp.quandle_automorphisms)}",
        f"sets equal: {'yes' if cmp.equal else 'no'}",
    ]
    return (EXIT_OK if cmp.equal else EXIT_FAILED), result, lines


def cmd_groebner(cfg: RunConfig, source: str):
    try:
        text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInput(f"cannot read {source}: {exc}") from exc
    polys = parse_system(text)
    if not polys:
        raise InvalidInput("input contains no polynomials")
    G = buchberger(polys, cfg.order, cfg.budget_pairs)
    out = [format_polynomial(g, as_order(cfg.order)) for g in G]
    return EXIT_OK, {"order": cfg.order, "nvars": polys[0].nvars, "basis": out}, out


# ---------------------------------------------------------------------------


def _emit(cfg: RunConfig, command: str, code: int, result: dict, lines: list[str], duration):
    if cfg.format == "json":
        envelope = {
            "tool": "quandlering",
            "version": __version__,
            "command": command,
            "config": dataclasses.asdict(cfg),
            "exit_code": code,
            "duration_seconds": duration,
            "result": result,
        }
        sys.stdout.write(json.dumps(envelope, indent=2) + "\n")
    elif cfg.format == "csv":
        if command != "adjacency":
            raise InvalidInput("csv output is only available for adjacency matrices")
        sys.stdout.write(adjacency_matrix(make_dihedral(cfg.n)).to_csv())
        for line in lines[cfg.n :]:
            sys.stderr.write(line + "\n")
    else:
        sys.stdout.write("".join(line + "\n" for line in lines))


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _resolve_config(args)
        start = time.perf_counter()
        if args.command == "adjacency":
            code, result, lines = cmd_adjacency(cfg)
        elif args.command == "idempotents":
            code, result, lines = cmd_idempotents(cfg)
        elif args.command == "verify-q5":
            code, result, lines = cmd_verify_q5(cfg)
        elif args.command == "automorphisms":
            code, result, lines = cmd_automorphisms(cfg)
        else:
            code, result, lines = cmd_groebner(cfg, args.input)
        duration = round(time.perf_counter() - start, 6) if cfg.timing else None
        _emit(cfg, args.command, code, result, lines, duration)
        return code
    except BudgetExceeded as exc:
        sys.stderr.write(f"budget exhausted: {exc}\n")
        return EXIT_BUDGET
    except PolynomialParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_INVALID
    except (InvalidInput, ValueError) as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
