import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quandlering.groebner import BudgetExceeded
from quandlering.idempotents import (
    BOUNDED_ONLY,
    IdempotentSystem,
    brute_force_search,
    build_system,
    restrict_to_support,
    solve_two_variable,
    system_matrix,
    unit_vectors,
    verify_no_length2,
)
from quandlering.polynomial import Polynomial, parse_polynomial
from quandlering.quandle import Quandle, make_dihedral, trivial_quandle, validate_axioms
from quandlering.ring import RingElement, is_idempotent


def P(text, n):
    return parse_polynomial(text, nvars=n)


def alexander_table(p, t):
    """i * j = t*i + (1 - t)*j mod p; not involutory unless t = -1."""
    return [[(t * i + (1 - t) * j) % p for j in range(p)] for i in range(p)]


def ring_oracle(q, bound):
    """Idempotents with augmentation 1 in the box, straight from ring multiplication."""
    return {
        v
        for v in itertools.product(range(-bound, bound + 1), repeat=q.n)
        if sum(v) == 1 and is_idempotent(q, RingElement.of(v))
    }


def test_build_system_examples(q5):
    s5 = build_system(q5)
    assert len(s5.equations) == 6
    assert s5.equations[0] == P("t0 - t0*t0 - t2*t1 - t4*t2 - t1*t3 - t3*t4", 5)
    s1 = build_system(make_dihedral(1))
    assert set(s1.equations) == {P("t0 - t0^2", 1), P("t0 - 1", 1)}
    s3 = build_system(make_dihedral(3))
    assert s3.equations[0] == P("t0 - t0^2 - 2*t2*t1", 3)
    assert s3.equations[-1] == P("t0 + t1 + t2 - 1", 3)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 6, 7])
def test_matrix_form_reproduces_system(n):
    q = make_dihedral(n)
    B = system_matrix(q)
    t = [Polynomial.variable(i, n) for i in range(n)]
    sys_ = build_system(q)
    for k in range(n):
        bt = Polynomial.zero(n)
        for j in range(n):
            bt = bt + B[k][j] * t[j]
        assert bt - t[k] == -sys_.equations[k]
    assert len(sys_.equations) == n + 1


def test_system_text_roundtrip(q5):
    s = build_system(q5)
    again = IdempotentSystem.from_text(s.to_text(), 5)
    assert again.equations == s.equations
    assert s.to_text().splitlines()[-1] == "t0 + t1 + t2 + t3 + t4 - 1"


@pytest.mark.parametrize("n, bound", [(1, 1), (3, 2), (5, 3)])
def test_brute_force_matches_ring_oracle(n, bound):
    q = make_dihedral(n)
    report = brute_force_search(build_system(q), bound)
    assert report.completeness == BOUNDED_ONLY
    assert report.bound == bound
    assert set(report.solutions) == ring_oracle(q, bound) == set(unit_vectors(n))


def test_brute_force_is_partition_independent(q5):
    s = build_system(make_dihedral(4))
    serial = brute_force_search(s, 2)
    parallel = brute_force_search(s, 2, jobs=3)
    assert serial == parallel
    assert list(serial.solutions) == sorted(serial.solutions)


def test_brute_force_work_limit():
    s = build_system(make_dihedral(7))
    with pytest.raises(BudgetExceeded):
        brute_force_search(s, 3, work_limit=1000)


def test_brute_force_on_trivial_quandle_finds_everything_with_sum_one():
    q = trivial_quandle(3)
    report = brute_force_search(build_system(q), 1)
    expected = {v for v in itertools.product((-1, 0, 1), repeat=3) if sum(v) == 1}
    assert set(report.solutions) == expected == ring_oracle(q, 1)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_system_membership_matches_ring(n):
    q = make_dihedral(n)
    s = build_system(q)
    rng = random.Random(n)
    for _ in range(300):
        v = [rng.randint(-3, 3) for _ in range(n)]
        assert s.is_solution(v) == (is_idempotent(q, RingElement.of(v)) and sum(v) == 1)


def test_non_involutory_quandle_uses_inverse_translations():
    q = Quandle.from_table(alexander_table(5, 2))
    assert validate_axioms(q) == []
    assert q.table[q.table[1][0]][0] != 1  # S_0 is not an involution
    s = build_system(q)
    oracle = ring_oracle(q, 1)
    assert set(brute_force_search(s, 1).solutions) == oracle
    rng = random.Random(0)
    for _ in range(300):
        v = [rng.randint(-2, 2) for _ in range(5)]
        assert s.is_solution(v) == (is_idempotent(q, RingElement.of(v)) and sum(v) == 1)


@pytest.mark.parametrize(
    "q",
    [make_dihedral(4), make_dihedral(9), trivial_quandle(4), Quandle.from_table(alexander_table(7, 3)),
     Quandle.from_table([[0, 0, 0], [2, 1, 1], [1, 2, 2]])],
)
def test_unit_vectors_solve_every_quandle_system(q):
    assert validate_axioms(q) == []
    s = build_system(q)
    assert all(s.is_solution(u) for u in unit_vectors(q.n))


def test_restrict_examples(q5):
    s = build_system(q5)
    assert restrict_to_support(s, range(5)) is s
    r = restrict_to_support(s, {2})
    assert set(r.equations) == {P("t2 - t2^2", 5), P("t2 - 1", 5)}
    pair = restrict_to_support(s, {0, 1})
    outside = pair.outside_support_equations()
    assert outside
    assert all(k not in (0, 1) for k, _ in outside)
    assert any(eq in (P("-t0*t1", 5), P("-2*t0*t1", 5)) for _, eq in outside)


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_pair_supports_contain_vanishing_product(n):
    s = build_system(make_dihedral(n))
    for i, j in itertools.combinations(range(n), 2):
        r = restrict_to_support(s, {i, j})
        products = {-P(f"t{i}*t{j}", n), -P(f"2*t{i}*t{j}", n)}
        assert any(eq in products for _, eq in r.outside_support_equations())


@given(st.sets(st.integers(0, 4), min_size=1, max_size=3))
def test_restricted_solutions_lift(support):
    s = build_system(make_dihedral(5))
    r = restrict_to_support(s, support)
    for sol in brute_force_search(r, 2).solutions:
        assert all(sol[m] == 0 for m in range(5) if m not in support)
        assert s.is_solution(sol)


def test_two_variable_solver_examples(q5):
    s = build_system(q5)
    assert solve_two_variable(restrict_to_support(s, {0, 3}), 0, 3) == {(0, 1), (1, 0)}
    # the trivial quandle imposes nothing beyond the augmentation
    t = build_system(trivial_quandle(3))
    assert solve_two_variable(restrict_to_support(t, {0, 1}), 0, 1) is None


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 13, 15])
def test_no_length_two(n):
    assert verify_no_length2(n)


@pytest.mark.parametrize("n", [4, 6])
def test_length_two_even_is_exploratory(n):
    assert isinstance(verify_no_length2(n), bool)


def test_no_length_two_oracle_q5(q5):
    # independent: boxed enumeration over every pair support
    for i, j in itertools.combinations(range(5), 2):
        for a, b in itertools.product(range(-6, 7), repeat=2):
            if a and b:
                v = [0] * 5
                v[i], v[j] = a, b
                assert not is_idempotent(q5, RingElement.of(v))


def test_solution_report_rejects_bad_flag():
    from quandlering.idempotents import SolutionReport

    with pytest.raises(ValueError):
        SolutionReport((), "maybe")
