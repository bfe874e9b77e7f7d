from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quandlering.polynomial import (
    GREVLEX,
    GRLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    PolynomialParseError,
    format_polynomial,
    integer_roots,
    parse_polynomial,
    parse_system,
)

P = parse_polynomial


def polys(nvars=3, max_terms=4, max_deg=3):
    mono = st.tuples(*[st.integers(0, max_deg)] * nvars)
    return st.dictionaries(mono, st.integers(-5, 5), max_size=max_terms).map(lambda d: Polynomial(d, nvars))


def test_parse_and_format_examples():
    assert str(P("t0^2 - t0")) == "t0^2 - t0"
    assert str(P("5*t4^2 - 5*t4")) == "5*t4^2 - 5*t4"
    assert str(P("2*t1*t2 - t0 + 1")) == "2*t1*t2 - t0 + 1"
    assert str(P("3/2*t0")) == "3/2*t0"
    assert P("2 t1 t2") == P("2*t1*t2") == P("t1*2*t2")
    assert P("t0**3", nvars=2) == P("t0^3", nvars=2)
    assert P("-t0 + t0") .is_zero()
    assert str(P("0")) == "0"
    assert P("t4^3 - t4^2").nvars == 5


@pytest.mark.parametrize(
    "text, col",
    [("t0 + + 2", 6), ("t0 ^ 2 ^", 8), ("t0 $ 1", 4), ("2/0*t0", 1), ("t0 t1 -", 8), ("", 1)],
)
def test_parse_errors_carry_position(text, col):
    with pytest.raises(PolynomialParseError) as exc:
        P(text)
    assert exc.value.line == 1
    assert exc.value.column == col


def test_parse_system_lines_and_comments():
    polys_ = parse_system("t0 - 1\n\n# comment\nt2^2 - t0  # trailing\n")
    assert [str(p) for p in polys_] == ["t0 - 1", "t2^2 - t0"]
    assert all(p.nvars == 3 for p in polys_)
    with pytest.raises(PolynomialParseError) as exc:
        parse_system("t0\nt1 +* 3\n")
    assert exc.value.line == 2


def test_orders_on_known_pairs():
    a, b = (2, 0, 1), (1, 2, 0)  # t0^2 t2 vs t0 t1^2, same degree
    assert LEX.key(a) > LEX.key(b)
    assert GRLEX.key(a) > GRLEX.key(b)
    # grevlex: smaller exponent in the last variable wins
    assert GREVLEX.key(a) < GREVLEX.key(b)
    assert LEX.key((1, 0, 0)) > LEX.key((0, 5, 5))
    assert GRLEX.key((1, 0, 0)) < GRLEX.key((0, 0, 2))


def test_variable_precedence():
    order = MonomialOrder("lex", (2, 1, 0))
    assert order.key((0, 0, 1)) > order.key((5, 0, 0))
    with pytest.raises(ValueError):
        MonomialOrder("lex", (0, 0, 1))
    with pytest.raises(ValueError):
        MonomialOrder("revlex")


@given(st.sampled_from(["lex", "grlex", "grevlex"]),
       st.tuples(*[st.integers(0, 4)] * 3), st.tuples(*[st.integers(0, 4)] * 3), st.tuples(*[st.integers(0, 4)] * 3))
def test_orders_are_multiplicative_and_total(kind, u, v, w):
    order = MonomialOrder(kind)
    uw = tuple(a + b for a, b in zip(u, w))
    vw = tuple(a + b for a, b in zip(v, w))
    if order.key(u) < order.key(v):
        assert order.key(uw) < order.key(vw)
    assert (order.key(u) == order.key(v)) == (u == v)
    assert order.key((0, 0, 0)) <= order.key(u)


@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f - f).is_zero()


@given(polys(), polys(), st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=3, max_size=3))
def test_evaluation_is_a_ring_map(f, g, pt):
    assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)
    assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)


@given(polys(), st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_substitute_matches_evaluation(f, a, b, c):
    partial = f.substitute({0: a, 2: c})
    assert partial.variables() <= {1}
    assert partial.evaluate([0, b, 0]) == f.evaluate([a, b, c])


@given(polys())
def test_format_parse_roundtrip(f):
    assert parse_polynomial(format_polynomial(f), nvars=3) == f


def test_symbolic_substitution():
    f = P("t0*t1 - t0", nvars=2)
    t0 = Polynomial.variable(0, 2)
    assert f.substitute({1: 1 - t0}) == P("-t0^2", nvars=2)


def test_polynomial_is_exact():
    f = P("1/3*t0", nvars=1) * 3
    assert f == P("t0", nvars=1)
    assert all(isinstance(c, Fraction) for _, c in f.items())


def test_integer_roots():
    assert integer_roots(P("t0^2 - t0")) == [0, 1]
    assert integer_roots(P("5*t4^3 - 6*t4^2 + t4")) == [0, 1]
    assert integer_roots(P("t1^2 - 4", nvars=2)) == [-2, 2]
    assert integer_roots(P("t0^2 + 1")) == []
    assert integer_roots(P("1/2*t0^3 - 3/2*t0^2 + t0")) == [0, 1, 2]
    assert integer_roots(P("7", nvars=1)) == []
    with pytest.raises(ValueError):
        integer_roots(Polynomial.zero(1))
    with pytest.raises(ValueError):
        integer_roots(P("t0*t1"))


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4), st.integers(1, 3))
def test_integer_roots_recovers_planted_roots(roots, lead):
    t = Polynomial.variable(0, 1)
    f = Polynomial.constant(lead, 1)
    for r in roots:
        f = f * (t - r)
    assert integer_roots(f) == sorted(set(roots))
