"""Ideal operations and Hilbert series, checked against independent
oracles: exact rank computations for graded dimensions and brute-force
standard-monomial counting for monomial ideals."""

from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings, strategies as st

from bei.graphs import graph_from_spec
from bei.ideals import (
    Ideal,
    IdealError,
    binomial_edge_generators,
    binomial_edge_ideal,
    edge_binomial,
    hilbert_series_ideal,
    hilbert_series_monomial,
    ideal_colon_ideal,
    ideal_equal,
    ideal_intersection,
    ideal_quotient,
    is_zero_dimensional,
    universe_for_graph,
)
from bei.cutsets import minimal_primes, prime_generators
from bei.poly import DEGREVLEX, LEX, Polynomial, VariableUniverse, mono_mul, parse_polynomial
from bei.series import HilbertSeries
from bei.verify import closing_binomial, parameter_forms, staircase_monomials

U2 = VariableUniverse.of("x", "y")


def p(text, universe=U2):
    return parse_polynomial(universe, text)


def ideal(universe, *texts):
    return Ideal.of(universe, [parse_polynomial(universe, t) for t in texts])


# -- independent oracles -------------------------------------------------------

def monomials_of_degree(nvars, d):
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        yield tuple(e)


def rank_of(rows):
    """Exact Gaussian elimination over the rationals."""
    rows = [list(r) for r in rows]
    rank, col, ncols = 0, 0, (len(rows[0]) if rows else 0)
    while rank < len(rows) and col < ncols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def graded_quotient_dims(gens, universe, upto):
    """dim of each graded piece of S/(gens) by exact linear algebra:
    the degree-d piece of the ideal is spanned by m*f over monomials m."""
    dims = []
    for d in range(upto + 1):
        cols = {m: k for k, m in enumerate(monomials_of_degree(universe.size, d))}
        rows = []
        for f in gens:
            df = f.total_degree()
            if df > d:
                continue
            for m in monomials_of_degree(universe.size, d - df):
                row = [Fraction(0)] * len(cols)
                for fm, fc in f.terms.items():
                    row[cols[mono_mul(fm, m)]] += fc
                rows.append(row)
        dims.append(len(cols) - (rank_of(rows) if rows else 0))
    return dims


def count_standard_monomials(gens, nvars, upto):
    from bei.poly import mono_divides
    counts = []
    for d in range(upto + 1):
        counts.append(sum(1 for m in monomials_of_degree(nvars, d)
                          if not any(mono_divides(g, m) for g in gens)))
    return counts


# -- binomial generators --------------------------------------------------------

def test_binomial_edge_generators():
    g = graph_from_spec("cycle:3")
    U = universe_for_graph(g)
    gens = binomial_edge_generators(g, U)
    assert len(gens) == 3
    assert parse_polynomial(U, "x1*y2 - x2*y1") in gens
    assert len(binomial_edge_generators(graph_from_spec("complete:4"))) == 6
    line2 = binomial_edge_generators(graph_from_spec("line:2"))
    assert [str(f) for f in line2] == ["x1*y2 - x2*y1"]


def test_generator_universe_must_fit():
    with pytest.raises(IdealError):
        binomial_edge_generators(graph_from_spec("line:3"), VariableUniverse.xy(2))


# -- monomial Hilbert series ----------------------------------------------------

def test_monomial_series_examples():
    assert hilbert_series_monomial([(1, 1)], 2) == HilbertSeries.make((1, 1), 1)
    assert hilbert_series_monomial([(2, 0), (1, 1)], 2) == HilbertSeries.make((1, 1, -1), 1)
    assert hilbert_series_monomial([], 3) == HilbertSeries.make((1,), 3)
    assert hilbert_series_monomial([(0, 0)], 2) == HilbertSeries.make((), 0)


def test_monomial_series_redundant_generators_ignored():
    assert hilbert_series_monomial([(1, 0), (1, 1), (2, 3)], 2) == \
        hilbert_series_monomial([(1, 0)], 2)


def test_monomial_series_wrong_arity():
    with pytest.raises(IdealError):
        hilbert_series_monomial([(1, 1, 1)], 2)


monos4 = st.tuples(*([st.integers(0, 3)] * 4))


@settings(max_examples=100, deadline=None)
@given(st.lists(monos4, min_size=0, max_size=6))
def test_monomial_series_matches_standard_monomial_count(gens):
    series = hilbert_series_monomial(gens, 4)
    expected = count_standard_monomials(gens, 4, 10)
    assert series.expand(10) == expected


# -- Hilbert series of graph ideals ----------------------------------------------

def test_series_examples():
    assert hilbert_series_ideal(binomial_edge_ideal(graph_from_spec("line:2"))) \
        == HilbertSeries.make((1, 1), 3)
    assert hilbert_series_ideal(binomial_edge_ideal(graph_from_spec("complete:3"))) \
        == HilbertSeries.make((1, 2), 4)
    zero = Ideal.of(U2, [])
    assert hilbert_series_ideal(zero) == HilbertSeries.make((1,), 2)


def test_series_requires_homogeneous():
    with pytest.raises(IdealError):
        hilbert_series_ideal(ideal(U2, "x^2 - y"))


@pytest.mark.parametrize("spec", ["line:2", "line:3", "complete:3"])
def test_series_against_rank_oracle(spec):
    g = graph_from_spec(spec)
    U = universe_for_graph(g)
    gens = binomial_edge_generators(g, U)
    series = hilbert_series_ideal(Ideal.of(U, gens))
    assert series.expand(5) == graded_quotient_dims(gens, U, 5)


@pytest.mark.parametrize("spec", ["line:2", "line:3", "line:4", "line:5",
                                  "cycle:3", "cycle:4", "cycle:5",
                                  "star:3", "star:4", "complete:4", "complete:5",
                                  "tree1:4", "tree1:5"])
def test_series_is_order_independent(spec):
    I = binomial_edge_ideal(graph_from_spec(spec))
    J = binomial_edge_ideal(graph_from_spec(spec))
    assert hilbert_series_ideal(I, DEGREVLEX) == hilbert_series_ideal(J, LEX)


# -- quotient / intersection / equality -------------------------------------------

def test_quotient_examples():
    assert ideal_equal(ideal_quotient(ideal(U2, "x^2"), p("x")), ideal(U2, "x"))
    assert ideal_equal(ideal_quotient(ideal(U2, "x*y"), p("y")), ideal(U2, "x"))
    with pytest.raises(IdealError):
        ideal_quotient(ideal(U2, "x"), Polynomial.zero(U2))


def test_line4_quotient_by_chord_is_line_plus_staircase():
    n = 4
    U = VariableUniverse.xy(n)
    line = Ideal.of(U, binomial_edge_generators(graph_from_spec("line:4"), U))
    q = ideal_quotient(line, closing_binomial(U, n))
    expected = Ideal.of(U, list(line.generators)
                        + [parse_polynomial(U, s) for s in ("x2*x3", "x2*y3", "y2*y3")])
    assert ideal_equal(q, expected)
    assert ideal_equal(q, expected, order=LEX)
    assert [str(m) for m in staircase_monomials(U, n)] == ["x2*x3", "x2*y3", "y2*y3"]


def test_intersection_examples():
    assert ideal_equal(ideal_intersection(ideal(U2, "x"), ideal(U2, "y")),
                       ideal(U2, "x*y"))
    I = ideal(U2, "x^2", "x*y")
    assert ideal_equal(ideal_intersection(I, I), I)


def test_line3_decomposes_into_its_two_primes():
    g = graph_from_spec("line:3")
    U = universe_for_graph(g)
    primes = minimal_primes(g)
    assert len(primes) == 2
    parts = [Ideal.of(U, prime_generators(g, pc, U)) for pc in primes]
    meet = ideal_intersection(parts[0], parts[1])
    assert ideal_equal(meet, Ideal.of(U, binomial_edge_generators(g, U)))


def test_equality_examples():
    assert ideal_equal(ideal(U2, "x", "y"), ideal(U2, "y", "x"))
    assert not ideal_equal(ideal(U2, "x"), ideal(U2, "x^2"))
    # the verdict does not depend on the order used
    assert ideal_equal(ideal(U2, "x", "y"), ideal(U2, "y", "x"), order=LEX)
    assert not ideal_equal(ideal(U2, "x"), ideal(U2, "x^2"), order=LEX)
    J = binomial_edge_ideal(graph_from_spec("line:3"))
    K = binomial_edge_ideal(graph_from_spec("line:3"))
    assert ideal_equal(J, K, order=LEX) and ideal_equal(J, K)


def test_colon_by_ideal():
    # (x^2 y) : (x, y) = (x y) ∩ (x^2) = (x^2 y)
    I = ideal(U2, "x^2*y")
    J = ideal(U2, "x", "y")
    assert ideal_equal(ideal_colon_ideal(I, J), ideal(U2, "x^2*y"))
    K = ideal(U2, "x^2", "x*y")
    assert ideal_equal(ideal_colon_ideal(K, ideal(U2, "x")), ideal(U2, "x", "y"))
    with pytest.raises(IdealError):
        ideal_colon_ideal(I, Ideal.of(U2, []))


QUOTIENT_CASES = [
    ("x^2", "x"), ("x*y", "y"), ("x^2 + y^2", "x - y"), ("x^3 - y^3", "x*y"),
]


@pytest.mark.parametrize("gen,div", QUOTIENT_CASES)
def test_quotient_duality(gen, div):
    I = ideal(U2, gen)
    f = p(div)
    Q = ideal_quotient(I, f)
    # I ⊆ (I : f) and f * (I : f) ⊆ I
    for g in I.generators:
        assert Q.contains(g)
    for q in Q.generators:
        assert I.contains(f * q)


def test_zero_dimensionality():
    assert is_zero_dimensional(ideal(U2, "x^2", "x*y", "y^3"))
    assert not is_zero_dimensional(ideal(U2, "x*y"))
    assert not is_zero_dimensional(Ideal.of(U2, []))
    # over a restricted variable set
    assert is_zero_dimensional(ideal(U2, "x^2"), var_indices=[0])


def test_cycle4_parameter_forms_reach_zero_dimension():
    n = 4
    U = VariableUniverse.xy(n)
    g = graph_from_spec("cycle:4")
    gens = binomial_edge_generators(g, U) + parameter_forms(U, n)
    assert is_zero_dimensional(Ideal.of(U, gens))
    assert len(parameter_forms(U, n)) == n + 1


def test_groebner_cache_returns_identical_object():
    I = ideal(U2, "x^2 - y^2", "x*y")
    first = I.groebner_basis(DEGREVLEX)
    assert I.groebner_basis(DEGREVLEX) is first


def test_edge_binomial_normalizes_orientation():
    U = VariableUniverse.xy(3)
    assert edge_binomial(U, 3, 2, 1) == edge_binomial(U, 3, 1, 2)
