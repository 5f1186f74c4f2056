from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from liemoduli.algebraicity import algebraic_hull
from liemoduli.errors import DegenerateParameterError, InputError, RankError
from liemoduli.grassmann import (
    INFINITY,
    PolynomialPath,
    SubspacePoint,
    adjoint_path,
    canonicalize,
    evaluate_path_point,
    format_parameter,
    is_lie_subalgebra,
    lambda_equations,
    limit_of_path,
    parse_parameter,
    pluecker_relations_hold,
)
from liemoduli.lie_core import Subalgebra, borel, heisenberg_sl3, sl2, sl3, top_left_sl2
from oracles import pluecker_minors, proportional, rank, span_equal

small = st.integers(min_value=-3, max_value=3).map(Fraction)


def rows_strategy(k, n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=k, max_size=k)


def test_parse_parameter():
    assert parse_parameter("inf") == INFINITY
    assert parse_parameter("OO") == INFINITY
    assert parse_parameter("-3/4") == Fraction(-3, 4)
    assert format_parameter(Fraction(6, 4)) == "3/2"
    with pytest.raises(InputError):
        parse_parameter("nan")


@given(rows_strategy(2, 4))
def test_canonical_form_spans_input_and_matches_minors(rows):
    assume(rank(rows) == 2)
    p = canonicalize(rows)
    assert span_equal(p.basis_matrix, rows)
    assert proportional(p.pluecker, pluecker_minors(rows, 4))
    assert next(x for x in p.pluecker if x) == 1
    assert pluecker_relations_hold(p)


@given(rows_strategy(2, 4), st.integers(min_value=1, max_value=3), st.integers(min_value=-2, max_value=2))
def test_canonical_form_is_basis_independent(rows, a, b):
    assume(rank(rows) == 2)
    mixed = [rows[0], [a * x + b * y for x, y in zip(rows[1], rows[0])]]
    if a == 0:
        return
    assert canonicalize(rows) == canonicalize(mixed)


@given(rows_strategy(2, 5))
def test_pluecker_round_trip(rows):
    assume(rank(rows) == 2)
    p = canonicalize(rows)
    assert SubspacePoint.from_pluecker(5, 2, p.pluecker) == p


def test_from_pluecker_rejects_non_decomposable():
    # p01 p23 - p02 p13 + p03 p12 = 1 != 0
    coords = [1, 0, 0, 0, 0, 1]
    with pytest.raises(InputError):
        SubspacePoint.from_pluecker(4, 2, coords)
    with pytest.raises(RankError):
        SubspacePoint.from_pluecker(4, 2, [0] * 6)


def test_canonicalize_rejects_dependent_rows():
    with pytest.raises(RankError):
        canonicalize([(1, 2, 3), (2, 4, 6)])


def test_is_lie_subalgebra():
    L = sl2()
    assert is_lie_subalgebra(canonicalize([L.element(h=1), L.element(e=1)]), L)
    assert not is_lie_subalgebra(canonicalize([L.element(e=1), L.element(f=1)]), L)


def test_lambda_equations_cut_out_subalgebras():
    L = sl2()
    system = lambda_equations(L, 2)
    assert len(system.pluecker_relations) == 0  # Gr(2, 3) has no relations
    assert system.vanishes_at(canonicalize([L.element(h=1), L.element(e=1)]))
    assert system.vanishes_at(canonicalize([L.element(h=1), L.element(f=1)]))
    assert not system.vanishes_at(canonicalize([L.element(e=1), L.element(f=1)]))
    assert not system.vanishes_at(canonicalize([L.element(h=1, e=1), L.element(f=1)]))


def test_lambda_equations_on_sl3_planes():
    L = sl3()
    system = lambda_equations(L, 2)
    inside = canonicalize([L.basis_vector("E12"), L.basis_vector("E13")])
    outside = canonicalize([L.basis_vector("E12"), L.basis_vector("E21")])
    assert system.vanishes_at(inside)
    assert not system.vanishes_at(outside)


def test_limit_of_h_minus_2te_at_infinity_is_e():
    path = PolynomialPath.from_coefficients([[(1,), (0, -2), (0,)]])
    lim = limit_of_path(path, "inf")
    L = sl2()
    assert lim == canonicalize([L.element(e=1)])
    assert is_lie_subalgebra(lim, L)
    assert algebraic_hull(Subalgebra(L, lim.basis_matrix)).is_algebraic
    assert limit_of_path(path, 0) == canonicalize([L.element(h=1)])


def test_limit_of_conjugated_sl2_is_heisenberg():
    L = sl3()
    path = adjoint_path(L, top_left_sl2(3).basis, L.basis_vector("E13"))
    assert path.degree == 1
    lim = limit_of_path(path, INFINITY)
    assert lim.basis_matrix == heisenberg_sl3().basis
    assert is_lie_subalgebra(lim, L)
    assert algebraic_hull(Subalgebra(L, lim.basis_matrix)).is_algebraic
    assert limit_of_path(path, 0).basis_matrix == top_left_sl2(3).basis


def test_limit_through_rank_drop():
    # span(t h + t^2 e) drops rank at 0 but its limit there is span(h)
    path = PolynomialPath.from_coefficients([[(0, 1), (0, 0, 1), (0,)]])
    with pytest.raises(DegenerateParameterError):
        evaluate_path_point(path, 0)
    assert limit_of_path(path, 0) == canonicalize([(1, 0, 0)])


def test_limit_of_constant_path_is_the_point():
    b = borel(2)
    path = PolynomialPath.constant(b.basis)
    assert limit_of_path(path, INFINITY).basis_matrix == b.basis


def test_adjoint_path_fibers_are_conjugates():
    L = sl3()
    path = adjoint_path(L, top_left_sl2(3).basis, L.basis_vector("E13"))
    for t in (Fraction(-2), Fraction(1, 3), Fraction(5)):
        p = evaluate_path_point(path, t)
        assert is_lie_subalgebra(p, L)
        assert p.k == 3


@given(st.integers(min_value=-4, max_value=4), st.integers(min_value=1, max_value=3))
def test_limit_matches_finite_evaluation_where_rank_is_full(t, d):
    # a generic-rank path agrees with its pointwise fiber
    path = PolynomialPath.from_coefficients([[(1, 1), (0, 0, d), (t,)], [(0,), (1,), (0, 1)]])
    p = path.evaluate(Fraction(t))
    if rank(p) == 2:
        assert limit_of_path(path, t) == canonicalize(p)
