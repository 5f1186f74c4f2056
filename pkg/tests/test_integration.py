from fractions import Fraction

import pytest
import sympy as sp

from liemoduli.errors import InputError, NotIntegrableError, PreconditionError
from liemoduli.integration import (
    corrupt_torus_frame,
    exp_nilpotent,
    group_axiom_sample_check,
    integrate_algebraic,
    integrate_solvable,
    one_param_torus,
    tangent_space_at_identity,
)
from liemoduli.lie_core import (
    LieAlgebra,
    Subalgebra,
    borel,
    diagonal_line,
    diagonal_torus,
    full,
    gl,
    heisenberg_sl3,
    sl2,
    sl3,
    top_left_sl2,
)
from liemoduli.lie_core.subalgebra import from_matrices
from liemoduli.linalg import diag, elementary, inverse, madd, matmul
from oracles import to_sympy

CASES = {
    "borel2": lambda: borel(2),
    "span_e": lambda: Subalgebra(sl2(), [sl2().element(e=1)]),
    "diag_112": lambda: diagonal_line((1, 1, -2)),
    "borel3": lambda: borel(3),
    "heisenberg": heisenberg_sl3,
    "torus3": lambda: diagonal_torus(3),
    "sl2": lambda: full(sl2()),
    "top_left_sl2": lambda: top_left_sl2(3),
    "sl3": lambda: full(sl3()),
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_tangent_space_round_trip(name):
    h = CASES[name]()
    g = integrate_algebraic(h)
    assert g.arity == h.dim
    assert tangent_space_at_identity(g).basis_matrix == h.basis


@pytest.mark.parametrize("name", sorted(CASES))
def test_group_axioms_on_200_trials(name):
    g = integrate_algebraic(CASES[name]())
    r = group_axiom_sample_check(g, trials=200, seed=0)
    assert r.status == "pass"
    assert r.checks == 401


def test_corrupted_torus_frame_is_caught():
    g = integrate_algebraic(borel(2))
    bad = corrupt_torus_frame(g, ((1, 0), (1, 1)))
    r = group_axiom_sample_check(bad, trials=200, seed=0)
    assert r.status == "fail"
    assert r.counterexample["check"] in ("product", "inverse")


def test_torus_weights_of_diagonal_line():
    g = integrate_solvable(diagonal_line((2, 2, -4)))
    assert [w.weights for w in g.torus_weights] == [(1, 1, -2)]
    assert g.evaluate((2,)) == diag((2, 2, Fraction(1, 4)))


def test_gl_borel_has_full_rank_torus():
    G = gl(3)
    h = Subalgebra(G, [G.basis_vector(n) for n in ("E11", "E12", "E22", "E13", "E23", "E33")])
    g = integrate_algebraic(h)
    assert len(g.torus_weights) == 3
    assert group_axiom_sample_check(g, trials=50, seed=1).passed


def test_factor_maps_match_sympy():
    n = ((0, 1, 2), (0, 0, 3), (0, 0, 0))
    t = Fraction(-2, 3)
    assert to_sympy(exp_nilpotent(n, t)) == (sp.Rational(-2, 3) * sp.Matrix(n)).exp()
    assert one_param_torus((1, -2, 1), 2) == diag((2, Fraction(1, 4), 2))
    with pytest.raises(InputError):
        one_param_torus((1, -1), 0)


def test_membership_is_exact():
    g = integrate_algebraic(borel(2))
    assert g.contains(((2, 5), (0, Fraction(1, 2))))
    assert not g.contains(((1, 0), (1, 1)))
    assert not g.contains(((3, 0), (0, 3)))  # determinant 9
    params = g.solve(((2, 5), (0, Fraction(1, 2))))
    assert g.evaluate(params) == ((2, 5), (0, Fraction(1, 2)))


def test_sl2_membership_outside_big_cell():
    g = integrate_algebraic(full(sl2()))
    w = ((0, 1), (-1, 0))
    assert g.solve(w) is None
    assert g.contains(w)
    assert not g.contains(((2, 0), (0, 2)))


def test_conjugated_solvable_group():
    # span of s = g diag(1, 0, -1) g^-1 and the conjugated E13
    c = ((1, 1, 0), (0, 1, 1), (0, 0, 1))
    ci = inverse(c)
    s = matmul(matmul(c, diag((1, 0, -1))), ci)
    n = matmul(matmul(c, elementary(3, 0, 2)), ci)
    h = from_matrices(sl3(), [s, n])
    g = integrate_algebraic(h)
    assert tangent_space_at_identity(g).basis_matrix == h.basis
    assert group_axiom_sample_check(g, trials=60, seed=3).passed


def test_mixed_levi_and_radical_membership_is_unsupported():
    L = sl3()
    p = Subalgebra(L, [L.basis_vector(x) for x in ("h1", "h2", "E12", "E21", "E13", "E23")])
    g = integrate_algebraic(p)
    assert tangent_space_at_identity(g).basis_matrix == p.basis
    assert group_axiom_sample_check(g, trials=5).status == "unsupported"


def test_non_algebraic_input_is_refused():
    h = from_matrices(sl3(), [madd(diag((1, 1, -2)), elementary(3, 0, 1))])
    with pytest.raises(NotIntegrableError) as info:
        integrate_algebraic(h)
    assert info.value.witness is not None


def test_preconditions():
    with pytest.raises(PreconditionError):
        integrate_solvable(full(sl2()))
    L = LieAlgebra("abstract", ["x", "y"], {(0, 1): {1: 1}})
    with pytest.raises(PreconditionError):
        integrate_algebraic(Subalgebra(L, [(1, 0)]))
    with pytest.raises(InputError):
        group_axiom_sample_check(integrate_algebraic(borel(2)), trials=0)
    with pytest.raises(InputError):
        integrate_algebraic(borel(2)).evaluate((1,))
