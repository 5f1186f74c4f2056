import random
from fractions import Fraction
from itertools import product

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from liemoduli.errors import InputError, NotSubalgebraError, PreconditionError, StructureError, UnsupportedError
from liemoduli.lie_core import (
    CATALOG,
    LieAlgebra,
    Subalgebra,
    borel,
    builtin,
    conjugate_structure,
    diagonal_line,
    diagonal_torus,
    find_sl2_triple,
    full,
    generated,
    gl,
    heisenberg_sl3,
    is_semisimple_matrix,
    jordan_decompose,
    levi_semisimple_class,
    nilpotent_ideal,
    radical_series,
    rank_of_solvable,
    semisimple_class,
    semisimple_class_leq,
    sl2,
    sl3,
    solvable_radical,
    top_left_sl2,
    unipotent_radical_via_killing,
)
from liemoduli.linalg import commutator, is_zero, matmul, mpow, msub
from oracles import jordan_parts, killing_gram_bruteforce, to_sympy


def jacobi_holds(L):
    n = L.dim
    for i, j, k in product(range(n), repeat=3):
        x, y, z = (L.basis_vector(a) for a in (i, j, k))
        s = [
            L.bracket(L.bracket(x, y), z),
            L.bracket(L.bracket(y, z), x),
            L.bracket(L.bracket(z, x), y),
        ]
        if any(a + b + c for a, b, c in zip(*s)):
            return False
    return True


def killing_invariant(L):
    n = L.dim
    for i, j, k in product(range(n), repeat=3):
        x, y, z = (L.basis_vector(a) for a in (i, j, k))
        if L.killing_form(L.bracket(x, y), z) != L.killing_form(x, L.bracket(y, z)):
            return False
    return True


@pytest.mark.parametrize("name", ["sl2", "sl3", "gl3"])
def test_builtins_satisfy_jacobi_and_invariance(name):
    L = builtin(name)
    assert jacobi_holds(L)
    assert killing_invariant(L)


@pytest.mark.parametrize("name", ["sl2", "sl3", "gl2"])
def test_killing_gram_matches_ad_trace_bruteforce(name):
    L = builtin(name)
    assert [list(r) for r in L.killing_matrix()] == killing_gram_bruteforce(L)


def test_sl2_killing_gram_frozen():
    # DERIVED: ad-trace brute force in tests/oracles.py
    assert sl2().killing_matrix() == ((8, 0, 0), (0, 0, 4), (0, 4, 0))


def test_bad_structure_constants_rejected():
    # [x, y] = x, [x, z] = x, [y, z] = y: the Jacobi sum on (x, y, z) is -x
    with pytest.raises(StructureError):
        LieAlgebra("bad", ["x", "y", "z"], {(0, 1): {0: 1}, (0, 2): {0: 1}, (1, 2): {1: 1}})
    with pytest.raises(StructureError):
        LieAlgebra("bad", ["x", "y"], {(1, 0): {0: 1}})
    with pytest.raises(StructureError):
        LieAlgebra("bad", ["x", "y"], {(0, 1): {5: 1}})
    with pytest.raises(InputError):
        LieAlgebra("bad", ["x", "x"], {})


def test_matrices_must_agree_with_constants():
    mats = sl2().matrices
    with pytest.raises(StructureError):
        LieAlgebra("twisted", ["h", "e", "f"], {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 2}}, mats)


def test_conjugated_structure_is_valid_and_isomorphic():
    L = sl2()
    change = ((1, 1, 0), (0, 1, 0), (0, 0, 2))
    M = conjugate_structure(L, change)
    assert jacobi_holds(M)
    assert M.is_semisimple()
    assert sp.Matrix(M.killing_matrix()).det() != 0


def test_unipotent_radical_of_borel_is_killing_kernel():
    b = borel(2)
    u = unipotent_radical_via_killing(b)
    assert u == Subalgebra(sl2(), [sl2().basis_vector("e")])
    assert u.is_ideal_of(b)


def test_unipotent_radical_needs_semisimple_ambient():
    h = Subalgebra(gl(2), [gl(2).basis_vector("E12")])
    with pytest.raises(PreconditionError):
        unipotent_radical_via_killing(h)


@pytest.mark.parametrize(
    "h, expected",
    [
        (lambda: borel(2), 1),
        (lambda: borel(3), 2),
        (lambda: diagonal_torus(3), 2),
        (lambda: heisenberg_sl3(), 0),
        (lambda: diagonal_line((1, 1, -2)), 1),
        (lambda: Subalgebra(gl(3), [gl(3).basis_vector(n) for n in ("E11", "E12", "E22")]), 2),
    ],
)
def test_rank_of_solvable(h, expected):
    assert rank_of_solvable(h()) == expected


def test_rank_equals_codimension_of_unipotent_radical():
    for h in (borel(2), borel(3), diagonal_torus(3), heisenberg_sl3()):
        u = unipotent_radical_via_killing(h)
        assert h.dim - u.dim == rank_of_solvable(h)
        assert u.is_ideal_of(h)


def test_rank_rejects_non_solvable():
    with pytest.raises(PreconditionError):
        rank_of_solvable(full(sl2()))


def test_nilpotent_ideal_of_gl_borel():
    L = gl(3)
    h = Subalgebra(L, [L.basis_vector(n) for n in ("E11", "E12", "E22", "E13", "E23", "E33")])
    n = nilpotent_ideal(h)
    assert n.dim == 3
    assert all(is_zero(mpow(m, 3)) for m in n.matrices())


def test_radical_series():
    rs = radical_series(borel(3))
    assert rs.is_solvable and not rs.is_nilpotent
    assert radical_series(heisenberg_sl3()).is_nilpotent
    assert not radical_series(full(sl2())).is_solvable


@pytest.mark.parametrize(
    "h, label",
    [
        (lambda: full(sl2()), "A1"),
        (lambda: full(sl3()), "A2"),
        (lambda: top_left_sl2(3), "A1"),
        (lambda: borel(3), "0"),
        (lambda: full(gl(3)), "A2"),
        (lambda: Subalgebra(sl3(), [sl3().basis_vector(n) for n in ("h1", "h2", "E12", "E21", "E13", "E23")]), "A1"),
    ],
)
def test_levi_classes(h, label):
    r = levi_semisimple_class(h())
    assert r.semisimple_class.label == label
    if r.complement is not None:
        assert r.complement.dim == CATALOG[label].dim


def test_levi_complement_of_parabolic_is_sl2():
    L = sl3()
    p = Subalgebra(L, [L.basis_vector(n) for n in ("h1", "h2", "E12", "E21", "E13", "E23")])
    r = levi_semisimple_class(p)
    assert r.complement is not None
    assert levi_semisimple_class(r.complement).semisimple_class.label == "A1"
    assert solvable_radical(p).dim == 3


def test_levi_rejects_large_ambient():
    from liemoduli.lie_core import sl

    with pytest.raises(UnsupportedError):
        levi_semisimple_class(full(sl(4)))


def test_catalog_order_is_a_partial_order():
    labels = list(CATALOG)
    for a in labels:
        assert semisimple_class_leq(a, a)
        for b in labels:
            if a != b and semisimple_class_leq(a, b):
                assert not semisimple_class_leq(b, a)
            for c in labels:
                if semisimple_class_leq(a, b) and semisimple_class_leq(b, c):
                    assert semisimple_class_leq(a, c)
    # equal rank, no embedding either way
    assert not semisimple_class_leq("A1+A1", "A2")
    assert not semisimple_class_leq("A2", "A1+A1")
    with pytest.raises(InputError):
        semisimple_class("B2")


def test_find_sl2_triple_in_sl2():
    e, h, f = find_sl2_triple(full(sl2()))
    L = sl2()
    assert L.bracket(h, e) == tuple(2 * x for x in e)
    assert L.bracket(e, f) == h


def test_subalgebra_checks_closure():
    L = sl2()
    with pytest.raises(NotSubalgebraError):
        Subalgebra(L, [L.basis_vector("e"), L.basis_vector("f")])
    assert generated(L, [L.basis_vector("e"), L.basis_vector("f")]) == full(L)


small = st.integers(min_value=-3, max_value=3)
mat3 = st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3).map(
    lambda rows: tuple(tuple(Fraction(x) for x in r) for r in rows)
)


@given(mat3)
def test_jordan_properties(x):
    jp = jordan_decompose(x)
    s, n = jp.semisimple_part, jp.nilpotent_part
    assert tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(s, n)) == x
    assert is_zero(commutator(s, n))
    assert is_zero(mpow(n, 3))
    assert is_semisimple_matrix(s)
    # both parts commute with everything commuting with x
    L = gl(3)
    for i in range(L.dim):
        b = L.realize(L.basis_vector(i))
        if is_zero(commutator(b, x)):
            assert is_zero(commutator(b, s))
            assert is_zero(commutator(b, n))


def test_jordan_matches_sympy_jordan_form():
    x = ((2, 1, 0), (0, 2, 0), (1, 0, 3))
    x = tuple(tuple(Fraction(v) for v in r) for r in x)
    jp = jordan_decompose(x)
    s, n = jordan_parts(to_sympy(x))
    assert to_sympy(jp.semisimple_part) == s
    assert to_sympy(jp.nilpotent_part) == n


def test_jordan_of_irrational_spectrum_stays_rational():
    x = ((0, 2), (1, 0))
    jp = jordan_decompose(x)
    assert jp.semisimple_part == tuple(tuple(Fraction(v) for v in r) for r in x)
    assert is_zero(jp.nilpotent_part)


def _perturbed(seed):
    rng = random.Random(seed)
    while True:
        change = tuple(tuple(Fraction(rng.randint(-2, 2)) for _ in range(3)) for _ in range(3))
        if sp.Matrix(change).det() != 0:
            return conjugate_structure(sl2(), change, f"sl2_{seed}")


@pytest.mark.parametrize("seed", range(5))
def test_perturbed_valid_sets_pass_and_invalid_fail(seed):
    M = _perturbed(seed)
    assert jacobi_holds(M) and killing_invariant(M)
    sc = M.structure_constants
    (i, j), terms = sorted(sc.items())[0]
    k = sorted(terms)[0]
    broken = dict(sc)
    broken[(i, j)] = dict(terms)
    broken[(i, j)][(k + 1) % 3] = broken[(i, j)].get((k + 1) % 3, 0) + 1
    try:
        LieAlgebra("broken", M.basis_names, broken)
    except StructureError:
        return
    # a perturbation that happens to keep Jacobi must still be a Lie algebra
    assert jacobi_holds(LieAlgebra("broken", M.basis_names, broken))


def test_realize_and_coordinates_round_trip():
    L = sl3()
    for i in range(L.dim):
        v = L.basis_vector(i)
        assert L.coordinates(L.realize(v)) == v
    assert L.coordinates(((1, 0, 0), (0, 0, 0), (0, 0, 0))) is None
    assert matmul(L.realize(L.basis_vector("E12")), L.realize(L.basis_vector("E23"))) == L.realize(
        L.basis_vector("E13")
    )
    assert msub(L.realize(L.basis_vector("h1")), L.realize(L.basis_vector("h1"))) == ((0,) * 3,) * 3
