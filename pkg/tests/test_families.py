from fractions import Fraction

import pytest

from liemoduli.errors import (
    DegenerateParameterError,
    InputError,
    NonFlatIntersectionError,
    NotSubalgebraError,
    PreconditionError,
)
from liemoduli.families import (
    SemicontinuityReport,
    conjugate_family,
    evaluate_family,
    fibers,
    flatness_proxy,
    generic_value,
    limit_fiber,
    make_family,
    rank_scan,
    semisimple_class_scan,
    unipotent_radical_family,
)
from liemoduli.grassmann import INFINITY, PolynomialPath, adjoint_path
from liemoduli.lie_core import Subalgebra, heisenberg_sl3, intersection, semisimple_class, sl2, sl3, top_left_sl2
from liemoduli.lie_core.structure import levi_semisimple_class, rank_of_solvable

SAMPLES = [-2, -1, 0, Fraction(1, 2), 1, 2]


def h_minus_2te():
    path = PolynomialPath.from_coefficients([[(1,), (0, -2), (0,)]])
    return make_family(path, sl2(), SAMPLES, ["inf"])


def conjugated_sl2():
    L = sl3()
    path = adjoint_path(L, top_left_sl2(3).basis, L.basis_vector("E13"))
    return make_family(path, L, [-1, 0, 1, 2, 3], [INFINITY])


def test_family_fibers_and_limits():
    f = h_minus_2te()
    assert f.samples == tuple(sorted(Fraction(t) for t in SAMPLES))
    fib = evaluate_family(f, 1)
    assert fib.basis == ((1, -2, 0),)
    assert limit_fiber(f, "inf").basis == ((0, 1, 0),)
    assert [p for p, _, is_limit in fibers(f) if is_limit] == [INFINITY]


def test_make_family_validates_fibers():
    L = sl2()
    not_closed = PolynomialPath.from_coefficients([[(0,), (1,), (0,)], [(0,), (0,), (1,)]])
    with pytest.raises(NotSubalgebraError):
        make_family(not_closed, L, [0])
    drops = PolynomialPath.from_coefficients([[(0, 1), (0, 0, 1), (0,)]])
    with pytest.raises(DegenerateParameterError):
        make_family(drops, L, [0, 1])
    with pytest.raises(InputError):
        make_family(PolynomialPath.constant([(1, 0)]), L, [0])


def test_rank_scan_on_h_minus_2te():
    r = rank_scan(h_minus_2te())
    assert r.generic == 1
    assert r.special_values() == {INFINITY: 0}
    assert r.verdict


def test_rank_values_agree_with_fiberwise_oracle():
    f = h_minus_2te()
    r = rank_scan(f)
    for p, v in r.values:
        fib = limit_fiber(f, p) if p == INFINITY else evaluate_family(f, p)
        assert v == rank_of_solvable(fib)


def test_rank_scan_requires_solvable_fibers():
    with pytest.raises(PreconditionError, match="-1"):
        rank_scan(conjugated_sl2())


def test_semisimple_class_scan_on_conjugated_sl2():
    r = semisimple_class_scan(conjugated_sl2())
    assert r.generic == semisimple_class("A1")
    assert r.special_values() == {INFINITY: semisimple_class("0")}
    assert r.verdict


def test_negative_control_report_fails():
    assert not SemicontinuityReport("rank", 0, {INFINITY: 1}).verdict
    assert not SemicontinuityReport("semisimple_class", semisimple_class("0"), {INFINITY: semisimple_class("A1")}).verdict
    assert SemicontinuityReport("rank", 2, ((Fraction(0), 1),)).verdict


def test_generic_value_tie_is_an_error():
    assert generic_value([1, 1, 2]) == 1
    with pytest.raises(InputError):
        generic_value([1, 2])
    with pytest.raises(InputError):
        generic_value([])


def test_unipotent_radical_family_constant_intersection():
    L = sl2()
    path = PolynomialPath.from_coefficients([[(1,), (0, 1), (0,)], [(0,), (1,), (0,)]])
    f = make_family(path, L, [-1, 0, 1, 2], ["inf"])
    u = Subalgebra(L, [L.element(e=1)])
    sub = unipotent_radical_family(f, u)
    assert sub.k == 1
    for t in f.samples:
        assert evaluate_family(sub, t).basis == ((0, 1, 0),)


def test_unipotent_radical_family_moving_intersection():
    # fibers Ad(exp tE13) top-left sl2 meet the Heisenberg algebra in a moving line
    f = conjugated_sl2()
    u = heisenberg_sl3()
    sub = unipotent_radical_family(make_family(f.path, f.ambient, f.samples, []), u)
    assert sub.k == 1
    for t in (Fraction(-1), Fraction(3), Fraction(7, 2)):
        fib = evaluate_family(f, t)
        assert evaluate_family(sub, t) == intersection(fib, u)


def test_unipotent_radical_family_detects_jump():
    f = h_minus_2te()
    u = Subalgebra(sl2(), [sl2().element(e=1)])
    with pytest.raises(NonFlatIntersectionError) as info:
        unipotent_radical_family(f, u)
    assert info.value.dimensions["inf"] == 1
    assert info.value.dimensions["0"] == 0


def test_unipotent_radical_family_needs_nilpotent_u():
    with pytest.raises(PreconditionError):
        unipotent_radical_family(h_minus_2te(), Subalgebra(sl2(), [sl2().element(h=1), sl2().element(e=1)]))


def test_flatness_proxy():
    assert flatness_proxy(h_minus_2te())
    drops = PolynomialPath.from_coefficients([[(0, 1), (0, 0, 1), (0,)]])
    assert not flatness_proxy(drops, [-1, 0, 1])
    assert flatness_proxy(drops, [-1, 1], ["inf"])


def test_conjugate_family_preserves_invariants():
    f = h_minus_2te()
    # the automorphism swapping e and f and negating h
    g = ((-1, 0, 0), (0, 0, 1), (0, 1, 0))
    fc = conjugate_family(f, g)
    assert rank_scan(fc).special_values() == rank_scan(f).special_values()
    assert limit_fiber(fc, "inf").basis == ((0, 0, 1),)
    assert levi_semisimple_class(evaluate_family(fc, 1)).semisimple_class.label == "0"
