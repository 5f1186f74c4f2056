"""Univariate polynomials over the rationals, backed by sympy's ``Poly``.

Coefficients cross this boundary as Fractions (ascending degree).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import Poly, QQ, Symbol

from .linalg import Matrix, Q, ZERO, identity, madd, matmul, mscale, zeros

X = Symbol("x")


def poly(coeffs_ascending: Sequence, gen: Symbol = X) -> Poly:
    cs = [Q(c) for c in coeffs_ascending] or [ZERO]
    return Poly([QQ(c.numerator, c.denominator) for c in reversed(cs)], gen, domain=QQ)


def coefficients(p: Poly) -> tuple[Fraction, ...]:
    """Ascending coefficients of p (the zero polynomial gives ``(0,)``)."""
    return tuple(Q(c) for c in reversed(p.all_coeffs()))


def from_descending(coeffs: Sequence, gen: Symbol = X) -> Poly:
    return poly(list(reversed(list(coeffs))), gen)


def evaluate(p: Poly, t) -> Fraction:
    t = Q(t)
    out = ZERO
    for c in p.all_coeffs():
        out = out * t + Q(c)
    return out


def evaluate_at_matrix(p: Poly, a: Matrix) -> Matrix:
    """p(a) by Horner's rule."""
    m = len(a)
    out = zeros(m)
    eye = identity(m)
    for c in p.all_coeffs():
        out = madd(matmul(out, a), mscale(Q(c), eye))
    return out


def squarefree_part(p: Poly) -> Poly:
    """The product of the distinct monic irreducible factors of p."""
    g = p.gcd(p.diff())
    return p.exquo(g).monic()


def is_zero_poly(p: Poly) -> bool:
    return p.is_zero


def rational_roots(p: Poly) -> dict[Fraction, int] | None:
    """Roots with multiplicity when p splits into linear factors over Q."""
    out: dict[Fraction, int] = {}
    _, factors = p.factor_list()
    for f, mult in factors:
        if f.degree() != 1:
            return None
        a, b = f.all_coeffs()
        out[Q(-b) / Q(a)] = out.get(Q(-b) / Q(a), 0) + mult
    return out
