"""Additive Jordan-Chevalley decomposition over Q."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import InputError
from ..linalg import Matrix, charpoly_coeffs, is_zero, mat, msub
from ..polynomials import X, coefficients, evaluate_at_matrix, from_descending, squarefree_part


@dataclass(frozen=True)
class JordanPair:
    semisimple_part: Matrix
    nilpotent_part: Matrix
    # ascending coefficients of the polynomial P with semisimple_part = P(x)
    semisimple_polynomial: tuple[Fraction, ...] = ()


def jordan_decompose(x) -> JordanPair:
    """Split x = s + n with s semisimple, n nilpotent, [s, n] = 0.

    Works in Q[X]/(charpoly) with Newton's iteration on the square-free part
    q of the characteristic polynomial: S <- S - q(S) / q'(S). Both parts come
    out as polynomials in x with rational coefficients.
    """
    x = mat(x)
    m = len(x)
    if any(len(r) != m for r in x):
        raise InputError("jordan_decompose needs a square matrix")
    if m == 0:
        return JordanPair((), (), (Fraction(0),))
    p = from_descending(charpoly_coeffs(x))
    q = squarefree_part(p)
    dq = q.diff()
    s_poly = from_descending([1, 0])  # the class of X
    while True:
        residue = q.compose(s_poly).rem(p)
        if residue.is_zero:
            break
        inv = dq.compose(s_poly).rem(p).invert(p)
        s_poly = (s_poly - (residue * inv).rem(p)).rem(p)
    s = evaluate_at_matrix(s_poly, x)
    n = msub(x, s)
    return JordanPair(s, n, coefficients(s_poly))


def is_semisimple_matrix(a: Matrix) -> bool:
    return is_zero(jordan_decompose(a).nilpotent_part)


__all__ = ["JordanPair", "jordan_decompose", "is_semisimple_matrix", "X"]
