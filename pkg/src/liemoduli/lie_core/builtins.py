"""Standard algebras and subalgebras in their defining matrix realizations.

Basis conventions (0-based matrix units ``E_ij`` are named with 1-based
labels, ``E12`` = row 1, column 2):

* ``sl(n)``: ``h1 .. h_{n-1}`` (``h_i = E_ii - E_{i+1,i+1}``), then the upper
  root vectors ``E_ij`` (i < j, lexicographic), then the lower ones ``E_ji``
  in the same order. ``sl2()`` renames ``(h1, E12, E21)`` to ``(h, e, f)``.
* ``gl(n)``: all ``E_ij`` in lexicographic order.
"""
from __future__ import annotations

from functools import lru_cache

from ..errors import InputError
from ..linalg import diag, elementary, msub
from .algebra import LieAlgebra, from_matrices
from .subalgebra import Subalgebra, from_matrices as sub_from_matrices


def _sl_basis(n: int):
    names, mats = [], []
    for i in range(n - 1):
        names.append(f"h{i + 1}")
        mats.append(msub(elementary(n, i, i), elementary(n, i + 1, i + 1)))
    upper = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for i, j in upper:
        names.append(f"E{i + 1}{j + 1}")
        mats.append(elementary(n, i, j))
    for i, j in upper:
        names.append(f"E{j + 1}{i + 1}")
        mats.append(elementary(n, j, i))
    return names, mats


@lru_cache(maxsize=None)
def sl(n: int) -> LieAlgebra:
    if n < 2:
        raise InputError("sl(n) needs n >= 2")
    names, mats = _sl_basis(n)
    if n == 2:
        names = ["h", "e", "f"]
        return from_matrices("sl2", names, mats)
    return from_matrices(f"sl{n}", names, mats)


def sl2() -> LieAlgebra:
    return sl(2)


def sl3() -> LieAlgebra:
    return sl(3)


@lru_cache(maxsize=None)
def gl(n: int) -> LieAlgebra:
    if not 1 <= n <= 4:
        raise InputError("gl(n) is built in for 1 <= n <= 4")
    names = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    mats = [elementary(n, i, j) for i in range(n) for j in range(n)]
    return from_matrices(f"gl{n}", names, mats)


BUILTIN_ALGEBRAS = {
    "sl2": lambda: sl(2),
    "sl3": lambda: sl(3),
    "sl4": lambda: sl(4),
    "gl1": lambda: gl(1),
    "gl2": lambda: gl(2),
    "gl3": lambda: gl(3),
    "gl4": lambda: gl(4),
}


def builtin(name: str) -> LieAlgebra:
    try:
        return BUILTIN_ALGEBRAS[name]()
    except KeyError:
        raise InputError(f"unknown built-in algebra {name!r}; known: {sorted(BUILTIN_ALGEBRAS)}") from None


def diagonal_torus(n: int) -> Subalgebra:
    """Traceless diagonal matrices in sl(n)."""
    L = sl(n)
    return sub_from_matrices(L, [msub(elementary(n, i, i), elementary(n, i + 1, i + 1)) for i in range(n - 1)])


def borel(n: int) -> Subalgebra:
    """Upper-triangular traceless matrices in sl(n)."""
    L = sl(n)
    mats = [msub(elementary(n, i, i), elementary(n, i + 1, i + 1)) for i in range(n - 1)]
    mats += [elementary(n, i, j) for i in range(n) for j in range(i + 1, n)]
    return sub_from_matrices(L, mats)


def heisenberg_sl3() -> Subalgebra:
    """span{E12, E13, E23} in sl3."""
    return sub_from_matrices(sl(3), [elementary(3, 0, 1), elementary(3, 0, 2), elementary(3, 1, 2)])


def top_left_sl2(n: int = 3) -> Subalgebra:
    """The copy of sl2 in the top-left 2x2 block of sl(n)."""
    return sub_from_matrices(
        sl(n), [msub(elementary(n, 0, 0), elementary(n, 1, 1)), elementary(n, 0, 1), elementary(n, 1, 0)]
    )


def diagonal_line(weights) -> Subalgebra:
    """The line spanned by diag(weights) in sl(n) (weights must sum to zero)."""
    n = len(weights)
    return sub_from_matrices(sl(n), [diag(weights)])
