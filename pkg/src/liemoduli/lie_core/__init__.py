"""Exact-rational Lie algebra kernel."""
from .algebra import LieAlgebra, bracket, conjugate_structure, from_matrices, killing_form
from .builtins import borel, builtin, diagonal_line, diagonal_torus, gl, heisenberg_sl3, sl, sl2, sl3, top_left_sl2
from .jordan import JordanPair, is_semisimple_matrix, jordan_decompose
from .structure import (
    CATALOG,
    LeviResult,
    SemisimpleClass,
    find_sl2_triple,
    levi_semisimple_class,
    nilpotent_ideal,
    rank_of_solvable,
    semisimple_class,
    semisimple_class_leq,
    solvable_radical,
    unipotent_radical_via_killing,
)
from .subalgebra import (
    RadicalSeries,
    Subalgebra,
    centralizer,
    derived_subalgebra,
    full,
    generated,
    intersection,
    radical_series,
    span,
    zero,
)

__all__ = [
    "CATALOG",
    "JordanPair",
    "LeviResult",
    "LieAlgebra",
    "RadicalSeries",
    "SemisimpleClass",
    "Subalgebra",
    "borel",
    "bracket",
    "builtin",
    "centralizer",
    "conjugate_structure",
    "derived_subalgebra",
    "diagonal_line",
    "diagonal_torus",
    "find_sl2_triple",
    "from_matrices",
    "full",
    "generated",
    "gl",
    "heisenberg_sl3",
    "intersection",
    "is_semisimple_matrix",
    "jordan_decompose",
    "killing_form",
    "levi_semisimple_class",
    "nilpotent_ideal",
    "radical_series",
    "rank_of_solvable",
    "semisimple_class",
    "semisimple_class_leq",
    "sl",
    "sl2",
    "sl3",
    "solvable_radical",
    "span",
    "top_left_sl2",
    "unipotent_radical_via_killing",
    "zero",
]
