"""Exact Rees algebras of modules over quotients of polynomial rings.

Polynomial arithmetic over GF(p) and QQ, Buchberger bases, modules over
``P/I``, versal maps, Rees algebras of modules and maps, integrality and
analytic spread, plus a small scripting front end (:mod:`reeskernel.cli`).
"""

__version__ = "0.1.0"

from .coefficients import Field, FieldElement, FieldError  # noqa: E402
from .polyring import Ideal, MonomialOrder, Polynomial, PolyRing, RingMismatch, render  # noqa: E402
from .groebner import (INFINITE, GroebnerBasis, QuotientRing, buchberger, eliminate,  # noqa: E402
                       hilbert_by_degree, ideal_member, k_dimension, krull_dim, normal_form,
                       radical_member, ring_map_kernel)
from .freemod import ModuleVector, PolyMatrix, Submodule, matrix_kernel, syzygies  # noqa: E402
from .modpres import (ModuleMap, ModulePresentation, dual_module, min_generators,  # noqa: E402
                      versal_map)
from .rees import (Comparison, ReesPresentation, classical_ideal_rees, compare_rees,  # noqa: E402
                   rees_hilbert, rees_ideal, rees_of_map)
from .integrality import (IntegralityVerdict, Status, analytic_spread, graded_power,  # noqa: E402
                          integral_in, is_reduction)

__all__ = [
    "Field", "FieldElement", "FieldError", "Ideal", "MonomialOrder", "Polynomial", "PolyRing",
    "RingMismatch", "render", "INFINITE", "GroebnerBasis", "QuotientRing", "buchberger",
    "eliminate", "hilbert_by_degree", "ideal_member", "k_dimension", "krull_dim",
    "normal_form", "radical_member", "ring_map_kernel", "ModuleVector", "PolyMatrix",
    "Submodule", "matrix_kernel", "syzygies", "ModuleMap", "ModulePresentation",
    "dual_module", "min_generators", "versal_map", "Comparison", "ReesPresentation",
    "classical_ideal_rees", "compare_rees", "rees_hilbert", "rees_ideal", "rees_of_map",
    "IntegralityVerdict", "Status", "analytic_spread", "graded_power", "integral_in",
    "is_reduction",
]
