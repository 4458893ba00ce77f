"""Canon words, rectangular standard Young tableaux, and descent bijections.

The package provides exact (integer and rational) tools for three layers of
the same story: multiset permutations whose voices coincide, the rectangular
tableaux they biject with, and the block-rewriting bijections that reduce
arbitrary row relabelings to layered ones.  On top sit the counting
polynomials (Eulerian, generalized Narayana, canon) and a verification
driver that checks the product identities between them by exhaustive
enumeration.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .words import (
    InternalInvariantError,
    descent_set,
    enumerate_permutations,
    is_canon,
    plateau_set,
    reverse_layered,
    transposition_schedule,
    voice,
)
from .tableaux import (
    DyckPath,
    LabeledMatching,
    RectTableau,
    canon_to_tableau,
    canon2_to_matching,
    des_set,
    des_sigma_set,
    asc_set,
    plat_set,
    enumerate_tableaux,
    syt_count,
    syt2_to_dyck,
    tableau_from_grid,
    tableau_from_word,
    tableau_to_canon,
    tableau_to_grid,
)
from .bijections import (
    F_rs,
    F_sigma,
    f_rs,
    f_sigma,
    g_S,
    g_lm,
    phi_sigma,
)
from .polynomials import (
    BivariatePolynomial,
    canon_poly,
    canon_poly_sigma,
    eulerian,
    gen_narayana,
    narayana_dyck,
    sulanke_count,
)
from .series import verify_eulerian_egf, verify_narayana_gf
from .verify import run_suite, run_suites

__all__ = [
    name for name in dir() if not name.startswith("_") and name != "annotations"
]
