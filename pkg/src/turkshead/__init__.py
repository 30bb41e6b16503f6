"""Fox colorings of the Turk's head knots on three strands, THK(3, n).

Counting formulas with an exhaustive oracle, the psi divisibility map,
exact and estimated minimum numbers of colors, and the explicit low-color
constructions, all over Z_r.
"""

from .config import BudgetExceededError, RunConfig
from .mincol import (
    Determinant,
    MincolVerdict,
    SaitoClass,
    construct_even_psi,
    construct_odd_psi,
    count_colorings,
    determinant,
    estimate,
    has_nontrivial,
    mincol_bounds,
    mincol_exact,
    saito_classify,
)
from .psi import (
    PrimeStats,
    PsiValue,
    color_usage_ratio,
    min_common_prime_psi,
    p_divides_u,
    prime_psi_stats,
    psi_divides,
    psi_of_prime,
    psi_prime_bound,
)
from .seq import binet_u, u, u_mod, u_mod_stream, v, v_mod
from .thk import (
    Coloring,
    TransferMatrix,
    distinct_colors,
    enumerate_colorings,
    is_coloring,
    lift_coloring,
    min_colors_standard,
    propagate_block,
    stack_coloring,
    transfer_matrix,
)
from .zmod import gcd, legendre5, mod_inverse, primes_up_to, solution_count_linear

__version__ = "1.0.0"

__all__ = [
    "BudgetExceededError",
    "Coloring",
    "Determinant",
    "MincolVerdict",
    "PrimeStats",
    "PsiValue",
    "RunConfig",
    "SaitoClass",
    "TransferMatrix",
    "binet_u",
    "color_usage_ratio",
    "construct_even_psi",
    "construct_odd_psi",
    "count_colorings",
    "determinant",
    "distinct_colors",
    "enumerate_colorings",
    "estimate",
    "gcd",
    "has_nontrivial",
    "is_coloring",
    "legendre5",
    "lift_coloring",
    "min_colors_standard",
    "min_common_prime_psi",
    "mincol_bounds",
    "mincol_exact",
    "mod_inverse",
    "p_divides_u",
    "prime_psi_stats",
    "primes_up_to",
    "propagate_block",
    "psi",  # the submodule; its psi() function is turkshead.psi.psi
    "psi_divides",
    "psi_of_prime",
    "psi_prime_bound",
    "saito_classify",
    "solution_count_linear",
    "stack_coloring",
    "transfer_matrix",
    "u",
    "u_mod",
    "u_mod_stream",
    "v",
    "v_mod",
]
