"""Exact combinatorics of complete increasing (secant/tangent) trees.

The package enumerates the trees, computes the joint distribution of the
chain-end and max-leaf-parent statistics by brute force, reproduces it
analytically through second-difference recurrences, extracts the same
numbers from exact trigonometric generating functions, and cross-verifies
all three routes together with the constructive bijections behind them.
"""

from .bijections import (
    MAP_VERIFIERS,
    MapReport,
    PreconditionError,
    entringer_map,
    first_row_map,
    pom1_map,
    rightmost_column_map,
    tripling_map,
)
from .distributions import (
    EntringerTriangle,
    JointMatrix,
    OddSizeError,
    UnknownCellError,
    delta_k,
    delta_m,
    ent_distribution,
    entringer_bruteforce,
    joint_matrix_bruteforce,
    marginals,
)
from .recurrence import (
    MissingPredecessorError,
    MissingUpperError,
    NegativeCellError,
    RecurrenceEngine,
    assemble,
    check_symmetry,
    column_sums,
    entringer_triangle,
    lower_border,
    secant_numbers,
    tree_count,
    upper_triangle,
)
from .series import (
    NotAPoupardSolutionError,
    OutOfOrderError,
    PoupardGrid,
    TriSeries,
    VarMismatchError,
    ZeroConstantTermError,
    cell_to_exponents,
    compose_linear,
    cos_linear,
    exponents_to_cell,
    omega,
    omega1,
    omega_grid_from_counts,
    omega_p,
    pde_check,
    pde_residual,
    poupard_check,
    reconstruct_from_rows,
    row_series,
    sec_series,
    sin_linear,
)
from .trees import (
    BadArityError,
    BadLabelsError,
    IncTree,
    InconsistentError,
    NotAlternatingError,
    NotIncreasingError,
    StatRecord,
    StatUndefinedError,
    TreeError,
    alternating_permutations,
    enumerate_trees,
    is_alternating,
    tree_from_perm,
    word_stats,
)

__all__ = [name for name in dir() if not name.startswith("_")]
