"""Exact Hilbert depth computations for the Koszul syzygy modules M(n,k)."""

from ._core import (
    InconsistencyError,
    __version__,
    binomial,
    bound_lower,
    bound_upper,
    boundary_squared_zero,
    closed_form,
    coeff_sum1,
    coeff_sum2,
    decompose,
    depth_table,
    expand_quotient,
    gamma_curve,
    generic_rank,
    hdepth,
    numerator_std,
    positivity,
    predict,
    search_hooks,
    solve_gamma,
    table_csv,
    verify_hilbert_decomposition,
    verify_stanley,
)

__all__ = [
    "InconsistencyError",
    "__version__",
    "binomial",
    "bound_lower",
    "bound_upper",
    "boundary_squared_zero",
    "closed_form",
    "coeff_sum1",
    "coeff_sum2",
    "decompose",
    "depth_table",
    "expand_quotient",
    "gamma_curve",
    "generic_rank",
    "hdepth",
    "numerator_std",
    "positivity",
    "predict",
    "search_hooks",
    "solve_gamma",
    "table_csv",
    "verify_hilbert_decomposition",
    "verify_stanley",
]
