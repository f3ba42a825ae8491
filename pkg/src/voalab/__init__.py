"""Exact-arithmetic lab for a rank-one even lattice vertex algebra, its
reflection-even subalgebra, and the order-3 orbifold of that subalgebra.

The package computes vertex-operator modes, invariant pairings, shifted
(twisted) sector gradings, and character decompositions over the exact
coefficient field Q(i, sqrt 2, sqrt 3), and ships a catalog of
machine-checked structural identities with a command line front end.
"""

from .exactfield import ONE, ZERO, Scalar, as_rational, rat, sc, sixth_root, sqrt2_power
from .exprparse import parse_scalar_expr, parse_state_expr
from .fockspace import State, graded_states, named_vector, theta, theta_even_states
from .structure import (
    VirasoroWord, build_u16, c_functional, decompose_over, fixed_subspace,
    gram_rational, is_primary, pair, vacuum_words, word_states,
)
from .vertexengine import (
    ModeLegalityError, RationalPowerSeries, delta_apply, mode_apply,
    mode_apply_theta_even, twisted_mode_apply, twisted_weight, virasoro_mode,
    zero_mode_decompose, zero_mode_exp,
)
from .sectors import (
    QSeries, char_L1, char_series, decompose_quarter_module, graded_dim,
    module_catalog, multiplet_spectrum_table, sector_top, sigma,
    top_level_eigenvalue, twisted_sector,
)
from .paperlab import (
    CheckResult, CheckSpec, DEFAULT_CONFIG, PAPER_MAP, Report, all_checks,
    emit_report, get_check, run_checks,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "ONE", "ZERO", "Scalar", "as_rational", "rat", "sc", "sixth_root",
    "sqrt2_power", "parse_scalar_expr", "parse_state_expr", "State",
    "graded_states", "named_vector", "theta", "theta_even_states",
    "VirasoroWord", "build_u16", "c_functional", "decompose_over",
    "fixed_subspace", "gram_rational", "is_primary", "pair", "vacuum_words",
    "word_states", "ModeLegalityError", "RationalPowerSeries", "delta_apply",
    "mode_apply", "mode_apply_theta_even", "twisted_mode_apply",
    "twisted_weight", "virasoro_mode", "zero_mode_decompose", "zero_mode_exp",
    "QSeries", "char_L1", "char_series", "decompose_quarter_module",
    "graded_dim", "module_catalog", "multiplet_spectrum_table", "sector_top",
    "sigma", "top_level_eigenvalue", "twisted_sector", "CheckResult",
    "CheckSpec", "DEFAULT_CONFIG", "PAPER_MAP", "Report", "all_checks",
    "emit_report", "get_check", "run_checks",
]
