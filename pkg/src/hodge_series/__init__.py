"""Exact two-variable Hodge-Poincare series for moduli of principal bundles
on smooth projective curves, for products of classical groups.

Quick start::

    from hodge_series import parse_group, hp_semistable_closed
    spec = parse_group("GL2")
    f = hp_semistable_closed(spec, (1,), g=2)   # exact rational function
    f.expand(6)                                 # truncated power series
"""

from .formulas import (
    NotCoprime,
    NotGoodCase,
    a_series,
    chi_t_fixed_det_formula,
    hp_classifying,
    hp_moduli_fixed_det,
    hp_moduli_space,
    hp_semistable_classical,
    hp_semistable_classical_series,
    hp_semistable_closed,
    hp_semistable_closed_series,
    specialize,
    stack_poincare_series,
)
from .ratfun import (
    BivarPoly,
    RatFun1,
    RatFun2,
    TruncSeries2,
    UniPoly,
    cancel_factor,
    expand_series,
    substitute,
    to_polynomial,
)
from .recursion import (
    HNType,
    codim,
    enumerate_hn_types,
    hn_gl_oracle,
    hn_types_to_csv,
    recursion_rhs,
    verify_recursion,
)
from .rootdata import (
    GroupSpec,
    RootSystem,
    build_root_system,
    exponents_of,
    frac_rep,
    fund_weight_mod_Z,
    good_case,
    levi_datum,
    parse_degree,
    parse_group,
    project_to_center,
    rho_pairing,
)
from .vhs import (
    PeriodMatrix,
    QC,
    basis_change_consistent,
    theta_coefficients,
    validate_period_matrix,
)

__version__ = "0.1.0"
