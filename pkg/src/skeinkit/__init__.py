"""skeinkit: exact computer algebra for the positive Homfly skein of the annulus.

Skein elements are symmetric functions over the fraction field of
Z[v^{±1}, s^{±1}], held canonically in the power-sum basis, with exact
transitions to the complete, elementary, Schur and Turaev closed-braid
bases, meridian and framing-twist operators, and the torus-cabling
plethysm formulas, all verified as exact identities.
"""

from .ring import (
    FormalSeries,
    LaurentPoly,
    RatFunc,
    SpecializationError,
    alpha,
    brace,
    delta_const,
    he_involution,
    mirror_coeff,
    psi_N,
    quantum_int,
    series_inverse,
    series_log,
    series_mul,
    specialize_slN,
)
from .partitions import (
    Hook,
    Partition,
    content_power_sum,
    content_sum,
    hooks_of,
    k_lambda,
    mn_character,
    omega,
    parse_partition,
    partitions_of,
    z_mu,
)
from .symfunc import (
    BASES,
    BasisExpansion,
    SymElement,
    complete,
    elementary,
    from_basis,
    jacobi_trudi,
    mul,
    plethysm_by_pm,
    power_sum,
    schur,
    to_basis,
)
from .skein import (
    FractionalExponentError,
    TwistExponent,
    X_elem,
    a_basis_expand,
    a_ij,
    abar,
    abar_coeff,
    abar_elem,
    delta_PN,
    delta_PN_star,
    delta_phi,
    delta_phibar,
    e_in_A,
    eval_a_monomial,
    fractional_twist,
    framing_twist,
    h_in_A,
    h_in_A_series,
    meridian_phi,
    meridian_phibar,
    mirror,
    theta_closed,
    theta_rec,
    turaev_A,
)
from .cabling import (
    CableSpec,
    CoprimalityError,
    cable_decorate,
    framing_change_identity,
    power_hopf_check,
    torus_power_sum,
)
from .expr import ExprParseError, parse_element
from .verify import DEFAULT_MAX, SUITES, run_suite

__version__ = "0.1.0"
