"""Exact Casson-Walker and NTheta invariants of rational homology spheres.

Dedekind sums, lens-space eta invariants evaluated in cyclotomic fields,
Alexander-polynomial surgery weights and the rational surgery-chain engine.
"""

from .alexander import (
    TREFOIL,
    UNKNOT,
    SymmetricLaurent,
    evaluate_at_one,
    gamma_of,
    induce_knot_complement_poly,
    parse_poly,
    surgery_weight,
    theta_zero_surgery,
    validate,
)
from .dedekind import dedekind_sum, dedekind_sum_cotangent, reciprocity_defect, sawtooth
from .exactnum import (
    CyclotomicNumber,
    IntPolynomial,
    cyc_arith,
    cyc_inverse,
    cyc_to_float,
    cyclotomic_polynomial,
    to_rational,
    trig_value,
)
from .lens import (
    LensInvariantReport,
    LensSpec,
    corr_y,
    eta_dirac,
    eta_signature,
    fixed_point_term,
    lens_lambda,
    ntheta_lens,
    ntheta_spectrum,
)
from .surgery import (
    ChainReport,
    ManifoldState,
    SurgeryStep,
    apply_step,
    casson_integral_chain,
    epsilon_prime,
    run_chain,
)

__version__ = "0.1.0"
