"""Desingularized multiple zeta-functions.

Exact twisted (multiple) Bernoulli arithmetic over cyclotomic fields, the
coefficient tables of the entire shifted-zeta combination, and double
precision evaluators for the desingularized single and double zeta.
"""

from .cyclotomic import (
    CycloElement,
    RootOfUnity,
    frobenius_euler,
    negative_polylog,
    root_sum_twisted,
    twisted_bernoulli,
)
from .coeffs import CoeffTable, ShiftedCombination, combination, expand_G, expand_H, weight_check
from .exact import bernoulli_number, bernoulli_polynomial, binomial, pochhammer
from .numeric import (
    EvalResult,
    desing1,
    desing2,
    double_zeta,
    hurwitz_zeta,
    riemann_zeta,
    singularity_distance,
)
from .series import TruncatedSeries, build_E_product, build_H_r, build_tilde_H
from .values import (
    desing_value_exact,
    desing_value_oracle,
    desing_value_r2_closed,
    double_twisted_closed,
    lerch_special_value,
    twisted_multiple_bernoulli,
)

__version__ = "0.1.0"
