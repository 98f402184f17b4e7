"""Conformable fractional Gauss hypergeometric function and its equation."""

from .analytic import (
    LaplaceQuery,
    QuadratureSpec,
    conf_integral_2f1_closed,
    euler_integral_eval,
    frac_laplace_2f1_series,
    frac_laplace_numeric,
    laplace_shifted_2f1,
    laplace_t_sin,
)
from .apps import NamedEquation, Reduction, conf_legendre, reduce_to_cfghe
from .cfghe import (
    OdeResidual,
    SolutionBranch,
    cfghe_residual,
    frobenius_coeffs,
    indicial_roots,
    solutions_at_infinity,
    solutions_at_one,
    solutions_at_zero,
)
from .confcalc import FracSeries, conf_diff_numeric, conf_integral_numeric, series_diff, theta_apply
from .errors import (
    CfhypError,
    DegenerateRoot,
    DomainError,
    InsufficientSamples,
    NoConvergence,
    NonFinite,
    PoleError,
    QuadFailure,
    TailTooFat,
)
from .hypercore import EvalResult, Params, Region, domain_check, eval_2f1, pochhammer
from .relations import RelationReport, TruncPolicy, eval_relation_sides, verify_relation

__version__ = "0.1.0"
