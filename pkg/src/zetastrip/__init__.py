"""Extended-precision evaluation of the Riemann zeta function in the critical
strip through exact contour representations and all-orders asymptotic
expansions, with an Euler-Maclaurin oracle and a table harness."""

from .config import DEFAULT_DELTA, DEFAULT_PRECISION_BITS, DEFAULT_QUAD_TOL, REGIME_A, harness_precision
from .errors import (
    DegenerateSeries,
    InvalidOrder,
    NearSingularU,
    OutOfAsymptoticRange,
    PoleAt,
    PrecisionMismatch,
    QuadratureFailure,
    RegimeViolation,
    SumCapExceeded,
    TooCloseToLatticePoint,
    ZetaStripError,
)
from .exact import basic_sum_pv, basic_sum_rotated, basic_sum_semicircle, gl_gu, zeta_exact
from .expansions import (
    an_coefficients,
    ck_coefficients,
    operator_sum,
    phi_series_coeffs,
    psi_series_coeffs,
    zeta_confluent,
    zeta_large_eta_mirror,
    zeta_region1,
    zeta_small_eta,
    zeta_sqrt_mirror,
    zeta_sqrt_region,
)
from .hp import ComplexHP, EvalResult, StripPoint
from .jets import Jet, jet_reversion
from .oracle import zeta_reference, zeta_reference_result, zeta_truncated_dirichlet
from .phi import PhiArg, phi_from_psi, phi_jet, phi_quadrature, phi_rational, psi_siegel
from .quadrature import LinePath, RayPath, SegmentPath, SemicirclePath, integrate_path
from .sigma_rational import SigmaRational, sigma_rational_derive
from .special import ChiAsymptotic, chi, chi_asymptotic, gamma, gamma1ms_asymptotic, polylog_unit
from .sums import SumRange, sum_direct, sum_th51, sum_th52, sum_th53
from .tables import TABLES, TableCell, TableSpec, run_table

__version__ = "0.1.0"
