"""Numerical q-calculus: q-series, q-special functions, q-Riccati fragments
and a verifier for the indefinite q-integrals they generate."""

from .errors import CatalogError, ConvergenceError, QDomainError, SingularityError, UnsupportedOperation
from .kernels import BACKEND, available_backends, use_backend
from .qcore import (
    DEFAULT_POLICY,
    QBase,
    TruncationPolicy,
    q_factorial,
    q_gamma_int,
    q_number,
    q_pochhammer,
    q_pochhammer_inf,
)
from .qhyper import PhiSeries, phi, terminating_degree
from .qops import Domain, RealFunction, antiderivative_residual, dq, dq_inv, jackson_integral

__version__ = "0.1.0"
