"""Exact computations for the quantized Picard-Vessiot example over Q(q)."""

from .qscalar import ONE, Q, ZERO, EvaluationError, QPoly, QScalar, eval_at, qbinom, qfact, qint
from .qtorus import (
    ExponentWindow,
    TorusElement,
    in_pv_ring,
    is_monomial,
    monomial_inverse,
    sigma,
    theta,
    theta1,
    torus_mul,
)

__version__ = "0.1.0"
