"""Basic hypergeometric series r phi s (Gasper-Rahman convention).

    r phi s(a_1..a_r; b_1..b_s; q, z)
        = sum_n (a_1..a_r; q)_n / (q, b_1..b_s; q)_n
                [(-1)^n q^{n(n-1)/2}]^{1+s-r} z^n

Terminating series (an upper parameter equal to q^{-m}) are summed exactly
to degree m; all others by the truncation policy with a ratio tail bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from . import kernels
from .errors import ConvergenceError, SingularityError
from .qcore import DEFAULT_POLICY, QLike, Truncated, TruncationPolicy, qvalue

TERMINATION_RTOL = 1e-12
MAX_TERMINATING_DEGREE = 200


def terminating_degree(upper: Sequence[float], q: QLike) -> Optional[int]:
    """Smallest m with some upper parameter equal to q^{-m}, else None."""
    qv = qvalue(q)
    lq = math.log(qv)
    best = None
    for a in upper:
        if a <= 0:
            continue
        m = round(-math.log(a) / lq)
        if 0 <= m <= MAX_TERMINATING_DEGREE and abs(a - qv**-m) <= TERMINATION_RTOL * abs(a):
            if best is None or m < best:
                best = m
    return best


@dataclass(frozen=True)
class PhiSeries:
    upper: tuple
    lower: tuple
    q: float
    z: float

    @property
    def r(self) -> int:
        return len(self.upper)

    @property
    def s(self) -> int:
        return len(self.lower)

    def evaluate(self, policy: TruncationPolicy = DEFAULT_POLICY) -> Truncated:
        return phi_detail(self.upper, self.lower, self.q, self.z, policy)


def phi_detail(upper: Sequence[float], lower: Sequence[float], q: QLike, z: float,
               policy: TruncationPolicy = DEFAULT_POLICY) -> Truncated:
    qv = qvalue(q)
    m = terminating_degree(upper, qv)
    stop = -1 if m is None else m
    value, terms, tail, status = kernels.phi_sum(
        [float(a) for a in upper], [float(b) for b in lower], qv, float(z), stop,
        policy.rel_term_cutoff, policy.consecutive_small, policy.max_terms,
    )
    if status == kernels.SINGULAR:
        raise SingularityError(f"lower parameter hits a pole at term {terms - 1}")
    if status == kernels.NOT_CONVERGED:
        raise ConvergenceError(
            f"{len(upper)}phi{len(lower)} not converged in {policy.max_terms} terms (z={z}, q={qv})"
        )
    return Truncated(value, terms, tail)


def phi(upper: Sequence[float], lower: Sequence[float], q: QLike, z: float,
        policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    return phi_detail(upper, lower, q, z, policy).value
