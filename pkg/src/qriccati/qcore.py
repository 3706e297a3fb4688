"""Basic q-objects: q-numbers, q-factorials, q-Pochhammer products."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

from . import kernels
from .errors import ConvergenceError, QDomainError

Q_RANGE_MESSAGE = "q must lie in (0,1)"


@dataclass(frozen=True)
class QBase:
    value: float

    def __post_init__(self):
        v = self.value
        if not isinstance(v, (int, float)) or not (0.0 < v < 1.0):
            raise QDomainError(Q_RANGE_MESSAGE)
        object.__setattr__(self, "value", float(v))

    def __float__(self):
        return self.value


QLike = Union[QBase, float]


def qvalue(q: QLike) -> float:
    """Validate ``q`` and return it as a float."""
    if isinstance(q, QBase):
        return q.value
    try:
        v = float(q)
    except (TypeError, ValueError):
        raise QDomainError(Q_RANGE_MESSAGE) from None
    if not (0.0 < v < 1.0):
        raise QDomainError(Q_RANGE_MESSAGE)
    return v


@dataclass(frozen=True)
class TruncationPolicy:
    """Stop once ``consecutive_small`` terms fall below ``rel_term_cutoff``
    relative to the partial result; give up after ``max_terms``."""

    rel_term_cutoff: float = 1e-16
    consecutive_small: int = 3
    max_terms: int = 500

    def __post_init__(self):
        if self.rel_term_cutoff <= 0 or self.consecutive_small < 1 or self.max_terms < 1:
            raise ValueError("invalid truncation policy")


DEFAULT_POLICY = TruncationPolicy()


class Truncated(NamedTuple):
    value: float
    terms: int
    tail_bound: float


def q_number(n: float, q: QLike) -> float:
    """[n]_q = (1 - q^n) / (1 - q) for n >= 0; real n is accepted for [nu]_q."""
    qv = qvalue(q)
    if n < 0:
        raise QDomainError("q-number needs n >= 0")
    return -math.expm1(n * math.log(qv)) / (1.0 - qv)


def q_factorial(n: int, q: QLike) -> float:
    qv = qvalue(q)
    if int(n) != n or n < 0:
        raise QDomainError("q-factorial needs a nonnegative integer")
    p = 1.0
    for k in range(1, int(n) + 1):
        p *= (1.0 - qv**k) / (1.0 - qv)
    return p


def q_pochhammer(a: float, q: QLike, n: int) -> float:
    """(a; q)_n for integer n >= 0."""
    qv = qvalue(q)
    if int(n) != n or n < 0:
        raise QDomainError("finite q-Pochhammer needs a nonnegative integer length")
    return kernels.poch(float(a), qv, int(n))


def q_pochhammer_inf_detail(a: float, q: QLike, policy: TruncationPolicy = DEFAULT_POLICY) -> Truncated:
    """(a; q)_oo with the number of factors used and a relative tail bound."""
    qv = qvalue(q)
    value, terms, tail, status = kernels.poch_inf(
        float(a), qv, policy.rel_term_cutoff, policy.consecutive_small, policy.max_terms
    )
    if status != kernels.OK:
        raise ConvergenceError(f"(a;q)_oo not converged in {policy.max_terms} factors (a={a}, q={qv})")
    return Truncated(value, terms, tail)


def q_pochhammer_inf(a: float, q: QLike, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    return q_pochhammer_inf_detail(a, q, policy).value


def q_gamma_int(n: int, q: QLike) -> float:
    """Gamma_q(n) = [n-1]_q! at positive integers; poles at n <= 0."""
    qvalue(q)
    if int(n) != n:
        raise QDomainError("q-Gamma is implemented at integer arguments only")
    if n <= 0:
        raise QDomainError("q-Gamma has poles at nonpositive integers")
    return q_factorial(int(n) - 1, q)
