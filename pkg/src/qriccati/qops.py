"""q-difference operators and the Jackson q-integral."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

from .errors import ConvergenceError, QDomainError
from .qcore import DEFAULT_POLICY, QLike, Truncated, TruncationPolicy, qvalue


@dataclass(frozen=True)
class Domain:
    lo: float = -math.inf
    hi: float = math.inf
    lo_closed: bool = False
    hi_closed: bool = False
    punctured: bool = False  # excludes x = 0

    def __contains__(self, x: float) -> bool:
        if self.punctured and x == 0.0:
            return False
        if x < self.lo or (x == self.lo and not self.lo_closed):
            return False
        if x > self.hi or (x == self.hi and not self.hi_closed):
            return False
        return True


REAL = Domain()
POSITIVE = Domain(lo=0.0)
PUNCTURED = Domain(punctured=True)


@dataclass(frozen=True)
class RealFunction:
    fn: Callable[[float], float]
    domain: Domain = REAL
    name: str = ""

    def __call__(self, x: float) -> float:
        if x not in self.domain:
            raise QDomainError(f"{self.name or 'function'} undefined at x={x}")
        return self.fn(x)


Func = Union[RealFunction, Callable[[float], float]]


def dq(f: Func, x: float, q: QLike) -> float:
    """D_q f(x) = (f(x) - f(qx)) / ((1 - q) x)."""
    qv = qvalue(q)
    if x == 0:
        raise QDomainError("D_q is not defined at x = 0")
    return (f(x) - f(qv * x)) / ((1.0 - qv) * x)


def dq_inv(f: Func, x: float, q: QLike) -> float:
    """D_{q^-1} f(x) = (f(x) - f(x/q)) / ((1 - 1/q) x), i.e. D_q f at x/q."""
    qv = qvalue(q)
    if x == 0:
        raise QDomainError("D_{q^-1} is not defined at x = 0")
    return (f(x) - f(x / qv)) / ((1.0 - 1.0 / qv) * x)


def jackson_integral_detail(f: Func, a: float, q: QLike, policy: TruncationPolicy = DEFAULT_POLICY) -> Truncated:
    """(1 - q) a sum_n q^n f(a q^n), with terms used and a tail estimate.

    The tail estimate assumes |f| does not grow toward 0 beyond its last
    sampled value, which holds for every integrand that is bounded near 0.
    """
    qv = qvalue(q)
    if a == 0:
        return Truncated(0.0, 0, 0.0)
    total = 0.0
    small = 0
    w = 1.0
    last = 0.0
    for n in range(policy.max_terms):
        t = w * f(a * w)
        total += t
        last = abs(t)
        if last <= policy.rel_term_cutoff * abs(total):
            small += 1
            if small >= policy.consecutive_small:
                scale = (1.0 - qv) * a
                tail = abs(scale) * last * qv / (1.0 - qv)
                return Truncated(scale * total, n + 1, tail)
        else:
            small = 0
        w *= qv
    raise ConvergenceError(f"Jackson sum not converged in {policy.max_terms} terms (a={a}, q={qv})")


def jackson_integral(f: Func, a: float, q: QLike, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    return jackson_integral_detail(f, a, q, policy).value


def antiderivative_residual(F: Func, f: Func, x: float, q: QLike, floor: float = 1.0) -> float:
    """Scale-normalized defect of D_q F = f at x.

    Scale is max(|f(x)|, |D_q F(x)|, floor).
    """
    d = dq(F, x, q)
    v = f(x)
    return (d - v) / max(abs(v), abs(d), floor)
