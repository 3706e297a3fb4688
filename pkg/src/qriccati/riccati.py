"""q-Riccati fragments and the identity builders they feed.

For a D_{q^-1}-type equation (1/q)D_{q^-1}D_q y + p D_{q^-1}y + r y = 0 with
weight f solving (1/q)D_{q^-1} f = p f, any u and any h with D_q h = u h give

    D_q [ f(x/q) h(x/q) (y(x/q) u(x/q) - D_{q^-1} y(x)) ] = f(x) h(x/q) S_q(x) y(x),

    S_q = (1/q)D_{q^-1}u + (1/q) u(x) u(x/q) + A u(x/q) + r,
    A   = p - (1/q) x (1-q) r.

The D_q-type analogue uses weight F with D_q F = p F, companion k with
D_{q^-1} k = u k and

    D_q [ F(x) k(x) (y(x) u(x) - D_{q^-1} y(x)) ] = F(x) k(qx) T_q(x) y(x),

    T_q = D_q u + u(x) u(qx) + A~ u(qx) + r,   A~ = p + x (1-q) r.

A fragment is a choice of u that makes S_q (or T_q) simple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from .errors import QDomainError
from .qcore import DEFAULT_POLICY, QLike, TruncationPolicy, q_pochhammer_inf, qvalue
from .qops import POSITIVE, PUNCTURED, REAL, RealFunction, dq, dq_inv, jackson_integral
from .qspecial import Middle, OdeCoefficients


class FragmentKind(Enum):
    TRIVIAL = "trivial"
    BERNOULLI = "bernoulli"
    LINEAR = "linear"
    ALGEBRAIC = "algebraic"


@dataclass(frozen=True)
class RiccatiSystem:
    coeffs: OdeCoefficients
    weight: RealFunction  # f for D_{q^-1}-type, F for D_q-type

    @property
    def middle(self) -> Middle:
        return self.coeffs.middle


@dataclass(frozen=True)
class FragmentSolution:
    kind: FragmentKind
    u: RealFunction
    companion: RealFunction  # h (D_q h = u h) or k (D_{q^-1} k = u k)
    params: dict = field(default_factory=dict)


def coeff_A(system: RiccatiSystem, x: float, q: QLike) -> float:
    qv = qvalue(q)
    return system.coeffs.p(x) - x * (1 - qv) * system.coeffs.r(x) / qv


def coeff_A_tilde(system: RiccatiSystem, x: float, q: QLike) -> float:
    qv = qvalue(q)
    return system.coeffs.p(x) + x * (1 - qv) * system.coeffs.r(x)


def residual_S(system: RiccatiSystem, u: Callable[[float], float], x: float, q: QLike) -> float:
    qv = qvalue(q)
    u0 = u(x)
    u_hi = u(x / qv)
    return dq_inv(u, x, qv) / qv + u0 * u_hi / qv + coeff_A(system, x, qv) * u_hi + system.coeffs.r(x)


def residual_T(system: RiccatiSystem, u: Callable[[float], float], x: float, q: QLike) -> float:
    qv = qvalue(q)
    u0 = u(x)
    u_lo = u(qv * x)
    return dq(u, x, qv) + u0 * u_lo + coeff_A_tilde(system, x, qv) * u_lo + system.coeffs.r(x)


def riccati_residual_scale(system: RiccatiSystem, u: Callable[[float], float], x: float, q: QLike) -> float:
    """Largest magnitude among the terms of S_q or T_q at x (for normalization)."""
    qv = qvalue(q)
    r = system.coeffs.r(x)
    u0 = u(x)
    if system.middle is Middle.DQ_INV:
        u1 = u(x / qv)
        terms = (dq_inv(u, x, qv) / qv, u0 * u1 / qv, coeff_A(system, x, qv) * u1, r)
    else:
        u1 = u(qv * x)
        terms = (dq(u, x, qv), u0 * u1, coeff_A_tilde(system, x, qv) * u1, r)
    return max(abs(t) for t in terms)


# fragments -----------------------------------------------------------------

def trivial_fragment() -> FragmentSolution:
    """u = 0, h = 1: S_q reduces to r."""
    return FragmentSolution(FragmentKind.TRIVIAL, RealFunction(lambda x: 0.0), RealFunction(lambda x: 1.0))


def bernoulli_fragment(c: float) -> FragmentSolution:
    """u = 1/(x + c) kills the derivative and quadratic parts of S_q and T_q.

    The companion is 1 + x/c (or x when c = 0) for both operator types.
    """
    u = RealFunction(lambda x: 1.0 / (x + c), name="1/(x+c)")
    if c == 0:
        h = RealFunction(lambda x: x)
    else:
        h = RealFunction(lambda x: 1.0 + x / c)
    return FragmentSolution(FragmentKind.BERNOULLI, u, h, {"c": c})


def _integer_power(m: float):
    k = round(m)
    return k if abs(m - k) < 1e-9 else None


def algebraic_fragment(a: float, b: float, middle: Middle, q: QLike,
                       policy: TruncationPolicy = DEFAULT_POLICY) -> FragmentSolution:
    """u = a/x + b with the companion matching the system type ``middle``.

    D_{q^-1} systems need D_q h = u h:  h = x^m / (beta x; q)_oo,
        q^m = 1 - (1-q)a,  beta = (1-q) b / q^m.
    D_q systems need D_{q^-1} k = u k:  k = x^m (-gamma x; q)_oo,
        q^-m = 1 + (1-q)a/q,  gamma = (1-q) b q^m.
    """
    qv = qvalue(q)
    if middle is Middle.DQ_INV:
        c = 1 - (1 - qv) * a
    else:
        c = 1 / (1 + (1 - qv) * a / qv)
    if c <= 0:
        raise QDomainError("algebraic fragment needs a real power: 1 - (1-q)a must be positive")
    m = math.log(c) / math.log(qv)
    k = _integer_power(m)
    if k is not None:
        power = lambda x: x**k
        dom = REAL
    else:
        power = lambda x: x**m
        dom = POSITIVE
    if b == 0:
        comp = power
    elif middle is Middle.DQ_INV:
        beta = (1 - qv) * b / c
        comp = lambda x: power(x) / q_pochhammer_inf(beta * x, qv, policy)
    else:
        gamma = (1 - qv) * b * c
        comp = lambda x: power(x) * q_pochhammer_inf(-gamma * x, qv, policy)
    u = RealFunction(lambda x: a / x + b, PUNCTURED, name="a/x+b")
    return FragmentSolution(FragmentKind.ALGEBRAIC, u, RealFunction(comp, dom), {"a": a, "b": b, "power": m})


def linear_fragment_u(system: RiccatiSystem, x: float, q: QLike,
                      policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """u(x) = -(1/f(x)) * int_0^{qx} f(t) r(t) d_qt.

    Solves the linear fragment (1/q)D_{q^-1}u + p u(x/q) + r = 0; what remains
    of S_q is (1/q)u(x)u(x/q) - (1/q)x(1-q) r u(x/q).
    """
    qv = qvalue(q)
    if system.middle is not Middle.DQ_INV:
        raise QDomainError("linear fragment is defined for D_{q^-1}-type systems")
    f = system.weight
    r = system.coeffs.r
    integral = jackson_integral(lambda t: f(t) * r(t), qv * x, qv, policy)
    return -integral / f(x)


def v_construction(g: Callable[[float], float], x: float, q: QLike,
                   policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """v(x) = g(x) * int_0^x d_qt / g(t)."""
    qv = qvalue(q)
    return g(x) * jackson_integral(lambda t: 1.0 / g(t), x, qv, policy)


# identity builders ---------------------------------------------------------

def identity_rhs_first(system: RiccatiSystem, frag: FragmentSolution, y: Callable[[float], float],
                       dqinv_y: Callable[[float], float], x: float, q: QLike) -> float:
    """f(x/q) h(x/q) (y(x/q) u(x/q) - D_{q^-1} y(x))."""
    qv = qvalue(q)
    xs = x / qv
    return system.weight(xs) * frag.companion(xs) * (y(xs) * frag.u(xs) - dqinv_y(x))


def identity_integrand_first(system: RiccatiSystem, frag: FragmentSolution, y: Callable[[float], float],
                             x: float, q: QLike) -> float:
    """f(x) h(x/q) S_q(x) y(x), with S_q evaluated numerically from u."""
    qv = qvalue(q)
    return system.weight(x) * frag.companion(x / qv) * residual_S(system, frag.u, x, qv) * y(x)


def identity_rhs_second(system: RiccatiSystem, frag: FragmentSolution, y: Callable[[float], float],
                        dqinv_y: Callable[[float], float], x: float, q: QLike) -> float:
    """F(x) k(x) (y(x) u(x) - D_{q^-1} y(x))."""
    return system.weight(x) * frag.companion(x) * (y(x) * frag.u(x) - dqinv_y(x))


def identity_integrand_second(system: RiccatiSystem, frag: FragmentSolution, y: Callable[[float], float],
                              x: float, q: QLike) -> float:
    """F(x) k(qx) T_q(x) y(x)."""
    qv = qvalue(q)
    return system.weight(x) * frag.companion(qv * x) * residual_T(system, frag.u, x, qv) * y(x)
