"""Special function families, their lowering relations and q-difference equations.

Every equation-bearing family satisfies

    (1/q) D_{q^-1} D_q y + p(x) M y + r(x) y = 0,

with M either D_{q^-1} or D_q. ``ode_coefficients`` returns (p, r, M).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Optional

from .errors import ConvergenceError, QDomainError, UnsupportedOperation
from .qcore import DEFAULT_POLICY, QLike, TruncationPolicy, q_number, q_pochhammer, q_pochhammer_inf, qvalue
from .qhyper import phi
from .qops import RealFunction


class Family(Enum):
    HERMITE_I = "hermite1"
    HERMITE_II = "hermite2"
    BIG_Q_LAGUERRE = "bigqlaguerre"
    Q_LAGUERRE = "qlaguerre"
    STIELTJES_WIGERT = "stieltjes"
    JACKSON_BESSEL2_SCALED = "jbessel2"
    JACKSON_BESSEL = "jbessel"
    Q_AIRY = "qairy"
    RAMANUJAN_A = "ramanujan"
    BIG_Q_LEGENDRE = "bigqlegendre"
    LITTLE_Q_LEGENDRE = "littleqlegendre"
    SIN_THIRD = "sin3"
    COS_THIRD = "cos3"
    SIN_Q = "sinq"
    COS_Q = "cosq"
    CAP_SIN_Q = "capsinq"
    CAP_COS_Q = "capcosq"


POLYNOMIAL = {
    Family.HERMITE_I, Family.HERMITE_II, Family.BIG_Q_LAGUERRE, Family.Q_LAGUERRE,
    Family.STIELTJES_WIGERT, Family.BIG_Q_LEGENDRE, Family.LITTLE_Q_LEGENDRE,
}

# families with a second-order q-difference equation
EQUATION_FAMILIES = POLYNOMIAL | {
    Family.JACKSON_BESSEL2_SCALED, Family.Q_AIRY, Family.RAMANUJAN_A,
    Family.SIN_THIRD, Family.COS_THIRD,
}


class Middle(Enum):
    DQ_INV = "DqInverse"
    DQ = "Dq"


@dataclass(frozen=True)
class SpecialFamily:
    tag: Family
    n: Optional[int] = None
    a: Optional[float] = None
    b: Optional[float] = None
    alpha: Optional[float] = None
    nu: Optional[float] = None
    kind: Optional[int] = None

    def __post_init__(self):
        t = self.tag
        if t in POLYNOMIAL:
            if self.n is None or int(self.n) != self.n or self.n < 0:
                raise QDomainError(f"{t.value} needs an integer degree n >= 0")
            object.__setattr__(self, "n", int(self.n))
        if t is Family.BIG_Q_LAGUERRE and (not self.a or not self.b):
            raise QDomainError("big q-Laguerre needs nonzero a and b")
        if t is Family.Q_LAGUERRE and (self.alpha is None or self.alpha <= -1):
            raise QDomainError("q-Laguerre needs alpha > -1")
        if t in (Family.JACKSON_BESSEL2_SCALED, Family.JACKSON_BESSEL):
            if self.nu is None or self.nu <= -1:
                raise QDomainError("Jackson q-Bessel needs nu > -1")
        if t is Family.JACKSON_BESSEL and self.kind not in (1, 2, 3):
            raise QDomainError("Jackson q-Bessel kind must be 1, 2 or 3")

    def lowered(self, **changes) -> "SpecialFamily":
        return replace(self, **changes)

    @property
    def has_equation(self) -> bool:
        return self.tag in EQUATION_FAMILIES


def hermite1(n: int) -> SpecialFamily:
    return SpecialFamily(Family.HERMITE_I, n=n)


def hermite2(n: int) -> SpecialFamily:
    return SpecialFamily(Family.HERMITE_II, n=n)


def big_q_laguerre(n: int, a: float, b: float) -> SpecialFamily:
    return SpecialFamily(Family.BIG_Q_LAGUERRE, n=n, a=a, b=b)


def q_laguerre(n: int, alpha: float) -> SpecialFamily:
    return SpecialFamily(Family.Q_LAGUERRE, n=n, alpha=alpha)


def stieltjes_wigert(n: int) -> SpecialFamily:
    return SpecialFamily(Family.STIELTJES_WIGERT, n=n)


def jackson_bessel2_scaled(nu: float) -> SpecialFamily:
    return SpecialFamily(Family.JACKSON_BESSEL2_SCALED, nu=nu)


def jackson_bessel(kind: int, nu: float) -> SpecialFamily:
    return SpecialFamily(Family.JACKSON_BESSEL, kind=kind, nu=nu)


def big_q_legendre(n: int) -> SpecialFamily:
    return SpecialFamily(Family.BIG_Q_LEGENDRE, n=n)


def little_q_legendre(n: int) -> SpecialFamily:
    return SpecialFamily(Family.LITTLE_Q_LEGENDRE, n=n)


Q_AIRY = SpecialFamily(Family.Q_AIRY)
RAMANUJAN_A = SpecialFamily(Family.RAMANUJAN_A)
SIN_THIRD = SpecialFamily(Family.SIN_THIRD)
COS_THIRD = SpecialFamily(Family.COS_THIRD)
SIN_Q = SpecialFamily(Family.SIN_Q)
COS_Q = SpecialFamily(Family.COS_Q)
CAP_SIN_Q = SpecialFamily(Family.CAP_SIN_Q)
CAP_COS_Q = SpecialFamily(Family.CAP_COS_Q)


# evaluators ----------------------------------------------------------------

def _ratio_series(first: float, ratio: Callable[[int], float], policy: TruncationPolicy) -> float:
    """Sum t_0 + t_1 + ... with t_{k+1} = t_k * ratio(k)."""
    term = first
    total = first
    small = 0
    for k in range(policy.max_terms):
        term *= ratio(k)
        total += term
        if term == 0.0 or abs(term) <= policy.rel_term_cutoff * abs(total):
            small += 1
            if small >= policy.consecutive_small:
                return total
        else:
            small = 0
    raise ConvergenceError(f"power series not converged in {policy.max_terms} terms")


def _power(x: float, nu: float) -> float:
    if float(nu).is_integer():
        return x ** int(nu)
    if x < 0:
        raise QDomainError(f"x^{nu} needs x >= 0 (got x={x})")
    return x**nu


def _hermite1(n: int, x: float, q: float) -> float:
    # x h_k = h_{k+1} + q^{k-1}(1 - q^k) h_{k-1}
    h0, h1 = 1.0, x
    if n == 0:
        return h0
    for k in range(1, n):
        h0, h1 = h1, x * h1 - q ** (k - 1) * (1.0 - q**k) * h0
    return h1


def _hermite2(n: int, x: float, q: float) -> float:
    # x h~_k = h~_{k+1} + q^{1-2k}(1 - q^k) h~_{k-1}
    h0, h1 = 1.0, x
    if n == 0:
        return h0
    for k in range(1, n):
        h0, h1 = h1, x * h1 - q ** (1 - 2 * k) * (1.0 - q**k) * h0
    return h1


def _three_term(n, x, A, C):
    # (x - 1) p_k = A(k) p_{k+1} - (A(k) + C(k)) p_k + C(k) p_{k-1}, p_0 = 1
    if n == 0:
        return 1.0
    p0, p1 = 1.0, 1.0 + (x - 1.0) / A(0)
    for k in range(1, n):
        a_k = A(k)
        c_k = C(k)
        p0, p1 = p1, ((x - 1.0 + a_k + c_k) * p1 - c_k * p0) / a_k
    return p1


def _big_q_laguerre(n, a, b, x, q):
    # 3phi2(q^-n, 0, x; aq, bq; q, q); the recurrence avoids the cancellation
    # of the alternating terminating sum
    return _three_term(
        n, x,
        lambda k: (1 - a * q ** (k + 1)) * (1 - b * q ** (k + 1)),
        lambda k: -a * b * q ** (k + 1) * (1 - q**k),
    )


def big_q_jacobi(n, a, b, c, x, q):
    """3phi2(q^-n, ab q^{n+1}, x; aq, cq; q, q) by its recurrence."""
    ab = a * b

    def A(k):
        return ((1 - a * q ** (k + 1)) * (1 - ab * q ** (k + 1)) * (1 - c * q ** (k + 1))
                / ((1 - ab * q ** (2 * k + 1)) * (1 - ab * q ** (2 * k + 2))))

    def C(k):
        return (-a * c * q ** (k + 1) * (1 - q**k) * (1 - b * q**k) * (1 - ab / c * q**k)
                / ((1 - ab * q ** (2 * k)) * (1 - ab * q ** (2 * k + 1))))

    return _three_term(n, x, A, C)


def _q_laguerre(n, alpha, x, q, policy):
    return phi([q**-n, -x], [0.0], q, q ** (n + alpha + 1), policy) / q_pochhammer(q, q, n)


def _stieltjes_wigert(n, x, q, policy):
    return phi([q**-n], [0.0], q, -(q ** (n + 1)) * x, policy) / q_pochhammer(q, q, n)


def _big_q_legendre(n, x, q):
    return big_q_jacobi(n, 1.0, 1.0, -1.0, x, q)


def _little_q_legendre(n, x, q, policy):
    return phi([q**-n, q ** (n + 1)], [q], q, q * x, policy)


def _q_airy(x, q, policy):
    return phi([0.0], [-q], q, -x, policy)


def _ramanujan(x, q, policy):
    return phi([], [0.0], q, -q * x, policy)


def _jackson_bessel(kind: int, nu: float, z: float, q: float, policy: TruncationPolicy) -> float:
    if kind == 1 and abs(z) >= 2.0:
        raise QDomainError("first Jackson q-Bessel needs |z| < 2")
    pre = q_pochhammer_inf(q ** (nu + 1), q, policy) / q_pochhammer_inf(q, q, policy)
    qnu = q ** (nu + 1)
    if kind == 3:
        w = z * z
        first = _power(z, nu)

        def ratio(k):
            return -(q ** (k + 1)) * w / ((1.0 - q ** (k + 1)) * (1.0 - qnu * q**k))
    else:
        w = 0.25 * z * z
        first = _power(0.5 * z, nu)
        if kind == 1:
            def ratio(k):
                return -w / ((1.0 - q ** (k + 1)) * (1.0 - qnu * q**k))
        else:
            def ratio(k):
                return -(q ** (2 * k + 1 + nu)) * w / ((1.0 - q ** (k + 1)) * (1.0 - qnu * q**k))
    if first == 0.0:
        return 0.0
    return pre * _ratio_series(first, ratio, policy)


def _jb2_scaled(nu, x, q, policy):
    return _jackson_bessel(2, nu, 2.0 * x * (1.0 - q), q * q, policy)


def _qn(k, q):
    return (1.0 - q**k) / (1.0 - q)


def _sin_third(z, q, policy):
    w = z * z
    return _ratio_series(z, lambda k: -(q ** (2 * k + 2)) * w / (_qn(2 * k + 2, q) * _qn(2 * k + 3, q)), policy)


def _cos_third(z, q, policy):
    w = z * z
    return _ratio_series(1.0, lambda k: -(q ** (2 * k + 1)) * w / (_qn(2 * k + 1, q) * _qn(2 * k + 2, q)), policy)


def _check_disc(z, q):
    if abs(z) * (1.0 - q) >= 1.0:
        raise QDomainError("sin_q/cos_q need |z| < 1/(1-q)")


def _sin_q(z, q, policy):
    _check_disc(z, q)
    w = z * z
    return _ratio_series(z, lambda k: -w / (_qn(2 * k + 2, q) * _qn(2 * k + 3, q)), policy)


def _cos_q(z, q, policy):
    _check_disc(z, q)
    w = z * z
    return _ratio_series(1.0, lambda k: -w / (_qn(2 * k + 1, q) * _qn(2 * k + 2, q)), policy)


def _cap_sin_q(z, q, policy):
    w = z * z
    return _ratio_series(z, lambda k: -(q ** (4 * k + 3)) * w / (_qn(2 * k + 2, q) * _qn(2 * k + 3, q)), policy)


def _cap_cos_q(z, q, policy):
    w = z * z
    return _ratio_series(1.0, lambda k: -(q ** (4 * k + 1)) * w / (_qn(2 * k + 1, q) * _qn(2 * k + 2, q)), policy)


def eval_special(fam: SpecialFamily, x: float, q: QLike, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    qv = qvalue(q)
    t = fam.tag
    if t is Family.HERMITE_I:
        return _hermite1(fam.n, x, qv)
    if t is Family.HERMITE_II:
        return _hermite2(fam.n, x, qv)
    if t is Family.BIG_Q_LAGUERRE:
        return _big_q_laguerre(fam.n, fam.a, fam.b, x, qv)
    if t is Family.Q_LAGUERRE:
        return _q_laguerre(fam.n, fam.alpha, x, qv, policy)
    if t is Family.STIELTJES_WIGERT:
        return _stieltjes_wigert(fam.n, x, qv, policy)
    if t is Family.JACKSON_BESSEL2_SCALED:
        return _jb2_scaled(fam.nu, x, qv, policy)
    if t is Family.JACKSON_BESSEL:
        return _jackson_bessel(fam.kind, fam.nu, x, qv, policy)
    if t is Family.Q_AIRY:
        return _q_airy(x, qv, policy)
    if t is Family.RAMANUJAN_A:
        return _ramanujan(x, qv, policy)
    if t is Family.BIG_Q_LEGENDRE:
        return _big_q_legendre(fam.n, x, qv)
    if t is Family.LITTLE_Q_LEGENDRE:
        return _little_q_legendre(fam.n, x, qv, policy)
    if t is Family.SIN_THIRD:
        return _sin_third(x, qv, policy)
    if t is Family.COS_THIRD:
        return _cos_third(x, qv, policy)
    if t is Family.SIN_Q:
        return _sin_q(x, qv, policy)
    if t is Family.COS_Q:
        return _cos_q(x, qv, policy)
    if t is Family.CAP_SIN_Q:
        return _cap_sin_q(x, qv, policy)
    if t is Family.CAP_COS_Q:
        return _cap_cos_q(x, qv, policy)
    raise UnsupportedOperation(t)


def evaluator(fam: SpecialFamily, q: QLike, policy: TruncationPolicy = DEFAULT_POLICY) -> Callable[[float], float]:
    """x -> eval_special(fam, x, q) with q fixed."""
    qv = qvalue(q)
    return lambda x: eval_special(fam, x, qv, policy)


# lowering relations ----------------------------------------------------------

def shift_derivative(fam: SpecialFamily, x: float, q: QLike, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """Closed form of D_{q^-1} y(x) in terms of lower members of the family."""
    qv = qvalue(q)
    t = fam.tag
    n = fam.n
    if t in POLYNOMIAL and n == 0:
        return 0.0
    if t is Family.HERMITE_I:
        return q_number(n, qv) * _hermite1(n - 1, x / qv, qv)
    if t is Family.HERMITE_II:
        return qv ** (1 - n) * q_number(n, qv) * _hermite2(n - 1, x, qv)
    if t is Family.BIG_Q_LAGUERRE:
        a, b = fam.a, fam.b
        c = qv ** (1 - n) * q_number(n, qv) / ((1.0 - a * qv) * (1.0 - b * qv))
        return c * _big_q_laguerre(n - 1, a * qv, b * qv, x, qv)
    if t is Family.Q_LAGUERRE:
        al = fam.alpha
        return -(qv ** (al + 1)) / (1.0 - qv) * _q_laguerre(n - 1, al + 1, x, qv, policy)
    if t is Family.STIELTJES_WIGERT:
        return -qv / (1.0 - qv) * _stieltjes_wigert(n - 1, qv * x, qv, policy)
    if t is Family.BIG_Q_LEGENDRE:
        c = qv ** (1 - n) * q_number(n, qv) * q_number(n + 1, qv) / (1.0 + qv)
        # 3phi2(q^{1-n}, q^{n+2}, x; q^2, -q^2; q, q)
        return c * big_q_jacobi(n - 1, qv, qv, -qv, x, qv)
    if t is Family.LITTLE_Q_LEGENDRE:
        c = -(qv ** (1 - n)) * q_number(n, qv) * q_number(n + 1, qv)
        return c * phi([qv ** (1 - n), qv ** (n + 2)], [qv * qv], qv, x, policy)
    if t is Family.Q_AIRY:
        return phi([0.0], [-qv * qv], qv, -x, policy) / (1.0 - qv * qv)
    if t is Family.RAMANUJAN_A:
        return -qv / (1.0 - qv) * _ramanujan(qv * x, qv, policy)
    if t is Family.SIN_THIRD:
        return _cos_third(x / math.sqrt(qv), qv, policy)
    if t is Family.COS_THIRD:
        return -math.sqrt(qv) * _sin_third(x / math.sqrt(qv), qv, policy)
    if t is Family.SIN_Q:
        return _cos_q(x / qv, qv, policy)
    if t is Family.COS_Q:
        return -_sin_q(x / qv, qv, policy)
    if t is Family.CAP_SIN_Q:
        return _cap_cos_q(x, qv, policy)
    if t is Family.CAP_COS_Q:
        return -_cap_sin_q(x, qv, policy)
    raise UnsupportedOperation(f"no closed lowering relation for {t.value}")


# q-difference equations ------------------------------------------------------

@dataclass(frozen=True)
class OdeCoefficients:
    p: RealFunction
    r: RealFunction
    middle: Middle


def ode_coefficients(fam: SpecialFamily, q: QLike) -> OdeCoefficients:
    q = qvalue(q)
    t = fam.tag
    n = fam.n
    inv = Middle.DQ_INV
    if t is Family.HERMITE_I:
        c = q ** (1 - n) * q_number(n, q) / (1 - q)
        return OdeCoefficients(RealFunction(lambda x: -x / (1 - q)), RealFunction(lambda x: c), inv)
    if t is Family.HERMITE_II:
        c = q_number(n, q) / (1 - q)
        return OdeCoefficients(RealFunction(lambda x: -x / (1 - q)), RealFunction(lambda x: c), Middle.DQ)
    if t is Family.BIG_Q_LAGUERRE:
        a, b = fam.a, fam.b
        c = q ** (-n - 1) * q_number(n, q)
        return OdeCoefficients(
            RealFunction(lambda x: (x - q * (a + b - q * a * b)) / (a * b * q * q * (1 - q) * (1 - x))),
            RealFunction(lambda x: -c / (a * b * (1 - q) * (1 - x))),
            inv,
        )
    if t is Family.Q_LAGUERRE:
        qa = q ** (fam.alpha + 1)
        c = q_number(n, q)
        return OdeCoefficients(
            RealFunction(lambda x: (1 - qa * (1 + x)) / (qa * x * (1 + x) * (1 - q))),
            RealFunction(lambda x: c / (x * (1 - q) * (1 + x))),
            inv,
        )
    if t is Family.STIELTJES_WIGERT:
        c = q_number(n, q)
        return OdeCoefficients(
            RealFunction(lambda x: (1 - q * x) / (q * x * x * (1 - q))),
            RealFunction(lambda x: c / (x * x * (1 - q))),
            inv,
        )
    if t is Family.JACKSON_BESSEL2_SCALED:
        nu = fam.nu
        c = q ** (1 - nu) * ((1 - q**nu) / (1 - q)) ** 2
        return OdeCoefficients(
            RealFunction(lambda x: (1 - q * x * x * (1 - q)) / x),
            RealFunction(lambda x: (q * x * x - c) / (x * x)),
            Middle.DQ,
        )
    if t is Family.Q_AIRY:
        return OdeCoefficients(
            RealFunction(lambda x: -(1 + q) / (q * x * (1 - q))),
            RealFunction(lambda x: 1 / (q * x * (1 - q) ** 2)),
            inv,
        )
    if t is Family.RAMANUJAN_A:
        return OdeCoefficients(
            RealFunction(lambda x: (1 - q * x) / (q * x * x * (1 - q))),
            RealFunction(lambda x: 1 / (x * x * (1 - q) ** 2)),
            inv,
        )
    if t is Family.BIG_Q_LEGENDRE:
        c = q_number(n, q) * q_number(n + 1, q) / q ** (1 + n)
        return OdeCoefficients(
            RealFunction(lambda x: x * (1 + q) / (q * q * (x * x - 1))),
            RealFunction(lambda x: -c / (x * x - 1)),
            inv,
        )
    if t is Family.LITTLE_Q_LEGENDRE:
        c = q_number(n, q) * q_number(n + 1, q) / q**n
        return OdeCoefficients(
            RealFunction(lambda x: (q * x + x - 1) / (q * x * (q * x - 1))),
            RealFunction(lambda x: c / (x * (1 - q * x))),
            inv,
        )
    if t in (Family.SIN_THIRD, Family.COS_THIRD):
        # (1/q) D_{q^-1} D_q y + y = 0
        return OdeCoefficients(RealFunction(lambda x: 0.0), RealFunction(lambda x: 1.0), inv)
    raise UnsupportedOperation(f"{t.value} has no second-order q-difference equation here")


def ode_terms(fam: SpecialFamily, x: float, q: QLike, policy: TruncationPolicy = DEFAULT_POLICY) -> tuple:
    """The three terms (1/q)D_{q^-1}D_q y, p M y, r y at x."""
    qv = qvalue(q)
    if x == 0:
        raise QDomainError("the q-difference equations are singular at x = 0")
    co = ode_coefficients(fam, qv)
    y_lo = eval_special(fam, qv * x, qv, policy)
    y0 = eval_special(fam, x, qv, policy)
    y_hi = eval_special(fam, x / qv, qv, policy)
    dq_x = (y0 - y_lo) / ((1 - qv) * x)
    dq_hi = (y_hi - y0) / ((1 - qv) * x / qv)
    second = (dq_x - dq_hi) / ((1 - 1 / qv) * x) / qv
    if co.middle is Middle.DQ_INV:
        m = (y0 - y_hi) / ((1 - 1 / qv) * x)
    else:
        m = dq_x
    return second, co.p(x) * m, co.r(x) * y0


def ode_residual(fam: SpecialFamily, x: float, q: QLike, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """Equation defect divided by the largest of its three terms."""
    terms = ode_terms(fam, x, q, policy)
    return sum(terms) / max(max(abs(t) for t in terms), 1e-300)
