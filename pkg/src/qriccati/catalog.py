"""Catalog of indefinite q-integral and q-sum identities, and their verifier.

Each case is either a QDerivativeMatch (D_q RHS = integrand at every
sample) or a TruncatedSumMatch (a convergent lattice sum equals a closed
form). A case carries the form as originally printed; where that form is
wrong the case also carries a corrected form, which is what gets verified,
and the report records the printed form's measured defect.
"""

from __future__ import annotations

import fnmatch
import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Callable, NamedTuple, Optional, Sequence

from . import qspecial as S
from .errors import CatalogError, ConvergenceError
from .qcore import DEFAULT_POLICY, TruncationPolicy, q_number, q_pochhammer, q_pochhammer_inf, qvalue
from .qhyper import phi
from .qops import dq, dq_inv
from .qspecial import Family, Middle
from . import riccati as R
from .report import CaseReport, SampleResult, SuiteReport

log = logging.getLogger(__name__)

Q_GRID = (0.3, 0.5, 0.7, 0.9)
N_GRID = (1, 2, 3, 4, 5, 6)
X_GRID = (-0.85, -0.45, -0.15, 0.15, 0.45, 0.85)
C_GRID = (0.7, -1.3)
NU_GRID = (1.5, 2.5)
ALPHA_GRID = (-0.5, 0.5, 1.3)
AB_GRID = ((0.5, -0.7), (-0.4, 0.3))

POLE_MARGIN = 1e-3
SCALE_FLOOR = 1e-12


class Mode(Enum):
    QDERIV = "QDerivativeMatch"
    SUM = "TruncatedSumMatch"


class Sides(NamedTuple):
    lhs: Callable  # integrand(x), or term(k, x) in sum mode
    rhs: Callable[[float], float]


Builder = Callable[[dict, float], Sides]


@dataclass(frozen=True)
class Sample:
    q: float
    x: float
    params: tuple  # sorted (name, value) pairs

    @property
    def param_dict(self) -> dict:
        return dict(self.params)


def _no_constraint(p: dict) -> Optional[str]:
    return None


@dataclass(frozen=True)
class IdentityCase:
    id: str
    label: str
    family: Family
    mode: Mode
    params: dict
    build: Builder
    samples: tuple
    printed: Optional[Builder] = None
    correction: str = ""
    constraint: Callable[[dict], Optional[str]] = _no_constraint

    def integrand(self, p: dict, q: float) -> Callable:
        return self.build(p, q).lhs

    def rhs(self, p: dict, q: float) -> Callable[[float], float]:
        return self.build(p, q).rhs

    @property
    def discrepant(self) -> bool:
        return bool(self.correction)

    def as_printed(self) -> "IdentityCase":
        """The case with its printed form promoted to the checked form."""
        if self.printed is None:
            return self
        return replace(self, build=self.printed, printed=None, correction="")


def perturbed(case: IdentityCase, rel: float) -> IdentityCase:
    """Copy of ``case`` whose right-hand side is scaled by (1 + rel)."""
    base = case.build

    def build(p, q):
        sides = base(p, q)
        r = sides.rhs
        return Sides(sides.lhs, lambda x: (1.0 + rel) * r(x))

    return replace(case, build=build)


# shorthand ------------------------------------------------------------------

def _pinf(a, q):
    return q_pochhammer_inf(a, q)


def _fam(tag, **kw):
    return S.SpecialFamily(tag, **kw)


def _ev(fam, q):
    return S.evaluator(fam, q)


def _min_factor(a, q, terms=60):
    """Smallest |1 - a q^k|; a small value means (a; q)_oo is near a zero."""
    best = math.inf
    t = a
    for _ in range(terms):
        best = min(best, abs(1.0 - t))
        t *= q
        if abs(t) < 1e-8:
            break
    return best


# HermiteI (weight (q^2x^2;q^2)_oo) ------------------------------------------

def _h1(p, q):
    n = p["n"]
    h = _ev(S.hermite1(n), q)
    hl = _ev(S.hermite1(n - 1), q) if n >= 1 else (lambda x: 0.0)
    f1 = lambda x: _pinf(q * q * x * x, q * q)
    g1 = lambda x: _pinf(x * x, q * q)
    return n, h, hl, f1, g1


def _herm1_c(p, q):
    n, h, hl, f1, g1 = _h1(p, q)
    c = p["c"]
    N = q_number(n, q)
    return Sides(
        lambda x: f1(x) * ((c * q + x) * N - x) * h(x),
        lambda x: q ** (n - 1) * (1 - q) * g1(x) * (q * h(x / q) - N * (c * q + x) * hl(x / q)),
    )


def _herm1_x(p, q):
    n, h, hl, f1, g1 = _h1(p, q)
    Nm = q_number(n - 1, q)
    return Sides(
        lambda x: x * f1(x) * h(x),
        lambda x: q ** (n - 1) * g1(x) / Nm * ((1 - q) * h(x / q) - (1 - q**n) / q * x * hl(x / q)),
    )


def _herm1_gauss(p, q):
    n, h, hl, f1, g1 = _h1(p, q)
    G = lambda x: _pinf(q ** (-(n + 1)) * x * x, q * q)
    Np = q_number(n + 1, q)
    return Sides(
        lambda x: f1(x) / G(x) * h(x),
        lambda x: g1(x) / (Np * G(x)) * (x * h(x / q) - q**n * (1 - q**n) * hl(x / q)),
    )


def _herm1_gauss_poles(p, q, x):
    return [_min_factor(q ** (-(p["n"] + 1)) * x * x, q * q)]


def _herm1_pow(p, q):
    n, h, hl, f1, g1 = _h1(p, q)
    Nm = q_number(n - 1, q)
    return Sides(
        lambda x: x ** (n - 2) * f1(x) * h(x),
        lambda x: x**n * g1(x) / Nm * (h(x / q) / x - hl(x / q) / q),
    )


def _herm1_triv(p, q):
    n, h, hl, f1, g1 = _h1(p, q)
    return Sides(
        lambda x: f1(x) * h(x),
        lambda x: -(q ** (n - 1)) * (1 - q) * g1(x) * hl(x / q),
    )


# HermiteII (weight 1/(-x^2;q^2)_oo) --------------------------------------------

def _h2(p, q):
    n = p["n"]
    H = _ev(S.hermite2(n), q)
    Hl = _ev(S.hermite2(n - 1), q)
    W = lambda x: _pinf(-x * x, q * q)
    return n, H, Hl, W


def _herm2_c(p, q):
    n, H, Hl, W = _h2(p, q)
    c = p["c"]
    N, Nm = q_number(n, q), q_number(n - 1, q)
    return Sides(
        lambda x: (q * x * Nm + c * N) * H(x) / W(x),
        lambda x: (1 - q) / W(x) * (H(x) - q ** (1 - n) * N * (c + x) * Hl(x)),
    )


def _herm2_x(p, q):
    n, H, Hl, W = _h2(p, q)
    N, Nm = q_number(n, q), q_number(n - 1, q)
    return Sides(
        lambda x: x * H(x) / W(x),
        lambda x: (1 - q) / (Nm * W(x)) * (H(x) / q - q**-n * N * x * Hl(x)),
    )


def _herm2_gauss(p, q):
    n, H, Hl, W = _h2(p, q)
    Np = q_number(n + 1, q)
    return Sides(
        lambda x: _pinf(-(q ** (n + 3)) * x * x, q * q) / W(x) * H(x),
        lambda x: _pinf(-(q ** (n + 1)) * x * x, q * q) / (Np * W(x))
        * (q**n * x * H(x) - q ** (1 - n) * (1 - q**n) * Hl(x)),
    )


def _herm2_pow(p, q):
    n, H, Hl, W = _h2(p, q)
    Nm = q_number(n - 1, q)
    return Sides(
        lambda x: x ** (n - 2) / W(x) * H(x),
        lambda x: x**n / (Nm * W(x)) * (H(x) / x - Hl(x)),
    )


def _herm2_triv(p, q):
    n, H, Hl, W = _h2(p, q)
    return Sides(
        lambda x: H(x) / W(x),
        lambda x: -(q ** (1 - n)) * (1 - q) / W(x) * Hl(x),
    )


# Jackson q-Bessel J_nu^(2)(x|q^2) ---------------------------------------------

def _bes(p, q):
    nu = p["nu"]
    J = _ev(S.jackson_bessel2_scaled(nu), q)
    DJ = lambda x: dq_inv(J, x, q)
    V2 = q_number(nu, q) ** 2
    B = lambda x: _pinf(-x * x * (1 - q) ** 2, q * q)
    return nu, J, DJ, V2, B


def _bessel_c(p, q):
    nu, J, DJ, V2, B = _bes(p, q)
    c = p["c"]
    return Sides(
        lambda x: x / B(x) * ((1 / q - q**-nu * V2) / x - c * q**-nu * V2 / (x * x) + c + q * x) * J(x),
        lambda x: x / (q * B(x)) * (J(x) - (c + x) * DJ(x)),
    )


def _bessel_x(p, q):
    nu, J, DJ, V2, B = _bes(p, q)
    return Sides(
        lambda x: x / B(x) * ((1 / q - q**-nu * V2) / x + q * x) * J(x),
        lambda x: x / (q * B(x)) * (J(x) - x * DJ(x)),
    )


def _bessel_alpha_with(sign):
    def build(p, q):
        nu, J, DJ, V2, B = _bes(p, q)
        al = sign * math.log(q**nu + q**-nu - 1 / q) / math.log(q)
        return Sides(
            lambda x: x ** (al + 1) / B(x) * (q + (1 - q ** (1 - nu) * V2) / (q * x * x)) * J(x),
            lambda x: x ** (al + 1) / (q**al * B(x)) * ((q ** (1 - nu) * (1 - q) * V2 - 1) / x * J(x) - DJ(x)),
        )

    return build


def _bessel_triv(p, q):
    nu, J, DJ, V2, B = _bes(p, q)
    return Sides(
        lambda x: (q * x * x - q ** (1 - nu) * V2) / (x * B(x)) * J(x),
        lambda x: -x / B(x) * DJ(x),
    )


# q-Airy sums -------------------------------------------------------------------

def _airy(q):
    Ai = _ev(S.Q_AIRY, q)
    P11 = lambda x: phi([0.0], [-q * q], q, -x)
    return Ai, P11


def _airy_sum_c(p, q):
    Ai, P11 = _airy(q)
    c = p["c"]
    return Sides(
        lambda k, x: (-1) ** k * q**k * (c - 1 + q * q + q**k * x) * Ai(q**k * x),
        lambda x: (q * c + x) / (q * (1 + q)) * P11(x) - (1 - q) * Ai(x / q),
    )


def _airy_sum_0(p, q):
    Ai, P11 = _airy(q)
    return Sides(
        lambda k, x: (-1) ** k * q**k * (1 - q * q - q**k * x) * Ai(q**k * x),
        lambda x: (1 - q) * Ai(x / q) - x / (q * (1 + q)) * P11(x),
    )


def _airy_sum_poch_with(sign):
    def build(p, q):
        Ai, P11 = _airy(q)
        return Sides(
            lambda k, x: q**k * (q - q**3 - q**k * x) * q_pochhammer(-x / q**3, q, k) * Ai(q**k * x),
            lambda x: sign * ((q * (1 + q) + x / q) * Ai(x / q) - x / (1 + q) * P11(x)),
        )

    return build


def _corollary_airy(p, q):
    Ai, P11 = _airy(q)
    return Sides(
        lambda k, x: (-1) ** k * q ** (2 * k) * Ai(q**k * x),
        lambda x: (q * (1 - q * q) + x) / (q * x * (1 + q)) * P11(x) - (1 - q) / x * Ai(x / q),
    )


def _airy_triv(p, q):
    Ai, P11 = _airy(q)
    return Sides(lambda k, x: (-q) ** k * Ai(q**k * x), lambda x: P11(x) / (1 + q))


# Ramanujan sums ------------------------------------------------------------------

def _ram_sum_c_with(expo, sign):
    def build(p, q):
        A = _ev(S.RAMANUJAN_A, q)
        c = p.get("c", 0.0)
        return Sides(
            lambda k, x: q ** expo(k) * x**k * (1 - q + q * c + q ** (k + 2) * x) * A(q**k * x),
            lambda x: (1 - q) * A(x / q) + sign * (c * q + x) * A(q * x),
        )

    return build


def _k_k1(k):
    return k * (k + 1) / 2


def _k_k3(k):
    return k * (k - 3) / 2


def _ram_sum_poch(p, q):
    A = _ev(S.RAMANUJAN_A, q)
    return Sides(
        lambda k, x: q**k * (1 - q * q + q ** (k + 2) * x) * q_pochhammer(x, q, k) * A(q**k * x),
        lambda x: (x * (1 + q) - q) / x * A(x / q) + x * A(q * x) + q * _pinf(x, q) / x,
    )


def _ram_sum_poch_printed(p, q):
    A = _ev(S.RAMANUJAN_A, q)
    return Sides(
        lambda k, x: q ** _k_k3(k) * (1 - q * q + q ** (k + 2) * x) * q_pochhammer(x, q, k) * A(q**k * x),
        lambda x: (x * (1 + q) - q) / x * A(x / q) - x * A(q * x),
    )


def _corollary_ram(p, q):
    A = _ev(S.RAMANUJAN_A, q)
    return Sides(
        lambda k, x: q ** (k * (k + 3) / 2) * x**k * A(q**k * x),
        lambda x: (1 - q) / (q * q * x) * A(x / q) + (x - 1 + q) / (q * q * x) * A(q * x),
    )


def _corollary_ram_printed(p, q):
    A = _ev(S.RAMANUJAN_A, q)
    return Sides(
        lambda k, x: q ** (k * (k - 1) / 2) * x**k * A(q**k * x),
        lambda x: (1 - q) / (q * q * x) * A(x / q) + (1 - q - x) / (q * q * x) * A(q * x),
    )


def _ram_triv_with(expo, sign):
    def build(p, q):
        A = _ev(S.RAMANUJAN_A, q)
        return Sides(
            lambda k, x: q ** expo(k) * x**k * A(q**k * x),
            lambda x: sign * phi([], [0.0], q, -q * q * x),
        )

    return build


# Stieltjes-Wigert sums ---------------------------------------------------------

def _sw(p, q):
    n = p["n"]
    return n, _ev(S.stieltjes_wigert(n), q), _ev(S.stieltjes_wigert(n - 1), q)


def _sw_triv_with(expo):
    def build(p, q):
        n, Sn, Sl = _sw(p, q)
        return Sides(
            lambda k, x: q ** expo(k) * x**k * Sn(q**k * x),
            lambda x: Sl(q * x) / (1 - q**n),
        )

    return build


def _sw_ab_pow_with(shift):
    def build(p, q):
        n, Sn, Sl = _sw(p, q)
        return Sides(
            lambda k, x: q ** (k * (k + shift) / 2 + n * k) * x**k * Sn(q**k * x),
            lambda x: Sn(x / q) + x / (1 - q**n) * Sl(q * x),
        )

    return build


def _sw_ab_x_with(expo):
    def build(p, q):
        n, Sn, Sl = _sw(p, q)
        Nm = q_number(n - 1, q)
        return Sides(
            lambda k, x: q ** expo(k) * x**k * (1 + q ** (2 + k) * Nm * x) * Sn(q**k * x),
            lambda x: Sn(x / q) + x / (1 - q) * Sl(q * x),
        )

    return build


# other trivial fragments ----------------------------------------------------------

def _biglag_triv(p, q):
    n, a, b = p["n"], p["a"], p["b"]
    P = _ev(S.big_q_laguerre(n, a, b), q)
    Pl = _ev(S.big_q_laguerre(n - 1, a * q, b * q), q)
    c = a * b * q * q * (1 - q) / ((1 - a * q) * (1 - b * q))
    return Sides(
        lambda x: _pinf(x / a, q) * _pinf(x / b, q) / _pinf(x, q) * P(x),
        lambda x: c * _pinf(x / (a * q), q) * _pinf(x / (b * q), q) / _pinf(x, q) * Pl(x),
    )


def _biglag_poles(p, q, x):
    return [_min_factor(x, q)]


def _qlag_triv(p, q):
    n, al = p["n"], p["alpha"]
    L = _ev(S.q_laguerre(n, al), q)
    Ll = _ev(S.q_laguerre(n - 1, al + 1), q)
    N = q_number(n, q)
    return Sides(
        lambda x: x**al / _pinf(-x, q) * L(x),
        lambda x: x ** (al + 1) / (N * _pinf(-x, q)) * Ll(x),
    )


# q-trigonometric functions of the third kind -------------------------------------

def _trig(q):
    return _ev(S.SIN_THIRD, q), _ev(S.COS_THIRD, q), math.sqrt(q)


def _v_hnd1_cos_with(sign):
    def build(p, q):
        s3, c3, rq = _trig(q)
        return Sides(lambda x: x * c3(x), lambda x: sign * (c3(x / q) + x / rq * s3(x / rq)))

    return build


def _v_hnd1_sin_with(sign):
    def build(p, q):
        s3, c3, rq = _trig(q)
        return Sides(lambda x: x * s3(x), lambda x: sign * (s3(x / q) - x / q * c3(x / rq)))

    return build


def _v_weights(q, sign):
    B = lambda x: _pinf(sign * x * x / q * (1 - q) ** 2, q * q)
    P = lambda x: phi([sign * x * x / q * (1 - q) ** 2, q * q], [0.0], q * q, q)
    return B, P


def _v_cos(p, q):
    s3, c3, rq = _trig(q)
    B, P = _v_weights(q, 1.0)
    return Sides(
        lambda x: x * c3(x) / B(x) * P(x),
        lambda x: rq / B(x) * (rq * c3(x / q) / (1 - q) + x * s3(x / rq) * P(x)),
    )


def _v_cos_printed(p, q):
    s3, c3, rq = _trig(q)
    B, P = _v_weights(q, -1.0)
    return Sides(
        lambda x: x * c3(x) / B(x) * P(x),
        lambda x: -rq / B(x) * (rq * c3(x / q) / (1 - q) + x * s3(x / rq) * P(x)),
    )


def _v_sin(p, q):
    s3, c3, rq = _trig(q)
    B, P = _v_weights(q, 1.0)
    return Sides(
        lambda x: x * s3(x) / B(x) * P(x),
        lambda x: 1 / B(x) * (q * s3(x / q) / (1 - q) - x * c3(x / rq) * P(x)),
    )


def _v_sin_printed(p, q):
    s3, c3, rq = _trig(q)
    B, P = _v_weights(q, -1.0)
    return Sides(
        lambda x: x * s3(x) / B(x) * P(x),
        lambda x: 1 / B(x) * (x * c3(x / rq) * P(x) - q * s3(x / q) / (1 - q)),
    )


def _v_poles(p, q, x):
    return [_min_factor(x * x / q * (1 - q) ** 2, q * q)]


def _lin_weight(q, sign):
    return lambda x: _pinf(sign * x * x / q * (1 - q), q * q)


def _lin_cos(p, q):
    s3, c3, rq = _trig(q)
    L = _lin_weight(q, -1.0)
    return Sides(
        lambda x: x * x / L(x) * c3(x),
        lambda x: q / L(x) * (-x * c3(x / q) + rq * s3(x / rq)),
    )


def _lin_cos_printed(p, q):
    s3, c3, rq = _trig(q)
    L = _lin_weight(q, 1.0)
    return Sides(
        lambda x: x * x / L(x) * c3(x),
        lambda x: q / L(x) * (x * c3(x / q) + rq * s3(x / rq)),
    )


def _lin_sin(p, q):
    s3, c3, rq = _trig(q)
    L = _lin_weight(q, -1.0)
    return Sides(
        lambda x: x * x / L(x) * s3(x),
        lambda x: q / L(x) * (-x * s3(x / q) - c3(x / rq)),
    )


def _lin_sin_printed(p, q):
    s3, c3, rq = _trig(q)
    L = _lin_weight(q, 1.0)
    return Sides(
        lambda x: x * x / L(x) * s3(x),
        lambda x: q / L(x) * (x * s3(x / q) - c3(x / rq)),
    )


# q-Legendre polynomials ------------------------------------------------------

def r_n(n: int, q: float) -> float:
    return (2 - q**-n - q ** (n + 1)) / (1 - q)


def _lin_litleg_with(printed):
    def build(p, q):
        n = p["n"]
        P = _ev(S.little_q_legendre(n), q)
        rn = r_n(n, q)
        N = q_number(n, q) * q_number(n + 1, q)
        psi = lambda x: phi([q ** (1 - n), q ** (n + 2)], [q * q], q, x)
        den = q * rn if printed else rn
        lead = 1 / q if printed else 1.0
        return Sides(
            lambda x: x * _pinf(q * x, q) / _pinf(den * x, q) * P(x),
            lambda x: q**n * x * _pinf(x, q) / (N * _pinf(rn * x, q)) * (lead * (1 - x) * psi(x) - P(x / q)),
        )

    return build


def _litleg_poles(p, q, x):
    rn = r_n(p["n"], q)
    return [_min_factor(rn * x, q), _min_factor(q * rn * x, q)]


def _bigleg(p, q):
    n = p["n"]
    P = _ev(S.big_q_legendre(n), q)
    # 3phi2(q^{1-n}, q^{n+2}, x; q^2, -q^2; q, q) from the lowering relation
    Phi = lambda x: S.big_q_jacobi(n - 1, q, q, -q, x, q)
    return n, P, Phi


def _lin_bigleg(p, q):
    n, P, Phi = _bigleg(p, q)
    rn = r_n(n, q)
    N = q_number(n, q) * q_number(n + 1, q)
    return Sides(
        lambda x: x * x * _pinf(x * x, q * q) / _pinf(rn * x * x / q**2, q * q) * P(x),
        lambda x: q ** (n + 2) * _pinf(x * x / q**2, q * q) / (N * _pinf(rn * x * x / q**2, q * q))
        * (-(q * q - x * x) / (1 + q) * Phi(x) - x * P(x / q)),
    )


def _lin_bigleg_printed(p, q):
    n, P, Phi = _bigleg(p, q)
    rn = r_n(n, q)
    Nn, Np = q_number(n, q), q_number(n + 1, q)
    return Sides(
        lambda x: x * x * _pinf(x * x, q * q) / _pinf(rn * x * x, q * q) * P(x),
        lambda x: q ** (n + 2) * _pinf(x * x / q**2, q * q) / (Nn * Np * _pinf(rn * x * x / q**2, q * q))
        * (q ** (n + 1) * (1 - x * x / q**2) / (Np * (1 - q**n)) * P(x) - x * P(x / q)),
    )


def _bigleg_poles(p, q, x):
    rn = r_n(p["n"], q)
    return [_min_factor(rn * x * x / q**2, q * q), _min_factor(rn * x * x, q * q), abs(q * q - x * x)]


def _v_bigleg(p, q):
    n, P, Phi = _bigleg(p, q)
    Np = q_number(n + 1, q)
    P21 = lambda x: phi([x * x / q**2, q * q], [x * x], q * q, q)
    return Sides(
        lambda x: x * P(x) / (q * q - x * x) * (P21(x) - 1),
        lambda x: q**n / ((1 - q**n) * Np) * P(x / q) - x / (1 + q) * P21(x) * Phi(x),
    )


def _v_bigleg_printed(p, q):
    n, P, Phi = _bigleg(p, q)
    Np = q_number(n + 1, q)
    P21 = lambda x: phi([x * x / q**2, q * q], [x * x], q * q, q)
    return Sides(
        lambda x: x * P(x) / (q * q - x * x) * (P21(x) - 1),
        lambda x: (q**-n - 1) * Np * (P(x / q) + x / q * P21(x) * P(x)),
    )


# algebraic fragments, built through the generic fragment identity ------------

def _hermite1_system(n, q):
    fam = S.hermite1(n)
    weight = S.RealFunction(lambda x: _pinf(q * q * x * x, q * q))
    return fam, R.RiccatiSystem(S.ode_coefficients(fam, q), weight)


def _hermite2_system(n, q):
    fam = S.hermite2(n)
    weight = S.RealFunction(lambda x: 1.0 / _pinf(-x * x, q * q))
    return fam, R.RiccatiSystem(S.ode_coefficients(fam, q), weight)


def _alg_first(a_of_n, norm_of_n, integrand):
    """Case whose RHS is F/K with F from the D_{q^-1}-type fragment identity."""

    def build(p, q):
        n = p["n"]
        fam, system = _hermite1_system(n, q)
        frag = R.algebraic_fragment(a_of_n(n, q), 0.0, Middle.DQ_INV, q)
        y = _ev(fam, q)
        dy = lambda x: S.shift_derivative(fam, x, q)
        K = norm_of_n(n, q)
        return Sides(integrand(n, q, y), lambda x: R.identity_rhs_first(system, frag, y, dy, x, q) / K)

    return build


def _alg_second(a_of_n, norm_of_n, integrand):
    def build(p, q):
        n = p["n"]
        fam, system = _hermite2_system(n, q)
        frag = R.algebraic_fragment(a_of_n(n, q), 0.0, Middle.DQ, q)
        y = _ev(fam, q)
        dy = lambda x: S.shift_derivative(fam, x, q)
        K = norm_of_n(n, q)
        return Sides(integrand(n, q, y), lambda x: R.identity_rhs_second(system, frag, y, dy, x, q) / K)

    return build


def _alg_herm1_x_printed(p, q):
    n, h, hl, f1, g1 = _h1(p, q)
    N = q_number(n, q)
    return Sides(
        lambda x: x * f1(x) * h(x),
        lambda x: (1 - q) * x * g1(x) / (N - 1) * (q**n / x * h(x / q) - q ** (n - 1) * N * hl(x / q)),
    )


def _alg_herm2_x_printed(p, q):
    n, H, Hl, W = _h2(p, q)
    N, Nm = q_number(n, q), q_number(n - 1, q)
    return Sides(
        lambda x: x / W(x) * H(x),
        lambda x: (1 - q) * x / (Nm * W(x)) * (H(x) / (q * x) - q**-n * N * Hl(x)),
    )


_ALG_HERM1_X = _alg_first(
    lambda n, q: 1.0,
    # S_q = q^{2-n}[n-1]/(1-q), h(x/q) = x/q
    lambda n, q: q ** (1 - n) * q_number(n - 1, q) / (1 - q),
    lambda n, q, y: (lambda x: x * _pinf(q * q * x * x, q * q) * y(x)),
)
_ALG_HERM1_POW = _alg_first(
    lambda n, q: q_number(n, q),
    # S_q = q[n][n-1]/x^2, h(x/q) = (x/q)^n
    lambda n, q: q ** (1 - n) * q_number(n, q) * q_number(n - 1, q),
    lambda n, q, y: (lambda x: x ** (n - 2) * _pinf(q * q * x * x, q * q) * y(x)),
)
_ALG_HERM2_X = _alg_second(
    lambda n, q: 1.0,
    # T_q = [n-1]/(1-q), k(qx) = qx
    lambda n, q: q * q_number(n - 1, q) / (1 - q),
    lambda n, q, y: (lambda x: x / _pinf(-x * x, q * q) * y(x)),
)


def _a_herm2_pow(n, q):
    return q ** (1 - n) * q_number(n, q)


_ALG_HERM2_POW = _alg_second(
    _a_herm2_pow,
    # T_q = a(a-1)/(q x^2), k(qx) = (qx)^n
    lambda n, q: q ** (n - 1) * _a_herm2_pow(n, q) * (_a_herm2_pow(n, q) - 1),
    lambda n, q, y: (lambda x: x ** (n - 2) / _pinf(-x * x, q * q) * y(x)),
)


# registry ---------------------------------------------------------------------

@dataclass(frozen=True)
class _Template:
    id: str
    label: str
    family: Family
    mode: Mode
    build: Builder
    grid: dict = field(default_factory=dict)  # name -> values; "n" means use n_grid
    n_min: Optional[int] = None
    printed: Optional[Builder] = None
    correction: str = ""
    positive_only: bool = False
    poles: Optional[Callable[[dict, float, float], list]] = None


_N = "n"  # marker: take values from the n grid

D, SM = Mode.QDERIV, Mode.SUM
F = Family

_TEMPLATES = (
    _Template("HERM1-C", "her1", F.HERMITE_I, D, _herm1_c, {"n": _N, "c": C_GRID}, 1),
    _Template("HERM1-X", "her112", F.HERMITE_I, D, _herm1_x, {"n": _N}, 2),
    _Template("HERM1-GAUSS", "her2", F.HERMITE_I, D, _herm1_gauss, {"n": _N}, 1, poles=_herm1_gauss_poles),
    _Template("HERM1-POW", "her3", F.HERMITE_I, D, _herm1_pow, {"n": _N}, 2),
    _Template("HERM1-TRIV", "jnido", F.HERMITE_I, D, _herm1_triv, {"n": _N}, 1),
    _Template("HERM2-C", "her21", F.HERMITE_II, D, _herm2_c, {"n": _N, "c": C_GRID}, 1),
    _Template("HERM2-X", "her211", F.HERMITE_II, D, _herm2_x, {"n": _N}, 2),
    _Template("HERM2-GAUSS", "her22", F.HERMITE_II, D, _herm2_gauss, {"n": _N}, 1),
    _Template("HERM2-POW", "her23", F.HERMITE_II, D, _herm2_pow, {"n": _N}, 2),
    _Template("HERM2-TRIV", "jnhhsyl", F.HERMITE_II, D, _herm2_triv, {"n": _N}, 1),
    _Template("BESSEL2-C", "dodovo", F.JACKSON_BESSEL2_SCALED, D, _bessel_c, {"nu": NU_GRID, "c": C_GRID},
              positive_only=True),
    _Template("BESSEL2-X", "dodovo1", F.JACKSON_BESSEL2_SCALED, D, _bessel_x, {"nu": NU_GRID}, positive_only=True),
    _Template("BESSEL2-ALPHA", "herbhy22", F.JACKSON_BESSEL2_SCALED, D, _bessel_alpha_with(-1.0), {"nu": NU_GRID},
              printed=_bessel_alpha_with(1.0), positive_only=True,
              correction="alpha = -ln(q^nu + q^-nu - q^-1)/ln q (sign of alpha flipped)"),
    _Template("BESSEL2-TRIV", "bessel-b", F.JACKSON_BESSEL2_SCALED, D, _bessel_triv, {"nu": NU_GRID},
              positive_only=True),
    _Template("AIRY-SUM-C", "omnnk", F.Q_AIRY, SM, _airy_sum_c, {"c": C_GRID}),
    _Template("AIRY-SUM-0", "omnnk1", F.Q_AIRY, SM, _airy_sum_0),
    _Template("AIRY-SUM-POCH", "kmjut", F.Q_AIRY, SM, _airy_sum_poch_with(1.0), printed=_airy_sum_poch_with(-1.0),
              correction="right-hand side negated"),
    _Template("COROLLARY-AIRY", "corollary-airy", F.Q_AIRY, SM, _corollary_airy),
    _Template("AIRY-TRIV", "hnbmjmbgdv", F.Q_AIRY, SM, _airy_triv),
    _Template("RAM-SUM-C", "omnnkjn", F.RAMANUJAN_A, SM, _ram_sum_c_with(_k_k1, 1.0), {"c": C_GRID},
              printed=_ram_sum_c_with(_k_k3, -1.0),
              correction="term weight q^{k(k+1)/2} (printed k(k-3)/2); sign of the A(qx) term is +"),
    _Template("RAM-SUM-0", "omnnkjn1", F.RAMANUJAN_A, SM, _ram_sum_c_with(_k_k1, 1.0),
              printed=_ram_sum_c_with(_k_k3, -1.0),
              correction="term weight q^{k(k+1)/2} (printed k(k-3)/2); sign of the x A(qx) term is +"),
    _Template("RAM-SUM-POCH", "omnnhk", F.RAMANUJAN_A, SM, _ram_sum_poch, printed=_ram_sum_poch_printed,
              correction="term weight q^k (printed q^{k(k-3)/2}); +x A(qx); boundary term q(x;q)_oo/x added"),
    _Template("COROLLARY-RAM", "corollary-ram", F.RAMANUJAN_A, SM, _corollary_ram, printed=_corollary_ram_printed,
              correction="term weight q^{k(k+3)/2} (printed k(k-1)/2); A(qx) coefficient (x-1+q)/(q^2 x)"),
    _Template("RAM-TRIV", "hnnm", F.RAMANUJAN_A, SM, _ram_triv_with(_k_k1, 1.0), printed=_ram_triv_with(_k_k3, -1.0),
              correction="term weight q^{k(k+1)/2} (printed k(k-3)/2); right-hand side +0phi1(-;0;q,-q^2 x)"),
    _Template("SW-TRIV", "kmjsysy", F.STIELTJES_WIGERT, SM, _sw_triv_with(_k_k1), {"n": _N}, 1,
              printed=_sw_triv_with(_k_k3), correction="term weight q^{k(k+1)/2} (printed k(k-3)/2)"),
    _Template("SW-AB-POW", "1", F.STIELTJES_WIGERT, SM, _sw_ab_pow_with(-1), {"n": _N}, 1,
              printed=_sw_ab_pow_with(-5), correction="term weight q^{k(k-1)/2+nk} (printed k(k-5)/2+nk)"),
    _Template("SW-AB-X", "12112", F.STIELTJES_WIGERT, SM, _sw_ab_x_with(_k_k1), {"n": _N}, 1,
              printed=_sw_ab_x_with(_k_k3), correction="term weight q^{k(k+1)/2} (printed k(k-3)/2)"),
    _Template("BIGLAG-TRIV", "hnbbgdv", F.BIG_Q_LAGUERRE, D, _biglag_triv, {"n": _N, "ab": AB_GRID}, 1,
              poles=_biglag_poles),
    _Template("QLAG-TRIV", "jmmmmd", F.Q_LAGUERRE, D, _qlag_triv, {"n": _N, "alpha": ALPHA_GRID}, 1,
              positive_only=True),
    _Template("V-COS", "cos", F.COS_THIRD, D, _v_cos, printed=_v_cos_printed, poles=_v_poles,
              correction="weight (x^2(1-q)^2/q; q^2)_oo and 2phi1(x^2(1-q)^2/q, q^2; 0; q^2, q) (printed -x^2); "
                         "right-hand side sign +"),
    _Template("V-SIN", "sin", F.SIN_THIRD, D, _v_sin, printed=_v_sin_printed, poles=_v_poles,
              correction="weight (x^2(1-q)^2/q; q^2)_oo and 2phi1(x^2(1-q)^2/q, q^2; 0; q^2, q) (printed -x^2); "
                         "right-hand side negated"),
    _Template("V-HND1-COS", "hnd1-cos", F.COS_THIRD, D, _v_hnd1_cos_with(1.0), printed=_v_hnd1_cos_with(-1.0),
              correction="right-hand side negated"),
    _Template("V-HND1-SIN", "hnd1-sin", F.SIN_THIRD, D, _v_hnd1_sin_with(1.0), printed=_v_hnd1_sin_with(-1.0),
              correction="right-hand side negated"),
    _Template("V-BIGLEG", "lmmmuyfv", F.BIG_Q_LEGENDRE, D, _v_bigleg, {"n": _N}, 1, printed=_v_bigleg_printed,
              poles=_bigleg_poles,
              correction="prefactor q^n/((1-q^n)[n+1]_q) (printed (q^-n - 1)[n+1]_q); second term uses the "
                         "lowering relation 3phi2(q^{1-n}, q^{n+2}, x; q^2, -q^2; q, q)"),
    _Template("LIN-COS", "mkiu1", F.COS_THIRD, D, _lin_cos, printed=_lin_cos_printed,
              correction="weight (-x^2(1-q)/q; q^2)_oo (printed +x^2); sign of x cos(x/q; q) term -"),
    _Template("LIN-SIN", "mkiu2", F.SIN_THIRD, D, _lin_sin, printed=_lin_sin_printed,
              correction="weight (-x^2(1-q)/q; q^2)_oo (printed +x^2); sign of x sin(x/q; q) term -"),
    _Template("LIN-LITLEG", "jmnhygfrr", F.LITTLE_Q_LEGENDRE, D, _lin_litleg_with(False), {"n": _N}, 1,
              printed=_lin_litleg_with(True), poles=_litleg_poles,
              correction="integrand denominator (r_n x; q)_oo (printed (q r_n x; q)_oo); factor 1/q dropped"),
    _Template("LIN-BIGLEG", "knywwww", F.BIG_Q_LEGENDRE, D, _lin_bigleg, {"n": _N}, 1, printed=_lin_bigleg_printed,
              poles=_bigleg_poles,
              correction="integrand denominator (r_n x^2/q^2; q^2)_oo (printed (r_n x^2; q^2)_oo); first term "
                         "-(q^2-x^2)/(1+q) 3phi2(q^{1-n}, q^{n+2}, x; q^2, -q^2; q, q)"),
    _Template("ALG-HERM1-X", "2145fdd", F.HERMITE_I, D, _ALG_HERM1_X, {"n": _N}, 2, printed=_alg_herm1_x_printed),
    _Template("ALG-HERM1-POW", "nbdgss", F.HERMITE_I, D, _ALG_HERM1_POW, {"n": _N}, 2, printed=_herm1_pow),
    _Template("ALG-HERM2-X", "hbggdmkl", F.HERMITE_II, D, _ALG_HERM2_X, {"n": _N}, 2, printed=_alg_herm2_x_printed),
    _Template("ALG-HERM2-POW", "hbggdmklgn", F.HERMITE_II, D, _ALG_HERM2_POW, {"n": _N}, 2, printed=_herm2_pow),
)

CASE_IDS = tuple(t.id for t in _TEMPLATES)
_BY_ID = {t.id: t for t in _TEMPLATES}


def _constraint_for(t: _Template) -> Callable[[dict], Optional[str]]:
    def check(p: dict) -> Optional[str]:
        for name in t.grid:
            key = "a" if name == "ab" else name
            if key not in p:
                return f"{t.id}: missing parameter {key}"
        if t.n_min is not None and (int(p["n"]) != p["n"] or p["n"] < t.n_min):
            return f"{t.id} needs integer n >= {t.n_min} (got n={p['n']})"
        if "nu" in p and p["nu"] <= 1:
            return f"{t.id} needs nu > 1 (got nu={p['nu']})"
        if "alpha" in p and p["alpha"] <= -1:
            return f"{t.id} needs alpha > -1 (got alpha={p['alpha']})"
        if "a" in p and (p["a"] == 0 or p["b"] == 0):
            return f"{t.id} needs nonzero a and b"
        return None

    return check


def _instances(t: _Template, n_grid: Sequence[int]) -> list:
    names, values = [], []
    for name, vals in t.grid.items():
        names.append(name)
        values.append(tuple(n_grid) if vals == _N else vals)
    out = []
    for combo in itertools.product(*values):
        p = {}
        for name, v in zip(names, combo):
            if name == "ab":
                p["a"], p["b"] = v
            else:
                p[name] = v
        out.append(p)
    return out


def _family_instance(t: _Template, p: dict) -> S.SpecialFamily:
    tag = t.family
    if tag is F.BIG_Q_LAGUERRE:
        return S.big_q_laguerre(p["n"], p["a"], p["b"])
    if tag is F.Q_LAGUERRE:
        return S.q_laguerre(p["n"], p["alpha"])
    if tag is F.JACKSON_BESSEL2_SCALED:
        return S.jackson_bessel2_scaled(p["nu"])
    if "n" in p:
        return _fam(tag, n=p["n"])
    return _fam(tag)


def _near_zero(y: Callable[[float], float], x: float) -> bool:
    """True when y vanishes within relative distance POLE_MARGIN of x."""
    lo, mid, hi = y(x * (1 - POLE_MARGIN)), y(x), y(x * (1 + POLE_MARGIN))
    return mid == 0 or lo * mid < 0 or mid * hi < 0


def _sample_ok(t: _Template, p: dict, q: float, x: float, y: Callable[[float], float]) -> bool:
    if x == 0 or abs(x) < POLE_MARGIN:
        return False
    if t.positive_only and x <= 0:
        return False
    points = (x,) if t.mode is Mode.SUM else (x, q * x)
    for pt in points:
        if t.poles is not None and any(abs(v) < POLE_MARGIN for v in t.poles(p, q, pt)):
            return False
        if _near_zero(y, pt):
            return False
    return True


def _make_case(t: _Template, q_grid, n_grid, x_grid, instances=None) -> IdentityCase:
    check = _constraint_for(t)
    if instances is None:
        instances = [p for p in _instances(t, n_grid) if check(p) is None]
    else:
        for p in instances:
            msg = check(p)
            if msg:
                raise CatalogError(msg)
    samples = []
    for q in q_grid:
        for p in instances:
            key = tuple(sorted(p.items()))
            y = _ev(_family_instance(t, p), q)
            for x in x_grid:
                if _sample_ok(t, p, q, x, y):
                    samples.append(Sample(q, x, key))
    grid = {}
    for p in instances:
        for k, v in p.items():
            grid.setdefault(k, [])
            if v not in grid[k]:
                grid[k].append(v)
    return IdentityCase(
        id=t.id, label=t.label, family=t.family, mode=t.mode, params=grid, build=t.build,
        samples=tuple(samples), printed=t.printed, correction=t.correction, constraint=check,
    )


def build_catalog(q_grid: Sequence[float] = Q_GRID, n_grid: Sequence[int] = N_GRID,
                  x_grid: Sequence[float] = X_GRID) -> list:
    if not q_grid or not n_grid:
        raise CatalogError("q and n grids must be nonempty")
    qs = [qvalue(q) for q in q_grid]
    return [_make_case(t, qs, list(n_grid), list(x_grid)) for t in _TEMPLATES]


def build_case(case_id: str, instances: Sequence[dict], q_grid: Sequence[float] = Q_GRID,
               x_grid: Sequence[float] = X_GRID) -> IdentityCase:
    """One case at explicit parameter instances; violations raise CatalogError."""
    if case_id not in _BY_ID:
        raise CatalogError(f"unknown case {case_id!r}")
    qs = [qvalue(q) for q in q_grid]
    return _make_case(_BY_ID[case_id], qs, [], list(x_grid), [dict(p) for p in instances])


def select(cases: Sequence[IdentityCase], patterns: Sequence[str]) -> list:
    if not patterns:
        return list(cases)
    return [c for c in cases if any(fnmatch.fnmatchcase(c.id, pat) for pat in patterns)]


# verification -------------------------------------------------------------------

class SumResult(NamedTuple):
    value: float
    terms: int
    tail: float
    largest: float


def lattice_sum(term: Callable[[int, float], float], x: float, policy: TruncationPolicy) -> SumResult:
    """sum_k term(k, x) with a geometric tail estimate from the last ratios."""
    total = 0.0
    largest = 0.0
    small = 0
    recent = []
    for k in range(policy.max_terms):
        t = term(k, x)
        total += t
        largest = max(largest, abs(t))
        recent.append(abs(t))
        if len(recent) > policy.consecutive_small + 1:
            recent.pop(0)
        if abs(t) <= policy.rel_term_cutoff * abs(total):
            small += 1
            if small >= policy.consecutive_small:
                last = recent[-1]
                if last == 0.0:
                    return SumResult(total, k + 1, 0.0, largest)
                ratios = [b / a for a, b in zip(recent, recent[1:]) if a > 0]
                rho = max(ratios) if ratios else 1.0
                tail = math.inf if rho >= 1.0 else last * rho / (1.0 - rho)
                return SumResult(total, k + 1, tail, largest)
        else:
            small = 0
    raise ConvergenceError(f"lattice sum not converged in {policy.max_terms} terms (x={x})")


def _sample_residual(case: IdentityCase, sides: Sides, s: Sample, policy: TruncationPolicy):
    """Return (residual, terms, tail)."""
    if case.mode is Mode.QDERIV:
        d = dq(sides.rhs, s.x, s.q)
        v = sides.lhs(s.x)
        return abs(d - v) / max(abs(v), abs(d), SCALE_FLOOR), None, None
    res = lattice_sum(sides.lhs, s.x, policy)
    r = sides.rhs(s.x)
    scale = max(abs(res.value), abs(r), res.largest, SCALE_FLOOR)
    return abs(res.value - r) / scale, res.terms, res.tail / scale


def _evaluate(case: IdentityCase, build: Builder, policy: TruncationPolicy) -> list:
    out = []
    cache = {}
    for s in case.samples:
        key = (s.params, s.q)
        try:
            if key not in cache:
                cache[key] = build(s.param_dict, s.q)
            residual, terms, tail = _sample_residual(case, cache[key], s, policy)
            if not math.isfinite(residual):
                raise ArithmeticError("non-finite residual")
            out.append(SampleResult(s.q, s.x, dict(s.params), residual, terms, tail, None))
        except (ArithmeticError, ValueError) as exc:
            out.append(SampleResult(s.q, s.x, dict(s.params), None, None, None, f"{type(exc).__name__}: {exc}"))
    return out


def _defect_note(case: IdentityCase, policy: TruncationPolicy, tol: float) -> str:
    """Measure the printed form on the case's samples."""
    printed = case.printed
    worst = 0.0
    ratios = []
    errors = 0
    cache = {}
    for s in case.samples:
        key = (s.params, s.q)
        try:
            if key not in cache:
                cache[key] = printed(s.param_dict, s.q)
            sides = cache[key]
            if case.mode is Mode.QDERIV:
                d = dq(sides.rhs, s.x, s.q)
                v = sides.lhs(s.x)
            else:
                d = lattice_sum(sides.lhs, s.x, policy).value
                v = sides.rhs(s.x)
            worst = max(worst, abs(d - v) / max(abs(v), abs(d), SCALE_FLOOR))
            if v != 0:
                ratios.append(d / v)
        except (ArithmeticError, ValueError):
            errors += 1
    note = f"PAPER-DISCREPANCY: printed form max residual {worst:.3e}"
    if ratios:
        note += f", defect ratio in [{min(ratios):.6g}, {max(ratios):.6g}]"
    if errors:
        note += f", {errors} samples not evaluable"
    if worst <= tol:
        note += " (printed form within tolerance)"
    return note + f"; verified form: {case.correction}"


def verify_case(case: IdentityCase, tol: float = 1e-8, policy: TruncationPolicy = DEFAULT_POLICY,
                diagnose_printed: bool = True) -> CaseReport:
    results = _evaluate(case, case.build, policy)
    ok = True
    worst = 0.0
    worst_tail = 0.0
    max_terms = 0
    for r in results:
        if r.residual is None:
            ok = False
            continue
        worst = max(worst, r.residual)
        if r.tail is not None:
            worst_tail = max(worst_tail, r.tail)
            max_terms = max(max_terms, r.terms)
            if r.tail >= tol / 10:
                ok = False
        if r.residual > tol:
            ok = False
    notes = []
    if case.discrepant and diagnose_printed and case.printed is not None:
        notes.append(_defect_note(case, policy, tol))
    if case.mode is Mode.SUM:
        log.debug("%s: worst tail bound %.3e, up to %d terms", case.id, worst_tail, max_terms)
        notes.append(f"tail bound <= {worst_tail:.3e}, terms <= {max_terms}")
    errors = sum(r.residual is None for r in results)
    if errors:
        notes.append(f"{errors} samples raised")
    return CaseReport(
        id=case.id, label=case.label, mode=case.mode.value, params=case.params, samples=results,
        max_residual=worst, passed=ok and bool(results), notes=notes,
    )


def verify_all(cases: Sequence[IdentityCase], tol: float = 1e-8, policy: TruncationPolicy = DEFAULT_POLICY,
               workers: int = 1, diagnose_printed: bool = True, config: Optional[dict] = None) -> SuiteReport:
    run = lambda c: verify_case(c, tol, policy, diagnose_printed)
    if workers > 1 and len(cases) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run, cases))
    else:
        reports = [run(c) for c in cases]
    reports.sort(key=lambda r: r.id)
    return SuiteReport.from_cases(reports, config or {"tol": tol})


# consistency between constructions --------------------------------------------------

def _rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), SCALE_FLOOR)


def corollary_consistency(q: float, x: float, policy: TruncationPolicy = DEFAULT_POLICY) -> dict:
    """The corollary sums against their parent sums at the substituted c."""
    out = {}
    c = 1 - q * q
    parent = _airy_sum_c({"c": c}, q)
    child = _corollary_airy({}, q)
    out["COROLLARY-AIRY rhs"] = _rel(parent.rhs(x) / x, child.rhs(x))
    out["COROLLARY-AIRY sum"] = _rel(lattice_sum(parent.lhs, x, policy).value / x, lattice_sum(child.lhs, x, policy).value)
    c = -(1 - q) / q
    parent = _ram_sum_c_with(_k_k1, 1.0)({"c": c}, q)
    child = _corollary_ram({}, q)
    out["COROLLARY-RAM rhs"] = _rel(parent.rhs(x) / (q * q * x), child.rhs(x))
    out["COROLLARY-RAM sum"] = _rel(lattice_sum(parent.lhs, x, policy).value / (q * q * x),
                                    lattice_sum(child.lhs, x, policy).value)
    return out


def cross_derivation_consistency(q: float, x: float, n: int) -> dict:
    """Closed-form RHS against the RHS produced by the algebraic fragment."""
    p = {"n": n}
    return {
        "HERM1-POW vs ALG-HERM1-POW": _rel(_herm1_pow(p, q).rhs(x), _ALG_HERM1_POW(p, q).rhs(x)),
        "HERM2-POW vs ALG-HERM2-POW": _rel(_herm2_pow(p, q).rhs(x), _ALG_HERM2_POW(p, q).rhs(x)),
    }
