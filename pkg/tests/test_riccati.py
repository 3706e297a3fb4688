import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qriccati import q_pochhammer_inf as pinf
from qriccati import qspecial as S
from qriccati import riccati as R
from qriccati.errors import QDomainError
from qriccati.qops import RealFunction, dq, dq_inv, jackson_integral
from qriccati.qspecial import Middle

xs = st.floats(-0.9, 0.9).filter(lambda x: abs(x) > 0.05)
qs = st.floats(0.3, 0.9)


def hermite1_system(n, q):
    fam = S.hermite1(n)
    f = RealFunction(lambda x: pinf(q * q * x * x, q * q))
    return fam, R.RiccatiSystem(S.ode_coefficients(fam, q), f)


def hermite2_system(n, q):
    fam = S.hermite2(n)
    F = RealFunction(lambda x: 1.0 / pinf(-x * x, q * q))
    return fam, R.RiccatiSystem(S.ode_coefficients(fam, q), F)


def test_coefficients_a():
    q, n, x = 0.5, 2, 0.4
    _, sys1 = hermite1_system(n, q)
    p, r = sys1.coeffs.p(x), sys1.coeffs.r(x)
    assert R.coeff_A(sys1, x, q) == pytest.approx(p - x * (1 - q) * r / q)
    assert R.coeff_A_tilde(sys1, x, q) == pytest.approx(p + x * (1 - q) * r)


@given(st.integers(0, 5), xs, qs)
def test_weights_solve_first_order_equations(n, x, q):
    _, s1 = hermite1_system(n, q)
    f = s1.weight
    lhs = dq_inv(f, x, q) / q
    assert abs(lhs - s1.coeffs.p(x) * f(x)) <= 1e-9 * max(abs(lhs), abs(f(x)))
    _, s2 = hermite2_system(n, q)
    F = s2.weight
    lhs = dq(F, x, q)
    assert abs(lhs - s2.coeffs.p(x) * F(x)) <= 1e-9 * max(abs(lhs), abs(F(x)))


@given(st.floats(-2, 2).filter(lambda c: abs(c) > 0.05), xs, qs)
def test_bernoulli_fragment_exact(c, x, q):
    if min(abs(x + c), abs(x / q + c), abs(q * x + c)) < 1e-3:
        return
    u = R.bernoulli_fragment(c).u
    s = dq_inv(u, x, q) / q + u(x) * u(x / q) / q
    t = dq(u, x, q) + u(x) * u(q * x)
    scale = abs(u(x)) ** 2 / q
    assert abs(s) <= 1e-12 * scale and abs(t) <= 1e-12 * scale


def _companion_defect(frag, middle, x, q):
    h, u = frag.companion, frag.u
    if middle is Middle.DQ_INV:
        d, v = dq(h, x, q), u(x) * h(x)
    else:
        d, v = dq_inv(h, x, q), u(x) * h(x)
    return abs(d - v) / max(abs(d), abs(v), 1e-300)


@given(st.floats(-1.5, 1.5).filter(lambda c: abs(c) > 0.05), xs, qs)
def test_bernoulli_companion(c, x, q):
    frag = R.bernoulli_fragment(c)
    if abs(frag.companion(x)) < 1e-3:
        return
    assert _companion_defect(frag, Middle.DQ_INV, x, q) <= 1e-9
    assert _companion_defect(frag, Middle.DQ, x, q) <= 1e-9


@given(st.sampled_from([1.0, 2.0, 3.0, 0.7]), st.floats(-0.6, 0.6), st.floats(0.1, 0.9),
       st.sampled_from([Middle.DQ_INV, Middle.DQ]), qs)
@settings(max_examples=150)
def test_algebraic_companion(a, b, x, middle, q):
    try:
        frag = R.algebraic_fragment(a, b, middle, q)
    except QDomainError:
        return
    assert _companion_defect(frag, middle, x, q) <= 1e-9


def test_algebraic_fragment_rejects_complex_power():
    with pytest.raises(QDomainError):
        R.algebraic_fragment(5.0, 0.0, Middle.DQ_INV, 0.5)


def test_integer_power_companion_takes_negative_x():
    frag = R.algebraic_fragment(1.0, 0.0, Middle.DQ_INV, 0.5)
    assert frag.companion(-0.5) == pytest.approx(-0.5)


FRAGMENTS = [
    ("trivial", lambda q: R.trivial_fragment()),
    ("bernoulli", lambda q: R.bernoulli_fragment(0.7)),
    ("bernoulli0", lambda q: R.bernoulli_fragment(0.0)),
]


@pytest.mark.parametrize("name,make", FRAGMENTS)
@pytest.mark.parametrize("n", [1, 2, 4])
@pytest.mark.parametrize("x", [-0.85, -0.3, 0.25, 0.6])
@pytest.mark.parametrize("q", [0.3, 0.7])
def test_identity_first_and_second(name, make, n, x, q):
    frag = make(q)
    for build, (rhs, integrand) in (
        (hermite1_system, (R.identity_rhs_first, R.identity_integrand_first)),
        (hermite2_system, (R.identity_rhs_second, R.identity_integrand_second)),
    ):
        fam, system = build(n, q)
        y = S.evaluator(fam, q)
        dy = lambda t: S.shift_derivative(fam, t, q)
        F = lambda t: rhs(system, frag, y, dy, t, q)
        got = dq(F, x, q)
        want = integrand(system, frag, y, x, q)
        # for n = 1, c = 0 both sides vanish identically
        scale = max(abs(got), abs(want), abs(system.weight(x)) * (abs(y(x)) + abs(dy(x))))
        assert abs(got - want) <= 1e-9 * scale


def test_identity_rhs_second_value():
    q, x = 0.5, 0.5
    fam, system = hermite2_system(2, q)
    y = S.evaluator(fam, q)
    dy = lambda t: S.shift_derivative(fam, t, q)
    got = R.identity_rhs_second(system, R.bernoulli_fragment(0.0), y, dy, x, q)
    assert got == pytest.approx(-1.1062683812307016883, rel=1e-14)


def test_identity_rhs_degenerate_cases():
    q, x = 0.5, 0.4
    fam, system = hermite2_system(2, q)
    zero = lambda t: 0.0
    assert R.identity_rhs_second(system, R.bernoulli_fragment(0.3), zero, zero, x, q) == 0.0
    dy = lambda t: S.shift_derivative(fam, t, q)
    y = S.evaluator(fam, q)
    got = R.identity_rhs_second(system, R.trivial_fragment(), y, dy, x, q)
    assert got == pytest.approx(-system.weight(x) * dy(x))
    fam1, system1 = hermite1_system(2, q)
    dy1 = lambda t: S.shift_derivative(fam1, t, q)
    got = R.identity_rhs_first(system1, R.trivial_fragment(), S.evaluator(fam1, q), dy1, x, q)
    assert got == pytest.approx(-system1.weight(x / q) * dy1(x))


@pytest.mark.parametrize("fam", [S.hermite1(1), S.hermite1(3), S.hermite1(4), S.Q_AIRY, S.RAMANUJAN_A])
def test_riccati_equivalence_first(fam):
    q = 0.5
    system = R.RiccatiSystem(S.ode_coefficients(fam, q), RealFunction(lambda x: 1.0))
    y = S.evaluator(fam, q)
    u = lambda x: dq(y, x, q) / y(x)
    for x in (-0.8, -0.35, 0.2, 0.55, 0.9):
        if min(abs(y(x)), abs(y(x / q))) < 1e-6:
            continue
        s = R.residual_S(system, u, x, q)
        assert abs(s) <= 1e-8 * R.riccati_residual_scale(system, u, x, q)


def test_linear_fragment_solves_linear_part():
    q, n = 0.5, 3
    _, system = hermite1_system(n, q)
    u = lambda x: R.linear_fragment_u(system, x, q)
    for x in (0.3, -0.6):
        terms = (dq_inv(u, x, q) / q, system.coeffs.p(x) * u(x / q), system.coeffs.r(x))
        lin = sum(terms)
        assert abs(lin) <= 1e-10 * max(abs(t) for t in terms)
    with pytest.raises(QDomainError):
        R.linear_fragment_u(hermite2_system(n, q)[1], 0.3, q)


def test_v_construction():
    q = 0.5
    g = lambda t: 1.0 + t * t
    v = lambda t: R.v_construction(g, t, q)
    x = 0.7
    got = dq(lambda t: v(t) / g(t), x, q)
    assert got == pytest.approx(1 / g(x), rel=1e-12)
