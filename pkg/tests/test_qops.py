import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qriccati import QDomainError, antiderivative_residual, dq, dq_inv, jackson_integral, q_number
from qriccati.errors import ConvergenceError
from qriccati.qcore import TruncationPolicy
from qriccati.qops import POSITIVE, PUNCTURED, Domain, RealFunction, jackson_integral_detail
from qriccati import qspecial as S


@pytest.mark.parametrize("f,x,q,want", [
    (lambda t: t * t, 1.0, 0.5, 1.5),
    (lambda t: 3.0, 0.7, 0.5, 0.0),
    (lambda t: t**3, 2.0, 0.5, 7.0),
])
def test_dq(f, x, q, want):
    assert dq(f, x, q) == pytest.approx(want, rel=1e-15, abs=1e-15)


@pytest.mark.parametrize("f,x,q,want", [
    (lambda t: t * t, 1.0, 0.5, 3.0),
    (lambda t: 3.0, 0.7, 0.5, 0.0),
    (lambda t: t, -1.3, 0.25, 1.0),
])
def test_dq_inv(f, x, q, want):
    assert dq_inv(f, x, q) == pytest.approx(want, rel=1e-15, abs=1e-15)


@pytest.mark.parametrize("op", [dq, dq_inv])
def test_operators_reject_zero(op):
    with pytest.raises(QDomainError):
        op(math.sin, 0.0, 0.5)


@pytest.mark.parametrize("f,want", [(lambda t: 1.0, 1.0), (lambda t: t, 2 / 3), (lambda t: t * t, 1 / 1.75)])
def test_jackson_integral_basics(f, want):
    assert jackson_integral(f, 1.0, 0.5) == pytest.approx(want, rel=1e-14)


def test_jackson_integral_zero_endpoint_and_budget():
    assert jackson_integral(math.exp, 0.0, 0.5) == 0.0
    with pytest.raises(ConvergenceError):
        jackson_integral(lambda t: 1.0, 1.0, 0.99, TruncationPolicy(max_terms=30))


def test_jackson_tail_covers_doubling():
    d = jackson_integral_detail(math.cos, 0.8, 0.9)
    longer = jackson_integral_detail(math.cos, 0.8, 0.9, TruncationPolicy(rel_term_cutoff=1e-30, max_terms=2000))
    assert abs(longer.value - d.value) <= d.tail_bound + 1e-15 * abs(d.value)


@pytest.mark.parametrize("k", range(9))
@pytest.mark.parametrize("a", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("q", [0.3, 0.5, 0.9])
def test_jackson_monomials(k, a, q):
    got = jackson_integral(lambda t: t**k, a, q)
    assert got == pytest.approx(a ** (k + 1) / q_number(k + 1, q), rel=1e-12)


def test_antiderivative_residual():
    q = 0.5
    F = lambda t: t * t / q_number(2, q)
    assert antiderivative_residual(F, lambda t: t, 0.4, q) == pytest.approx(0.0, abs=1e-16)
    assert abs(antiderivative_residual(lambda t: t**3, lambda t: t, 1.0, q)) > 0.1


def test_antiderivative_residual_hermite_trivial_pair():
    q, n, x = 0.5, 2, 0.3
    h = S.evaluator(S.hermite1(n), q)
    hl = S.evaluator(S.hermite1(n - 1), q)
    from qriccati import q_pochhammer_inf as pinf
    f = lambda t: pinf(q * q * t * t, q * q) * h(t)
    F = lambda t: -(q ** (n - 1)) * (1 - q) * pinf(t * t, q * q) * hl(t / q)
    assert f(x) == pytest.approx(-0.39777369460863538192, rel=1e-14)
    assert F(x) == pytest.approx(-0.13242953491238714544, rel=1e-14)
    assert abs(antiderivative_residual(F, f, x, q)) <= 1e-10


def test_domains():
    assert 0.0 not in PUNCTURED and -1.0 in PUNCTURED
    assert 0.0 not in POSITIVE and 2.0 in POSITIVE
    closed = Domain(0.0, 1.0, lo_closed=True, hi_closed=True)
    assert 0.0 in closed and 1.0 in closed and 1.1 not in closed
    f = RealFunction(math.sqrt, POSITIVE, "sqrt")
    assert f(4.0) == 2.0
    with pytest.raises(QDomainError, match="sqrt"):
        f(-1.0)


polys = st.lists(st.floats(-5, 5), min_size=1, max_size=7)


def _poly(cs):
    return lambda t: sum(c * t**i for i, c in enumerate(cs))


@given(polys, st.sampled_from([0.5, 1.0, 2.0]), st.floats(0.1, 0.9))
@settings(max_examples=60)
def test_fundamental_theorem(cs, a, q):
    f = _poly(cs)
    # D_q f extends continuously to 0 with value c_1
    df = lambda t: dq(f, t, q) if t != 0 else cs[1] if len(cs) > 1 else 0.0
    got = jackson_integral(df, a, q)
    want = f(a) - f(0.0)
    scale = max(abs(want), sum(abs(c) * a**i for i, c in enumerate(cs)), 1e-12)
    assert abs(got - want) <= 1e-12 * scale


@given(st.floats(-3, 3).filter(lambda x: abs(x) > 1e-3), st.floats(0.1, 0.9))
def test_dq_inv_is_dq_at_shifted_point(x, q):
    f = lambda t: math.sin(t) + t**3
    assert dq_inv(f, x, q) == pytest.approx(dq(f, x / q, q), rel=1e-12, abs=1e-12)
