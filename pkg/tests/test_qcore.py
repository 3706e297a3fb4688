import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qriccati import QBase, QDomainError, TruncationPolicy, q_factorial, q_gamma_int, q_number
from qriccati import q_pochhammer, q_pochhammer_inf
from qriccati.errors import ConvergenceError
from qriccati.qcore import q_pochhammer_inf_detail, qvalue

qs = st.floats(0.05, 0.95)


@pytest.mark.parametrize("bad", [0, 1, -0.2, 1.5, float("nan"), "x"])
def test_qbase_rejects_out_of_range(bad):
    with pytest.raises(QDomainError, match=r"q must lie in \(0,1\)"):
        QBase(bad)
    with pytest.raises(QDomainError):
        qvalue(bad)


def test_qbase_accepted_everywhere():
    assert q_number(3, QBase(0.5)) == 1.75


@pytest.mark.parametrize("n,q,want", [(0, 0.5, 0.0), (1, 0.3, 1.0), (1, 0.9, 1.0), (3, 0.5, 1.75)])
def test_q_number(n, q, want):
    assert q_number(n, q) == pytest.approx(want, rel=1e-15, abs=1e-300)


@pytest.mark.parametrize("n,want", [(0, 1.0), (2, 1.5), (3, 2.625)])
def test_q_factorial(n, want):
    assert q_factorial(n, 0.5) == pytest.approx(want, rel=1e-15)


@pytest.mark.parametrize("fn", [q_number, q_factorial])
def test_negative_degree_rejected(fn):
    with pytest.raises(QDomainError):
        fn(-1, 0.5)


@pytest.mark.parametrize("a,q,n,want", [(7.3, 0.5, 0, 1.0), (0.5, 0.5, 2, 0.375), (1.0, 0.9, 4, 0.0)])
def test_q_pochhammer(a, q, n, want):
    assert q_pochhammer(a, q, n) == pytest.approx(want, rel=1e-15, abs=0)


def test_q_pochhammer_rejects_fractional_length():
    with pytest.raises(QDomainError):
        q_pochhammer(0.5, 0.5, 1.5)


def test_q_pochhammer_inf_values(backend):
    assert q_pochhammer_inf(0.0, 0.7) == 1.0
    assert q_pochhammer_inf(1.0, 0.5) == 0.0
    # 60-factor product at 50 digits
    mpmath.mp.dps = 50
    ref = mpmath.fprod(1 - mpmath.mpf(0.5) ** (k + 1) for k in range(60))
    assert abs(q_pochhammer_inf(0.5, 0.5) - float(ref)) <= 1e-13 * float(ref)
    assert q_pochhammer_inf(0.5, 0.5) == pytest.approx(0.28878809508660242153, rel=1e-15)


def test_q_pochhammer_inf_tail_and_budget():
    d = q_pochhammer_inf_detail(0.5, 0.9)
    assert d.terms < 500 and 0 <= d.tail_bound < 1e-15
    with pytest.raises(ConvergenceError):
        q_pochhammer_inf(0.5, 0.99, TruncationPolicy(max_terms=20))


@pytest.mark.parametrize("n,want", [(1, 1.0), (2, 1.0), (4, 2.625)])
def test_q_gamma_int(n, want):
    assert q_gamma_int(n, 0.5) == pytest.approx(want, rel=1e-15)


@pytest.mark.parametrize("n", [0, -2, 1.5])
def test_q_gamma_int_domain(n):
    with pytest.raises(QDomainError):
        q_gamma_int(n, 0.5)


def test_policy_validation():
    with pytest.raises(ValueError):
        TruncationPolicy(rel_term_cutoff=0)
    with pytest.raises(ValueError):
        TruncationPolicy(consecutive_small=0)


@given(st.floats(-3, 3), qs, st.integers(0, 40))
def test_pochhammer_recurrence(a, q, n):
    lhs = q_pochhammer(a, q, n + 1)
    rhs = q_pochhammer(a, q, n) * (1 - a * q**n)
    assert lhs == pytest.approx(rhs, rel=1e-14, abs=1e-300)


@given(st.floats(0.01, 0.99), st.floats(0.05, 0.9))
@settings(max_examples=50)
def test_finite_products_approach_infinite(a, q):
    inf = q_pochhammer_inf(a, q)
    gaps = [abs(q_pochhammer(a, q, n) - inf) for n in range(0, 400, 10)]
    assert all(g2 <= g1 + 1e-15 for g1, g2 in zip(gaps, gaps[1:]))
    assert gaps[-1] < 1e-12


@given(st.integers(1, 60), qs)
def test_q_number_increment(n, q):
    hi = q_number(n, q)
    # subtracting two values of size [n]_q loses about eps * [n]_q
    assert hi - q_number(n - 1, q) == pytest.approx(q ** (n - 1), rel=1e-12, abs=8e-16 * hi)


@given(st.integers(1, 30), st.floats(1e-6, 1e-3))
def test_q_number_near_one(n, eps):
    v = q_number(n, 1 - eps)
    assert n - n * n * eps <= v <= n * (1 + 1e-15)
