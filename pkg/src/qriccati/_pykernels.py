"""Pure-Python series kernels.

Mirror of ``_ckernels.pyx``; both expose the same functions and return
the same tuples so that the backend can be swapped at import time.
"""

import math

# status codes shared with the compiled kernel
OK = 0
NOT_CONVERGED = 1
SINGULAR = 2

_SINGULAR_EPS = 1e-14


def poch(a, q, n):
    p = 1.0
    t = a
    for _ in range(n):
        p *= 1.0 - t
        t *= q
    return p


def poch_inf(a, q, cutoff, consecutive, max_terms):
    """Return (value, factors used, relative tail bound, status)."""
    p = 1.0
    t = a
    small = 0
    k = 0
    while k < max_terms:
        if abs(t) < cutoff:
            small += 1
            if small >= consecutive:
                break
        else:
            small = 0
        p *= 1.0 - t
        t *= q
        k += 1
    else:
        return p, k, math.inf, NOT_CONVERGED
    # |log prod_{j>=k}(1 - t q^j)| <= |t| / ((1-q)(1-|t|))
    at = abs(t)
    tail = math.expm1(at / ((1.0 - q) * (1.0 - at)))
    return p, k, tail, OK


def phi_sum(upper, lower, q, z, stop, cutoff, consecutive, max_terms):
    """Sum r phi s by term ratios.

    ``stop`` >= 0 is the index of the last nonzero term of a terminating
    series; -1 means sum until the policy is met. Returns
    (value, terms, absolute tail bound, status).
    """
    r = len(upper)
    s = len(lower)
    e = 1 + s - r
    term = 1.0
    total = 1.0
    qn = 1.0
    small = 0
    n = 0
    limit = stop if stop >= 0 else max_terms
    if e < 0 and stop < 0 and z != 0.0:
        # r > s + 1: zero radius of convergence
        return total, 1, math.inf, NOT_CONVERGED
    while n < limit:
        ratio = z / (1.0 - qn * q)
        for a in upper:
            ratio *= 1.0 - a * qn
        for b in lower:
            d = 1.0 - b * qn
            if abs(d) < _SINGULAR_EPS:
                return total, n + 1, math.inf, SINGULAR
            ratio /= d
        if e:
            ratio *= (-qn) ** e
        term *= ratio
        total += term
        n += 1
        qn *= q
        if stop < 0:
            if term == 0.0 or abs(term) <= cutoff * abs(total):
                small += 1
                if small >= consecutive:
                    break
            else:
                small = 0
    else:
        if stop < 0:
            return total, n + 1, math.inf, NOT_CONVERGED
    if stop >= 0:
        return total, n + 1, 0.0, OK
    # ratio bound valid for every later index (qn = q^n is now the next index)
    if e < 0:
        return total, n + 1, math.inf, NOT_CONVERGED
    rho = abs(z) * qn ** e / (1.0 - qn * q)
    for a in upper:
        rho *= 1.0 + abs(a) * qn
    for b in lower:
        d = 1.0 - abs(b) * qn
        if d <= 0.0:
            return total, n + 1, math.inf, OK
        rho /= d
    if rho >= 1.0:
        return total, n + 1, math.inf, OK
    return total, n + 1, abs(term) * rho / (1.0 - rho), OK
