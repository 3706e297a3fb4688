# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled series kernels; same contract as ``_pykernels``."""

from libc.math cimport fabs, expm1, pow, INFINITY

cdef int OK = 0
cdef int NOT_CONVERGED = 1
cdef int SINGULAR = 2
cdef double _SINGULAR_EPS = 1e-14


cpdef double poch(double a, double q, long n):
    cdef double p = 1.0
    cdef double t = a
    cdef long k
    for k in range(n):
        p *= 1.0 - t
        t *= q
    return p


cpdef tuple poch_inf(double a, double q, double cutoff, long consecutive,
                     long max_terms):
    cdef double p = 1.0
    cdef double t = a
    cdef long small = 0
    cdef long k = 0
    cdef double at
    while k < max_terms:
        if fabs(t) < cutoff:
            small += 1
            if small >= consecutive:
                break
        else:
            small = 0
        p *= 1.0 - t
        t *= q
        k += 1
    else:
        return p, k, INFINITY, NOT_CONVERGED
    at = fabs(t)
    return p, k, expm1(at / ((1.0 - q) * (1.0 - at))), OK


cpdef tuple phi_sum(upper, lower, double q, double z, long stop,
                    double cutoff, long consecutive, long max_terms):
    cdef long r = len(upper)
    cdef long s = len(lower)
    cdef long e = 1 + s - r
    cdef double[16] ua
    cdef double[16] lb
    cdef long i
    if r > 16 or s > 16:
        raise ValueError("at most 16 upper and 16 lower parameters")
    for i in range(r):
        ua[i] = upper[i]
    for i in range(s):
        lb[i] = lower[i]

    cdef double term = 1.0
    cdef double total = 1.0
    cdef double qn = 1.0
    cdef double ratio, d, rho
    cdef long small = 0
    cdef long n = 0
    cdef long limit = stop if stop >= 0 else max_terms
    cdef bint converged = stop >= 0
    if e < 0 and stop < 0 and z != 0.0:
        # r > s + 1: zero radius of convergence
        return total, 1, INFINITY, NOT_CONVERGED
    while n < limit:
        ratio = z / (1.0 - qn * q)
        for i in range(r):
            ratio *= 1.0 - ua[i] * qn
        for i in range(s):
            d = 1.0 - lb[i] * qn
            if fabs(d) < _SINGULAR_EPS:
                return total, n + 1, INFINITY, SINGULAR
            ratio /= d
        if e != 0:
            ratio *= pow(-qn, <double>e)
        term *= ratio
        total += term
        n += 1
        qn *= q
        if stop < 0:
            if term == 0.0 or fabs(term) <= cutoff * fabs(total):
                small += 1
                if small >= consecutive:
                    converged = True
                    break
            else:
                small = 0
    if stop >= 0:
        return total, n + 1, 0.0, OK
    if not converged or e < 0:
        return total, n + 1, INFINITY, NOT_CONVERGED
    rho = fabs(z) * pow(qn, <double>e) / (1.0 - qn * q)
    for i in range(r):
        rho *= 1.0 + fabs(ua[i]) * qn
    for i in range(s):
        d = 1.0 - fabs(lb[i]) * qn
        if d <= 0.0:
            return total, n + 1, INFINITY, OK
        rho /= d
    if rho >= 1.0:
        return total, n + 1, INFINITY, OK
    return total, n + 1, fabs(term) * rho / (1.0 - rho), OK
