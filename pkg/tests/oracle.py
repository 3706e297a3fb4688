"""Independent extended-precision series used as test oracles."""

from mpmath import mp, mpf

mp.dps = 40


def poch(a, q, n):
    p = mpf(1)
    for k in range(n):
        p *= 1 - a * q**k
    return p


def pinf(a, q, n=400):
    return poch(a, q, n)


def phi(up, lo, q, z, terms=200):
    e = 1 + len(lo) - len(up)
    total = mpf(0)
    for n in range(terms):
        t = mpf(1)
        for a in up:
            t *= poch(a, q, n)
        for b in lo:
            t /= poch(b, q, n)
        t /= poch(q, q, n)
        t *= ((-1) ** n * q ** (n * (n - 1) // 2)) ** e * z**n
        total += t
    return total


def herm1(n, x, q):
    # (x^-1; q)_k (-qx)^k expanded as (-q)^k prod (x - q^j)
    total = mpf(0)
    for k in range(n + 1):
        t = poch(q**-n, q, k) / poch(q, q, k) * (-q) ** k
        for j in range(k):
            t *= x - q**j
        total += t
    return q ** (n * (n - 1) // 2) * total


def herm2(n, x, q):
    Q = q * q
    return sum(poch(q**-n, Q, k) * poch(q ** (1 - n), Q, k) / poch(Q, Q, k) * (-q * q) ** k * x ** (n - 2 * k)
               for k in range(n // 2 + 1))


def big_q_laguerre(n, a, b, x, q):
    return phi([q**-n, 0, x], [a * q, b * q], q, q, n + 1)


def q_laguerre(n, al, x, q):
    return phi([q**-n, -x], [0], q, q ** (n + al + 1), n + 1) / poch(q, q, n)


def stieltjes_wigert(n, x, q):
    return phi([q**-n], [0], q, -(q ** (n + 1)) * x, n + 1) / poch(q, q, n)


def jb2_scaled(nu, x, q, terms=80):
    Q, z = q * q, 2 * x * (1 - q)
    s = sum((-1) ** n * Q ** (n * (n + nu)) / (poch(Q, Q, n) * poch(Q ** (nu + 1), Q, n)) * (z / 2) ** (2 * n + nu)
            for n in range(terms))
    return pinf(Q ** (nu + 1), Q) / pinf(Q, Q) * s


def q_airy(x, q):
    return phi([0], [-q], q, -x, 120)


def ramanujan(x, q):
    return phi([], [0], q, -q * x, 120)


def big_q_legendre(n, x, q):
    return phi([q**-n, q ** (n + 1), x], [q, -q], q, q, n + 1)


def little_q_legendre(n, x, q):
    return phi([q**-n, q ** (n + 1)], [q], q, q * x, n + 1)


def _qfact(n, q):
    p = mpf(1)
    for k in range(1, n + 1):
        p *= (1 - q**k) / (1 - q)
    return p


def sin_third(z, q):
    return sum((-1) ** n * q ** (n * n + n) * z ** (2 * n + 1) / _qfact(2 * n + 1, q) for n in range(60))


def cos_third(z, q):
    return sum((-1) ** n * q ** (n * n) * z ** (2 * n) / _qfact(2 * n, q) for n in range(60))


def sin_q(z, q):
    return sum((-1) ** n * z ** (2 * n + 1) / _qfact(2 * n + 1, q) for n in range(200))


def cap_sin_q(z, q):
    return sum((-1) ** n * q ** (n * (2 * n + 1)) * z ** (2 * n + 1) / _qfact(2 * n + 1, q) for n in range(60))
