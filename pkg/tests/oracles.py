"""Independent reference computations, written without the package internals."""

import math

import mpmath as mp


def identity_lhs(alpha, beta, dps=30):
    """Left side of the cosine/sine power integral by tanh-sinh quadrature.

    ``x = u**m`` with ``m = 1/(1 - alpha)`` removes the ``x**-alpha``
    singularity, which tanh-sinh alone resolves poorly for alpha near 1.
    """
    with mp.workdps(dps):
        alpha, beta = mp.mpf(alpha), mp.mpf(beta)
        b = mp.pi / 2 - beta
        m = 1 / (1 - alpha)

        def f(u):
            x = u**m
            # x**-alpha dx = m u**(m - 1 - m alpha) du = m du
            if x == 0:
                return m * mp.cos(beta) ** alpha
            return m * max(mp.cos(x + beta), 0) ** alpha * (x / mp.sin(x)) ** alpha

        return float(mp.quad(f, [0, (b / 2) ** (1 / m), b ** (1 / m)]))


def log_k1(lam, alpha, dps=30):
    """``int_0^1 (Q(s) - 1)/s ds`` by direct tanh-sinh quadrature."""
    with mp.workdps(dps):
        alpha = mp.mpf(alpha)
        c = mp.exp(2j * lam / alpha)
        m = 1 / (1 - alpha)

        def f(v):
            # s = 1 - v**m turns (1 - s)**-alpha ds into a smooth density
            s = 1 - v**m
            if s == 0:
                return m * (alpha * c - (m - 1))
            return m * ((1 + c * s) ** alpha - v ** (m - 1)) / s

        return complex(mp.quad(f, [0, 0.5, 1]))


def log_k(lam, alpha, z, dps=30):
    """``int_0^z (Q - 1)/zeta dzeta`` along the straight segment."""
    with mp.workdps(dps):
        c = mp.exp(2j * lam / alpha)
        z = mp.mpc(z)
        Q = lambda s: mp.exp(alpha * (mp.log(1 + c * s * z) - mp.log(1 - s * z)))
        return complex(mp.quad(lambda s: (Q(s) - 1) / s, [0, 0.5, 1]))


def standard_log_radius(lam, alpha, theta):
    """Direct transcription of ``max(B theta, -A (2 pi - theta))`` on [0, 2 pi)."""
    c2 = math.cos(lam) ** 2
    t = math.tan(math.pi * alpha / 2)
    A = c2 * (t - math.tan(lam))
    B = -c2 * (t + math.tan(lam))
    theta = theta % (2 * math.pi)
    return max(B * theta, -A * (2 * math.pi - theta))
