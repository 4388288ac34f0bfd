"""Slow brute-force references in mpmath, written straight from the series
definitions with fixed symmetric truncation. Nothing here imports mockchar."""
from __future__ import annotations

import mpmath as mp

mp.mp.dps = 30
N = 60


def _e(x):
    return mp.exp(2j * mp.pi * x)


def theta_km(k, m, tau, z, n=N):
    k, m = mp.mpf(float(k)), mp.mpf(float(m))
    return complex(mp.fsum(_e(m * (j + k / (2 * m)) * z + m * (j + k / (2 * m)) ** 2 * tau) for j in range(-n, n + 1)))


def mumford(ab, tau, z):
    # mpmath uses nome e^{iπτ} and argument πz
    q = mp.exp(1j * mp.pi * mp.mpc(tau))
    w = mp.pi * mp.mpc(z)
    return complex({"00": mp.jtheta(3, w, q), "01": mp.jtheta(4, w, q),
                    "10": mp.jtheta(2, w, q), "11": -mp.jtheta(1, w, q)}[ab])


def eta(tau):
    q = _e(mp.mpc(tau))
    return complex(mp.exp(2j * mp.pi * mp.mpc(tau) / 24) * mp.qp(q))


def appell(m, s, tau, z1, z2, t=0, n=N):
    """``Φ1 - Φ2`` summed over ``|j| <= n``."""
    m, s = mp.mpf(float(m)), mp.mpf(float(s))
    tau, z1, z2, t = (mp.mpc(x) for x in (tau, z1, z2, t))
    a = mp.fsum(_e(m * j * (z1 + z2) + s * z1 + (m * j * j + s * j) * tau) / (1 - _e(z1 + j * tau))
                for j in range(-n, n + 1))
    b = mp.fsum(_e(-m * j * (z1 + z2) - s * z2 + (m * j * j + s * j) * tau) / (1 - _e(-z2 + j * tau))
                for j in range(-n, n + 1))
    return complex(_e(-m * t) * (a - b))


def _E(x):
    return mp.erf(mp.sqrt(mp.pi) * x)


def r_series(j, m, tau, w, n=N):
    j, m = mp.mpf(float(j)), mp.mpf(float(m))
    tau, w = mp.mpc(tau), mp.mpc(w)
    y = tau.imag
    total = mp.mpc(0)
    for k in range(-n, n + 1):
        nn = j + 2 * m * k
        sg = mp.sign(nn - mp.mpf(1) / 2 - j + 2 * m)
        br = sg - _E((nn - 2 * m * w.imag / y) * mp.sqrt(y / m))
        total += br * mp.exp(-1j * mp.pi * nn * nn * tau / (2 * m) + 2j * mp.pi * nn * w)
    return complex(total)


def phi_add(m, s, tau, z1, z2, t=0):
    m2 = int(round(2 * m))
    total = 0
    for i in range(m2):
        k = s + i
        d = theta_km(k, m, tau, z1 + z2) - theta_km(-k, m, tau, z1 + z2)
        if d != 0:
            total += r_series(k, m, tau, (z1 - z2) / 2) * d
    return complex(-0.5 * mp.exp(-2j * mp.pi * m * mp.mpc(t)) * total)
