"""Scalar special functions with explicit error control.

The Hurwitz/Riemann zeta evaluations use Euler-Maclaurin with Bernoulli
terms; because the relevant derivatives keep a fixed sign, the remainder
after truncation is bounded by the first omitted term, so every value can
be returned together with a rigorous error bound.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError, PoleError

EULER_GAMMA = 0.57721566490153286061

# B_2, B_4, ..., B_24 as exact rationals
_BERNOULLI = (
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510),
    Fraction(43867, 798), Fraction(-174611, 330), Fraction(854513, 138),
    Fraction(-236364091, 2730),
)
_BERNOULLI_F = tuple(float(b) for b in _BERNOULLI)

_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _log_gamma_complex(z: complex) -> complex:
    if z.real < 0.5:
        # reflection through Gamma(z)Gamma(1-z) = pi / sin(pi z)
        return cmath.log(cmath.pi / cmath.sin(cmath.pi * z)) - _log_gamma_complex(1.0 - z)
    z = z - 1.0
    x = complex(_LANCZOS_COEFFS[0])
    for i, c in enumerate(_LANCZOS_COEFFS[1:], start=1):
        x += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return 0.5 * math.log(2.0 * math.pi) + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def log_gamma(x: float | complex) -> float | complex:
    """Principal-branch log Gamma; float in, float out for positive reals."""
    if isinstance(x, complex):
        if x.imag == 0.0:
            return log_gamma(x.real)
        return _log_gamma_complex(x)
    if x <= 0.0 and x == math.floor(x):
        raise PoleError(f"log_gamma pole at {x}")
    if x > 0.0:
        return math.lgamma(x)
    return _log_gamma_complex(complex(x))


def digamma(x: float) -> float:
    """psi(x) for x > 0, via recurrence shift plus the asymptotic series."""
    if x <= 0.0:
        raise DomainError(f"digamma requires x > 0, got {x}")
    acc = 0.0
    while x < 12.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    power = inv2
    for k, b in enumerate(_BERNOULLI_F[:7], start=1):
        series += b / (2 * k) * power
        power *= inv2
    return acc + math.log(x) - 0.5 / x - series


def hurwitz_zeta_certified(s: float, a: float) -> tuple[float, float]:
    """(value, rigorous absolute error bound) for sum_{n>=0} (n+a)^(-s)."""
    if s <= 1.0:
        raise DomainError(f"hurwitz_zeta requires s > 1, got {s}")
    if a <= 0.0:
        raise DomainError(f"hurwitz_zeta requires a > 0, got {a}")
    shift = 0
    x = a
    while x < 16.0:
        shift += 1
        x += 1.0
    partial = math.fsum((n + a) ** (-s) for n in range(shift))
    value = partial + x ** (1.0 - s) / (s - 1.0) + 0.5 * x ** (-s)
    factor = s
    xpow = x ** (-s - 1.0)
    inv2 = 1.0 / (x * x)
    kmax = 8
    for k in range(1, kmax + 1):
        value += _BERNOULLI_F[k - 1] / math.factorial(2 * k) * factor * xpow
        # advance (s)(s+1)...(s+2k) and x^(-s-2k-1)
        factor *= (s + 2 * k - 1) * (s + 2 * k)
        xpow *= inv2
    omitted = abs(_BERNOULLI_F[kmax]) / math.factorial(2 * kmax + 2) * factor * xpow
    slop = 4e-16 * (abs(value) + x ** (-s)) * (shift + 4)
    return value, omitted + slop


def hurwitz_zeta(s: float, a: float) -> float:
    """sum_{n>=0} (n+a)^(-s) for s > 1, a > 0; absolute error below 1e-12."""
    return hurwitz_zeta_certified(s, a)[0]


def riemann_zeta(s: float) -> float:
    """zeta(s) for s > 1."""
    if s <= 1.0:
        raise DomainError(f"riemann_zeta requires s > 1, got {s}")
    return hurwitz_zeta(s, 1.0)


def legendre_p(n: int, x: float) -> float:
    """Legendre polynomial by the three-term recurrence, P_n(1) = 1 exactly."""
    if n < 0:
        raise DomainError("legendre_p requires n >= 0")
    if x == 1.0:
        return 1.0
    if x == -1.0:
        return -1.0 if n % 2 else 1.0
    pm, p = 1.0, x
    if n == 0:
        return pm
    for k in range(1, n):
        pm, p = p, ((2 * k + 1) * x * p - k * pm) / (k + 1)
    return p


@lru_cache(maxsize=64)
def gauss_legendre_nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights on [-1, 1]; exact for polynomials of degree < 2n."""
    if not 1 <= n <= 512:
        raise DomainError(f"quadrature order must be in [1, 512], got {n}")
    nodes, wts = np.polynomial.legendre.leggauss(n)
    nodes.setflags(write=False)
    wts.setflags(write=False)
    return nodes, wts


def legendre_table(nmax: int, x: np.ndarray) -> np.ndarray:
    """Rows 0..nmax of P_n evaluated on the array x."""
    table = np.empty((nmax + 1, len(x)))
    table[0] = 1.0
    if nmax >= 1:
        table[1] = x
    for n in range(1, nmax):
        table[n + 1] = ((2 * n + 1) * x * table[n] - n * table[n - 1]) / (n + 1)
    return table
