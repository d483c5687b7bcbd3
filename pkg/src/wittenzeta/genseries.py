"""Multi-factor series over shifted integers and their partial-fraction form.

``pi_series`` sums prod_j (n + kappa_j)^-(1+pi_j) over n >= 1.  The
generating-series value at a point T is the same sum with all exponents 1
and kappa_j shifted by -T_j; its partial-fraction expansion turns it into
digamma values, once the divergent single-factor pieces are regularized.
The regularization constant drops out because the partial-fraction
coefficients sum to zero, which is also checked here in exact arithmetic.
"""
from __future__ import annotations

import math
import os
from fractions import Fraction as Q

from . import dims
from .errors import DegenerateConfiguration, DivergenceError, DomainError
from .result import EvalResult
from .specfun import digamma, hurwitz_zeta_certified

_DEFAULT_CAP = 2_000_000


def term_cap(default: int = _DEFAULT_CAP) -> int:
    """Series-length cap, overridable through WZ_MAX_TERMS."""
    raw = os.environ.get("WZ_MAX_TERMS")
    if raw is None:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        return default


def tail_start_ok(kappas: list[float], powers: list[float], start: int) -> bool:
    """Whether the certified tail formula is valid from this start index."""
    total = sum(powers)
    kbar = sum(p * k for p, k in zip(powers, kappas)) / total
    a = start + kbar
    if a <= 1.0:
        return False
    spread = max((abs(k - kbar) for k in kappas), default=0.0)
    v = sum(p * (k - kbar) ** 2 for p, k in zip(powers, kappas))
    return spread <= 0.5 * a and v <= 0.5 * a * a


def shifted_product_tail(kappas: list[float], powers: list[float],
                         start: int) -> tuple[float, float]:
    """Certified (value, bound) for sum_{n >= start} prod_j (n+kappa_j)^(-p_j).

    The product is pinned to (n + kbar)^(-P) with kbar the power-weighted
    mean shift, so the first-order deviation vanishes and the remainder is
    controlled by V = sum p_j (kappa_j - kbar)^2:

        |prod - (n+kbar)^(-P)| <= 2 V (n+kbar)^(-P-2)

    valid for n + kbar >= 2 max|kappa_j - kbar| and V <= (n+kbar)^2 / 2.
    """
    total = float(sum(powers))
    if total <= 1.0:
        raise DivergenceError(f"total exponent {total} gives a divergent tail")
    if not tail_start_ok(kappas, powers, start):
        raise DomainError("tail start too small for the certified bound")
    kbar = sum(p * k for p, k in zip(powers, kappas)) / total
    v = sum(p * (k - kbar) ** 2 for p, k in zip(powers, kappas))
    main, err = hurwitz_zeta_certified(total, start + kbar)
    bound = err
    if v > 0.0:
        corr, corr_err = hurwitz_zeta_certified(total + 2.0, start + kbar)
        bound += 2.0 * v * (corr + corr_err)
    return main, bound


def _log_term(kappas: list[float], powers: list[float], n: int) -> float:
    return -sum(p * math.log(n + k) for p, k in zip(powers, kappas))


def _scaled(scale_log: float, x: float) -> float:
    """exp(scale_log) * x without overflowing on huge scale factors."""
    if x <= 0.0:
        return 0.0
    t = scale_log + math.log(x)
    if t > 709.0:
        return math.inf
    return math.exp(t)


def _sum_with_tail(kappas: list[float], powers: list[float], start: int,
                   tolerance: float, scale_log: float = 0.0,
                   max_terms: int | None = None) -> EvalResult:
    """sum_{n >= start} exp(scale_log) * prod (n+kappa_j)^(-p_j), certified."""
    if sum(powers) <= 1.0:
        raise DivergenceError("series diverges: total exponent <= 1")
    cap = term_cap() if max_terms is None else max_terms
    partial = 0.0
    n = start
    checkpoint = 16
    while True:
        partial += math.exp(scale_log + _log_term(kappas, powers, n))
        n += 1
        hit_cap = n - start >= cap
        if n - start >= checkpoint or hit_cap:
            if tail_start_ok(kappas, powers, n):
                tail, bound = shifted_product_tail(kappas, powers, n)
                tail_scaled = _scaled(scale_log, tail)
                bound_scaled = _scaled(scale_log, bound)
                if bound_scaled <= tolerance or hit_cap:
                    return EvalResult(
                        value=partial + tail_scaled,
                        tail_bound=bound_scaled,
                        terms_used=n - start,
                        converged=bound_scaled <= tolerance,
                        rigorous=True,
                    )
            elif hit_cap:
                return EvalResult(value=partial, tail_bound=math.inf,
                                  terms_used=n - start, converged=False,
                                  rigorous=True)
            checkpoint *= 2


def pi_series(pi: list[int], kappa: list[Q | float], tolerance: float = 1e-10,
              max_terms: int | None = None) -> EvalResult:
    """sum_{n>=1} prod_j (n + kappa_j)^-(1+pi_j)."""
    if len(pi) != len(kappa) or not pi:
        raise DomainError("pi and kappa must be nonempty lists of equal length")
    if any(p < 0 for p in pi):
        raise DomainError("pi entries must be nonnegative integers")
    if any(float(k) <= 0 for k in kappa):
        raise DomainError("kappa entries must be positive")
    powers = [1.0 + p for p in pi]
    if sum(powers) < 2.0:
        raise DivergenceError("sum of (1 + pi_j) must be at least 2")
    kappas = [float(k) for k in kappa]
    return _sum_with_tail(kappas, powers, 1, tolerance, 0.0, max_terms)


def gen_series_direct(kappa: list[Q | float], t_point: list[float],
                      tolerance: float = 1e-12,
                      max_terms: int | None = None) -> EvalResult:
    """sum_{n>=1} prod_j (n + kappa_j - T_j)^(-1) by direct summation."""
    if len(kappa) != len(t_point):
        raise DomainError("kappa and T must have equal length")
    if len(kappa) < 2:
        raise DivergenceError("a single factor with exponent one diverges")
    shifts = [float(k) - float(t) for k, t in zip(kappa, t_point)]
    if any(1.0 + a <= 0.0 for a in shifts):
        raise DomainError("need 1 + kappa_j - T_j > 0 for every factor")
    return _sum_with_tail(shifts, [1.0] * len(shifts), 1, tolerance, 0.0, max_terms)


def _partial_fraction_coeffs(shifts: list[float]) -> list[float]:
    coeffs = []
    for nu, a_nu in enumerate(shifts):
        prod = 1.0
        for mu, a_mu in enumerate(shifts):
            if mu == nu:
                continue
            diff = a_mu - a_nu
            if abs(diff) < 1e-12:
                raise DegenerateConfiguration(
                    f"shifted kappas {a_mu} and {a_nu} coincide"
                )
            prod /= diff
        coeffs.append(prod)
    return coeffs


def gen_series_mf(kappa: list[Q | float], t_point: list[float]) -> float:
    """Partial-fraction value of the generating series.

    Each single-factor piece is regularized to -digamma(1 + kappa - T);
    the subtracted constants cancel because the coefficients sum to zero.
    """
    if len(kappa) != len(t_point):
        raise DomainError("kappa and T must have equal length")
    if len(kappa) < 2:
        raise DivergenceError("a single factor with exponent one diverges")
    shifts = [float(k) - float(t) for k, t in zip(kappa, t_point)]
    if any(1.0 + a <= 0.0 for a in shifts):
        raise DomainError("need 1 + kappa_j - T_j > 0 for every factor")
    coeffs = _partial_fraction_coeffs(shifts)
    return -sum(c * digamma(1.0 + a) for c, a in zip(coeffs, shifts))


def zero_identity_residual(kappa: list[float], t_point: list[float]) -> float:
    """|sum of partial-fraction coefficients|, which is zero in exact arithmetic."""
    if len(kappa) < 2:
        raise DivergenceError("need at least two factors")
    shifts = [float(k) - float(t) for k, t in zip(kappa, t_point)]
    return abs(sum(_partial_fraction_coeffs(shifts)))


def zero_identity_exact(kappa: list[Q], t_point: list[Q]) -> Q:
    """Same coefficient sum in exact rational arithmetic."""
    if len(kappa) < 2:
        raise DivergenceError("need at least two factors")
    shifts = [Q(k) - Q(t) for k, t in zip(kappa, t_point)]
    total = Q(0)
    for nu, a_nu in enumerate(shifts):
        prod = Q(1)
        for mu, a_mu in enumerate(shifts):
            if mu == nu:
                continue
            diff = a_mu - a_nu
            if diff == 0:
                raise DegenerateConfiguration("coinciding shifted kappas")
            prod /= diff
        total += prod
    return total


def zeta_values_from_rank_one(space_id: str, s: int,
                              tolerance: float = 1e-10) -> float:
    """Rank-one zeta value assembled from the factored dimension polynomial.

    The multi-factor series starts at n = 1, so the n = 0 term (equal to
    one by the normalization d(0) = 1) is restored explicitly.
    """
    if s < 1:
        raise DomainError("s must be a positive integer")
    poly = dims.rank_one_factored(space_id)
    if s * poly.degree <= 1:
        raise DivergenceError(
            f"zeta of {space_id} diverges at s = {s}: s * degree <= 1"
        )
    pi = []
    kappa = []
    for k, xi in poly.factors:
        pi.append(s * xi - 1)
        kappa.append(k)
    # the c^{-s} prefactor amplifies the series error, so tighten accordingly
    inner_tol = max(tolerance * float(poly.c) ** s, 1e-300)
    series = pi_series(pi, kappa, inner_tol)
    n0_term = 1.0
    for k, xi in poly.factors:
        n0_term *= float(k) ** (-s * xi)
    return float(poly.c) ** (-s) * (n0_term + series.value)
