"""Class-one representation dimensions, two independent ways.

The exact path evaluates the per-root closed-form factors in rational
arithmetic.  The numeric path evaluates the gamma-quotient that defines
each factor, rewritten with the reflection and duplication formulas so all
log-gamma arguments stay positive; the trigonometric parts cancel exactly
for lattice pairings and only gamma ratios remain.  The two paths share
nothing beyond the pairing integers, so their agreement is a real check.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache

from . import rootdata, weights
from .errors import (InconsistentMultiplicities, NotRankOne, NumericOverflow,
                     PoleError, UnknownSpace)
from .rootdata import dot
from .specfun import log_gamma

_LOG_MAX = 709.0


@dataclass(frozen=True)
class PerRootFactorParams:
    """Everything one restricted root contributes to the dimension product."""

    m: int
    m2: int
    rho: Q          # (rho_X, alpha)/(alpha, alpha)
    case: str       # "even" | "odd" | "A" | "B"
    l: int
    j: int
    r: int


def per_root_params(m: int, m2: int, rho: Q) -> PerRootFactorParams:
    if m < 0 or m2 < 0:
        raise InconsistentMultiplicities(f"negative multiplicity ({m}, {m2})")
    if rho <= 0:
        raise InconsistentMultiplicities(f"rho pairing must be positive, got {rho}")
    if m2 == 0:
        if m == 0:
            raise InconsistentMultiplicities("root with no multiplicity at all")
        if m % 2 == 0:
            return PerRootFactorParams(m, 0, rho, "even", m // 2, 0, m // 2)
        return PerRootFactorParams(m, 0, rho, "odd", (m - 1) // 2, 0, (m - 1) // 2)
    if m2 % 2 == 0 or m % 2 == 1:
        raise InconsistentMultiplicities(
            f"m2 must be odd and m even when m2 != 0, got ({m}, {m2})"
        )
    j = (m2 - 1) // 2
    if j not in (0, 1, 3):
        raise InconsistentMultiplicities(f"m2 = {m2} is outside the allowed cases")
    if m % 4 == 0:
        l = m // 4
        return PerRootFactorParams(m, m2, rho, "A", l, j, l + j)
    if m % 4 == 2:
        l = (m - 2) // 4
        return PerRootFactorParams(m, m2, rho, "B", l, j, l + j)
    raise InconsistentMultiplicities(f"no case applies to ({m}, {m2})")


def _half_square_product(y: Q, count: int) -> Q:
    """prod_{k=1..count} (y^2 - (k - 1/2)^2)."""
    acc = Q(1)
    y2 = y * y
    for k in range(1, count + 1):
        acc *= y2 - Q(2 * k - 1, 2) ** 2
    return acc


def _int_square_product(y: Q, count: int) -> Q:
    """prod_{k=1..count} (y^2 - k^2)."""
    acc = Q(1)
    y2 = y * y
    for k in range(1, count + 1):
        acc *= y2 - k * k
    return acc


def dim_factor(params: PerRootFactorParams, pairing: int) -> Q:
    """Exact per-root factor at integer pairing (lambda, alpha_0) = pairing."""
    if pairing < 0:
        raise InconsistentMultiplicities("pairing must be a nonnegative integer")
    rho = params.rho
    x = pairing + rho
    if params.case == "even":
        l = params.l
        return (x * x * _int_square_product(x, l - 1)) / (
            rho * rho * _int_square_product(rho, l - 1))
    if params.case == "odd":
        l = params.l
        return (x * _half_square_product(x, l)) / (rho * _half_square_product(rho, l))
    if pairing % 2:
        raise InconsistentMultiplicities(
            "pairing must be even on roots with m_2alpha != 0"
        )
    y, ybar = x / 2, rho / 2
    if params.case == "A":
        return (x / rho) \
            * (_half_square_product(y, params.l) / _half_square_product(ybar, params.l)) \
            * (_half_square_product(y, params.r) / _half_square_product(ybar, params.r))
    return (x / rho) ** 3 \
        * (_int_square_product(y, params.l) / _int_square_product(ybar, params.l)) \
        * (_int_square_product(y, params.r) / _int_square_product(ybar, params.r))


def _factor_log_numeric(params: PerRootFactorParams, pairing: int) -> float:
    """log of the same factor through the gamma quotient, floats only."""
    rho = float(params.rho)
    x = pairing + rho
    if params.m2 == 0:
        h = params.m / 2.0
        def lpart(t: float) -> float:
            return math.log(t) + math.lgamma(h + t) - math.lgamma(1.0 - h + t)
    else:
        a = params.m / 4.0 + 0.5
        b = params.m / 4.0 + params.m2 / 2.0
        def lpart(t: float) -> float:
            return (math.log(t)
                    + math.lgamma(a + t / 2.0) + math.lgamma(b + t / 2.0)
                    - math.lgamma(1.0 - a + t / 2.0) - math.lgamma(1.0 - b + t / 2.0))
    return lpart(x) - lpart(rho)


@dataclass(frozen=True)
class _RootData:
    params: PerRootFactorParams
    column: int          # index into the positive-root pairing matrix
    rho_float: float


@lru_cache(maxsize=None)
def _space_roots(space_id: str) -> tuple[_RootData, ...]:
    space = rootdata.lookup_space(space_id)
    space.require_mult()
    rs = space.root_system
    out = []
    for idx in rs.indivisible_indices:
        alpha = rs.positive_roots[idx]
        m = space.m_alpha(idx)
        m2 = space.m_2alpha(idx)
        if m == 0 and m2 == 0:
            continue
        rho_a = space.rho_pairing(alpha)
        params = per_root_params(m, m2, rho_a)
        # numeric-path precondition: all shifted gamma arguments positive
        if params.m2 == 0:
            if float(rho_a) <= params.m / 2.0 - 1.0:
                raise AssertionError(f"{space_id}: gamma argument not positive")
        out.append(_RootData(params=params, column=idx, rho_float=float(rho_a)))
    return tuple(out)


def dim_class_one(space_id: str, coords: weights.Coords) -> Q:
    """Exact dimension of the class-one representation with the given coordinates."""
    pairings = weights.root_pairings(space_id, coords)
    acc = Q(1)
    for rd in _space_roots(space_id):
        acc *= dim_factor(rd.params, pairings[rd.column])
    return acc


def dim_class_one_log(space_id: str, coords: weights.Coords) -> float:
    """log of the dimension via the gamma-quotient path."""
    pairings = weights.root_pairings(space_id, coords)
    return math.fsum(
        _factor_log_numeric(rd.params, pairings[rd.column])
        for rd in _space_roots(space_id)
    )


def dim_class_one_numeric(space_id: str, coords: weights.Coords) -> float:
    logd = dim_class_one_log(space_id, coords)
    if logd > _LOG_MAX:
        raise NumericOverflow(
            f"dimension exceeds float range (log = {logd:.1f}); use dim_class_one_log"
        )
    return math.exp(logd)


def dim_class_one_float(space_id: str, coords: weights.Coords) -> float:
    """Closed-form factors evaluated in floats; fast path for series terms."""
    pairings = weights.root_pairings(space_id, coords)
    acc = 1.0
    for rd in _space_roots(space_id):
        acc *= float(dim_factor(rd.params, pairings[rd.column]))
    return acc


# ---------------------------------------------------------------------------
# type II: Weyl dimension formula
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _group_tables(group_id: str):
    group = rootdata.lookup_group(group_id)
    rs = group.root_system
    basis = weights.dominant_basis(group_id)
    rho = group.rho
    rows = []
    denoms = []
    for a in rs.positive_roots:
        rows.append(tuple(dot(b, a) for b in basis))
        denoms.append(dot(rho, a))
    return tuple(rows), tuple(denoms)


def dim_type_II(group_id: str, coords: weights.Coords) -> int:
    """Weyl dimension of the irreducible representation with the given labels."""
    rows, denoms = _group_tables(group_id)
    basis_len = len(weights.dominant_basis(group_id))
    if len(coords) != basis_len:
        raise UnknownSpace(f"{group_id} expects {basis_len} coordinates")
    acc = Q(1)
    for row, den in zip(rows, denoms):
        num = sum(n * v for n, v in zip(coords, row)) + den
        acc *= num / den
    if acc.denominator != 1:
        raise AssertionError("Weyl dimension came out non-integral")
    return int(acc)


@lru_cache(maxsize=None)
def _group_tables_float(group_id: str):
    rows, denoms = _group_tables(group_id)
    return (tuple(tuple(float(v) for v in row) for row in rows),
            tuple(float(d) for d in denoms))


def dim_type_II_float(group_id: str, coords: weights.Coords) -> float:
    rows, denoms = _group_tables_float(group_id)
    acc = 1.0
    for row, den in zip(rows, denoms):
        num = den
        for n, v in zip(coords, row):
            if n:
                num += n * v
        acc *= num / den
    return acc


# ---------------------------------------------------------------------------
# Casimir eigenvalues
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _quadratic_form(kind: str, ident: str):
    if kind == "space":
        basis = weights.class_one_basis(ident)
        rho = rootdata.lookup_space(ident).rho
    else:
        basis = weights.dominant_basis(ident)
        rho = rootdata.lookup_group(ident).rho
    gram = tuple(tuple(dot(a, b) for b in basis) for a in basis)
    lin = tuple(2 * dot(b, rho) for b in basis)
    return gram, lin


def _casimir_value(kind: str, ident: str, coords: weights.Coords) -> Q:
    gram, lin = _quadratic_form(kind, ident)
    acc = Q(0)
    for i, ni in enumerate(coords):
        if not ni:
            continue
        acc += ni * lin[i]
        for jj, nj in enumerate(coords):
            if nj:
                acc += ni * nj * gram[i][jj]
    return acc


def casimir(ident: str, coords: weights.Coords) -> Q:
    """(lambda, lambda + 2 rho) in the ambient inner product.

    ``ident`` may be a space id or a group id; spaces are tried first.
    """
    try:
        rootdata.lookup_space(ident)
        return _casimir_value("space", ident, coords)
    except UnknownSpace:
        rootdata.lookup_group(ident)
        return _casimir_value("group", ident, coords)


def casimir_space(space_id: str, coords: weights.Coords) -> Q:
    return _casimir_value("space", space_id, coords)


def casimir_group(group_id: str, coords: weights.Coords) -> Q:
    return _casimir_value("group", group_id, coords)


# ---------------------------------------------------------------------------
# Rank-one factored polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FactoredDimPolynomial:
    """d(n) = c * prod_k (n + kappa_k)^{xi_k} with d(0) = 1."""

    c: Q
    factors: tuple[tuple[Q, int], ...]

    @property
    def degree(self) -> int:
        return sum(xi for _, xi in self.factors)

    def evaluate(self, n: int) -> Q:
        acc = self.c
        for kappa, xi in self.factors:
            acc *= (n + kappa) ** xi
        return acc

    def evaluate_float(self, n: float) -> float:
        acc = float(self.c)
        for kappa, xi in self.factors:
            acc *= (n + float(kappa)) ** xi
        return acc

    def expand(self) -> tuple[Q, ...]:
        """Polynomial coefficients in n, ascending order, exact."""
        coeffs = [self.c]
        for kappa, xi in self.factors:
            for _ in range(xi):
                nxt = [Q(0)] * (len(coeffs) + 1)
                for i, a in enumerate(coeffs):
                    nxt[i] += a * kappa
                    nxt[i + 1] += a
                coeffs = nxt
        return tuple(coeffs)


def _merge_factors(kappas: list[Q]) -> tuple[tuple[Q, int], ...]:
    counts: dict[Q, int] = {}
    for k in kappas:
        counts[k] = counts.get(k, 0) + 1
    return tuple(sorted(counts.items()))


@lru_cache(maxsize=None)
def rank_one_factored(space_id: str) -> FactoredDimPolynomial:
    """Factored dimension polynomial of a rank-one space."""
    space = rootdata.lookup_space(space_id)
    space.require_mult()
    if space.rank != 1:
        raise NotRankOne(f"{space_id} has rank {space.rank}")
    roots = _space_roots(space_id)
    if len(roots) != 1:
        raise NotRankOne(f"{space_id}: expected one indivisible root")
    p = roots[0].params
    rho = p.rho
    kappas: list[Q] = []
    if p.case == "even":
        kappas.extend([rho, rho])
        for k in range(1, p.l):
            kappas.extend([rho - k, rho + k])
    elif p.case == "odd":
        kappas.append(rho)
        for k in range(1, p.l + 1):
            kappas.extend([rho - Q(2 * k - 1, 2), rho + Q(2 * k - 1, 2)])
    elif p.case == "A":
        half = rho / 2
        kappas.append(half)
        for count in (p.l, p.r):
            for k in range(1, count + 1):
                kappas.extend([half - Q(2 * k - 1, 2), half + Q(2 * k - 1, 2)])
    else:  # case B
        half = rho / 2
        kappas.extend([half, half, half])
        for count in (p.l, p.r):
            for k in range(1, count + 1):
                kappas.extend([half - k, half + k])
    if any(k <= 0 for k in kappas):
        raise AssertionError(f"{space_id}: nonpositive kappa in factorization")
    if any((2 * k).denominator != 1 for k in kappas):
        raise AssertionError(f"{space_id}: kappa is not a half-integer")
    factors = _merge_factors(kappas)
    c = Q(1)
    for kappa, xi in factors:
        c /= kappa ** xi
    poly = FactoredDimPolynomial(c=c, factors=factors)
    if poly.degree != p.m + p.m2:
        raise AssertionError(f"{space_id}: degree {poly.degree} != {p.m + p.m2}")
    return poly


# ---------------------------------------------------------------------------
# Harish-Chandra c-function
# ---------------------------------------------------------------------------

def _near_nonpositive_integer(w: complex, tol: float = 1e-9) -> bool:
    if abs(w.imag) > tol:
        return False
    r = w.real
    return r < 0.5 and abs(r - round(r)) < tol


def c_alpha(m: int, m2: int, z: complex) -> complex:
    """Per-root c-function factor as a function of z = (lambda, alpha_0)."""
    w = 1j * z
    for arg in (w, m / 4 + 0.5 + w / 2, m / 4 + m2 / 2 + w / 2):
        if _near_nonpositive_integer(complex(arg)):
            raise PoleError(f"c_alpha gamma argument {arg} at a pole")
    logc = (-w * math.log(2.0)
            + log_gamma(complex(w))
            - log_gamma(complex(m / 4 + 0.5 + w / 2))
            - log_gamma(complex(m / 4 + m2 / 2 + w / 2)))
    return cmath.exp(logc)


def c_alpha_reduced(m: int, z: complex) -> complex:
    """Simplified factor for m2 = 0 via the duplication formula."""
    w = 1j * z
    for arg in (w, m / 2 + w):
        if _near_nonpositive_integer(complex(arg)):
            raise PoleError(f"c_alpha gamma argument {arg} at a pole")
    logc = ((m / 2 - 1.0) * math.log(2.0) - 0.5 * math.log(math.pi)
            + log_gamma(complex(w)) - log_gamma(complex(m / 2 + w)))
    return cmath.exp(logc)


def c_function(space_id: str, lam: tuple[complex, ...]) -> complex:
    """Product of the per-root factors over indivisible positive roots."""
    space = rootdata.lookup_space(space_id)
    rs = space.root_system
    acc = complex(1.0)
    for rd in _space_roots(space_id):
        alpha = rs.positive_roots[rd.column]
        norm = float(dot(alpha, alpha))
        z = sum(complex(c) * float(a) for c, a in zip(lam, alpha)) / norm
        acc *= c_alpha(rd.params.m, rd.params.m2, z)
    return acc


def dimension_via_c_ratio(space_id: str, coords: weights.Coords,
                          eps: float = 1e-5) -> float:
    """Dimension from the c-function ratio, via a symmetric displaced limit.

    At lattice points the individual c-factors hit gamma poles and zeros;
    the ratio has a finite limit, approached here from +-eps and averaged.
    """
    pairings = weights.root_pairings(space_id, coords)

    def logc(m: int, m2: int, w: float, d: float) -> complex:
        ww = complex(w + d)
        return (-ww * math.log(2.0)
                + log_gamma(ww)
                - log_gamma(complex(m / 4 + 0.5) + ww / 2)
                - log_gamma(complex(m / 4 + m2 / 2) + ww / 2))

    def ratio(d: float) -> float:
        total = complex(0.0)
        for rd in _space_roots(space_id):
            m, m2 = rd.params.m, rd.params.m2
            rho = rd.rho_float
            x = pairings[rd.column] + rho
            total += (logc(m, m2, -rho, d) + logc(m, m2, rho, d)
                      - logc(m, m2, -x, d) - logc(m, m2, x, d))
        return cmath.exp(total).real

    return 0.5 * (ratio(eps) + ratio(-eps))


def dims_record(space_id: str, coords: weights.Coords) -> dict:
    """CLI payload: exact and float dimension, plus the factored form if rank one."""
    space = rootdata.lookup_space(space_id)
    exact = dim_class_one(space_id, coords)
    logd = dim_class_one_log(space_id, coords)
    rec = {
        "space": space.space_id,
        "coords": list(coords),
        "dim_exact": str(exact),
        "dim_float": math.exp(logd) if logd <= _LOG_MAX else None,
        "dim_log": logd,
    }
    if space.rank == 1:
        poly = rank_one_factored(space_id)
        rec["factored"] = {
            "c": str(poly.c),
            "factors": [[str(k), xi] for k, xi in poly.factors],
        }
    return rec
