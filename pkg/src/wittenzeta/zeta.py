"""Witten zeta functions of both types.

Rank-one targets get a certified evaluation: explicit terms plus a tail
that is pinned to a Hurwitz zeta with a rigorous correction bound.  Higher
ranks use growing-box summation with a box-doubling heuristic; the result
is flagged as non-rigorous because no analytic convergence region is
available there.
"""
from __future__ import annotations

import math
from fractions import Fraction as Q

from . import dims, genseries, rootdata, weights
from .errors import DivergenceError, DomainError, NotConverged
from .result import EvalResult
from .specfun import hurwitz_zeta, riemann_zeta

_UNIT_POLY = dims.FactoredDimPolynomial(c=Q(1), factors=((Q(1), 1),))


def _rank_one_power_series(poly: dims.FactoredDimPolynomial, s: float,
                           tolerance: float,
                           max_terms: int | None = None) -> EvalResult:
    """sum_{n>=0} d(n)^(-s) for a factored polynomial d with d(0) = 1."""
    degree = poly.degree
    if s * degree <= 1.0:
        raise DivergenceError(
            f"series diverges: s * (dim - 1) = {s * degree} <= 1"
        )
    kappas = [float(k) for k, _ in poly.factors]
    powers = [s * xi for _, xi in poly.factors]
    scale_log = -s * math.log(float(poly.c))
    tail_part = genseries._sum_with_tail(kappas, powers, 1, tolerance,
                                         scale_log, max_terms)
    return EvalResult(
        value=1.0 + tail_part.value,
        tail_bound=tail_part.tail_bound,
        terms_used=tail_part.terms_used + 1,
        converged=tail_part.converged,
        rigorous=True,
    )


def _growing_box(term, rank: int, tolerance: float, max_box: int) -> EvalResult:
    """Box-doubling summation of term(coords) over the dominant cone."""
    cap = genseries.term_cap()
    while (max_box + 1) ** rank > cap and max_box > 2:
        max_box //= 2
    box = min(8, max_box)
    prev_total = None
    prev_inc = None
    increases = 0
    while True:
        total = math.fsum(
            term(coords) for coords in weights._graded_box(rank, box)
        )
        if prev_total is not None:
            inc = total - prev_total
            if prev_inc is not None and inc > prev_inc and inc > tolerance:
                increases += 1
                if increases >= 2:
                    raise DivergenceError(
                        "partial sums accelerate: series looks divergent"
                    )
            if abs(inc) < tolerance / 2.0:
                return EvalResult(
                    value=total,
                    tail_bound=abs(inc),
                    terms_used=(box + 1) ** rank,
                    converged=True,
                    rigorous=False,
                )
            prev_inc = inc
        prev_total = total
        if box >= max_box:
            return EvalResult(
                value=total,
                tail_bound=abs(prev_inc) if prev_inc is not None else math.inf,
                terms_used=(box + 1) ** rank,
                converged=False,
                rigorous=False,
            )
        box = min(2 * box, max_box)


def _default_box(rank: int) -> int:
    return {1: 1 << 17, 2: 2048, 3: 128}.get(rank, 24)


def zeta_type_I(space_id: str, s: float, tolerance: float = 1e-8,
                max_box: int | None = None) -> EvalResult:
    """sum over class-one dominant weights of dim^(-s)."""
    space = rootdata.lookup_space(space_id)
    space.require_mult()
    if space.rank == 1:
        poly = dims.rank_one_factored(space_id)
        return _rank_one_power_series(poly, s, tolerance)
    if s <= 0:
        raise DivergenceError("need s > 0 for a higher-rank sum")

    def term(coords):
        return dims.dim_class_one_float(space_id, coords) ** (-s)

    return _growing_box(term, space.rank, tolerance,
                        max_box if max_box is not None else _default_box(space.rank))


def zeta_type_II(group_id: str, s: float, tolerance: float = 1e-8,
                 max_box: int | None = None) -> EvalResult:
    """sum over dominant weights of the Weyl dimension to the power -s."""
    group = rootdata.lookup_group(group_id)
    if group.rank == 1:
        # every rank-one compact group has d(n) = n + 1 on its weight ray
        return _rank_one_power_series(_UNIT_POLY, s, tolerance)
    if s <= 0:
        raise DivergenceError("need s > 0 for a higher-rank sum")

    def term(coords):
        return dims.dim_type_II_float(group_id, coords) ** (-s)

    result = _growing_box(term, group.rank, tolerance,
                          max_box if max_box is not None else _default_box(group.rank))
    if not result.converged:
        raise NotConverged(
            f"zeta_type_II({group_id}, {s}) unmet tolerance {tolerance} "
            f"(tail estimate {result.tail_bound:.3g})"
        )
    return result


def hurwitz_relation_check(m: int, s: float) -> dict:
    """Compare zeta_I of the 2-sphere against the scaled half-shift Hurwitz value."""
    if m != 2:
        raise DomainError("only the 2-sphere relation is implemented")
    left = zeta_type_I("S:2", s, tolerance=1e-12)
    scaled = 2.0 ** (-s) * hurwitz_zeta(s, 0.5)
    riemann_form = (2.0 ** s - 1.0) * riemann_zeta(s)
    return {
        "s": s,
        "zeta_I_S2": left.value,
        "scaled_hurwitz": scaled,
        "difference": left.value - scaled,
        "hurwitz_half": hurwitz_zeta(s, 0.5),
        "hurwitz_vs_riemann": hurwitz_zeta(s, 0.5) - riemann_form,
    }
