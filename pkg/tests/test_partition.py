import math

import pytest

from wittenzeta import dims, zeta
from wittenzeta.errors import (DivergenceError, DomainError, UnsupportedSpace)
from wittenzeta.partition import (SurfaceParams, boundary_state,
                                  partition_type_I, partition_type_II,
                                  so3_character)


def test_surface_params_validation():
    s = SurfaceParams(genus=1, area=0.5)
    assert s.q == pytest.approx(math.exp(-0.5))
    assert s.n_holes == 0
    with pytest.raises(DomainError):
        SurfaceParams(genus=-1, area=0.5)
    with pytest.raises(DomainError):
        SurfaceParams(genus=0, area=-1.0)
    with pytest.raises(DomainError):
        SurfaceParams(genus=0, area=1.0, holonomies=(7.0,))


def test_su2_torus_is_theta_series():
    # 2g-2 = 0: all dimension factors drop out
    area = 0.3
    res = partition_type_II("SU:2", SurfaceParams(genus=1, area=area), 1e-12)
    brute = math.fsum(math.exp(-area * (n * n / 2 + n)) for n in range(400))
    assert res.value == pytest.approx(brute, abs=1e-11)
    assert res.rigorous


def test_su2_genus_two_approaches_basel():
    deviations = []
    for area in (1.0, 0.1, 0.01):
        res = partition_type_II("SU:2", SurfaceParams(genus=2, area=area), 1e-12)
        deviations.append(abs(res.value - math.pi ** 2 / 6))
    assert deviations[0] > deviations[1] > deviations[2]


def test_su3_partition_certified_tail():
    res = partition_type_II("SU:3", SurfaceParams(genus=2, area=math.log(2.0)),
                            1e-10)
    assert res.converged and res.rigorous
    assert res.tail_bound < 1e-10
    # oracle: direct double sum over a box of 60
    q = 0.5
    brute = 0.0
    for a in range(61):
        for b in range(61):
            d = dims.dim_type_II_float("SU:3", (a, b))
            c2 = float(dims.casimir_group("SU:3", (a, b)))
            brute += q ** c2 / d ** 2
    assert res.value == pytest.approx(brute, abs=1e-10)


def test_type_i_at_unit_q_is_zeta():
    res = partition_type_I("S:3", SurfaceParams(genus=1, area=0.0), 1e-9)
    assert res.value == pytest.approx(math.pi ** 2 / 6, abs=1e-8)


def test_type_i_small_q_regularizes():
    res = partition_type_I("S:2", SurfaceParams(genus=1, area=-math.log(0.9)),
                           1e-10)
    assert res.converged and res.rigorous and res.value < math.inf
    # 2g-1 = 1 diverges at q = 1
    with pytest.raises(DivergenceError):
        partition_type_I("S:2", SurfaceParams(genus=1, area=0.0))


def test_tiny_q_keeps_only_trivial_term():
    res = partition_type_I("S:4", SurfaceParams(genus=1, area=14.0), 1e-12)
    assert res.value == pytest.approx(1.0, abs=1e-5)
    res = partition_type_II("SU:2", SurfaceParams(genus=3, area=14.0), 1e-12)
    assert res.value == pytest.approx(1.0, abs=1e-5)


def test_genus_zero_negative_exponent():
    # 2g-2 = -2: dimensions multiply instead of dividing, still summable
    area = 2.0
    res = partition_type_II("SU:2", SurfaceParams(genus=0, area=area), 1e-11)
    brute = math.fsum(
        math.exp(-area * (n * n / 2 + n)) * (n + 1) ** 2 for n in range(200)
    )
    assert res.rigorous and res.converged
    assert res.value == pytest.approx(brute, abs=1e-10)
    res_i = partition_type_I("S:2", SurfaceParams(genus=0, area=area), 1e-11)
    brute_i = math.fsum(
        math.exp(-area * (n * n + n)) * (2 * n + 1) for n in range(200)
    )
    assert res_i.value == pytest.approx(brute_i, abs=1e-10)


def test_q_monotonicity():
    values = [
        partition_type_I("S:3", SurfaceParams(genus=2, area=a), 1e-11).value
        for a in (2.0, 1.0, 0.5, 0.25, 0.1)
    ]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_limit_consistency_downward():
    target = zeta.zeta_type_I("S:3", 3.0, 1e-11).value
    deviations = [
        abs(partition_type_I("S:3", SurfaceParams(genus=2, area=a), 1e-11).value
            - target)
        for a in (0.5, 0.1, 0.01)
    ]
    assert deviations[0] > deviations[1] > deviations[2]


def test_exponent_bookkeeping_against_type_ii():
    # d on the 3-sphere is the square of the rank-one Weyl dimension, and its
    # Casimir is twice the group one, so genus 1 type I at q matches genus 2
    # type II at q^2
    for q in (0.5, 0.8):
        left = partition_type_I("S:3",
                                SurfaceParams(genus=1, area=-math.log(q)),
                                1e-12)
        right = partition_type_II("SU:2",
                                  SurfaceParams(genus=2, area=-2 * math.log(q)),
                                  1e-12)
        assert left.value == pytest.approx(right.value, abs=1e-12)


def test_higher_rank_type_i_partition():
    res = partition_type_I("AI:3", SurfaceParams(genus=1, area=0.5), 1e-10)
    assert res.converged and res.rigorous
    # oracle: direct sum over a large box
    brute = 0.0
    for a in range(40):
        for b in range(40):
            d = float(dims.dim_class_one("AI:3", (a, b)))
            c2 = float(dims.casimir_space("AI:3", (a, b)))
            brute += math.exp(-0.5 * c2) / d
    assert res.value == pytest.approx(brute, abs=1e-9)


def test_so3_character():
    assert so3_character(3, 1e-15) == pytest.approx(7.0)
    theta = 0.9
    expected = math.sin(7 * theta / 2) / math.sin(theta / 2)
    assert so3_character(3, theta) == pytest.approx(expected, rel=1e-13)


def test_boundary_reduces_to_partition_without_holes():
    surf = SurfaceParams(genus=1, area=0.8)
    b = boundary_state("S:2", surf, 1e-12)
    p = partition_type_I("S:2", surf, 1e-12)
    assert b.value == pytest.approx(p.value, abs=1e-12)


def test_boundary_theta_to_zero_drops_one_power():
    # chi_n(0) = d_n cancels one dimension factor: genus 1 with one vanishing
    # hole equals the plain genus-1 sum
    b = boundary_state("S:2", SurfaceParams(genus=1, area=0.8,
                                            holonomies=(1e-9,)), 1e-12)
    p = partition_type_I("S:2", SurfaceParams(genus=1, area=0.8), 1e-12)
    assert b.value == pytest.approx(p.value, abs=1e-9)


def test_boundary_alternating_at_pi():
    area = -math.log(0.8)
    b = boundary_state("S:2", SurfaceParams(genus=1, area=area,
                                            holonomies=(math.pi,)), 1e-12)
    # direct 200-term oracle with the closed-form character
    q = 0.8
    direct = math.fsum(
        q ** (n * n + n) * so3_character(n, math.pi) / (2 * n + 1) ** 2
        for n in range(200)
    )
    assert b.value == pytest.approx(direct, abs=1e-12)
    p = partition_type_I("S:2", SurfaceParams(genus=1, area=area), 1e-12)
    assert abs(b.value) < p.value


def test_boundary_s3_runs_and_reduces():
    surf = SurfaceParams(genus=1, area=0.5, holonomies=(1e-9,))
    b = boundary_state("S:3", surf, 1e-10)
    p = partition_type_I("S:3", SurfaceParams(genus=1, area=0.5), 1e-10)
    assert b.value == pytest.approx(p.value, abs=1e-7)


def test_boundary_unsupported_space():
    with pytest.raises(UnsupportedSpace):
        boundary_state("S:4", SurfaceParams(genus=1, area=0.5,
                                            holonomies=(1.0,)))
    with pytest.raises(DivergenceError):
        boundary_state("S:2", SurfaceParams(genus=1, area=0.0,
                                            holonomies=(1.0,)))
