"""Dominant-weight enumeration for both weight lattices.

Class-one weights of a symmetric space are coordinates over a basis dual
to the indivisible simple restricted roots; for BC systems the coordinate
on the divisible simple root is scaled by two internally, so user-facing
coordinates always range over all nonnegative integers.
"""
from __future__ import annotations

from fractions import Fraction as Q
from functools import lru_cache

from . import rootdata
from .errors import UnknownSpace
from .rootdata import Vector, dot, solve_in_span, vadd, vscale

Coords = tuple[int, ...]


@lru_cache(maxsize=None)
def class_one_basis(space_id: str) -> tuple[Vector, ...]:
    """Free generators of the class-one dominant monoid, as ambient vectors."""
    space = rootdata.lookup_space(space_id)
    space.require_mult()
    rs = space.root_system
    simples = list(rs.simple_roots())
    root_set = set(rs.positive_roots)
    basis = []
    for i, alpha in enumerate(simples):
        pair = [Q(0)] * len(simples)
        pair[i] = dot(alpha, alpha)
        w = solve_in_span(simples, pair)
        if vscale(Q(2), alpha) in root_set:
            w = vscale(Q(2), w)
        basis.append(w)
    return tuple(basis)


def class_one_vector(space_id: str, coords: Coords) -> Vector:
    basis = class_one_basis(space_id)
    if len(coords) != len(basis):
        raise UnknownSpace(
            f"{space_id} expects {len(basis)} coordinates, got {len(coords)}"
        )
    if any(c < 0 for c in coords):
        raise UnknownSpace("weight coordinates must be nonnegative integers")
    acc = tuple(Q(0) for _ in basis[0])
    for n, b in zip(coords, basis):
        acc = vadd(acc, vscale(Q(n), b))
    return acc


@lru_cache(maxsize=None)
def class_one_pairing_matrix(space_id: str) -> tuple[tuple[int, ...], ...]:
    """Row i, column j: (b_i, alpha_j)/(alpha_j, alpha_j) over positive roots.

    Entries are nonnegative integers by the defining lattice conditions;
    building the matrix asserts that.
    """
    space = rootdata.lookup_space(space_id)
    rs = space.root_system
    basis = class_one_basis(space_id)
    rows = []
    for b in basis:
        row = []
        for a in rs.positive_roots:
            val = dot(b, a) / dot(a, a)
            if val.denominator != 1 or val < 0:
                raise AssertionError(f"non-integral pairing {val} in {space_id}")
            row.append(int(val))
        rows.append(tuple(row))
    return tuple(rows)


def root_pairings(space_id: str, coords: Coords) -> tuple[int, ...]:
    """(lambda, alpha)/(alpha, alpha) for every positive root, exact integers."""
    matrix = class_one_pairing_matrix(space_id)
    ncols = len(matrix[0])
    return tuple(
        sum(coords[i] * matrix[i][j] for i in range(len(coords)))
        for j in range(ncols)
    )


def _graded_box(rank: int, box: int) -> list[Coords]:
    if box < 0:
        raise UnknownSpace("box_bound must be >= 0")
    out: list[Coords] = []
    for grade in range(rank * box + 1):
        out.extend(_compositions_within(rank, grade, box))
    return out


def _compositions_within(rank: int, total: int, box: int) -> list[Coords]:
    """All coordinate tuples with the given sum and each entry <= box, lex order."""
    if rank == 1:
        return [(total,)] if total <= box else []
    out = []
    for first in range(min(total, box) + 1):
        out.extend((first,) + rest for rest in _compositions_within(rank - 1, total - first, box))
    return out


def enumerate_class_one(space_id: str, box_bound: int) -> list[Coords]:
    """All class-one weights with every coordinate <= box_bound, graded lex."""
    space = rootdata.lookup_space(space_id)
    space.require_mult()
    return _graded_box(space.rank, box_bound)


# --- type II (compact group) side ---

@lru_cache(maxsize=None)
def dominant_basis(group_id: str) -> tuple[Vector, ...]:
    group = rootdata.lookup_group(group_id)
    return group.fundamental_weights()


def dominant_vector(group_id: str, coords: Coords) -> Vector:
    basis = dominant_basis(group_id)
    if len(coords) != len(basis):
        raise UnknownSpace(
            f"{group_id} expects {len(basis)} coordinates, got {len(coords)}"
        )
    acc = tuple(Q(0) for _ in basis[0])
    for n, b in zip(coords, basis):
        acc = vadd(acc, vscale(Q(n), b))
    return acc


def enumerate_dominant(group_id: str, box_bound: int) -> list[Coords]:
    group = rootdata.lookup_group(group_id)
    return _graded_box(group.rank, box_bound)
