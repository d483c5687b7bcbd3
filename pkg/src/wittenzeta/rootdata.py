"""Restricted root systems and the catalog of compact symmetric spaces.

Roots live in ambient orthonormal coordinates (the standard embedding of
each family), stored as tuples of ``Fraction`` so every pairing
(lambda, alpha)/(alpha, alpha) stays exact.  The catalog is immutable and
cached; descriptors are safe to share between threads.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from itertools import combinations, product

from .errors import UnknownSpace, UnsupportedFamily, UnsupportedSpace

Vector = tuple[Q, ...]

FAMILIES = ("A", "B", "C", "D", "BC", "E6", "E7", "E8", "F4", "G2")


def dot(x: Vector, y: Vector) -> Q:
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(x, y)), Q(0))


def vadd(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vscale(c: Q, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def solve_in_span(basis: list[Vector], pairings: list[Q]) -> Vector:
    """Vector w in span(basis) with (w, basis[j]) = pairings[j], exactly.

    Gaussian elimination on the Gram matrix; basis must be independent.
    """
    n = len(basis)
    gram = [[dot(basis[i], basis[j]) for j in range(n)] + [pairings[i]] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if gram[r][col] != 0)
        gram[col], gram[piv] = gram[piv], gram[col]
        pval = gram[col][col]
        gram[col] = [v / pval for v in gram[col]]
        for r in range(n):
            if r != col and gram[r][col] != 0:
                f = gram[r][col]
                gram[r] = [a - f * b for a, b in zip(gram[r], gram[col])]
    coeffs = [gram[r][n] for r in range(n)]
    w = tuple(Q(0) for _ in basis[0])
    for c, b in zip(coeffs, basis):
        w = vadd(w, vscale(c, b))
    return w


def expand_in_simple(system: "RestrictedRootSystem", root: Vector) -> list[Q]:
    """Coefficients of ``root`` over the simple roots."""
    simples = list(system.simple_roots())
    n = len(simples)
    aug = [[dot(simples[i], simples[j]) for j in range(n)] + [dot(root, simples[i])]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pval = aug[col][col]
        aug[col] = [v / pval for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    coeffs = [aug[r][n] for r in range(n)]
    rebuilt = tuple(Q(0) for _ in root)
    for c, s in zip(coeffs, simples):
        rebuilt = vadd(rebuilt, vscale(c, s))
    if rebuilt != root:
        raise ValueError("root not in the span of the simple roots")
    return coeffs


def _e(i: int, dim: int, c: Q = Q(1)) -> Vector:
    v = [Q(0)] * dim
    v[i] = c
    return tuple(v)


def _signed_halves(dim: int, fixed: dict[int, Q], free: list[int], parity: int) -> list[Vector]:
    """Half-integer vectors with fixed coordinates and +-1/2 on ``free``.

    ``parity`` restricts the number of minus signs among the free slots
    (0 = even, 1 = odd).
    """
    out = []
    for signs in product((Q(1, 2), Q(-1, 2)), repeat=len(free)):
        if sum(1 for s in signs if s < 0) % 2 != parity:
            continue
        v = [Q(0)] * dim
        for i, c in fixed.items():
            v[i] = c
        for i, s in zip(free, signs):
            v[i] = s
        out.append(tuple(v))
    return out


def _positive_roots_raw(family: str, rank: int) -> tuple[list[Vector], list[Vector]]:
    """Return (simple_roots, positive_roots) in ambient coordinates."""
    if family == "A":
        d = rank + 1
        simples = [vadd(_e(i, d), _e(i + 1, d, Q(-1))) for i in range(rank)]
        pos = [vadd(_e(i, d), _e(j, d, Q(-1))) for i in range(d) for j in range(i + 1, d)]
        return simples, pos
    if family in ("B", "C", "D", "BC"):
        d = rank
        pos: list[Vector] = []
        for i, j in combinations(range(d), 2):
            pos.append(vadd(_e(i, d), _e(j, d, Q(-1))))
            pos.append(vadd(_e(i, d), _e(j, d)))
        if family in ("B", "BC"):
            pos.extend(_e(i, d) for i in range(d))
        if family in ("C", "BC"):
            pos.extend(_e(i, d, Q(2)) for i in range(d))
        if family == "D":
            if rank < 2:
                raise UnsupportedFamily("D requires rank >= 2")
            simples = [vadd(_e(i, d), _e(i + 1, d, Q(-1))) for i in range(rank - 1)]
            simples.append(vadd(_e(rank - 2, d), _e(rank - 1, d)))
        elif family == "C":
            simples = [vadd(_e(i, d), _e(i + 1, d, Q(-1))) for i in range(rank - 1)]
            simples.append(_e(rank - 1, d, Q(2)))
        else:  # B and BC share the simple system
            simples = [vadd(_e(i, d), _e(i + 1, d, Q(-1))) for i in range(rank - 1)]
            simples.append(_e(rank - 1, d))
        return simples, pos
    if family == "G2":
        if rank != 2:
            raise UnsupportedFamily("G2 has rank 2")
        d = 3
        a1 = (Q(1), Q(-1), Q(0))
        a2 = (Q(-2), Q(1), Q(1))
        pos = [a1, a2,
               (Q(-1), Q(0), Q(1)),
               (Q(0), Q(-1), Q(1)),
               (Q(1), Q(-2), Q(1)),
               (Q(-1), Q(-1), Q(2))]
        return [a1, a2], pos
    if family == "F4":
        if rank != 4:
            raise UnsupportedFamily("F4 has rank 4")
        d = 4
        pos = [_e(i, d) for i in range(4)]
        for i, j in combinations(range(4), 2):
            pos.append(vadd(_e(i, d), _e(j, d)))
            pos.append(vadd(_e(i, d), _e(j, d, Q(-1))))
        pos.extend(_signed_halves(4, {0: Q(1, 2)}, [1, 2, 3], 0))
        pos.extend(_signed_halves(4, {0: Q(1, 2)}, [1, 2, 3], 1))
        simples = [
            vadd(_e(1, d), _e(2, d, Q(-1))),
            vadd(_e(2, d), _e(3, d, Q(-1))),
            _e(3, d),
            (Q(1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2)),
        ]
        return simples, pos
    if family in ("E6", "E7", "E8"):
        want = int(family[1])
        if rank != want:
            raise UnsupportedFamily(f"{family} has rank {want}")
        d = 8
        a1 = (Q(1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2), Q(1, 2))
        a2 = vadd(_e(0, d), _e(1, d))
        chain = [vadd(_e(i + 1, d), _e(i, d, Q(-1))) for i in range(6)]  # e_{i+2}-e_{i+1}
        simples = [a1, a2] + chain[: want - 2]
        if family == "E8":
            pos = []
            for i, j in combinations(range(8), 2):
                pos.append(vadd(_e(j, d), _e(i, d)))
                pos.append(vadd(_e(j, d), _e(i, d, Q(-1))))
            pos.extend(_signed_halves(8, {7: Q(1, 2)}, list(range(7)), 0))
            return simples, pos
        if family == "E7":
            pos = []
            for i, j in combinations(range(6), 2):
                pos.append(vadd(_e(j, d), _e(i, d)))
                pos.append(vadd(_e(j, d), _e(i, d, Q(-1))))
            pos.append(vadd(_e(7, d), _e(6, d, Q(-1))))
            pos.extend(_signed_halves(8, {7: Q(1, 2), 6: Q(-1, 2)}, list(range(6)), 1))
            return simples, pos
        pos = []
        for i, j in combinations(range(5), 2):
            pos.append(vadd(_e(j, d), _e(i, d)))
            pos.append(vadd(_e(j, d), _e(i, d, Q(-1))))
        pos.extend(
            _signed_halves(8, {7: Q(1, 2), 6: Q(-1, 2), 5: Q(-1, 2)}, list(range(5)), 0)
        )
        return simples, pos
    raise UnsupportedFamily(f"unknown family {family!r}")


_ROOT_COUNT = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "BC": lambda r: r * r + r,
    "E6": lambda r: 36,
    "E7": lambda r: 63,
    "E8": lambda r: 120,
    "F4": lambda r: 24,
    "G2": lambda r: 6,
}


@dataclass(frozen=True)
class RestrictedRootSystem:
    family: str
    rank: int
    positive_roots: tuple[Vector, ...]
    simple_indices: tuple[int, ...]
    indivisible_indices: tuple[int, ...]
    divisible_indices: tuple[int, ...]

    def simple_roots(self) -> tuple[Vector, ...]:
        return tuple(self.positive_roots[i] for i in self.simple_indices)

    def indivisible_roots(self) -> tuple[Vector, ...]:
        return tuple(self.positive_roots[i] for i in self.indivisible_indices)

    @property
    def ambient_dim(self) -> int:
        return len(self.positive_roots[0])


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RestrictedRootSystem:
    """Positive system for the family, simple roots first then lex order."""
    if family not in FAMILIES:
        raise UnsupportedFamily(f"unknown family {family!r}")
    if rank < 1:
        raise UnsupportedFamily("rank must be >= 1")
    simples, pos = _positive_roots_raw(family, rank)
    rest = sorted(set(pos) - set(simples))
    ordered = list(simples) + rest
    expected = _ROOT_COUNT[family](rank)
    if len(ordered) != expected:
        raise AssertionError(f"{family}{rank}: {len(ordered)} roots, expected {expected}")
    root_set = set(ordered)
    indivisible = tuple(
        i for i, a in enumerate(ordered) if vscale(Q(1, 2), a) not in root_set
    )
    divisible = tuple(i for i, a in enumerate(ordered) if vscale(Q(2), a) in root_set)
    return RestrictedRootSystem(
        family=family,
        rank=rank,
        positive_roots=tuple(ordered),
        simple_indices=tuple(range(len(simples))),
        indivisible_indices=indivisible,
        divisible_indices=divisible,
    )


@dataclass(frozen=True)
class SymmetricSpaceDescriptor:
    """One catalog entry: restricted roots, multiplicities, rho_X."""

    space_id: str
    cartan_label: str
    root_system: RestrictedRootSystem
    mult: tuple[int, ...] | None  # multiplicity per positive root
    normal_marker: bool = False

    @property
    def evaluable(self) -> bool:
        return self.mult is not None

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @property
    def dim(self) -> int | None:
        if self.mult is None:
            return None
        return self.rank + sum(self.mult)

    def require_mult(self) -> tuple[int, ...]:
        if self.mult is None:
            raise UnsupportedSpace(
                f"{self.space_id}: multiplicities are not tabulated; evaluation blocked"
            )
        return self.mult

    def m_alpha(self, index: int) -> int:
        return self.require_mult()[index]

    def m_2alpha(self, index: int) -> int:
        mult = self.require_mult()
        rs = self.root_system
        doubled = vscale(Q(2), rs.positive_roots[index])
        for j, beta in enumerate(rs.positive_roots):
            if beta == doubled:
                return mult[j]
        return 0

    @property
    def rho(self) -> Vector:
        """Half sum of positive restricted roots weighted by multiplicity."""
        mult = self.require_mult()
        rs = self.root_system
        acc = tuple(Q(0) for _ in range(rs.ambient_dim))
        for m, a in zip(mult, rs.positive_roots):
            acc = vadd(acc, vscale(Q(m, 2), a))
        return acc

    def rho_pairing(self, root: Vector) -> Q:
        return dot(self.rho, root) / dot(root, root)

    def record(self) -> dict:
        rs = self.root_system
        rec = {
            "id": self.space_id,
            "cartan_label": self.cartan_label,
            "family": rs.family,
            "rank": self.rank,
            "dim": self.dim,
            "normal_marker": self.normal_marker,
            "roots": [[str(c) for c in a] for a in rs.positive_roots],
        }
        if self.mult is None:
            rec.update({"m": None, "m2": None, "rho_pairings": None})
            return rec
        rec["m"] = [self.m_alpha(i) for i in rs.indivisible_indices]
        rec["m2"] = [self.m_2alpha(i) for i in rs.indivisible_indices]
        rec["rho_pairings"] = [
            str(self.rho_pairing(rs.positive_roots[i])) for i in rs.indivisible_indices
        ]
        return rec


def rho_pairing(space: SymmetricSpaceDescriptor, root: Vector) -> Q:
    """Exact (rho_X, alpha)/(alpha, alpha) for a positive root of the space."""
    if root not in space.root_system.positive_roots:
        raise UnknownSpace(f"{root} is not a positive root of {space.space_id}")
    return space.rho_pairing(root)


def _mult_by_length(rs: RestrictedRootSystem, table: dict[Q, int]) -> tuple[int, ...]:
    out = []
    for a in rs.positive_roots:
        n2 = dot(a, a)
        if n2 not in table:
            raise AssertionError(f"no multiplicity for length^2 {n2}")
        out.append(table[n2])
    return tuple(out)


def _classical(label: str, family: str, rank: int, table: dict[Q, int],
               space_id: str, normal: bool = False) -> SymmetricSpaceDescriptor:
    rs = build_root_system(family, rank)
    return SymmetricSpaceDescriptor(
        space_id=space_id,
        cartan_label=label,
        root_system=rs,
        mult=_mult_by_length(rs, table),
        normal_marker=normal,
    )


_SPACE_RE = re.compile(r"^([A-Za-z]+):([0-9]+)(?:,([0-9]+))?$")


def _build_space(space_id: str) -> SymmetricSpaceDescriptor:
    token = space_id.strip()
    exceptional = {
        "EI": ("E6/Sp(4)", "E6", 6, {Q(2): 1}, True),
        "EII": ("E6/SU(6)xSU(2)", "F4", 4, {Q(2): 1, Q(1): 2}, False),
        "EIII": ("E6/SO(10)xSO(2)", "BC", 2, {Q(2): 6, Q(1): 8, Q(4): 1}, False),
        "EIV": ("E6/F4", "A", 2, {Q(2): 8}, False),
        "EV": ("E7/SU(8)", "E7", 7, {Q(2): 1}, True),
        "EVI": ("E7/SO(12)xSU(2)", "F4", 4, {Q(2): 1, Q(1): 4}, False),
        "EVIII": ("E8/SO(16)", "E8", 8, {Q(2): 1}, True),
        "EIX": ("E8/E7xSU(2)", "F4", 4, {Q(2): 1, Q(1): 8}, False),
        "FI": ("F4/Sp(3)xSU(2)", "F4", 4, {Q(2): 1, Q(1): 1}, True),
        "FII": ("F4/SO(9)", "BC", 1, {Q(1): 8, Q(4): 7}, False),
        "GI": ("G2/SU(2)xSU(2)", "G2", 2, {Q(2): 1, Q(6): 1}, True),
    }
    if token in exceptional:
        label, fam, rk, table, normal = exceptional[token]
        return _classical(label, fam, rk, table, token, normal)
    if token == "EVII":
        return SymmetricSpaceDescriptor(
            space_id="EVII",
            cartan_label="E7/E6xSO(2)",
            root_system=build_root_system("C", 3),
            mult=None,
        )
    m = _SPACE_RE.match(token)
    if not m:
        raise UnknownSpace(f"cannot parse space id {token!r}")
    head, p_s, q_s = m.group(1), m.group(2), m.group(3)
    p = int(p_s)
    q = int(q_s) if q_s is not None else None

    if head == "S":
        if q is not None or p < 2:
            raise UnknownSpace(f"sphere id must be S:<m> with m >= 2, got {token!r}")
        return _classical(f"BDI({p},1)", "B", 1, {Q(1): p - 1}, f"S:{p}", normal=True)
    if head == "CP":
        if q is not None or p < 1:
            raise UnknownSpace(f"bad id {token!r}")
        if p == 1:
            return lookup_space("S:2")
        return _classical(f"AIII({p},1)", "BC", 1,
                          {Q(1): 2 * (p - 1), Q(4): 1}, f"CP:{p}")
    if head == "HP":
        if q is not None or p < 1:
            raise UnknownSpace(f"bad id {token!r}")
        if p == 1:
            # degenerate BC_1 entry: the short root carries multiplicity 0
            return _classical("CII(1,1)", "BC", 1, {Q(1): 0, Q(4): 3}, "HP:1")
        return _classical(f"CII({p},1)", "BC", 1,
                          {Q(1): 4 * (p - 1), Q(4): 3}, f"HP:{p}")
    if head == "AI":
        if q is not None or p < 2:
            raise UnknownSpace(f"AI:<n> needs n >= 2, got {token!r}")
        return _classical(f"AI ({p})", "A", p - 1, {Q(2): 1}, token)
    if head == "AII":
        if q is not None or p < 2:
            raise UnknownSpace(f"AII:<n> needs n >= 2, got {token!r}")
        return _classical(f"AII ({p})", "A", p - 1, {Q(2): 4}, token)
    if head == "AIII":
        if q is None or not (p >= q >= 1):
            raise UnknownSpace(f"AIII:<p>,<q> needs p >= q >= 1, got {token!r}")
        if p == q:
            return _classical(f"AIII({p},{q})", "C", q, {Q(2): 2, Q(4): 1}, token)
        return _classical(f"AIII({p},{q})", "BC", q,
                          {Q(2): 2, Q(1): 2 * (p - q), Q(4): 1}, token)
    if head == "BDI":
        if q is None or not (p >= q >= 1) or p + q < 3:
            raise UnknownSpace(f"BDI:<p>,<q> needs p >= q >= 1, p+q >= 3, got {token!r}")
        if p == q:
            return _classical(f"BDI({p},{q})", "D", q, {Q(2): 1}, token, normal=True)
        return _classical(f"BDI({p},{q})", "B", q,
                          {Q(2): 1, Q(1): p - q}, token, normal=True)
    if head == "DIII":
        if q is not None or p < 2:
            raise UnknownSpace(f"DIII:<n> needs n >= 2, got {token!r}")
        if p % 2 == 0:
            return _classical(f"DIII({p})", "C", p // 2, {Q(2): 4, Q(4): 1}, token)
        return _classical(f"DIII({p})", "BC", p // 2,
                          {Q(2): 4, Q(1): 4, Q(4): 1}, token)
    if head == "CI":
        if q is not None or p < 1:
            raise UnknownSpace(f"CI:<n> needs n >= 1, got {token!r}")
        return _classical(f"CI({p})", "C", p, {Q(2): 1, Q(4): 1}, token, normal=True)
    if head == "CII":
        if q is None or not (p >= q >= 1):
            raise UnknownSpace(f"CII:<p>,<q> needs p >= q >= 1, got {token!r}")
        if p == q:
            return _classical(f"CII({p},{q})", "C", q, {Q(2): 4, Q(4): 3}, token)
        return _classical(f"CII({p},{q})", "BC", q,
                          {Q(2): 4, Q(1): 4 * (p - q), Q(4): 3}, token)
    raise UnknownSpace(f"unknown space id {token!r}")


@lru_cache(maxsize=None)
def lookup_space(space_id: str) -> SymmetricSpaceDescriptor:
    """Resolve a space id to its immutable descriptor."""
    return _build_space(space_id)


#: Concrete instances used by the self-check sweep and the `spaces` command.
CATALOG_IDS: tuple[str, ...] = (
    "S:2", "S:3", "S:4", "S:5", "S:6", "S:7", "S:8", "S:9",
    "CP:1", "CP:2", "CP:3", "CP:4", "CP:5",
    "HP:1", "HP:2", "HP:3",
    "FII",
    "AI:3", "AI:4", "AII:2", "AII:3",
    "AIII:1,1", "AIII:2,2", "AIII:3,1", "AIII:3,2", "AIII:4,2",
    "BDI:2,2", "BDI:3,2", "BDI:3,3", "BDI:5,2",
    "DIII:2", "DIII:3", "DIII:4", "DIII:5",
    "CI:1", "CI:2", "CI:3",
    "CII:1,1", "CII:2,1", "CII:2,2", "CII:3,2",
    "EI", "EII", "EIII", "EIV", "EV", "EVI", "EVII", "EVIII", "EIX",
    "FI", "GI",
)


def catalog_spaces(include_blocked: bool = True) -> list[SymmetricSpaceDescriptor]:
    spaces = [lookup_space(sid) for sid in CATALOG_IDS]
    if not include_blocked:
        spaces = [s for s in spaces if s.evaluable]
    return spaces


# ---------------------------------------------------------------------------
# Compact groups (the type II side)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CompactGroupDescriptor:
    group_id: str
    root_system: RestrictedRootSystem

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @property
    def rho(self) -> Vector:
        rs = self.root_system
        acc = tuple(Q(0) for _ in range(rs.ambient_dim))
        for a in rs.positive_roots:
            acc = vadd(acc, vscale(Q(1, 2), a))
        return acc

    def fundamental_weights(self) -> tuple[Vector, ...]:
        """Dual basis: 2(w_i, alpha_j)/(alpha_j, alpha_j) = delta_ij."""
        simples = list(self.root_system.simple_roots())
        out = []
        for i in range(len(simples)):
            pair = [Q(0)] * len(simples)
            pair[i] = dot(simples[i], simples[i]) / 2
            out.append(solve_in_span(simples, pair))
        return tuple(out)


_GROUP_RE = re.compile(r"^(SU|SO|Sp):([0-9]+)$")


@lru_cache(maxsize=None)
def lookup_group(group_id: str) -> CompactGroupDescriptor:
    token = group_id.strip()
    fixed = {"G2": ("G2", 2), "F4": ("F4", 4), "E6": ("E6", 6),
             "E7": ("E7", 7), "E8": ("E8", 8)}
    if token in fixed:
        fam, rk = fixed[token]
        return CompactGroupDescriptor(token, build_root_system(fam, rk))
    m = _GROUP_RE.match(token)
    if not m:
        raise UnknownSpace(f"cannot parse group id {token!r}")
    kind, n = m.group(1), int(m.group(2))
    if kind == "SU":
        if n < 2:
            raise UnknownSpace("SU:<n> needs n >= 2")
        return CompactGroupDescriptor(token, build_root_system("A", n - 1))
    if kind == "Sp":
        if n < 1:
            raise UnknownSpace("Sp:<n> needs n >= 1")
        return CompactGroupDescriptor(token, build_root_system("C", n))
    if n < 3:
        raise UnknownSpace("SO:<n> needs n >= 3")
    if n % 2:
        return CompactGroupDescriptor(token, build_root_system("B", (n - 1) // 2))
    return CompactGroupDescriptor(token, build_root_system("D", n // 2))
