"""Exact root systems: simple/positive roots, Cartan data, Weyl groups, parabolic subsystems.

Vectors are tuples of ``fractions.Fraction`` in a fixed ambient space (Bourbaki
realizations).  The invariant inner product is the standard dot product scaled
per irreducible block so that long roots have squared length 2; all Gram data
stays rational, so every identity in this module is checked exactly.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator

import numpy as np

from .errors import CapabilityError, ConfigurationError, DomainError

Q = Fraction
Vector = tuple[Fraction, ...]

DEFAULT_WEYL_CAP = 10**6

# group dimension d per type; |pos roots| = (d - r)/2
_DIMENSION = {
    "A": lambda r: r * r + 2 * r,
    "B": lambda r: 2 * r * r + r,
    "C": lambda r: 2 * r * r + r,
    "D": lambda r: 2 * r * r - r,
    "E": lambda r: {6: 78, 7: 133, 8: 248}[r],
    "F": lambda r: 52,
    "G": lambda r: 14,
}

_WEYL_ORDER = {
    "A": lambda r: factorial(r + 1),
    "B": lambda r: 2**r * factorial(r),
    "C": lambda r: 2**r * factorial(r),
    "D": lambda r: 2 ** (r - 1) * factorial(r),
    "E": lambda r: {6: 51840, 7: 2903040, 8: 696729600}[r],
    "F": lambda r: 1152,
    "G": lambda r: 12,
}

# count of positive roots strictly shorter than the long ones
_SHORT_POS = {
    "A": lambda r: 0,
    "B": lambda r: r,
    "C": lambda r: r * (r - 1),
    "D": lambda r: 0,
    "E": lambda r: 0,
    "F": lambda r: 12,
    "G": lambda r: 3,
}


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vscale(c, u: Vector) -> Vector:
    c = Q(c)
    return tuple(c * a for a in u)


def vzero(n: int) -> Vector:
    return (Q(0),) * n


def _simple_roots_irreducible(family: str, rank: int) -> tuple[list[Vector], Fraction, int]:
    """Bourbaki simple roots, the form scale kappa, and the ambient dimension."""
    e = lambda i, n: tuple(Q(1) if k == i else Q(0) for k in range(n))
    if family == "A":
        n = rank + 1
        roots = [vsub(e(i, n), e(i + 1, n)) for i in range(rank)]
        return roots, Q(1), n
    if family == "B":
        if rank < 2:
            raise ConfigurationError("B requires rank >= 2")
        n = rank
        roots = [vsub(e(i, n), e(i + 1, n)) for i in range(rank - 1)] + [e(rank - 1, n)]
        return roots, Q(1), n
    if family == "C":
        if rank < 2:
            raise ConfigurationError("C requires rank >= 2")
        n = rank
        roots = [vsub(e(i, n), e(i + 1, n)) for i in range(rank - 1)]
        roots.append(vscale(2, e(rank - 1, n)))
        return roots, Q(1, 2), n
    if family == "D":
        if rank < 3:
            raise ConfigurationError("D requires rank >= 3")
        n = rank
        roots = [vsub(e(i, n), e(i + 1, n)) for i in range(rank - 1)]
        roots.append(vadd(e(rank - 2, n), e(rank - 1, n)))
        return roots, Q(1), n
    if family == "E":
        if rank not in (6, 7, 8):
            raise ConfigurationError("E requires rank 6, 7 or 8")
        n = 8
        a1 = tuple(Q(1, 2) * s for s in (1, -1, -1, -1, -1, -1, -1, 1))
        a2 = vadd(e(0, n), e(1, n))
        rest = [vsub(e(i, n), e(i - 1, n)) for i in range(1, 7)]  # e_{i} - e_{i-1}
        roots = [a1, a2] + rest[: rank - 2]
        return roots, Q(1), n
    if family == "F":
        if rank != 4:
            raise ConfigurationError("F requires rank 4")
        n = 4
        roots = [
            vsub(e(1, n), e(2, n)),
            vsub(e(2, n), e(3, n)),
            e(3, n),
            tuple(Q(1, 2) * s for s in (1, -1, -1, -1)),
        ]
        return roots, Q(1), n
    if family == "G":
        if rank != 2:
            raise ConfigurationError("G requires rank 2")
        n = 3
        roots = [
            vsub(e(0, n), e(1, n)),
            (Q(-2), Q(1), Q(1)),
        ]
        return roots, Q(1, 3), n
    raise ConfigurationError(f"unknown family {family!r}")


@dataclass(frozen=True)
class RootSystem:
    """An exact root system, possibly a product of irreducible blocks."""

    label: str
    rank: int
    ambient_dim: int
    scale: Vector  # per-coordinate weights of the invariant form
    simple_roots: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]
    lowest_root: Vector
    weyl_vector: Vector
    cartan_matrix: tuple[tuple[int, ...], ...]
    marks: tuple[int, ...]
    # (family, rank, coordinate offset, node offset) per irreducible block
    blocks: tuple[tuple[str, int, int, int], ...]
    _numeric: dict = field(default_factory=dict, compare=False, repr=False)

    # ---- exact form ------------------------------------------------------

    def inner(self, u: Vector, v: Vector) -> Fraction:
        return sum((s * a * b for s, a, b in zip(self.scale, u, v, strict=True)), Q(0))

    def norm2(self, u: Vector) -> Fraction:
        return self.inner(u, u)

    def coroot_pairing(self, mu: Vector, alpha: Vector) -> Fraction:
        """2(mu, alpha)/(alpha, alpha)."""
        return 2 * self.inner(mu, alpha) / self.norm2(alpha)

    @property
    def dimension(self) -> int:
        return 2 * len(self.positive_roots) + self.rank

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    def weyl_order(self) -> int:
        order = 1
        for family, rank, _, _ in self.blocks:
            order *= _WEYL_ORDER[family](rank)
        return order

    def is_irreducible(self) -> bool:
        return len(self.blocks) == 1

    # ---- root bookkeeping ------------------------------------------------

    def root_coefficients(self, alpha: Vector) -> tuple[Fraction, ...]:
        """Coefficients of alpha in the simple-root basis (exact)."""
        dual = self._dual_basis()
        return tuple(self.inner(alpha, w) for w in dual)

    def _dual_basis(self) -> tuple[Vector, ...]:
        """Vectors v_j in span(roots) with (alpha_i, v_j) = delta_ij."""
        cached = self._numeric.get("dual_basis")
        if cached is None:
            gram = [[self.inner(a, b) for b in self.simple_roots] for a in self.simple_roots]
            inv = _invert_fraction_matrix(gram)
            cached = tuple(
                _lincomb(row, self.simple_roots, self.ambient_dim) for row in inv
            )
            self._numeric["dual_basis"] = cached
        return cached

    def positive_coeff_matrix(self) -> np.ndarray:
        """Integer matrix (num_positive x rank) of simple-root coefficients."""
        cached = self._numeric.get("pos_coeffs")
        if cached is None:
            rows = []
            for alpha in self.positive_roots:
                cs = self.root_coefficients(alpha)
                if any(c.denominator != 1 for c in cs):
                    raise AssertionError("positive root with non-integer coefficients")
                rows.append([int(c) for c in cs])
            cached = np.array(rows, dtype=np.int64)
            self._numeric["pos_coeffs"] = cached
        return cached

    def reflection(self, alpha: Vector) -> tuple[Vector, ...]:
        """Matrix (rows) of the reflection in alpha, acting on ambient coordinates."""
        n = self.ambient_dim
        c = 2 / self.norm2(alpha)
        rows = []
        for i in range(n):
            row = [Q(1) if i == k else Q(0) for k in range(n)]
            for k in range(n):
                row[k] -= c * alpha[i] * self.scale[k] * alpha[k]
            rows.append(tuple(row))
        return tuple(rows)

    def apply_matrix(self, mat: tuple[Vector, ...], v: Vector) -> Vector:
        return tuple(sum((row[k] * v[k] for k in range(len(v))), Q(0)) for row in mat)

    # ---- cached float data for the numeric modules ------------------------

    def numeric(self) -> "RootNumerics":
        cached = self._numeric.get("numerics")
        if cached is None:
            cached = RootNumerics(self)
            self._numeric["numerics"] = cached
        return cached


class RootNumerics:
    """Float mirrors of the exact data, shared by the sampling/scan modules."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.scale = np.array([float(s) for s in rs.scale])
        self.simple = np.array([[float(c) for c in a] for a in rs.simple_roots])
        self.cartan = np.array(rs.cartan_matrix, dtype=np.int64)
        self.marks = np.array(rs.marks, dtype=np.int64)
        self.marks_ext = np.concatenate([[1], self.marks])  # node 0 first
        self.pos_coeffs = rs.positive_coeff_matrix()
        # coroot realizations u_k = 2 alpha_k / (alpha_k, alpha_k); x-coords refer to them
        self.coroots = np.array(
            [
                [float(2 * c / rs.norm2(a)) for c in a]
                for a in rs.simple_roots
            ]
        )
        self.cartan_inv = np.linalg.inv(self.cartan.astype(float))

    def h_from_x(self, X: np.ndarray) -> np.ndarray:
        """Ambient realization of points given in coroot coordinates."""
        return np.asarray(X) @ self.coroots

    def t_simple(self, X: np.ndarray) -> np.ndarray:
        """t_j = alpha_j(H)/2pi i for j = 1..r, for points in coroot coordinates."""
        return np.asarray(X) @ self.cartan.T.astype(float)

    def t_full(self, X: np.ndarray) -> np.ndarray:
        """All t_j for j = 0..r (t_0 from the affine relation)."""
        ts = self.t_simple(X)
        t0 = 1.0 - ts @ self.marks.astype(float)
        return np.concatenate([t0[..., None], ts], axis=-1)

    def x_from_t(self, T: np.ndarray) -> np.ndarray:
        return np.asarray(T) @ self.cartan_inv.T

    def inner(self, u: np.ndarray, v: np.ndarray) -> float:
        return float(np.dot(u * self.scale, v))


def _lincomb(coeffs, vectors, n: int) -> Vector:
    out = list(vzero(n))
    for c, v in zip(coeffs, vectors, strict=True):
        if c == 0:
            continue
        for k in range(n):
            out[k] += c * v[k]
    return tuple(out)


def _invert_fraction_matrix(m):
    """Gauss-Jordan inverse over Fraction; m is a list of lists."""
    n = len(m)
    a = [list(row) + [Q(1) if i == j else Q(0) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise DomainError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = Q(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


_LABEL_RE = re.compile(r"^([A-G])(\d+)$")


def parse_label(label: str) -> list[tuple[str, int]]:
    parts = label.replace("+", "x").split("x")
    out = []
    for part in parts:
        m = _LABEL_RE.match(part.strip())
        if not m:
            raise ConfigurationError(f"cannot parse type label {part!r}")
        out.append((m.group(1), int(m.group(2))))
    if not out:
        raise ConfigurationError("empty type label")
    return out


@lru_cache(maxsize=None)
def build_root_system(label: str) -> RootSystem:
    """Construct the root system for a type label such as ``A2``, ``G2`` or ``B2xA1``."""
    blocks = parse_label(label)
    canonical = "x".join(f"{f}{r}" for f, r in blocks)

    simple: list[Vector] = []
    scale: list[Fraction] = []
    block_info = []
    offset = 0
    node_offset = 0
    for family, rank in blocks:
        if rank < 1:
            raise ConfigurationError("rank must be positive")
        if family in ("B", "C") and rank == 1:
            family = "A"  # B1/C1 degenerate to A1
        roots, kappa, n = _simple_roots_irreducible(family, rank)
        simple.extend(tuple(itertools.chain(vzero(offset), a)) for a in roots)
        scale.extend([kappa] * n)
        block_info.append((family, rank, offset, node_offset))
        offset += n
        node_offset += rank
    ambient = offset
    simple = [v + vzero(ambient - len(v)) for v in simple]
    rank_total = len(simple)

    rs = RootSystem(
        label=canonical,
        rank=rank_total,
        ambient_dim=ambient,
        scale=tuple(scale),
        simple_roots=tuple(simple),
        positive_roots=(),
        lowest_root=vzero(ambient),
        weyl_vector=vzero(ambient),
        cartan_matrix=(),
        marks=(),
        blocks=tuple(block_info),
    )

    all_roots = _close_under_reflections(rs, simple)
    positive = []
    for alpha in all_roots:
        cs = rs.root_coefficients(alpha)
        lead = next(c for c in cs if c != 0)
        if lead > 0:
            positive.append((alpha, cs))
    expected = sum((_DIMENSION[f](r) - r) // 2 for f, r, _, _ in block_info)
    assert len(positive) == expected, (canonical, len(positive), expected)

    # sort by height then coefficients, for reproducible ordering
    positive.sort(key=lambda ac: (sum(ac[1]), ac[1]))
    pos_roots = tuple(alpha for alpha, _ in positive)

    rho = vscale(Q(1, 2), _sum_vectors(pos_roots, ambient))

    cartan = tuple(
        tuple(int(rs.coroot_pairing(a, b)) for b in simple) for a in simple
    )

    # highest root and marks per block; the product lowest root is blockwise
    lowest = list(vzero(ambient))
    marks = [0] * rank_total
    for family, rank, coff, noff in block_info:
        block_nodes = range(noff, noff + rank)
        block_pos = [
            (alpha, cs)
            for alpha, cs in positive
            if any(cs[j] != 0 for j in block_nodes)
        ]
        theta, cs = max(block_pos, key=lambda ac: sum(ac[1]))
        for j in block_nodes:
            assert cs[j].denominator == 1
            marks[j] = int(cs[j])
        for k in range(ambient):
            lowest[k] -= theta[k]

    object.__setattr__(rs, "positive_roots", pos_roots)
    object.__setattr__(rs, "weyl_vector", rho)
    object.__setattr__(rs, "cartan_matrix", cartan)
    object.__setattr__(rs, "marks", tuple(marks))
    object.__setattr__(rs, "lowest_root", tuple(lowest))

    _check_invariants(rs)
    return rs


def _sum_vectors(vs, n: int) -> Vector:
    out = list(vzero(n))
    for v in vs:
        for k in range(n):
            out[k] += v[k]
    return tuple(out)


def _close_under_reflections(rs: RootSystem, simple: list[Vector]) -> list[Vector]:
    refls = [rs.reflection(a) for a in simple]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for m in refls:
                w = rs.apply_matrix(m, v)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return sorted(seen)


def _check_invariants(rs: RootSystem) -> None:
    d = rs.dimension
    assert len(rs.positive_roots) == (d - rs.rank) // 2
    # rho pairs to 1 against every simple coroot
    for a in rs.simple_roots:
        assert rs.coroot_pairing(rs.weyl_vector, a) == 1
    # -alpha_0 = sum m_j alpha_j
    minus = vscale(-1, rs.lowest_root)
    assert minus == _lincomb(rs.marks, rs.simple_roots, rs.ambient_dim)
    for i in range(rs.rank):
        for j in range(rs.rank):
            c = rs.cartan_matrix[i][j]
            if i == j:
                assert c == 2
            else:
                assert c in (0, -1, -2, -3)


# ---------------------------------------------------------------------------
# Weyl group enumeration
# ---------------------------------------------------------------------------


def weyl_group_elements(
    rs: RootSystem, cap: int = DEFAULT_WEYL_CAP
) -> Iterator[tuple[tuple[Vector, ...], int]]:
    """Yield every Weyl group element exactly once as (matrix rows, det).

    Elements are generated by closing the simple reflections under
    multiplication; matrices act on ambient coordinates.
    """
    order = rs.weyl_order()
    if order > cap:
        raise CapabilityError(
            f"|W| = {order} exceeds cap {cap}; use combinatorial operations instead"
        )
    gens = [rs.reflection(a) for a in rs.simple_roots]
    n = rs.ambient_dim
    ident = tuple(
        tuple(Q(1) if i == k else Q(0) for k in range(n)) for i in range(n)
    )
    seen = {ident: 1}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            det_m = seen[m]
            for g in gens:
                prod = _matmul(g, m)
                if prod not in seen:
                    seen[prod] = -det_m
                    nxt.append(prod)
        frontier = nxt
    assert len(seen) == order
    yield from seen.items()


def _matmul(a, b):
    n = len(a)
    bt = list(zip(*b))
    return tuple(
        tuple(sum((a[i][k] * bt[j][k] for k in range(n)), Q(0)) for j in range(n))
        for i in range(n)
    )


# ---------------------------------------------------------------------------
# Parabolic subsystems
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParabolicSubsystem:
    """Root subsystem generated by a proper subset of extended Dynkin nodes.

    ``positive_roots`` is the intersection of the subsystem with the ambient
    positive system, which is a valid positive system for the subsystem; its
    simple system (the indecomposable elements) may differ from the node roots
    when node 0 belongs to J.
    """

    rs: RootSystem
    nodes: frozenset[int]
    node_roots: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]
    simple_roots: tuple[Vector, ...]  # simple system of positive_roots
    rho: Vector
    components: tuple[tuple[str, tuple[int, ...]], ...]  # (type label, nodes)

    @property
    def rank(self) -> int:
        return len(self.nodes)

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    def weyl_order(self) -> int:
        order = 1
        for label, _ in self.components:
            for family, rank in parse_label(label):
                order *= _WEYL_ORDER[family](rank)
        return order

    def weyl_elements(self, cap: int = DEFAULT_WEYL_CAP):
        order = self.weyl_order()
        if order > cap:
            raise CapabilityError(f"|W_J| = {order} exceeds cap {cap}")
        rs = self.rs
        gens = [rs.reflection(a) for a in self.node_roots]
        n = rs.ambient_dim
        ident = tuple(tuple(Q(1) if i == k else Q(0) for k in range(n)) for i in range(n))
        seen = {ident: 1}
        frontier = [ident]
        while frontier:
            nxt = []
            for m in frontier:
                det_m = seen[m]
                for g in gens:
                    prod = _matmul(g, m)
                    if prod not in seen:
                        seen[prod] = -det_m
                        nxt.append(prod)
            frontier = nxt
        assert len(seen) == order
        return list(seen.items())


def extended_node_roots(rs: RootSystem) -> tuple[Vector, ...]:
    """alpha_0, alpha_1, ..., alpha_r (node 0 is the lowest root)."""
    if not rs.is_irreducible():
        raise ConfigurationError(
            "extended node indexing requires an irreducible system; "
            "product alcoves factor blockwise"
        )
    return (rs.lowest_root,) + rs.simple_roots


def positive_roots_in_node_span(rs: RootSystem, nodes) -> list[int]:
    """Indices of the positive roots lying in the span of the node roots.

    For irreducible systems this is pure integer arithmetic on simple-root
    coefficients: with node 0 present, alpha lies in the span iff its
    coefficients on the deleted simple nodes are a common multiple of the
    marks there.
    """
    nodes = set(int(j) for j in nodes)
    coeffs = rs.positive_coeff_matrix()
    out = []
    if 0 not in nodes:
        outside = [k for k in range(rs.rank) if k + 1 not in nodes]
        for i in range(coeffs.shape[0]):
            if all(coeffs[i][k] == 0 for k in outside):
                out.append(i)
        return out
    outside = [k for k in range(rs.rank) if k + 1 not in nodes]
    marks = rs.marks
    for i in range(coeffs.shape[0]):
        row = coeffs[i]
        ratio = None
        ok = True
        for k in outside:
            r = Q(int(row[k]), marks[k])
            if ratio is None:
                ratio = r
            elif r != ratio:
                ok = False
                break
        if ok:
            out.append(i)
    return out


def parabolic_subsystem(rs: RootSystem, nodes) -> ParabolicSubsystem:
    """Subsystem for a proper subset of {0, ..., r} of extended Dynkin nodes."""
    nodes = frozenset(int(j) for j in nodes)
    if not nodes <= set(range(rs.rank + 1)):
        raise DomainError(f"node set {sorted(nodes)} outside 0..{rs.rank}")
    if len(nodes) > rs.rank:
        raise DomainError("J must be a proper subset of the extended node set")

    ext = extended_node_roots(rs)
    node_roots = tuple(ext[j] for j in sorted(nodes))

    idx = positive_roots_in_node_span(rs, nodes)
    pos = tuple(rs.positive_roots[i] for i in idx)
    simple = _indecomposables(rs, pos)
    rho = vscale(Q(1, 2), _sum_vectors(pos, rs.ambient_dim))

    components = _diagram_components(rs, sorted(nodes), ext)
    labeled = tuple(
        (_classify_component(rs, comp, ext), tuple(comp)) for comp in components
    )

    return ParabolicSubsystem(
        rs=rs,
        nodes=nodes,
        node_roots=node_roots,
        positive_roots=pos,
        simple_roots=simple,
        rho=rho,
        components=labeled,
    )


def _in_span(rs: RootSystem, alpha: Vector, basis: tuple[Vector, ...]) -> bool:
    """Exact membership of alpha in the rational span of basis."""
    if not basis:
        return all(c == 0 for c in alpha)
    # solve least-squares exactly via the Gram system; consistent iff residual 0
    gram = [[rs.inner(a, b) for b in basis] for a in basis]
    rhs = [rs.inner(a, alpha) for a in basis]
    coeffs = _solve_fraction(gram, rhs)
    resid = alpha
    for c, b in zip(coeffs, basis):
        resid = vsub(resid, vscale(c, b))
    return all(c == 0 for c in resid)


def _solve_fraction(m, rhs):
    inv = _invert_fraction_matrix([list(row) for row in m])
    return [sum((inv[i][j] * rhs[j] for j in range(len(rhs))), Q(0)) for i in range(len(rhs))]


def _indecomposables(rs: RootSystem, pos: tuple[Vector, ...]) -> tuple[Vector, ...]:
    pos_set = set(pos)
    out = []
    for alpha in pos:
        decomposable = any(
            vsub(alpha, beta) in pos_set for beta in pos if beta != alpha
        )
        if not decomposable:
            out.append(alpha)
    return tuple(out)


def _diagram_components(rs: RootSystem, nodes: list[int], ext) -> list[list[int]]:
    adj = {
        j: [
            k
            for k in nodes
            if k != j and rs.inner(ext[j], ext[k]) != 0
        ]
        for j in nodes
    }
    seen: set[int] = set()
    comps = []
    for j in nodes:
        if j in seen:
            continue
        comp = []
        stack = [j]
        seen.add(j)
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def _classify_component(rs: RootSystem, comp: list[int], ext) -> str:
    """Type label of an irreducible component, from (rank, #pos, #short)."""
    pos = [rs.positive_roots[i] for i in positive_roots_in_node_span(rs, comp)]
    rank = len(comp)
    if rank == 1:
        return "A1"
    lens = [rs.norm2(a) for a in pos]
    lmax = max(lens)
    nshort = sum(1 for v in lens if v < lmax)
    npos = len(pos)
    for family in "ABCDEFG":
        try:
            expect_pos = (_DIMENSION[family](rank) - rank) // 2
        except KeyError:
            continue
        if expect_pos == npos and _SHORT_POS[family](rank) == nshort:
            if family == "C" and rank == 2:
                family = "B"  # C2 and B2 coincide
            return f"{family}{rank}"
    raise AssertionError(f"unclassifiable component {comp}")
