"""Alcove coordinates and the barycentric-semiclassical subdivision.

Points of the Cartan subalgebra are handled in coroot coordinates x (length r):
the canonical torus measure is Lebesgue dx, the alcove has volume 1/|W|, and
the facet coordinates are t_j = (cartan @ x)_j for j >= 1 with
t_0 = 1 - sum_j m_j t_j.  A point is classified into the cell P_{I,J} by
J = {j : t_j <= 1/N} together with the barycentric cell C_I around the vertex
whose barycentric coordinate m_j t_j dominates.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ScaleError
from .rootsys import RootSystem

BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class Cell:
    """Barycentric-semiclassical cell P_{I,J} at scale N."""

    I: frozenset[int]
    J: frozenset[int]
    N: int

    def __post_init__(self):
        if not self.J <= self.I:
            raise DomainError("J must be contained in I")

    @property
    def omitted(self) -> int:
        universe = set(range(max(self.I) + 2)) if self.I else {0}
        # omitted node: the one extended node outside I
        return min(universe - self.I)


@dataclass
class AlcovePoint:
    """A point of the closed alcove with its derived facet coordinates."""

    x: np.ndarray  # coroot coordinates, length r
    t: np.ndarray  # t_0..t_r

    @classmethod
    def from_x(cls, rs: RootSystem, x) -> "AlcovePoint":
        num = rs.numeric()
        x = np.asarray(x, dtype=float)
        t = num.t_full(x)
        return cls(x=x, t=t)

    @classmethod
    def from_t_simple(cls, rs: RootSystem, t_simple) -> "AlcovePoint":
        num = rs.numeric()
        x = num.x_from_t(np.asarray(t_simple, dtype=float))
        return cls.from_x(rs, x)


def scale_threshold(rs: RootSystem) -> int:
    """Smallest admissible dyadic N (floor 16) guaranteeing J subset of I.

    If N > m_j (r+1) for every mark, a coordinate with t_j <= 1/N can never
    carry the maximal barycentric coordinate, so no nonempty cell has J
    outside I.
    """
    bound = max(rs.marks) * (rs.rank + 1)
    n = 16
    while n <= bound:
        n *= 2
    return n


def barycentric(rs: RootSystem, t_full: np.ndarray) -> np.ndarray:
    """Barycentric coordinates w.r.t. the alcove vertices: b_k = m_k t_k (m_0 = 1)."""
    num = rs.numeric()
    return np.asarray(t_full) * num.marks_ext


def classify(rs: RootSystem, point, N: int) -> tuple[frozenset[int], frozenset[int]]:
    """Cell (I, J) of an alcove point at scale N.

    Raises DomainError outside the closed alcove and ScaleError for N below
    the type threshold.  Boundary ties are broken deterministically (smallest
    extended node index wins the barycentric maximum).
    """
    if N < scale_threshold(rs):
        raise ScaleError(f"N = {N} below threshold {scale_threshold(rs)} for {rs.label}")
    if isinstance(point, AlcovePoint):
        t = point.t
    else:
        t = AlcovePoint.from_x(rs, point).t
    if np.min(t) < -BOUNDARY_TOL:
        raise DomainError("point outside the closed alcove")
    b = barycentric(rs, t)
    kstar = int(np.argmax(b))  # argmax takes the first maximum: lexicographic tie-break
    I = frozenset(k for k in range(rs.rank + 1) if k != kstar)
    J = frozenset(j for j in range(rs.rank + 1) if t[j] <= 1.0 / N)
    if not J <= I:
        raise ScaleError(f"cell with J outside I at N = {N}; increase N")
    return I, J


def barycentric_cell_membership(rs: RootSystem, point, I) -> bool:
    """Whether the point lies in the closed barycentric cell C_I."""
    I = frozenset(I)
    if len(I) != rs.rank:
        raise DomainError("I must omit exactly one extended node")
    if isinstance(point, AlcovePoint):
        t = point.t
    else:
        t = AlcovePoint.from_x(rs, point).t
    if np.min(t) < -BOUNDARY_TOL:
        raise DomainError("point outside the closed alcove")
    b = barycentric(rs, t)
    kstar = min(set(range(rs.rank + 1)) - I)
    return bool(b[kstar] >= np.max(b) - BOUNDARY_TOL)


def alcove_vertices(rs: RootSystem) -> np.ndarray:
    """Vertices in coroot coordinates, row k = vertex omitting node k."""
    num = rs.numeric()
    r = rs.rank
    verts = np.zeros((r + 1, r))
    for k in range(1, r + 1):
        t = np.zeros(r)
        t[k - 1] = 1.0 / rs.marks[k - 1]
        verts[k] = num.x_from_t(t)
    return verts


def _stream(seed: int, *tags) -> np.random.Generator:
    """Counter-based generator keyed by (seed, tags); thread-count independent."""
    h = hashlib.blake2s(repr((int(seed),) + tags).encode(), digest_size=16).digest()
    key = np.frombuffer(h, dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


@dataclass
class CellSample:
    cell: Cell
    x: np.ndarray  # accepted points, shape (n, r)
    tries: int
    accepted: int
    box_volume: float  # volume of the proposal box in canonical x-measure
    volume_est: float
    volume_se: float

    @property
    def acceptance_rate(self) -> float:
        return self.accepted / self.tries if self.tries else 0.0

    @property
    def weights(self) -> np.ndarray:
        """Per-point integration weights for unbiased cell integrals."""
        if self.accepted == 0:
            return np.zeros(0)
        return np.full(self.accepted, self.box_volume / self.tries)


def _cell_box(rs: RootSystem, cell: Cell):
    """Coordinate ranges of the proposal box over the cell's own t-coordinates.

    Coordinates are t_j for j in I; the omitted coordinate follows from the
    affine relation.  Returns (index list, lows, highs, jacobian-to-x).
    """
    num = rs.numeric()
    idx = sorted(cell.I)
    lows, highs = [], []
    for j in idx:
        mark = 1 if j == 0 else rs.marks[j - 1]
        if j in cell.J:
            lows.append(0.0)
            highs.append(1.0 / cell.N)
        else:
            lows.append(1.0 / cell.N)
            highs.append(1.0 / mark)
    kstar = cell.omitted
    det_c = abs(np.linalg.det(num.cartan.astype(float)))
    if 0 in cell.I:
        jac = 1.0 / (rs.marks[kstar - 1] * det_c)
    else:
        jac = 1.0 / det_c
    return idx, np.array(lows), np.array(highs), jac


def _points_from_box(rs: RootSystem, cell: Cell, idx, U):
    """Map box draws (t_j for j in I) to coroot coordinates and full t."""
    num = rs.numeric()
    n = U.shape[0]
    r = rs.rank
    kstar = cell.omitted
    ts = np.empty((n, r))
    if 0 in cell.I:
        t0 = U[:, idx.index(0)]
        acc = 1.0 - t0
        for pos, j in enumerate(idx):
            if j == 0:
                continue
            ts[:, j - 1] = U[:, pos]
            acc = acc - rs.marks[j - 1] * U[:, pos]
        ts[:, kstar - 1] = acc / rs.marks[kstar - 1]
    else:
        for pos, j in enumerate(idx):
            ts[:, j - 1] = U[:, pos]
    X = num.x_from_t(ts)
    T = num.t_full(X)
    return X, T


def sample_cell(
    rs: RootSystem,
    cell: Cell,
    count: int,
    seed: int,
    max_tries: int | None = None,
    fixed_tries: int | None = None,
) -> CellSample:
    """Uniform rejection sample of the cell P_{I,J}.

    With ``fixed_tries`` set, exactly that many proposals are drawn (used by
    the integrators, which want unbiased weights); otherwise sampling runs
    until ``count`` points are accepted or the try budget is exhausted.
    """
    if cell.N < scale_threshold(rs):
        raise ScaleError(f"N = {cell.N} below threshold for {rs.label}")
    idx, lows, highs, jac = _cell_box(rs, cell)
    box_volume = float(np.prod(highs - lows)) * jac
    rng = _stream(seed, "cell", tuple(sorted(cell.I)), tuple(sorted(cell.J)), cell.N)
    num = rs.numeric()
    marks_ext = num.marks_ext

    def accept_mask(T):
        ok = T.min(axis=1) >= 0.0
        B = T * marks_ext
        kstar = cell.omitted
        # strict argmax with lexicographic tie-break equals kstar
        am = B.argmax(axis=1)
        ok &= am == kstar
        inv_n = 1.0 / cell.N
        for j in range(rs.rank + 1):
            if j in cell.J:
                ok &= T[:, j] <= inv_n
            elif j in cell.I:
                ok &= T[:, j] > inv_n
        return ok

    pts = []
    accepted = 0
    tries = 0
    if fixed_tries is not None:
        batch = fixed_tries
        U = rng.uniform(lows, highs, size=(batch, len(idx)))
        X, T = _points_from_box(rs, cell, idx, U)
        ok = accept_mask(T)
        pts.append(X[ok])
        accepted = int(ok.sum())
        tries = batch
    else:
        budget = max_tries if max_tries is not None else max(200 * count, 10000)
        while accepted < count and tries < budget:
            batch = min(max(4 * (count - accepted), 1024), budget - tries)
            U = rng.uniform(lows, highs, size=(batch, len(idx)))
            X, T = _points_from_box(rs, cell, idx, U)
            ok = accept_mask(T)
            pts.append(X[ok][: count - accepted])
            accepted += int(min(ok.sum(), count - accepted))
            tries += batch
    x = np.vstack(pts) if pts else np.zeros((0, rs.rank))
    phat = accepted / tries if tries else 0.0
    vol = box_volume * phat
    se = box_volume * float(np.sqrt(max(phat * (1 - phat), 0.0) / tries)) if tries else 0.0
    return CellSample(
        cell=cell,
        x=x,
        tries=tries,
        accepted=accepted,
        box_volume=box_volume,
        volume_est=vol,
        volume_se=se,
    )


def all_cells(rs: RootSystem, N: int) -> list[Cell]:
    """Every cell (I, J subset of I) of the subdivision at scale N."""
    from itertools import chain, combinations

    cells = []
    nodes = list(range(rs.rank + 1))
    for kstar in nodes:
        I = frozenset(j for j in nodes if j != kstar)
        subsets = chain.from_iterable(
            combinations(sorted(I), k) for k in range(len(I) + 1)
        )
        for J in subsets:
            cells.append(Cell(I=I, J=frozenset(J), N=N))
    return cells


def alcove_volume(rs: RootSystem) -> float:
    """Exact alcove volume in the canonical measure: 1/|W|."""
    return 1.0 / rs.weyl_order()


# ---------------------------------------------------------------------------
# Orthogonal splitting of a point relative to a wall set
# ---------------------------------------------------------------------------


def split_H(rs: RootSystem, J, x):
    """Split H = H_J + H_J_perp with H_J = H_J^0 + H_J^1.

    Input and output are ambient realizations (floats); H is given by coroot
    coordinates x.  H_J^0 is the anchor solving t_j = 0 on the wall set, so
    that H_J^1 stays O(1/N) on the corresponding cells.
    """
    from .rootsys import extended_node_roots

    num = rs.numeric()
    h = num.h_from_x(np.asarray(x, dtype=float))
    J = sorted(set(int(j) for j in J))
    if not J:
        z = np.zeros_like(h)
        return z, h.copy(), z, z
    ext = extended_node_roots(rs)
    basis = np.array([[float(c) for c in ext[j]] for j in J])
    gram = basis @ (basis * num.scale).T
    rhs = (basis * num.scale) @ h
    coeff = np.linalg.solve(gram, rhs)
    h_j = coeff @ basis
    h_perp = h - h_j
    # anchor: (alpha_j, h0) = -delta_{0j}
    rhs0 = np.array([-1.0 if j == 0 else 0.0 for j in J])
    coeff0 = np.linalg.solve(gram, rhs0)
    h0 = coeff0 @ basis
    h1 = h_j - h0
    return h_j, h_perp, h0, h1
