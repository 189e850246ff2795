"""Weight/root lattices, parabolic projections, lattice splittings and the
Schrodinger period.

Everything here is exact: vectors are Fraction tuples, lattice computations
run over the integers via Smith normal form after clearing denominators.
Column convention: a lattice is the set of integer combinations of its basis
vectors; coordinate vectors are columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import DomainError
from .rootsys import (
    ParabolicSubsystem,
    Q,
    RootSystem,
    Vector,
    _invert_fraction_matrix,
    _lincomb,
    parabolic_subsystem,
    vadd,
    vscale,
    vsub,
    vzero,
)

# ---------------------------------------------------------------------------
# Integer matrix normal forms (arbitrary precision, python ints)
# ---------------------------------------------------------------------------


def smith_normal_form(mat):
    """Return (D, U, V) with U @ mat @ V = D, U and V unimodular, D diagonal.

    ``mat`` is a list of lists of ints (m x n).  D has nonnegative diagonal
    entries d_1 | d_2 | ... followed by zeros.
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    a = [list(row) for row in mat]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    t = 0
    while t < min(m, n):
        # find a pivot of least absolute value in the remaining block
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        dirty = False
        for i in range(t + 1, m):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                add_row(i, t, -q)
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                add_col(j, t, -q)
                if a[t][j]:
                    dirty = True
        if dirty or any(a[i][t] for i in range(t + 1, m)) or any(
            a[t][j] for j in range(t + 1, n)
        ):
            continue
        # divisibility condition d_t | a[i][j]
        viol = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t]:
                    viol = i
                    break
            if viol is not None:
                break
        if viol is not None:
            add_row(t, viol, 1)
            continue
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return a, u, v


def _mat_from_fractions(rows):
    """Clear denominators of a Fraction matrix; returns (int matrix, lcm)."""
    denom = 1
    for row in rows:
        for x in row:
            denom = lcm(denom, Q(x).denominator)
    out = [[int(Q(x) * denom) for x in row] for row in rows]
    return out, denom


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _matmul_int(a, b):
    n, k, m = len(a), len(b), len(b[0])
    bt = list(zip(*b))
    return [[sum(a[i][t] * bt[j][t] for t in range(k)) for j in range(m)] for i in range(n)]


def kernel_and_complement(rows):
    """For a rational matrix R (list of Fraction rows, m x n), split Z^n.

    Returns (kernel_cols, complement_cols): integer column vectors such that
    kernel spans {x in Z^n : R x = 0} (saturated) and kernel + complement is a
    basis of Z^n (change of basis has determinant +-1).
    """
    m = len(rows)
    n = len(rows[0])
    imat, _ = _mat_from_fractions(rows)
    d, _, v = smith_normal_form(imat)
    rank = sum(1 for i in range(min(m, n)) if d[i][i] != 0)
    cols = list(zip(*v))
    complement = [list(cols[j]) for j in range(rank)]
    kernel = [list(cols[j]) for j in range(rank, n)]
    return kernel, complement


def integral_preimage_basis(rows):
    """Basis of {x in Z^n : R x in Z^m} for a rational matrix R (m x n rows).

    Returned as integer column vectors; always a full-rank sublattice of Z^n.
    """
    imat, denom = _mat_from_fractions(rows)
    n = len(rows[0])
    d, _, v = smith_normal_form(imat)
    cols = list(zip(*v))
    basis = []
    for j in range(n):
        dj = d[j][j] if j < len(d) and j < len(d[0]) else 0
        mult = denom // gcd(dj, denom) if dj else 1
        basis.append([mult * c for c in cols[j]])
    return basis


# ---------------------------------------------------------------------------
# Lattices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Lattice:
    """Free Z-module given by an exact basis in the ambient space."""

    basis: tuple[Vector, ...]
    rs: RootSystem

    @property
    def rank(self) -> int:
        return len(self.basis)

    def gram(self) -> list[list[Fraction]]:
        return [[self.rs.inner(a, b) for b in self.basis] for a in self.basis]

    def element(self, coords) -> Vector:
        return _lincomb([Q(c) for c in coords], self.basis, self.rs.ambient_dim)


@dataclass(frozen=True)
class LatticeSplit:
    part: Lattice
    complement: Lattice
    mode: str  # "span-side" or "perp-side"


def fundamental_weights(rs: RootSystem) -> tuple[Vector, ...]:
    """Duals of the simple coroots: 2(w_i, a_j)/(a_j, a_j) = delta_ij."""
    cached = rs._numeric.get("fundamental_weights")
    if cached is None:
        cartan = [[Q(c) for c in row] for row in rs.cartan_matrix]
        inv = _invert_fraction_matrix(cartan)
        cached = tuple(
            _lincomb(row, rs.simple_roots, rs.ambient_dim) for row in inv
        )
        rs._numeric["fundamental_weights"] = cached
    return cached


def weight_lattice(rs: RootSystem) -> Lattice:
    return Lattice(basis=fundamental_weights(rs), rs=rs)


def root_lattice(rs: RootSystem) -> Lattice:
    return Lattice(basis=rs.simple_roots, rs=rs)


def weight_coords(rs: RootSystem, mu: Vector) -> tuple[Fraction, ...]:
    """Coordinates of mu in the fundamental-weight basis: m_i = 2(mu,a_i)/(a_i,a_i)."""
    return tuple(rs.coroot_pairing(mu, a) for a in rs.simple_roots)


def in_weight_lattice(rs: RootSystem, mu: Vector) -> bool:
    coords = weight_coords(rs, mu)
    if any(c.denominator != 1 for c in coords):
        return False
    # coordinates must reproduce mu (mu must lie in the root span)
    return weight_lattice(rs).element(coords) == tuple(Q(x) for x in mu)


def cartan_index(rs: RootSystem) -> int:
    """Index [weight lattice : root lattice] = |det Cartan matrix|."""
    mat = [list(row) for row in rs.cartan_matrix]
    d, _, _ = smith_normal_form(mat)
    out = 1
    for i in range(len(mat)):
        out *= d[i][i]
    return abs(out)


def strictly_dominant(rs: RootSystem, mu: Vector) -> bool:
    """True iff mu is in the weight lattice and pairs >= 1 with every simple coroot."""
    if not in_weight_lattice(rs, mu):
        raise DomainError("mu is not a weight-lattice element")
    return all(c >= 1 for c in weight_coords(rs, mu))


# ---------------------------------------------------------------------------
# Parabolic projections
# ---------------------------------------------------------------------------


def _subsystem(rs: RootSystem, J) -> ParabolicSubsystem:
    if isinstance(J, ParabolicSubsystem):
        return J
    return parabolic_subsystem(rs, J)


def project_onto_VJ(rs: RootSystem, J, mu: Vector) -> Vector:
    """Orthogonal projection of mu onto the span of the parabolic subsystem."""
    sub = _subsystem(rs, J)
    basis = sub.node_roots
    if not basis:
        return vzero(rs.ambient_dim)
    gram = [[rs.inner(a, b) for b in basis] for a in basis]
    rhs = [rs.inner(a, tuple(Q(x) for x in mu)) for a in basis]
    inv = _invert_fraction_matrix(gram)
    coeffs = [sum((inv[i][j] * rhs[j] for j in range(len(rhs))), Q(0)) for i in range(len(rhs))]
    return _lincomb(coeffs, basis, rs.ambient_dim)


def project_onto_VJ_perp(rs: RootSystem, J, mu: Vector) -> Vector:
    mu = tuple(Q(x) for x in mu)
    return vsub(mu, project_onto_VJ(rs, J, mu))


def split_lattice(rs: RootSystem, J, mode: str = "span-side") -> LatticeSplit:
    """Split the weight lattice relative to the parabolic root subspace.

    span-side: part maps isomorphically onto Proj_{V_J}(weight lattice) and the
    complement is the kernel of the projection.  perp-side: the symmetric
    statement for the orthogonal complement of V_J (part is the kernel there).
    """
    if mode not in ("span-side", "perp-side"):
        raise DomainError(f"unknown mode {mode!r}")
    sub = _subsystem(rs, J)
    lam = weight_lattice(rs)
    if mode == "span-side":
        # kernel of Proj_{V_J} = weights orthogonal to every node root
        rows = [[rs.inner(a, w) for w in lam.basis] for a in sub.node_roots]
        if rows:
            kernel, complement = kernel_and_complement(rows)
        else:
            kernel, complement = [list(c) for c in zip(*_identity(lam.rank))], []
        part_cols, comp_cols = complement, kernel
    else:
        # kernel of Proj_{V_J^perp} = weights with zero residual mu - mu_J
        resid = [project_onto_VJ_perp(rs, sub, w) for w in lam.basis]
        rows = [[resid[k][i] for k in range(lam.rank)] for i in range(rs.ambient_dim)]
        kernel, complement = kernel_and_complement(rows)
        part_cols, comp_cols = kernel, complement
    part = Lattice(basis=tuple(lam.element(c) for c in part_cols), rs=rs)
    comp = Lattice(basis=tuple(lam.element(c) for c in comp_cols), rs=rs)
    return LatticeSplit(part=part, complement=comp, mode=mode)


def preimage_of_GammaJ(rs: RootSystem, J) -> Lattice:
    """Sublattice of the span-side part with projection inside the subsystem root lattice."""
    sub = _subsystem(rs, J)
    split = split_lattice(rs, sub, "span-side")
    part = split.part
    if sub.rank == 0:
        return part
    # coordinates of Proj(part basis) in the node-root basis of V_J
    basis = sub.node_roots
    gram = [[rs.inner(a, b) for b in basis] for a in basis]
    inv = _invert_fraction_matrix(gram)
    rows = []
    for i in range(len(basis)):
        row = []
        for w in part.basis:
            rhs = [rs.inner(a, w) for a in basis]
            row.append(sum((inv[i][j] * rhs[j] for j in range(len(rhs))), Q(0)))
        rows.append(row)
    cols = integral_preimage_basis(rows)
    return Lattice(basis=tuple(part.element(c) for c in cols), rs=rs)


def coset_reps(rs: RootSystem, J) -> list[Vector]:
    """Representatives of (span-side part) / (preimage of the subsystem root lattice)."""
    sub = _subsystem(rs, J)
    split = split_lattice(rs, sub, "span-side")
    part = split.part
    gamma = preimage_of_GammaJ(rs, sub)
    if part.rank == 0:
        return [vzero(rs.ambient_dim)]
    # coordinates of gamma basis in part basis
    coords = _coords_in_basis(rs, gamma.basis, part.basis)
    imat, denom = _mat_from_fractions(coords)
    assert denom == 1, "sublattice coordinates must be integral"
    d, u, _ = smith_normal_form(imat)
    uinv = _int_inverse(u)
    adapted = [
        part.element([uinv[i][k] for i in range(part.rank)]) for k in range(part.rank)
    ]
    diag = [d[i][i] for i in range(part.rank)]
    reps = []
    from itertools import product

    for combo in product(*[range(max(x, 1)) for x in diag]):
        v = vzero(rs.ambient_dim)
        for c, b in zip(combo, adapted):
            v = vadd(v, vscale(c, b))
        reps.append(v)
    return reps


def _coords_in_basis(rs: RootSystem, vectors, basis):
    """Exact coordinates of each vector in the given basis (by Gram solve)."""
    gram = [[rs.inner(a, b) for b in basis] for a in basis]
    inv = _invert_fraction_matrix(gram)
    out = []
    for i in range(len(basis)):
        row = []
        for v in vectors:
            rhs = [rs.inner(a, v) for a in basis]
            row.append(sum((inv[i][j] * rhs[j] for j in range(len(rhs))), Q(0)))
        out.append(row)
    # transpose: row per basis index, column per vector -> coords as rows-of-matrix
    return [[out[i][j] for j in range(len(vectors))] for i in range(len(basis))]


def _int_inverse(u):
    n = len(u)
    frac = _invert_fraction_matrix([[Q(x) for x in row] for row in u])
    out = [[int(x) for x in row] for row in frac]
    return out


# ---------------------------------------------------------------------------
# Rationality constant and the Schrodinger period
# ---------------------------------------------------------------------------


def rationality_constant(rs: RootSystem) -> Fraction:
    """D with (mu, lam) in D Z for all weights; 1 / lcm of Gram denominators."""
    gram = weight_lattice(rs).gram()
    denom = 1
    for row in gram:
        for x in row:
            denom = lcm(denom, x.denominator)
    return Q(1, denom)


def _fraction_gcd(values) -> Fraction:
    den = 1
    for v in values:
        den = lcm(den, Q(v).denominator)
    g = 0
    for v in values:
        g = gcd(g, abs(int(Q(v) * den)))
    return Q(g, den)


def schrodinger_period(rs: RootSystem) -> Fraction:
    """Minimal T/(2 pi) with |mu|^2 in (2 pi / T) Z for every weight mu.

    T = 2 pi / g where g generates the additive group of squared weight norms;
    g is the gcd of the diagonal Gram entries and twice the off-diagonal ones.
    """
    gram = weight_lattice(rs).gram()
    vals = []
    r = len(gram)
    for i in range(r):
        vals.append(gram[i][i])
        for j in range(i + 1, r):
            vals.append(2 * gram[i][j])
    g = _fraction_gcd(vals)
    assert g > 0
    return 1 / g  # T = (1/g) * 2 pi
