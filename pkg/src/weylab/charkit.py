"""Weyl denominator weight functions, characters and dimensions.

Characters are evaluated by the plain Weyl quotient away from the alcove
walls and by the cell decomposition through parabolic characters near them;
an exact Freudenthal weight-multiplicity expansion serves as an independent
oracle.  All exponentials are driven by real phases theta = alpha(H)/2pi i,
evaluated as 2i sin(pi theta) products to avoid cancellation.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iter_product

import numpy as np

from . import alcove as alc
from .errors import CapabilityError, DomainError
from .lattice import fundamental_weights, in_weight_lattice, weight_coords
from .rootsys import (
    ParabolicSubsystem,
    Q,
    RootSystem,
    Vector,
    parabolic_subsystem,
    vadd,
    vscale,
    vsub,
    vzero,
)

TWO_PI = 2.0 * np.pi
DEFAULT_SING = 1e-6
DEFAULT_DIAGRAM_CAP = 200_000


@dataclass
class DeltaFactors:
    delta: complex
    delta_I: complex
    delta_IJ: complex
    delta_J: complex


@dataclass
class CharacterValue:
    value: complex
    method: str  # weyl-quotient | cell-decomposition | freudenthal-oracle
    condition_estimate: float


# ---------------------------------------------------------------------------
# Weight functions
# ---------------------------------------------------------------------------


def _thetas(rs: RootSystem, roots, x) -> np.ndarray:
    """theta_alpha = alpha(H)/2pi i for the given roots, vectorized over points."""
    num = rs.numeric()
    h = num.h_from_x(np.atleast_2d(np.asarray(x, dtype=float)))
    mat = np.array([[float(c) for c in a] for a in roots]) if roots else np.zeros((0, rs.ambient_dim))
    return h @ (mat * num.scale).T  # (npts, nroots)


def _sin_product(theta: np.ndarray) -> np.ndarray:
    """prod over roots of (e^{a/2} - e^{-a/2}) = prod 2i sin(pi theta)."""
    n = theta.shape[-1]
    mag = np.prod(2.0 * np.sin(np.pi * theta), axis=-1)
    return mag * (1j**n)


def weyl_denominator(rs: RootSystem, x) -> np.ndarray:
    return _sin_product(_thetas(rs, rs.positive_roots, x))


def delta_factors(rs: RootSystem, cell: alc.Cell, x) -> DeltaFactors:
    """The factorization delta = delta_I * delta_{I,J} * delta^J at a point."""
    sub_i = _cached_subsystem(rs, tuple(sorted(cell.I)))
    sub_j = _cached_subsystem(rs, tuple(sorted(cell.J)))
    pos_i = set(sub_i.positive_roots)
    pos_j = set(sub_j.positive_roots)
    outside = [a for a in rs.positive_roots if a not in pos_i]
    middle = [a for a in sub_i.positive_roots if a not in pos_j]
    d_i = complex(_sin_product(_thetas(rs, outside, x))[0])
    d_ij = complex(_sin_product(_thetas(rs, middle, x))[0])
    d_j = complex(_sin_product(_thetas(rs, sub_j.positive_roots, x))[0])
    d = complex(weyl_denominator(rs, x)[0])
    return DeltaFactors(delta=d, delta_I=d_i, delta_IJ=d_ij, delta_J=d_j)


@lru_cache(maxsize=None)
def _cached_subsystem_impl(label: str, nodes: tuple):
    from .rootsys import build_root_system

    return parabolic_subsystem(build_root_system(label), nodes)


def _cached_subsystem(rs: RootSystem, nodes: tuple) -> ParabolicSubsystem:
    return _cached_subsystem_impl(rs.label, tuple(sorted(nodes)))


# ---------------------------------------------------------------------------
# Dimensions
# ---------------------------------------------------------------------------


def weyl_dimension(rs: RootSystem, mu) -> Fraction:
    """Product formula dimension; exact for rational mu, antisymmetric in mu."""
    mu = tuple(Q(c) for c in mu)
    num = Q(1)
    den = Q(1)
    for a in rs.positive_roots:
        num *= rs.inner(mu, a)
        den *= rs.inner(rs.weyl_vector, a)
    return num / den


# ---------------------------------------------------------------------------
# Freudenthal multiplicities (independent oracle)
# ---------------------------------------------------------------------------

_freudenthal_lock = threading.Lock()
_freudenthal_cache: dict = {}


def _dominant_representative(inner, simple, nu):
    """Reflect nu into the dominant chamber of the given simple system."""
    nu = tuple(nu)
    moved = True
    while moved:
        moved = False
        for a in simple:
            c = 2 * inner(nu, a) / inner(a, a)
            if c < 0:
                nu = vsub(nu, vscale(c, a))
                moved = True
    return nu


def _freudenthal_table(simple, pos, inner, rho, lam, cap):
    """Multiplicities of dominant weights of the module with highest weight lam."""
    n = len(lam)
    # bounding box for lam - mu in simple-root coefficients
    gram = [[inner(a, b) for b in simple] for a in simple]
    from .rootsys import _invert_fraction_matrix

    inv = _invert_fraction_matrix([list(r) for r in gram])
    lam_norm = inner(lam, lam)

    def coeffs_of(v):
        rhs = [inner(a, v) for a in simple]
        return [sum((inv[i][j] * rhs[j] for j in range(len(rhs))), Q(0)) for i in range(len(rhs))]

    # c_i <= (lam - mu, v_i) with |mu| <= |lam|; crude bound via dual vectors
    duals = [
        tuple(sum((inv[i][j] * simple[j][k] for j in range(len(simple))), Q(0)) for k in range(n))
        for i in range(len(simple))
    ]
    bounds = []
    for v in duals:
        vn = float(inner(v, v)) ** 0.5
        bounds.append(int(2.0 * float(lam_norm) ** 0.5 * vn) + 1)

    total = 1
    for b in bounds:
        total *= b + 1
    if total > 50 * cap:
        raise CapabilityError("weight diagram bounding box too large")

    dominant = []
    for combo in iter_product(*[range(b + 1) for b in bounds]):
        mu = lam
        for c, a in zip(combo, simple):
            if c:
                mu = vsub(mu, vscale(c, a))
        if inner(mu, mu) > lam_norm:
            continue
        if all(2 * inner(mu, a) / inner(a, a) >= 0 for a in simple):
            dominant.append((sum(combo), mu))
    if len(dominant) > cap:
        raise CapabilityError("weight diagram exceeds cap")
    dominant.sort(key=lambda hm: hm[0])

    mult: dict[Vector, Fraction] = {}
    lam_rho = vadd(lam, rho)
    lr2 = inner(lam_rho, lam_rho)

    def mult_of(nu):
        rep = _dominant_representative(inner, simple, nu)
        return mult.get(rep, Q(0))

    for height, mu in dominant:
        if height == 0:
            mult[mu] = Q(1)
            continue
        mu_rho = vadd(mu, rho)
        denom = lr2 - inner(mu_rho, mu_rho)
        acc = Q(0)
        for a in pos:
            k = 1
            while True:
                nu = vadd(mu, vscale(k, a))
                if inner(nu, nu) > lam_norm:
                    break
                m = mult_of(nu)
                if m:
                    acc += m * inner(nu, a)
                k += 1
        if denom == 0:
            # mu + rho conjugate to lam + rho without being lam: not a weight
            assert acc == 0
            continue
        val = 2 * acc / denom
        assert val.denominator == 1
        if val:
            mult[mu] = val
    return mult


def weight_multiplicities(rs: RootSystem, mu, cap: int = DEFAULT_DIAGRAM_CAP):
    """Exact weight multiplicities of the irreducible module with strictly
    dominant spectral parameter mu (highest weight mu - rho)."""
    mu = tuple(Q(c) for c in mu)
    key = (rs.label, mu)
    with _freudenthal_lock:
        hit = _freudenthal_cache.get(key)
    if hit is not None:
        return hit
    lam = vsub(mu, rs.weyl_vector)
    table = _freudenthal_table(
        rs.simple_roots,
        rs.positive_roots,
        rs.inner,
        rs.weyl_vector,
        lam,
        cap,
    )
    # expand Weyl orbits
    full: dict[Vector, int] = {}
    for dom, m in table.items():
        for w in _weyl_orbit(rs.inner, rs.simple_roots, dom):
            full[w] = int(m)
    with _freudenthal_lock:
        _freudenthal_cache[key] = full
    return full


def _weyl_orbit(inner, simple, v):
    seen = {tuple(v)}
    frontier = [tuple(v)]
    while frontier:
        nxt = []
        for u in frontier:
            for a in simple:
                c = 2 * inner(u, a) / inner(a, a)
                if c == 0:
                    continue
                w = vsub(u, vscale(c, a))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def freudenthal_character_oracle(rs: RootSystem, mu, x, cap: int = DEFAULT_DIAGRAM_CAP):
    """Character via the exact weight expansion; stable at alcove walls."""
    mu = tuple(Q(c) for c in mu)
    if not in_weight_lattice(rs, mu):
        raise DomainError("mu must be a weight-lattice element")
    coords = weight_coords(rs, mu)
    if any(c < 1 for c in coords):
        raise DomainError("oracle requires strictly dominant mu")
    mults = weight_multiplicities(rs, mu, cap)
    weights = list(mults.keys())
    mcoords = np.array(
        [[float(c) for c in weight_coords(rs, w)] for w in weights]
    )
    counts = np.array([mults[w] for w in weights], dtype=float)
    X = np.atleast_2d(np.asarray(x, dtype=float))
    phases = X @ mcoords.T  # (mu, u_k) pairing: weight coords against coroot coords
    vals = np.exp(2j * np.pi * phases) @ counts
    return vals if np.asarray(x).ndim > 1 else complex(vals[0])


# ---------------------------------------------------------------------------
# Weyl orbit data for quotient evaluation
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _weyl_matrices(label: str, cap: int = 10**6):
    from .rootsys import build_root_system, weyl_group_elements

    rs = build_root_system(label)
    return tuple(weyl_group_elements(rs, cap))


_orbit_cache: dict = {}


def weyl_orbit_coords(rs: RootSystem, mu) -> tuple[np.ndarray, np.ndarray, list]:
    """(det_s, weight-coordinates of s mu, exact s mu) across the Weyl group."""
    mu = tuple(Q(c) for c in mu)
    key = (rs.label, mu)
    hit = _orbit_cache.get(key)
    if hit is not None:
        return hit
    mats = _weyl_matrices(rs.label)
    dets = np.empty(len(mats))
    rows = np.empty((len(mats), rs.rank))
    exact = []
    for i, (m, det) in enumerate(mats):
        smu = rs.apply_matrix(m, mu)
        exact.append(smu)
        dets[i] = det
        rows[i] = [float(c) for c in weight_coords(rs, smu)]
    out = (dets, rows, exact)
    if len(_orbit_cache) < 4096:
        _orbit_cache[key] = out
    return out


def character_numerator(rs: RootSystem, mu, x) -> np.ndarray:
    """sum_s det(s) e^{(s mu)(H)} over the Weyl group, vectorized over points."""
    dets, rows, _ = weyl_orbit_coords(rs, mu)
    X = np.atleast_2d(np.asarray(x, dtype=float))
    return np.exp(2j * np.pi * (X @ rows.T)) @ dets


# ---------------------------------------------------------------------------
# Parabolic characters
# ---------------------------------------------------------------------------


def _component_data(rs: RootSystem, sub: ParabolicSubsystem):
    """Per irreducible component: simple roots, positive roots, rho, Weyl elements."""
    comps = []
    for label, nodes in sub.components:
        csub = _cached_subsystem(rs, tuple(sorted(nodes)))
        comps.append(csub)
    return comps


def parabolic_character(
    rs: RootSystem,
    J,
    gamma,
    x,
    sing_tol: float = DEFAULT_SING,
    oracle_cap: int = 60_000,
) -> complex:
    """chi^J_gamma(H_J) for gamma in the span of the subsystem.

    Evaluated through the wall-anchor shift followed by the subsystem Weyl
    quotient per irreducible component, with an exact weight-sum fallback when
    the quotient is ill-conditioned near a component's walls.
    """
    sub = _subsystem_of(rs, J)
    gamma = tuple(Q(c) for c in gamma)
    resid = vsub(gamma, tuple(Q(c) for c in _exact_project(rs, sub, gamma)))
    if any(c != 0 for c in resid):
        raise DomainError("gamma outside the parabolic root span")
    num = rs.numeric()
    x = np.asarray(x, dtype=float)
    h_j, _, h0, h1 = alc.split_H(rs, sorted(sub.nodes), x)
    return _parabolic_character_at(rs, sub, gamma, h0, h1, sing_tol, oracle_cap)


def _subsystem_of(rs, J) -> ParabolicSubsystem:
    if isinstance(J, ParabolicSubsystem):
        return J
    return _cached_subsystem(rs, tuple(sorted(set(int(j) for j in J))))


def _exact_project(rs, sub, v):
    from .lattice import project_onto_VJ

    return project_onto_VJ(rs, sub, v)


def _phase_at(rs: RootSystem, weight, h) -> complex:
    """e^{weight(H)} with H given by its ambient realization h."""
    num = rs.numeric()
    w = np.array([float(c) for c in weight])
    return np.exp(2j * np.pi * float(np.dot(w * num.scale, h)))


def _parabolic_character_at(rs, sub, gamma, h0, h1, sing_tol, oracle_cap) -> complex:
    if sub.rank == 0:
        return complex(1.0)
    shift = _phase_at(rs, vadd(gamma, sub.rho), h0)
    comps = _component_data(rs, sub)
    value = complex(shift)
    for csub in comps:
        gamma_c = tuple(Q(c) for c in _exact_project(rs, csub, gamma))
        value *= _component_character(rs, csub, gamma_c, h1, sing_tol, oracle_cap)
    return value


@lru_cache(maxsize=None)
def _sub_weyl_elements(label: str, nodes: tuple):
    csub = _cached_subsystem_impl(label, nodes)
    return csub.weyl_elements()


def _component_character(rs, csub, gamma, h1, sing_tol, oracle_cap) -> complex:
    num = rs.numeric()
    theta = np.array(
        [float(np.dot(np.array([float(c) for c in a]) * num.scale, h1)) for a in csub.positive_roots]
    )
    denom = complex(np.prod(2.0 * np.sin(np.pi * theta)) * 1j ** len(theta))
    numer = complex(0.0)
    for m, det in _sub_weyl_elements(rs.label, tuple(sorted(csub.nodes))):
        sg = rs.apply_matrix(m, gamma)
        numer += det * _phase_at(rs, sg, h1)
    scale = 2.0 ** len(theta)
    if abs(denom) > sing_tol * scale and abs(numer) > 1e-9 * csub.weyl_order():
        return numer / denom
    return _component_character_stable(rs, csub, gamma, h1, oracle_cap, numer, denom)


def _component_character_stable(rs, csub, gamma, h1, cap, numer, denom) -> complex:
    """Weight-sum evaluation on the component, exact in the spectral data."""
    # reflect gamma to the dominant chamber of the component positive system
    simple = csub.simple_roots
    g = tuple(gamma)
    sign = 1
    moved = True
    while moved:
        moved = False
        for a in simple:
            c = 2 * rs.inner(g, a) / rs.norm2(a)
            if c < 0:
                g = vsub(g, vscale(c, a))
                sign = -sign
                moved = True
    coords = [2 * rs.inner(g, a) / rs.norm2(a) for a in simple]
    if any(c == 0 for c in coords):
        return complex(0.0)  # gamma on a wall: antisymmetric numerator vanishes
    try:
        table = _freudenthal_table(
            simple, csub.positive_roots, rs.inner, csub.rho, vsub(g, csub.rho), cap
        )
    except CapabilityError:
        if abs(denom) == 0.0:
            raise
        return numer / denom
    num = rs.numeric()
    acc = complex(0.0)
    for dom, m in table.items():
        for w in _weyl_orbit(rs.inner, simple, dom):
            acc += int(m) * _phase_at(rs, w, h1)
    return sign * acc


# ---------------------------------------------------------------------------
# The character engine
# ---------------------------------------------------------------------------


def character(
    rs: RootSystem,
    mu,
    x,
    N_hint: int | None = None,
    sing_tol: float = DEFAULT_SING,
) -> CharacterValue:
    """Irreducible character at an alcove point, singularities handled per cell."""
    mu = tuple(Q(c) for c in mu)
    if not in_weight_lattice(rs, mu):
        raise DomainError("mu must be a weight-lattice element")
    x = np.asarray(x, dtype=float)
    numer = complex(character_numerator(rs, mu, x)[0])
    denom = complex(weyl_denominator(rs, x)[0])
    scale = 2.0 ** rs.num_positive
    cond = rs.weyl_order() * scale / max(abs(denom), 1e-300)
    if abs(denom) >= sing_tol * scale:
        return CharacterValue(value=numer / denom, method="weyl-quotient", condition_estimate=cond)
    if N_hint is None:
        mx = max((abs(float(c)) for c in weight_coords(rs, mu)), default=1.0)
        N_hint = alc.scale_threshold(rs)
        while N_hint < 4 * mx:
            N_hint *= 2
    I, J = alc.classify(rs, x, N_hint)
    value = character_cell_formula(rs, mu, x, alc.Cell(I=I, J=J, N=N_hint), sing_tol)
    return CharacterValue(value=value, method="cell-decomposition", condition_estimate=cond)


def character_cell_formula(
    rs: RootSystem,
    mu,
    x,
    cell: alc.Cell,
    sing_tol: float = DEFAULT_SING,
) -> complex:
    """Character through the cell decomposition at (I, J)."""
    mu = tuple(Q(c) for c in mu)
    sub = _cached_subsystem(rs, tuple(sorted(cell.J)))
    num = rs.numeric()
    x = np.asarray(x, dtype=float)
    h_j, h_perp, h0, h1 = alc.split_H(rs, sorted(sub.nodes), x)
    fac = delta_factors(rs, cell, x)
    dets, rows, exact = weyl_orbit_coords(rs, mu)
    acc = complex(0.0)
    for det, smu in zip(dets, exact):
        gamma = tuple(Q(c) for c in _exact_project(rs, sub, smu))
        phase = _phase_at(rs, smu, h_perp)
        chi_j = _parabolic_character_at(rs, sub, gamma, h0, h1, sing_tol, 60_000)
        acc += det * phase * chi_j
    wj = sub.weyl_order()
    return acc / (wj * fac.delta_I * fac.delta_IJ)


# ---------------------------------------------------------------------------
# Harish-Chandra integral spot check (rank 1)
# ---------------------------------------------------------------------------


def hc_integral_check(lam: complex, mu: complex, samples: int, seed: int):
    """Monte Carlo check of the rank-1 orbital integral formula.

    The group is realized as the unit quaternions; Haar measure is the uniform
    distribution on the 3-sphere, and the adjoint action rotates the imaginary
    quaternions.  ``lam`` and ``mu`` are the coefficients of the two forms
    against a fixed unit vector of the Cartan line (imaginary values allowed).
    Returns (monte_carlo, closed_form, relative_error, standard_error_ratio).
    """
    if lam == 0 or mu == 0:
        raise DomainError("degenerate input: the closed form needs regular parameters")
    rng = alc._stream(seed, "hc-check")
    q = rng.normal(size=(samples, 4))
    q /= np.linalg.norm(q, axis=1, keepdims=True)
    a, b, c, d = q.T
    # first column of the SO(3) rotation matrix of the quaternion: image of e1
    r11 = a * a + b * b - c * c - d * d
    vals = np.exp(lam * mu * r11)
    mc = vals.mean()
    se = float(np.sqrt((np.abs(vals - mc) ** 2).mean() / samples))
    closed = np.sinh(lam * mu) / (lam * mu)
    rel = abs(mc - closed) / abs(closed)
    se_ratio = abs(mc - closed) / max(se, 1e-300)
    return complex(mc), complex(closed), float(rel), float(se_ratio)
