"""Hot numeric kernels: numba-accelerated with a pure-numpy fallback.

The backend is chosen at import time: numba when importable, unless the
environment variable ``WEYLAB_NUMBA`` is set to ``0``.  Both paths compute the
same quantities; ``benchmarks/bench_backends.py`` compares their throughput.
"""

from __future__ import annotations

import os

import numpy as np

TWO_PI = 2.0 * np.pi

_want_numba = os.environ.get("WEYLAB_NUMBA", "1") != "0"
HAVE_NUMBA = False
if _want_numba:
    try:
        from numba import njit, prange, set_num_threads, get_num_threads

        HAVE_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"


def set_threads(n: int) -> None:
    if HAVE_NUMBA and n > 0:
        try:
            set_num_threads(n)
        except ValueError:
            pass


# ---------------------------------------------------------------------------
# Lattice exponential sums  S(x) = sum_i c_i e^{2 pi i m_i . x}
# ---------------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(parallel=True, fastmath=True, cache=True)
    def _exp_sum_direct_nb(M, cre, cim, X):
        ns = X.shape[0]
        n, r = M.shape
        out_re = np.empty(ns)
        out_im = np.empty(ns)
        for j in prange(ns):
            sr = 0.0
            si = 0.0
            for i in range(n):
                ph = 0.0
                for k in range(r):
                    ph += M[i, k] * X[j, k]
                ph *= TWO_PI
                c = np.cos(ph)
                s = np.sin(ph)
                sr += cre[i] * c - cim[i] * s
                si += cre[i] * s + cim[i] * c
            out_re[j] = sr
            out_im[j] = si
        return out_re, out_im

    @njit(parallel=True, fastmath=True, cache=True)
    def _exp_sum_grid2_nb(Cre, Cim, m1min, m2min, X):
        # per sample: build the second-axis phase row once by recurrence, then
        # every grid row reduces to an independent (SIMD-friendly) dot product
        ns = X.shape[0]
        n1, n2 = Cre.shape
        out_re = np.empty(ns)
        out_im = np.empty(ns)
        for j in prange(ns):
            x1 = X[j, 0]
            x2 = X[j, 1]
            e2r = np.empty(n2)
            e2i = np.empty(n2)
            w2r = np.cos(TWO_PI * x2)
            w2i = np.sin(TWO_PI * x2)
            er = np.cos(TWO_PI * m2min * x2)
            ei = np.sin(TWO_PI * m2min * x2)
            for k in range(n2):
                e2r[k] = er
                e2i[k] = ei
                if k % 512 == 511:
                    ph = TWO_PI * (m2min + k + 1) * x2
                    er = np.cos(ph)
                    ei = np.sin(ph)
                else:
                    tr = er * w2r - ei * w2i
                    ei = er * w2i + ei * w2r
                    er = tr
            sr = 0.0
            si = 0.0
            for row in range(n1):
                ar = 0.0
                ai = 0.0
                for k in range(n2):
                    cr = Cre[row, k]
                    ci = Cim[row, k]
                    ar += cr * e2r[k] - ci * e2i[k]
                    ai += cr * e2i[k] + ci * e2r[k]
                ph1 = TWO_PI * (m1min + row) * x1
                c1 = np.cos(ph1)
                s1 = np.sin(ph1)
                sr += ar * c1 - ai * s1
                si += ar * s1 + ai * c1
            out_re[j] = sr
            out_im[j] = si
        return out_re, out_im

    @njit(parallel=True, fastmath=True, cache=True)
    def _exp_sum_grid1_nb(cre, cim, mmin, X):
        ns = X.shape[0]
        n = cre.shape[0]
        out_re = np.empty(ns)
        out_im = np.empty(ns)
        for j in prange(ns):
            x = X[j, 0]
            wr = np.cos(TWO_PI * x)
            wi = np.sin(TWO_PI * x)
            er = np.cos(TWO_PI * mmin * x)
            ei = np.sin(TWO_PI * mmin * x)
            sr = 0.0
            si = 0.0
            for k in range(n):
                sr += cre[k] * er - cim[k] * ei
                si += cre[k] * ei + cim[k] * er
                tr = er * wr - ei * wi
                ei = er * wi + ei * wr
                er = tr
            out_re[j] = sr
            out_im[j] = si
        return out_re, out_im


def _exp_sum_np(M, c, X):
    ns = X.shape[0]
    n, r = M.shape
    out = np.zeros(ns, dtype=np.complex128)
    if r == 2:
        # separable: dense coefficient grid, then one BLAS product per sample chunk
        m1min, m2min = M.min(axis=0)
        n1 = int(M[:, 0].max() - m1min) + 1
        n2 = int(M[:, 1].max() - m2min) + 1
        if n1 * n2 <= 64_000_000:
            C = np.zeros((n1, n2), dtype=np.complex128)
            np.add.at(C, (M[:, 0] - m1min, M[:, 1] - m2min), c)
            rng1 = (m1min + np.arange(n1)).astype(float)
            rng2 = (m2min + np.arange(n2)).astype(float)
            chunk = max(1, int(2e7) // max(n1, n2))
            for lo in range(0, ns, chunk):
                hi = min(lo + chunk, ns)
                E1 = np.exp(2j * np.pi * np.outer(X[lo:hi, 0], rng1))
                E2 = np.exp(2j * np.pi * np.outer(X[lo:hi, 1], rng2))
                out[lo:hi] = np.einsum("ij,ij->i", E1 @ C, E2)
            return out
    # generic path: double chunking over samples and lattice points
    schunk = 2048
    lchunk = max(1, int(2e7) // schunk)
    for lo in range(0, ns, schunk):
        hi = min(lo + schunk, ns)
        acc = np.zeros(hi - lo, dtype=np.complex128)
        for llo in range(0, n, lchunk):
            lhi = min(llo + lchunk, n)
            ph = X[lo:hi] @ M[llo:lhi].T.astype(float)
            acc += np.exp(2j * np.pi * ph) @ c[llo:lhi]
        out[lo:hi] = acc
    return out


def exp_sum(M, c, X) -> np.ndarray:
    """S(x_j) = sum_i c_i exp(2 pi i m_i . x_j) for integer frequencies m_i."""
    M = np.ascontiguousarray(M, dtype=np.int64)
    c = np.ascontiguousarray(c, dtype=np.complex128)
    X = np.ascontiguousarray(np.atleast_2d(X), dtype=np.float64)
    if M.shape[0] == 0:
        return np.zeros(X.shape[0], dtype=np.complex128)
    if not HAVE_NUMBA:
        return _exp_sum_np(M, c, X)
    r = M.shape[1]
    if r == 1:
        mmin = int(M[:, 0].min())
        n = int(M[:, 0].max()) - mmin + 1
        dense = np.zeros(n, dtype=np.complex128)
        np.add.at(dense, M[:, 0] - mmin, c)
        re, im = _exp_sum_grid1_nb(
            np.ascontiguousarray(dense.real), np.ascontiguousarray(dense.imag), mmin, X
        )
        return re + 1j * im
    if r == 2:
        m1min, m2min = (int(v) for v in M.min(axis=0))
        n1 = int(M[:, 0].max()) - m1min + 1
        n2 = int(M[:, 1].max()) - m2min + 1
        if n1 * n2 <= 64_000_000:
            C = np.zeros((n1, n2), dtype=np.complex128)
            np.add.at(C, (M[:, 0] - m1min, M[:, 1] - m2min), c)
            re, im = _exp_sum_grid2_nb(
                np.ascontiguousarray(C.real), np.ascontiguousarray(C.imag), m1min, m2min, X
            )
            return re + 1j * im
    re, im = _exp_sum_direct_nb(M, np.ascontiguousarray(c.real), np.ascontiguousarray(c.imag), X)
    return re + 1j * im


# ---------------------------------------------------------------------------
# Kloosterman / Salie tables:  K[m, n] = sum_a chi(a) e((a m + a* n)/q)
# ---------------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(parallel=True, fastmath=True, cache=True)
    def _twisted_kloosterman_nb(q, units, invs, chi):
        nu = units.shape[0]
        out_re = np.empty((q, q))
        out_im = np.empty((q, q))
        base = TWO_PI / q
        for m in prange(q):
            for n in range(q):
                sr = 0.0
                si = 0.0
                for t in range(nu):
                    ph = base * ((units[t] * m + invs[t] * n) % q)
                    sr += chi[t] * np.cos(ph)
                    si += chi[t] * np.sin(ph)
                out_re[m, n] = sr
                out_im[m, n] = si
        return out_re, out_im


def _twisted_kloosterman_np(q, units, invs, chi):
    grid = np.arange(q)
    e1 = np.exp(2j * np.pi * np.outer(units, grid) / q) * chi[:, None]
    e2 = np.exp(2j * np.pi * np.outer(invs, grid) / q)
    return e1.T @ e2


def twisted_kloosterman_table(q: int, units, invs, chi) -> np.ndarray:
    """Full (m, n) table of sums over units a of chi(a) e((a m + a* n)/q)."""
    units = np.ascontiguousarray(units, dtype=np.int64)
    invs = np.ascontiguousarray(invs, dtype=np.int64)
    chi = np.ascontiguousarray(chi, dtype=np.float64)
    if HAVE_NUMBA:
        re, im = _twisted_kloosterman_nb(q, units, invs, chi)
        return re + 1j * im
    return _twisted_kloosterman_np(q, units, invs, chi)


# ---------------------------------------------------------------------------
# Residue histograms of integer quadratic phases
# ---------------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def _quad_residue_hist_nb(A, shift, lin, q):
        r = A.shape[0]
        counts = np.zeros((q, q), dtype=np.int64)
        k = np.zeros(r, dtype=np.int64)
        total = 1
        for _ in range(r):
            total *= q
        for _ in range(total):
            # v = k A k^T + k . shift (mod q), w = k . lin (mod q)
            v = 0
            w = 0
            for i in range(r):
                acc = 0
                for j in range(r):
                    acc += A[i, j] * k[j]
                v += k[i] * acc + shift[i] * k[i]
                w += lin[i] * k[i]
            counts[v % q, w % q] += 1
            # odometer increment
            for i in range(r):
                k[i] += 1
                if k[i] < q:
                    break
                k[i] = 0
        return counts


def _quad_residue_hist_np(A, shift, lin, q):
    r = A.shape[0]
    counts = np.zeros((q, q), dtype=np.int64)
    # iterate the leading coordinate, vectorize the rest
    rest = q ** (r - 1) if r > 1 else 1
    grids = np.indices((q,) * (r - 1)).reshape(r - 1, -1) if r > 1 else np.zeros((0, 1), dtype=np.int64)
    for k0 in range(q):
        K = np.vstack([np.full(rest, k0, dtype=np.int64), grids]) if r > 1 else np.array([[k0]])
        v = np.einsum("ik,ij,jk->k", K, A, K) + shift @ K
        w = lin @ K
        np.add.at(counts, (v % q, w % q), 1)
    return counts


def quad_residue_hist(A, shift, lin, q: int) -> np.ndarray:
    """counts[v, w] over k in (Z/q)^r of v = kAk + k.shift, w = k.lin (mod q)."""
    A = np.ascontiguousarray(A, dtype=np.int64)
    shift = np.ascontiguousarray(shift, dtype=np.int64)
    lin = np.ascontiguousarray(lin, dtype=np.int64)
    if HAVE_NUMBA:
        return _quad_residue_hist_nb(A, shift, lin, q)
    return _quad_residue_hist_np(A, shift, lin, q)


# ---------------------------------------------------------------------------
# Representation counts of a positive definite integer form
# ---------------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def _form_counts_nb(A, kmax, mmax):
        r = A.shape[0]
        counts = np.zeros(mmax + 1, dtype=np.int64)
        width = 2 * kmax + 1
        k = np.full(r, -kmax, dtype=np.int64)
        total = 1
        for _ in range(r):
            total *= width
        for _ in range(total):
            v = 0
            for i in range(r):
                acc = 0
                for j in range(r):
                    acc += A[i, j] * k[j]
                v += k[i] * acc
            if 0 <= v <= mmax:
                counts[v] += 1
            for i in range(r):
                k[i] += 1
                if k[i] <= kmax:
                    break
                k[i] = -kmax
        return counts


def _form_counts_np(A, kmax, mmax):
    r = A.shape[0]
    width = 2 * kmax + 1
    counts = np.zeros(mmax + 1, dtype=np.int64)
    rest = width ** (r - 1) if r > 1 else 1
    grids = (
        np.indices((width,) * (r - 1)).reshape(r - 1, -1) - kmax
        if r > 1
        else np.zeros((0, 1), dtype=np.int64)
    )
    for k0 in range(-kmax, kmax + 1):
        K = np.vstack([np.full(rest, k0, dtype=np.int64), grids]) if r > 1 else np.array([[k0]])
        v = np.einsum("ik,ij,jk->k", K, A, K)
        sel = (v >= 0) & (v <= mmax)
        np.add.at(counts, v[sel], 1)
    return counts


def form_counts(A, kmax: int, mmax: int) -> np.ndarray:
    """counts[m] = #{k in Z^r, |k_i| <= kmax : k A k^T = m} for 0 <= m <= mmax."""
    A = np.ascontiguousarray(A, dtype=np.int64)
    if HAVE_NUMBA:
        return _form_counts_nb(A, int(kmax), int(mmax))
    return _form_counts_np(A, int(kmax), int(mmax))
