"""Exhaustive exact verification of the combinatorial root-system lemmas.

The product of the positive-root linear forms expands to a homogeneous sparse
polynomial with nonnegative integer coefficients; the existence of a strictly
increasing exponent tuple (p_1 = 1 < ... < p_r, sum = #positive roots) whose
sorted monomials all occur is certified either by full expansion (small rank)
or by the support-counting argument (any rank).  The subsystem ratio
inequality |J| / #pos(J) > r / #pos is checked in exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .errors import CapabilityError, DomainError
from .rootsys import (
    Q,
    RootSystem,
    build_root_system,
    parabolic_subsystem,
    positive_roots_in_node_span,
)

EXPANSION_MONOMIAL_CAP = 10**7


@dataclass(frozen=True)
class ExponentTuple:
    p: tuple[int, ...]

    def __post_init__(self):
        if not self.p:
            raise DomainError("empty tuple")
        if self.p[0] != 1:
            raise DomainError("p_1 must equal 1")
        if any(a >= b for a, b in zip(self.p, self.p[1:])):
            raise DomainError("tuple must be strictly increasing")


class SparsePolynomial:
    """Multivariate polynomial as a dict exponent-tuple -> int coefficient."""

    def __init__(self, terms: dict[tuple[int, ...], int] | None = None, nvars: int = 0):
        self.terms = dict(terms or {})
        self.nvars = nvars

    @classmethod
    def one(cls, nvars: int) -> "SparsePolynomial":
        return cls({(0,) * nvars: 1}, nvars)

    def mul_linear(self, coeffs, cap: int = EXPANSION_MONOMIAL_CAP) -> "SparsePolynomial":
        """Multiply by sum_j coeffs[j] * t_j (integer coefficients)."""
        out: dict[tuple[int, ...], int] = {}
        for mono, c in self.terms.items():
            for j, a in enumerate(coeffs):
                if a == 0:
                    continue
                key = mono[:j] + (mono[j] + 1,) + mono[j + 1 :]
                out[key] = out.get(key, 0) + c * a
        if len(out) > cap:
            raise CapabilityError("expansion exceeds monomial cap")
        return SparsePolynomial(out, self.nvars)

    def coefficient(self, mono) -> int:
        return self.terms.get(tuple(mono), 0)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)


def expand_root_product(rs: RootSystem, excluded_nodes=()) -> SparsePolynomial:
    """Exact expansion of prod over positive roots outside the parabolic
    subsystem of alpha(H)/2pi i, in the variables t_1..t_r."""
    coeffs = rs.positive_coeff_matrix()
    if excluded_nodes:
        sub = parabolic_subsystem(rs, set(excluded_nodes))
        excluded = {a for a in sub.positive_roots}
        rows = [
            coeffs[i]
            for i, a in enumerate(rs.positive_roots)
            if a not in excluded
        ]
    else:
        rows = list(coeffs)
    poly = SparsePolynomial.one(rs.rank)
    for row in rows:
        poly = poly.mul_linear([int(c) for c in row])
    return poly


# ---------------------------------------------------------------------------
# Support counting
# ---------------------------------------------------------------------------


def _support_sets(rs: RootSystem):
    """For every subset S of variables, n(S) = #positive roots whose linear
    form involves a variable of S with positive coefficient."""
    coeffs = rs.positive_coeff_matrix()
    supports = [frozenset(j for j in range(rs.rank) if row[j] > 0) for row in coeffs]
    table = {}
    for size in range(rs.rank + 1):
        for S in combinations(range(rs.rank), size):
            ss = frozenset(S)
            table[ss] = sum(1 for sup in supports if sup & ss)
    return table


def min_support_counts(rs: RootSystem) -> list[int]:
    """m_s = min over |S| = s of n(S), for s = 0..r."""
    table = _support_sets(rs)
    out = []
    for size in range(rs.rank + 1):
        vals = [v for S, v in table.items() if len(S) == size]
        out.append(min(vals))
    return out


def _tuple_candidates(rank: int, total: int):
    """Strictly increasing tuples p_1 = 1 < ... < p_rank with sum = total,
    in lexicographic order."""

    def rec(prefix, remaining, minimum):
        k = rank - len(prefix)
        if k == 0:
            if remaining == 0:
                yield tuple(prefix)
            return
        # feasibility: remaining must fit k strictly increasing values > prefix[-1]
        lo = sum(minimum + i for i in range(k))
        if remaining < lo:
            return
        for v in range(minimum, remaining + 1):
            yield from rec(prefix + [v], remaining - v, v + 1)

    if rank == 1:
        if total == 1:
            yield (1,)
        return
    yield from rec([1], total - 1, 2)


def find_exponent_tuple(rs: RootSystem, mode: str = "auto") -> tuple[ExponentTuple, str]:
    """Smallest valid exponent tuple together with the certification mode.

    ``expansion`` checks every permutation's monomial in the full expansion;
    ``counting`` checks the suffix-sum inequalities against the minimal
    support counts (valid for any rank).  ``auto`` expands for rank <= 4.
    """
    if not rs.is_irreducible():
        raise DomainError("exponent tuples are defined for irreducible systems")
    npos = rs.num_positive
    r = rs.rank
    if mode == "auto":
        mode = "expansion" if r <= 4 else "counting"

    if mode == "expansion":
        poly = expand_root_product(rs)
        for cand in _tuple_candidates(r, npos):
            ok = True
            for perm in permutations(range(r)):
                mono = [0] * r
                for j, var in enumerate(perm):
                    mono[var] = cand[j]
                if poly.coefficient(mono) < 1:
                    ok = False
                    break
            if ok:
                return ExponentTuple(cand), "expansion"
        raise AssertionError(f"no exponent tuple found for {rs.label} (expansion)")

    if mode == "counting":
        m = min_support_counts(rs)
        for cand in _tuple_candidates(r, npos):
            suffix = 0
            ok = True
            for j in range(r, 0, -1):
                suffix += cand[j - 1]
                # suffix sum p_j + ... + p_r must be <= min n over sets of size r-j+1
                if suffix > m[r - j + 1]:
                    ok = False
                    break
            if ok:
                return ExponentTuple(cand), "counting"
        raise AssertionError(f"no exponent tuple found for {rs.label} (counting)")

    raise DomainError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# Subsystem ratio inequality
# ---------------------------------------------------------------------------


@dataclass
class SubsystemReport:
    label: str
    checked: int
    min_slack: Fraction
    worst_J: tuple[int, ...]
    passed: bool


def verify_subsystem_inequality(rs: RootSystem) -> SubsystemReport:
    """|J| / #pos(J) > rank / #pos for every nonempty proper extended subset J."""
    r = rs.rank
    base = Q(r, rs.num_positive)
    min_slack = None
    worst = None
    checked = 0
    passed = True
    nodes = list(range(r + 1))
    for size in range(1, r):
        for J in combinations(nodes, size):
            npos_j = len(positive_roots_in_node_span(rs, J))
            assert npos_j >= size
            ratio = Q(len(J), npos_j)
            slack = ratio - base
            checked += 1
            if min_slack is None or slack < min_slack:
                min_slack = slack
                worst = J
            if slack <= 0:
                passed = False
    # size r subsets (|J| <= r - 1 in the statement) are excluded above
    return SubsystemReport(
        label=rs.label,
        checked=checked,
        min_slack=min_slack if min_slack is not None else Q(0),
        worst_J=worst if worst is not None else (),
        passed=passed,
    )


def verify_qj_condition(rs: RootSystem, J, permutation) -> dict:
    """Suffix-count inequalities for a permutation placing J in the low slots.

    ``J`` is a subset of the simple indices {1..r}; ``permutation`` lists the
    simple indices ordered by increasing variable size, its first |J| entries
    a permutation of J.  Returns the q_j, the suffix sums, slacks, and the
    equality-case flag.
    """
    r = rs.rank
    J = sorted(set(int(j) for j in J))
    perm = [int(j) for j in permutation]
    if sorted(perm) != list(range(1, r + 1)):
        raise DomainError("permutation must order the simple indices 1..r")
    if sorted(perm[: len(J)]) != J:
        raise DomainError("permutation must place J first")
    coeffs = rs.positive_coeff_matrix()
    supports = [frozenset(j + 1 for j in range(r) if row[j] > 0) for row in coeffs]
    # n_j = #roots whose support meets {perm[j-1], ..., perm[r-1]} (1-based j)
    n = {}
    for j in range(1, r + 1):
        top = set(perm[j - 1 :])
        n[j] = sum(1 for sup in supports if sup & top)
    q = {}
    for j in range(len(J) + 1, r + 1):
        q[j] = n[j] - (n[j + 1] if j + 1 <= r else 0)
    rows = []
    ok = True
    for j in range(r - 1, len(J) - 1, -1):
        suffix = n[j + 1]  # q_r + ... + q_{j+1}
        bound = Q(rs.num_positive * (r - j), r)
        slack = Q(suffix) - bound
        equality_allowed = j == 0 and len(J) == 0
        if slack < 0 or (slack == 0 and not equality_allowed):
            ok = False
        rows.append({"j": j, "suffix": suffix, "bound": bound, "slack": slack})
    return {"q": q, "rows": rows, "passed": ok}


# ---------------------------------------------------------------------------
# Batch drivers
# ---------------------------------------------------------------------------


def irreducible_labels(max_rank: int) -> list[str]:
    out = []
    for r in range(1, max_rank + 1):
        out.append(f"A{r}")
    for r in range(2, max_rank + 1):
        out.append(f"B{r}")
    for r in range(3, max_rank + 1):
        out.append(f"C{r}")
    for r in range(4, max_rank + 1):
        out.append(f"D{r}")
    for r in (6, 7, 8):
        if r <= max_rank:
            out.append(f"E{r}")
    if max_rank >= 4:
        out.append("F4")
    if max_rank >= 2:
        out.append("G2")
    return out


def subsystem_sweep(max_rank: int = 8) -> list[SubsystemReport]:
    return [verify_subsystem_inequality(build_root_system(lbl)) for lbl in irreducible_labels(max_rank)]


def key_lemma_sweep(max_rank: int = 8) -> list[dict]:
    out = []
    for lbl in irreducible_labels(max_rank):
        rs = build_root_system(lbl)
        tup, mode = find_exponent_tuple(rs)
        out.append(
            {
                "label": lbl,
                "tuple": list(tup.p),
                "mode": mode,
                "sum": sum(tup.p),
                "num_positive": rs.num_positive,
            }
        )
    return out
