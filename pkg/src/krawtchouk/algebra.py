"""Structure statistics of matrix algebras by exact linear algebra.

For a set of integer (or rational) generator matrices this module computes
the degree d, the dimension delta of the generated unital algebra, the
dimension zeta of its centralizer, and the dimension z of its center, all
by exact elimination over the rationals (performed fraction-free on
integers). The three operator families over the Boolean lattice are wired
up here together with their closed-form predictions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .combinatorics import binomial, catalan
from .matrices import build_matrix
from .report import IdentityReport
from .zeon import op_T, op_Tstar, op_U

DEFAULT_MAX_N = 5
LARGE_MAX_N = 6


class BudgetError(ValueError):
    """Requested n exceeds the configured exact-computation budget."""


class Family(Enum):
    U = "U"
    T_TSTAR = "T"
    TTSTAR_TSTART = "TT"


@dataclass(frozen=True)
class AlgebraStats:
    d: int
    delta: int
    zeta: int
    z: int


@dataclass(frozen=True)
class ComponentSpec:
    """Multiset of (multiplicity, degree) pairs of a matrix-algebra decomposition."""

    components: tuple[tuple[int, int], ...]

    @property
    def degree_sum(self) -> int:
        return sum(m * deg for m, deg in self.components)

    @property
    def dimension(self) -> int:
        return sum(deg * deg for _, deg in self.components)

    @property
    def centralizer_dim(self) -> int:
        return sum(m * m for m, _ in self.components)

    @property
    def count(self) -> int:
        return len(self.components)


# ---------------------------------------------------------------------------
# sparse exact linear algebra on rows represented as {column: value} dicts
# ---------------------------------------------------------------------------

def _as_rows(mat) -> tuple[int, dict[int, dict[int, Fraction | int]]]:
    """Normalize a generator (ZeonMatrix or nested sequence) to (size, rows)."""
    if hasattr(mat, "rows") and hasattr(mat, "size"):
        return mat.size, {i: dict(r) for i, r in mat.rows.items() if r}
    d = len(mat)
    rows: dict[int, dict[int, Fraction | int]] = {}
    for i, row in enumerate(mat):
        if len(row) != d:
            raise ValueError("generator matrices must be square")
        vals = {j: Fraction(v) for j, v in enumerate(row) if v != 0}
        if vals:
            rows[i] = vals
    return d, rows


def _mat_mul(d: int, A: dict, B: dict) -> dict:
    out: dict[int, dict[int, int]] = {}
    for i, arow in A.items():
        acc: dict[int, int] = {}
        for k, av in arow.items():
            brow = B.get(k)
            if not brow:
                continue
            for j, bv in brow.items():
                acc[j] = acc.get(j, 0) + av * bv
        cleaned = {j: v for j, v in acc.items() if v != 0}
        if cleaned:
            out[i] = cleaned
    return out


def _mat_sub(A: dict, B: dict) -> dict:
    out = {i: dict(r) for i, r in A.items()}
    for i, brow in B.items():
        row = out.setdefault(i, {})
        for j, v in brow.items():
            w = row.get(j, 0) - v
            if w == 0:
                row.pop(j, None)
            else:
                row[j] = w
        if not row:
            out.pop(i, None)
    return out


def _identity_rows(d: int) -> dict:
    return {i: {i: 1} for i in range(d)}


def _vectorize(d: int, rows: dict) -> dict[int, int]:
    """Row-major vectorization, denominators cleared to give an integer vector."""
    vec: dict[int, Fraction | int] = {}
    for i, row in rows.items():
        for j, v in row.items():
            vec[i * d + j] = v
    denom = 1
    for v in vec.values():
        if isinstance(v, Fraction) and v.denominator != 1:
            denom = denom * v.denominator // math.gcd(denom, v.denominator)
    if denom != 1:
        return {c: int(v * denom) for c, v in vec.items()}
    return {c: int(v) for c, v in vec.items()}


def _normalize(vec: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in vec.values():
        g = math.gcd(g, v)
        if g == 1:
            break
    if g > 1:
        vec = {c: v // g for c, v in vec.items()}
    lead = min(vec)
    if vec[lead] < 0:
        vec = {c: -v for c, v in vec.items()}
    return vec


class ExactEchelon:
    """Incremental integer row-echelon basis for exact rank computation."""

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def insert(self, vec: dict[int, int]) -> bool:
        """Reduce vec against the pivots; True iff it enlarges the span."""
        vec = {c: v for c, v in vec.items() if v != 0}
        while vec:
            lead = min(vec)
            piv = self.pivots.get(lead)
            if piv is None:
                self.pivots[lead] = _normalize(vec)
                return True
            a, b = piv[lead], vec[lead]
            g = math.gcd(a, b)
            ca, cb = a // g, b // g
            new = {c: ca * v for c, v in vec.items()}
            for c, v in piv.items():
                w = new.get(c, 0) - cb * v
                if w == 0:
                    new.pop(c, None)
                else:
                    new[c] = w
            vec = _normalize(new) if new else new
        return False


def _eliminate_singletons(rows: list[dict[int, int]]) -> tuple[int, list[dict[int, int]]]:
    """Repeatedly apply single-variable rows (variable forced to 0).

    Returns (number of variables eliminated, remaining rows). Equivalent to
    ordinary elimination steps, so the eliminated count adds to the rank.
    """
    zero_vars: set[int] = set()
    changed = True
    while changed:
        changed = False
        remaining: list[dict[int, int]] = []
        for row in rows:
            if zero_vars:
                row = {c: v for c, v in row.items() if c not in zero_vars}
            if len(row) == 1:
                zero_vars.add(next(iter(row)))
                changed = True
            elif row:
                remaining.append(row)
        rows = remaining
    return len(zero_vars), rows


# ---------------------------------------------------------------------------
# the four structure statistics
# ---------------------------------------------------------------------------

def _prepare(generators) -> tuple[int, list[dict]]:
    if not generators:
        raise ValueError("generator list must be nonempty")
    sizes_rows = [_as_rows(g) for g in generators]
    d = sizes_rows[0][0]
    for size, _ in sizes_rows:
        if size != d:
            raise ValueError(f"size mismatch among generators: {size} != {d}")
    return d, [rows for _, rows in sizes_rows]


def span_closure_basis(generators, unital: bool = True) -> tuple[int, list[dict]]:
    """Basis (as sparse rows-dicts) of the algebra generated by the inputs.

    Starts from the identity (when unital) and the generators, repeatedly
    right-multiplies basis elements by generators, and keeps the products
    that enlarge the span. Right multiplication suffices: the seed contains
    the generators, so every word is reached, and the resulting span is
    closed under products of arbitrary elements by linearity.
    """
    d, gens = _prepare(generators)
    return d, _span_closure(d, gens, unital)


def _span_closure(d: int, gens: list[dict], unital: bool = True) -> list[dict]:
    ech = ExactEchelon()
    basis: list[dict] = []
    seed = ([_identity_rows(d)] if unital else []) + gens
    frontier: list[dict] = []
    for m in seed:
        if ech.insert(_vectorize(d, m)):
            basis.append(m)
            frontier.append(m)
    while frontier:
        fresh: list[dict] = []
        for m in frontier:
            for g in gens:
                prod = _mat_mul(d, m, g)
                if ech.insert(_vectorize(d, prod)):
                    basis.append(prod)
                    fresh.append(prod)
        frontier = fresh
    return basis


def span_closure_dimension(generators, unital: bool = True) -> int:
    """Dimension of the unital algebra generated by the given matrices."""
    return len(span_closure_basis(generators, unital)[1])


def _commutator_rows(d: int, A: dict) -> list[dict[int, int]]:
    """Constraint rows of X A - A X = 0 in the d^2 unknowns X[k][l] (row-major)."""
    cols: dict[int, dict[int, int]] = {}
    for i, row in A.items():
        for j, v in row.items():
            cols.setdefault(j, {})[i] = v
    out: list[dict[int, int]] = []
    for i in range(d):
        arow = A.get(i, {})
        for j in range(d):
            acol = cols.get(j, {})
            coeffs: dict[int, int] = {}
            for l, v in acol.items():  # (X A)[i][j] term: X[i][l] * A[l][j]
                coeffs[i * d + l] = coeffs.get(i * d + l, 0) + v
            for k, v in arow.items():  # (A X)[i][j] term: A[i][k] * X[k][j]
                coeffs[k * d + j] = coeffs.get(k * d + j, 0) - v
            coeffs = {c: v for c, v in coeffs.items() if v != 0}
            if coeffs:
                out.append(coeffs)
    return out


def _augment_constraints(d: int, gens: list[dict]) -> list[dict]:
    """Add pairwise commutators and differences of the generators.

    Anything commuting with two generators commutes with their difference
    and their commutator, so the joint nullspace is unchanged; the extra
    matrices are often much sparser (diagonal, here) and make the
    elimination cheap.
    """
    aug = list(gens)
    for a, b in combinations(gens, 2):
        comm = _mat_sub(_mat_mul(d, a, b), _mat_mul(d, b, a))
        if comm:
            aug.append(comm)
        diff = _mat_sub(a, b)
        if diff:
            aug.append(diff)
    return aug


def centralizer_dimension(generators) -> int:
    """Dimension of the space of matrices commuting with every generator."""
    d, gens = _prepare(generators)
    rows: list[dict[int, int]] = []
    for g in _augment_constraints(d, gens):
        rows.extend(_commutator_rows(d, g))
    # integer-scale any rational rows
    scaled = []
    for row in rows:
        denom = 1
        for v in row.values():
            if isinstance(v, Fraction) and v.denominator != 1:
                denom = denom * v.denominator // math.gcd(denom, v.denominator)
        if denom != 1:
            row = {c: int(v * denom) for c, v in row.items()}
        scaled.append(row)
    eliminated, remaining = _eliminate_singletons(scaled)
    remaining.sort(key=len)
    ech = ExactEchelon()
    for row in remaining:
        ech.insert(row)
    rank = eliminated + ech.rank
    return d * d - rank


def center_dimension(generators) -> int:
    """Dimension of the center: algebra elements commuting with all generators."""
    d, gens = _prepare(generators)
    basis = _span_closure(d, gens, unital=True)
    ech = ExactEchelon()
    rank = 0
    for b in basis:
        constraint: dict[int, int] = {}
        for idx, g in enumerate(gens):
            comm = _mat_sub(_mat_mul(d, b, g), _mat_mul(d, g, b))
            for c, v in _vectorize(d, comm).items():
                constraint[idx * d * d + c] = v
        if ech.insert(constraint):
            rank += 1
    return len(basis) - rank


# ---------------------------------------------------------------------------
# closed-form predictions and Krawtchouk-based derivation cross-checks
# ---------------------------------------------------------------------------

def predicted_stats(family: Family, n: int) -> tuple[AlgebraStats, ComponentSpec]:
    """Closed-form (d, delta, zeta, z) and component multiset for each family.

    For TTSTAR_TSTART the recorded z is the stated value 1 + floor(n/2),
    which disagrees with the component count implied by the same source's
    own component description; analyze_family reports both.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    d = 1 << n
    if family is Family.U:
        stats = AlgebraStats(d=d, delta=n + 1, zeta=binomial(2 * n, n), z=n + 1)
        comps = tuple((binomial(n, i), 1) for i in range(n + 1))
        return stats, ComponentSpec(comps)
    if family is Family.T_TSTAR:
        comps = tuple(
            (binomial(n, a) - binomial(n, a - 1), n + 1 - 2 * a)
            for a in range(n // 2 + 1)
        )
        stats = AlgebraStats(
            d=d, delta=binomial(n + 3, 3), zeta=catalan(n), z=1 + n // 2
        )
        return stats, ComponentSpec(comps)
    if family is Family.TTSTAR_TSTART:
        if n % 2 == 0:
            delta = (n + 2) ** 2 // 4
            zeta = binomial(n, n // 2) ** 2
        else:
            delta = (n + 1) * (n + 3) // 4
            zeta = 2 * binomial(n, n // 2) * binomial(n - 1, n // 2)
        comps = []
        for a in range(n // 2 + 1):
            m_a = binomial(n, a) - binomial(n, a - 1)
            comps.extend([(m_a, 1)] * (n + 1 - 2 * a))
        stats = AlgebraStats(d=d, delta=delta, zeta=zeta, z=1 + n // 2)
        return stats, ComponentSpec(tuple(comps))
    raise ValueError(f"unknown family {family!r}")


def component_consistency(comps: ComponentSpec, stats: AlgebraStats) -> IdentityReport:
    """Check the four aggregation identities tying components to statistics."""
    rep = IdentityReport(suite="component-consistency")
    rep.record(("degree",), comps.degree_sum, stats.d)
    rep.record(("dimension",), comps.dimension, stats.delta)
    rep.record(("centralizer",), comps.centralizer_dim, stats.zeta)
    rep.record(("count-vs-z",), comps.count, stats.z)
    return rep


def degree_via_krawtchouk(n: int) -> tuple[Fraction, Fraction]:
    """Degree of the T/T* family via a Krawtchouk half-range product sum."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    N = n + 1
    M = build_matrix(N, Fraction(1))
    lhs = sum(
        (M.entry(1, a) * M.entry(a, 1) for a in range(n // 2 + 1)), Fraction(0)
    )
    return lhs, Fraction(2) ** n


def delta_via_row_squares(n: int) -> tuple[Fraction, Fraction]:
    """Algebra dimension of the T/T* family as a sum of squared odd degrees."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lhs = Fraction(sum((n + 1 - 2 * a) ** 2 for a in range(n // 2 + 1)))
    return lhs, Fraction(binomial(n + 3, 3))


def zeta_via_theorem(n: int) -> tuple[Fraction, Fraction]:
    """Centralizer dimension of the TT*/T*T family via the sum-of-squares identity."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    N = n + 1
    m = N // 2
    M = build_matrix(N, Fraction(1))
    lhs = sum(((N - 2 * a) * M.entry(a, 1) ** 2 for a in range(m + 1)), Fraction(0))
    if n % 2 == 0:
        rhs = Fraction(binomial(n, n // 2) ** 2)
    else:
        rhs = Fraction(2 * binomial(n, n // 2) * binomial(n - 1, n // 2))
    return lhs, rhs


# ---------------------------------------------------------------------------
# family analysis
# ---------------------------------------------------------------------------

def family_generators(family: Family, n: int):
    if family is Family.U:
        return [op_U(n)]
    T, Tstar = op_T(n), op_Tstar(n)
    if family is Family.T_TSTAR:
        return [T, Tstar]
    if family is Family.TTSTAR_TSTART:
        return [T @ Tstar, Tstar @ T]
    raise ValueError(f"unknown family {family!r}")


@dataclass
class AlgebraComparison:
    family: Family
    n: int
    computed: AlgebraStats
    predicted: AlgebraStats
    components: ComponentSpec
    matches: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """True iff every tracked statistic matches.

        For the TTSTAR_TSTART family the documented z discrepancy is
        excluded; there the commutativity cross-check (z = delta) is
        tracked instead.
        """
        return all(self.matches.values())

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "family": self.family.value,
            "n": self.n,
            "computed": vars(self.computed).copy(),
            "predicted": vars(self.predicted).copy(),
            "components": [list(c) for c in self.components.components],
            "component_count": self.components.count,
            "matches": dict(self.matches),
            "notes": list(self.notes),
        }


def analyze_family(family: Family, n: int, allow_large: bool = False) -> AlgebraComparison:
    """Compute the four statistics for one operator family and compare.

    The exact path is guaranteed for n <= 5; n = 6 requires allow_large
    (runtime grows as 4^n unknowns in the commutant system).
    """
    limit = LARGE_MAX_N if allow_large else DEFAULT_MAX_N
    if n > limit:
        raise BudgetError(
            f"n={n} exceeds the exact-computation budget ({limit}); "
            + ("" if allow_large else "pass allow_large to permit n=6")
        )
    gens = family_generators(family, n)
    d = 1 << n
    delta = span_closure_dimension(gens)
    zeta = centralizer_dimension(gens)
    z = center_dimension(gens)
    computed = AlgebraStats(d=d, delta=delta, zeta=zeta, z=z)
    predicted, comps = predicted_stats(family, n)

    comparison = AlgebraComparison(
        family=family, n=n, computed=computed, predicted=predicted, components=comps
    )
    m = comparison.matches
    m["d"] = computed.d == predicted.d
    m["delta"] = computed.delta == predicted.delta
    m["zeta"] = computed.zeta == predicted.zeta
    if family is Family.TTSTAR_TSTART:
        # commutative family: the center must be the whole algebra
        m["z_equals_delta"] = computed.z == computed.delta
        if computed.z != predicted.z:
            comparison.notes.append(
                f"NOTE: stated z differs: computed z={computed.z}, "
                f"stated z={predicted.z}, component count={comps.count}"
            )
    else:
        m["z"] = computed.z == predicted.z
    if n > DEFAULT_MAX_N:
        comparison.notes.append(f"n={n} run above the default budget; expect long runtime")
    return comparison
