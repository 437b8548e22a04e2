"""Identify Euler triples behind a polynomial CF coefficient pair (a, b).

Given a and b, the task is to find every factorization b = -h1*h2 together
with a polynomial f such that

    f(x) a(x) = f(x-1) h1(x) + f(x+1) h2(x+1).

The search factors -b over the rationals, enumerates how the factor base can
be split between h1 and h2, pins the two leading coefficients from the
leading coefficients of a and b, bounds deg f by a three-term degree
analysis, and then solves an exact linear system for f.  Everything is exact;
every returned triple is re-verified against (a, b) before it is reported.

Two independent routes produce the candidate degrees of f: the generic
recurrence analysis (:func:`three_term_degree_analysis`) and the per-case
closed formulas (:func:`candidate_degrees`).  They must agree; the tests
cross-check them against each other.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    Poly,
    assemble_factored,
    factor_integer_rooted,
    rational_sqrt,
)
from .errors import InvalidInput
from .euler import EulerTriple, build_euler_cf

REASON_PATTERN = "degree pattern inadmissible"
REASON_IRRATIONAL = "irrational leading split"
REASON_NO_DEGREE = "no admissible f degree"
REASON_NO_F = "no f solution at admissible degrees"


@dataclass(frozen=True)
class BetaTriple:
    """Coefficients of the three-term recurrence
    f(x+1) beta1(x) + f(x) beta0(x) + f(x-1) betam1(x) = 0."""

    betam1: Poly
    beta0: Poly
    beta1: Poly

    @classmethod
    def from_cf(cls, a: Poly, h1: Poly, h2: Poly) -> "BetaTriple":
        """Encode f(x)a(x) = f(x-1)h1(x) + f(x+1)h2(x+1) in recurrence form."""
        return cls(betam1=h1, beta0=-a, beta1=h2.shift(1))


def three_term_degree_analysis(bt: BetaTriple) -> set[int]:
    """Possible degrees of a polynomial solution f of the recurrence.

    Writing d for the max degree of the three coefficients and b_j^(k) for
    the x^k coefficient of beta_j (zero when out of range):

    * a solution forces b_-1^(d) + b_0^(d) + b_1^(d) = 0;
    * if b_-1^(d) != b_1^(d), the degree is pinned to a single ratio;
    * otherwise the degree satisfies an explicit quadratic.

    Only nonnegative integer degrees are kept.
    """
    polys = (bt.betam1, bt.beta0, bt.beta1)
    degs = [p.degree for p in polys if not p.is_zero]
    if not degs:
        raise ValueError("all three recurrence coefficients are zero")
    d = max(degs)
    cm1, c0, c1 = (p.coeff(d) for p in polys)
    if cm1 + c0 + c1 != 0:
        return set()
    out: set[int] = set()
    if cm1 != c1:
        s1 = sum(p.coeff(d - 1) for p in polys)
        df = s1 / (cm1 - c1)
        if df.denominator == 1 and df >= 0:
            out.add(int(df))
        return out
    # cm1 == c1 (both nonzero: a zero would force all three to vanish at d)
    s2 = cm1 + c1
    qa = s2 / 2
    qb = (polys[2].coeff(d - 1) - polys[0].coeff(d - 1)) - s2 / 2
    qc = sum(p.coeff(d - 2) for p in polys)
    disc = qb * qb - 4 * qa * qc
    sq = rational_sqrt(disc)
    if sq is None:
        return set()
    for root in {(-qb + sq) / (2 * qa), (-qb - sq) / (2 * qa)}:
        if root.denominator == 1 and root >= 0:
            out.add(int(root))
    return out


def candidate_degrees(a: Poly, h1: Poly, h2: Poly) -> set[int]:
    """Candidate deg f values from the per-case closed formulas.

    Dispatches on the degree pattern of (a, h1, h2); coefficients are read
    at the fixed positions d, d-1, d-2 where d = max of the three degrees,
    with missing positions as zero.  Patterns with no matching case give the
    empty set, as do non-integer or negative formula values.
    """
    if a.is_zero or h1.is_zero or h2.is_zero:
        raise ValueError("a, h1, h2 must be nonzero")
    da, d1, d2 = a.degree, h1.degree, h2.degree
    d = max(da, d1, d2)
    A = a.coeff(d)
    u, v = h1.coeff(d), h2.coeff(d)
    if A != u + v:
        return set()
    a1, g1, g2 = a.coeff(d - 1), h1.coeff(d - 1), h2.coeff(d - 1)

    def keep(x: Fraction) -> set[int]:
        return {int(x)} if x.denominator == 1 and x >= 0 else set()

    if d1 == d and da == d and d2 < d:
        # h1 carries the lead of a
        return keep((a1 - g1 - g2) / (-A))
    if d2 == d and da == d and d1 < d:
        # h2 carries the lead of a; the shift in h2(x+1) adds d*A
        return keep((a1 - g1 - g2 - d * A) / A)
    if d1 == d and d2 == d and da < d:
        # opposite leads u = -v != 0
        return keep((a1 - g1 - g2 - d * v) / (v - u))
    if d1 == d and d2 == d and da == d:
        if u != v:
            return keep((a1 - g1 - g2 - d * v) / (v - u))
        # equal leads: the degree obeys a quadratic,
        # const + df*(g1 - g2 - d*v) - C(df,2)*A = 0 with A = 2u
        a2, f1, f2 = a.coeff(d - 2), h1.coeff(d - 2), h2.coeff(d - 2)
        shift2 = f2 + (d - 1) * g2 + Fraction(d * (d - 1), 2) * v
        qa = -u
        qb = (g1 - g2 - d * v) + u
        qc = a2 - f1 - shift2
        out: set[int] = set()
        disc = qb * qb - 4 * qa * qc
        sq = rational_sqrt(disc)
        if sq is None:
            return out
        for root in {(-qb + sq) / (2 * qa), (-qb - sq) / (2 * qa)}:
            if root.denominator == 1 and root >= 0:
                out.add(int(root))
        return out
    return set()


def leading_coeff_split(a: Poly, b: Poly, degree_pattern: tuple[int, int]):
    """Forced leading coefficients (c1, c2) for a split of b with the given
    (deg h1, deg h2) target.

    Returns (pairs, reason): `pairs` is a list of admissible (c1, c2), and
    `reason` explains an empty list ("degree pattern inadmissible" or
    "irrational leading split").
    """
    if a.is_zero or b.is_zero:
        raise ValueError("a and b must be nonzero")
    d1, d2 = degree_pattern
    da = a.degree
    A, B = a.lead, b.lead
    if d1 > d2:
        if da != d1:
            return [], REASON_PATTERN
        return [(A, -B / A)], None
    if d2 > d1:
        if da != d2:
            return [], REASON_PATTERN
        return [(-B / A, A)], None
    # equal target degrees
    if da > d1:
        return [], REASON_PATTERN
    if da < d1:
        # c1 = -c2, c1^2 = B
        s = rational_sqrt(B)
        if s is None or s == 0:
            return [], REASON_IRRATIONAL
        return [(s, -s), (-s, s)], None
    # da == d1 == d2: c1, c2 are the roots of t^2 - A t - B
    disc = A * A + 4 * B
    sq = rational_sqrt(disc)
    if sq is None:
        return [], REASON_IRRATIONAL
    r1, r2 = (A + sq) / 2, (A - sq) / 2
    if r1 == 0 or r2 == 0:
        return [], REASON_PATTERN
    if r1 == r2:
        return [(r1, r2)], None
    return [(r1, r2), (r2, r1)], None


def solve_f(a: Poly, h1: Poly, h2: Poly, d_f: int) -> Poly | None:
    """A nonzero polynomial f with deg f <= d_f solving
    f(x)a(x) = f(x-1)h1(x) + f(x+1)h2(x+1), monic-normalized; None if the
    only solution is zero.

    Solutions with f.coeff(d_f) != 0 are preferred when the kernel offers a
    choice; the returned polynomial always satisfies the relation exactly.
    """
    if d_f < 0:
        return None
    h2s = h2.shift(1)
    basis = []
    xi = Poly.one()
    for i in range(d_f + 1):
        # contribution of the unknown coefficient f_i
        p = xi * a - Poly.x().shift(-1) ** i * h1 - Poly.x().shift(1) ** i * h2s
        basis.append(p)
        xi = xi * Poly.x()
    rows = max((len(p.coeffs) for p in basis), default=0)
    ncols = d_f + 1
    m = [[basis[i].coeff(j) for i in range(ncols)] for j in range(rows)]
    kernel = _kernel(m, ncols)
    if not kernel:
        return None
    pick = None
    for vec in kernel:
        if vec[d_f] != 0:
            pick = vec
            break
    if pick is None:
        pick = kernel[0]
    f = Poly(pick).monic()
    # exact verification, cheap and non-negotiable
    check = f * a - f.shift(-1) * h1 - f.shift(1) * h2s
    if not check.is_zero:
        raise AssertionError("solver produced a non-solution")
    return f


def _kernel(m: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Kernel basis of a matrix over Q, via reduced row echelon form."""
    rows = [row[:] for row in m if any(c != 0 for c in row)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [v - f * p for v, p in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in sorted(free, reverse=True):
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivot_cols):
            vec[pc] = -rows[i][fc]
        basis.append(vec)
    return basis


@dataclass(frozen=True)
class Rejection:
    h1: Poly
    h2: Poly
    reason: str


@dataclass
class IdentifyReport:
    solutions: list[EulerTriple] = field(default_factory=list)
    rejections: list[Rejection] = field(default_factory=list)
    exhaustive: bool = False

    def to_dict(self) -> dict:
        def coeffs(p: Poly) -> list[str]:
            return [str(c) for c in p.coeffs]

        return {
            "solutions": [
                {"h1": coeffs(t.h1), "h2": coeffs(t.h2), "f": coeffs(t.f)}
                for t in self.solutions
            ],
            "rejections": [
                {"h1": coeffs(r.h1), "h2": coeffs(r.h2), "reason": r.reason}
                for r in self.rejections
            ],
            "exhaustive": self.exhaustive,
        }


def _poly_key(p: Poly):
    return (len(p.coeffs), p.coeffs)

def _examine(a: Poly, b: Poly, h1m: Poly, h2m: Poly):
    """Search one monic decomposition; returns (solutions, rejections)."""
    sols: list[EulerTriple] = []
    rejs: list[Rejection] = []
    d1 = h1m.degree
    d2 = h2m.degree
    pairs, reason = leading_coeff_split(a, b, (d1, d2))
    if reason is not None:
        rejs.append(Rejection(h1m, h2m, reason))
        return sols, rejs
    found_degree = False
    found_f = False
    for c1, c2 in pairs:
        h1 = h1m * c1
        h2 = h2m * c2
        if -(h1 * h2) != b:
            raise AssertionError("leading split does not reassemble b")
        dfs = candidate_degrees(a, h1, h2)
        if not dfs:
            continue
        found_degree = True
        for df in sorted(dfs):
            f = solve_f(a, h1, h2, df)
            if f is None:
                continue
            t = EulerTriple(h1, h2, f)
            if build_euler_cf(t) != (a, b):
                raise AssertionError("identified triple fails round trip")
            found_f = True
            sols.append(t)
    if not found_degree:
        rejs.append(Rejection(h1m, h2m, REASON_NO_DEGREE))
    elif not found_f:
        rejs.append(Rejection(h1m, h2m, REASON_NO_F))
    return sols, rejs


def identify(a: Poly, b: Poly, factored=None, jobs: int = 1) -> IdentifyReport:
    """Search for Euler triples (h1, h2, f) with b = -h1 h2 and
    f a = f(x-1) h1 + f(x+1) h2(x+1).

    ``factored`` optionally pre-factors b as (constant, [(block, mult), ...])
    from :func:`polycf.algebra.parse_factored`; blocks are treated as atomic.
    Without it, -b is factored over its rational roots and any rootless
    residual of degree >= 2 becomes a single atomic block.

    The report lists every verified triple, the rejected decompositions with
    reasons, and whether the enumeration was exhaustive (true only when the
    factor base splits b into linear blocks, so every decomposition really
    was visited).

    ``jobs`` > 1 examines decompositions in a thread pool; the report is
    merged in enumeration order either way, so output is deterministic.
    """
    if a.is_zero or b.is_zero:
        raise InvalidInput("a and b must be nonzero")
    if b.degree < 1:
        raise InvalidInput("deg b must be at least 1")
    if factored is not None:
        const, blocks = factored
        if assemble_factored(const, blocks) != b:
            raise InvalidInput("factored form does not multiply back to b")
    else:
        _, linear, residual = factor_integer_rooted(-b)
        blocks = list(linear)
        if residual.degree >= 1:
            blocks.append((residual, 1))
    exhaustive = all(p.degree == 1 for p, _ in blocks)

    choices = []
    for p, mult in blocks:
        if p.degree >= 2:
            choices.append((0, mult))  # atomic: all or nothing
        else:
            choices.append(tuple(range(mult + 1)))
    decomps = []
    for pick in itertools.product(*choices):
        h1m = Poly.one()
        h2m = Poly.one()
        for (p, mult), e in zip(blocks, pick):
            h1m = h1m * p**e
            h2m = h2m * p ** (mult - e)
        decomps.append((h1m, h2m))
    decomps.sort(key=lambda pair: (_poly_key(pair[0]), _poly_key(pair[1])))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda d: _examine(a, b, *d), decomps))
    else:
        results = [_examine(a, b, h1m, h2m) for h1m, h2m in decomps]

    report = IdentifyReport(exhaustive=exhaustive)
    seen = set()
    for sols, rejs in results:
        for t in sols:
            key = (t.h1.coeffs, t.h2.coeffs, t.f.coeffs)
            if key not in seen:
                seen.add(key)
                report.solutions.append(t)
        report.rejections.extend(rejs)
    report.solutions.sort(
        key=lambda t: (_poly_key(t.h1), _poly_key(t.h2), _poly_key(t.f))
    )
    return report
