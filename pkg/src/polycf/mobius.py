"""Mobius transformations, convergent streams, and constant-CF limits.

A continued fraction K b(i)/a(i) is driven by the matrix product of steps
M(i) = (0, b(i); 1, a(i)).  The running product

    prod_{i=1}^{n-1} M(i)  =  (p_{n-1}, p_n; q_{n-1}, q_n)

carries both the previous and the current convergent; the stream below yields
exactly these states, starting from the identity (state 1).  The pairs are
kept unreduced so that the determinant identity

    p_{n-1} q_n - p_n q_{n-1} = prod_{i=1}^{n-1} (-b(i))

holds on the raw integers; ``ConvergentState.reduced()`` gives lowest terms
on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .algebra import INF, Poly, QuadSurd, is_inf, rat, sqrt_fraction
from .errors import InvalidInput, SingularMatrix


class Mat2:
    """2x2 matrix with exact rational entries, row major (a, b; c, d).

    >>> m = Mat2(1, 2, 3, 4)
    >>> m.det
    Fraction(-2, 1)
    >>> m.apply(Fraction(1))      # (1+2)/(3+4)
    Fraction(3, 7)
    >>> m.apply(INF)
    Fraction(1, 3)
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a = rat(a)
        self.b = rat(b)
        self.c = rat(c)
        self.d = rat(d)

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def __mul__(self, other: "Mat2") -> "Mat2":
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "Mat2":
        det = self.det
        if det == 0:
            raise SingularMatrix("matrix is singular")
        return Mat2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def apply(self, z):
        """Mobius action z -> (a z + b) / (c z + d) on the projective line.

        Scalar matrices act as the identity.  The full case table:
        finite z with c z + d = 0 maps to INF; INF maps to a/c, or to INF
        when c = 0 (then a != 0 because the matrix is nonsingular).
        """
        if self.det == 0:
            raise SingularMatrix("Mobius action of a singular matrix")
        if is_inf(z):
            if self.c == 0:
                return INF
            return self.a / self.c
        z = rat(z)
        den = self.c * z + self.d
        if den == 0:
            return INF
        return (self.a * z + self.b) / den

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return f"Mat2({self.a}, {self.b}, {self.c}, {self.d})"


def mobius_apply(m: Mat2, z):
    return m.apply(z)


def cf_step_matrix(b, a) -> Mat2:
    """The step matrix (0, b; 1, a) of one CF term."""
    return Mat2(0, b, 1, a)


# ---------------------------------------------------------------------------
# term sources and the convergent stream
# ---------------------------------------------------------------------------

# A coefficient sequence is a Poly (evaluated at the index), an explicit
# sequence (index 1 maps to position 0 after the start offset), or a callable.


def _term(seq, pos: int, i: int):
    """Read one coefficient: Polys and callables see the index i, explicit
    sequences are consumed positionally; None signals exhaustion."""
    if isinstance(seq, Poly):
        return seq(Fraction(i))
    if isinstance(seq, (list, tuple)):
        if pos >= len(seq):
            return None
        return rat(seq[pos])
    if callable(seq):
        return rat(seq(i))
    raise TypeError(f"cannot read a coefficient sequence from {type(seq).__name__}")


@dataclass(frozen=True)
class CFSpec:
    """A continued fraction head + K_{i>=start} b(i)/a(i).

    ``a`` and ``b`` are Polys, explicit (finite) sequences, or callables in
    the index.  ``head`` is added in front of the K part when evaluating.
    """

    b: object
    a: object
    start: int = 1
    head: Fraction = Fraction(0)

    def terms(self) -> Iterator[tuple[Fraction, Fraction]]:
        pos = 0
        while True:
            i = self.start + pos
            bi = _term(self.b, pos, i)
            ai = _term(self.a, pos, i)
            if bi is None or ai is None:
                return
            yield bi, ai
            pos += 1


@dataclass(frozen=True)
class ConvergentState:
    """State n of the stream: the product of the first n-1 step matrices.

    Fields are the unreduced matrix entries (p_prev, p; q_prev, q) plus the
    index and a truncation flag (set when a zero b(i) ended the stream; the
    CF value is frozen from that point on).
    """

    n: int
    p_prev: object
    p: object
    q_prev: object
    q: object
    truncated: bool = False

    @property
    def value(self):
        """p/q as an exact Fraction, or INF when q = 0."""
        if self.q == 0:
            return INF
        return Fraction(self.p, self.q) if isinstance(self.p, int) and isinstance(self.q, int) else rat(self.p) / rat(self.q)

    def reduced(self) -> tuple:
        """(p, q) in lowest terms with positive q; (1, 0) for INF."""
        if self.q == 0:
            return (1, 0)
        v = self.value
        return (v.numerator, v.denominator)

    def as_matrix(self) -> Mat2:
        return Mat2(self.p_prev, self.p, self.q_prev, self.q)


def convergents_from_terms(pairs: Iterable[tuple]) -> Iterator[ConvergentState]:
    """Stream convergent states from (b_i, a_i) pairs.

    State 1 is the identity; consuming term i moves state i to state i+1 via
    p_next = a_i p + b_i p_prev (same for q).  A zero b_i yields one final
    state flagged truncated, then the stream ends: the CF value cannot change
    past that point.

    Arithmetic stays in plain ints while every term is integral (the common
    case for polynomial CFs) and switches to Fraction otherwise.
    """
    p_prev, p = 1, 0
    q_prev, q = 0, 1
    n = 1
    yield ConvergentState(n, p_prev, p, q_prev, q)
    for bi, ai in pairs:
        if bi == 0:
            yield ConvergentState(n + 1, p_prev, p, q_prev, q, truncated=True)
            return
        if isinstance(bi, Fraction) and bi.denominator == 1:
            bi = bi.numerator
        if isinstance(ai, Fraction) and ai.denominator == 1:
            ai = ai.numerator
        p_prev, p = p, ai * p + bi * p_prev
        q_prev, q = q, ai * q + bi * q_prev
        n += 1
        yield ConvergentState(n, p_prev, p, q_prev, q)


def convergents(cf: CFSpec) -> Iterator[ConvergentState]:
    """Convergent stream of a CFSpec (head is ignored here; see cf_value)."""
    return convergents_from_terms(cf.terms())


def _state_at(cf: CFSpec, depth: int) -> ConvergentState:
    if depth < 0:
        raise InvalidInput("depth must be nonnegative")
    last = None
    for state in convergents(cf):
        last = state
        if state.n >= depth + 1 or state.truncated:
            return last
    # the term sequence ran out before `depth` without a zero-b truncation
    raise InvalidInput(
        f"coefficient sequence exhausted after {last.n - 1} terms, needed {depth}"
    )


def cf_value(cf: CFSpec, depth: int):
    """Exact value head + K_{i=start}^{start+depth-1} b(i)/a(i).

    Consumes exactly `depth` terms (fewer if a zero b truncates the CF).
    Returns a Fraction, or INF when the finite CF is a pole.

    >>> cf_value(CFSpec(b=Poly([0, -1]), a=Poly([2, 1])), 2)   # -1/(3 + (-2)/4)
    Fraction(-2, 5)
    """
    state = _state_at(cf, depth)
    v = state.value
    if is_inf(v):
        return INF
    return cf.head + v


def product_apply(cf: CFSpec, depth: int, z):
    """Apply the product of the first `depth` step matrices to z.

    product_apply(cf, n, 0) equals the plain convergent at depth n, and a
    better tail seed z sharpens the estimate without changing exactness.
    """
    state = _state_at(cf, depth)
    return state.as_matrix().apply(z)


# ---------------------------------------------------------------------------
# constant-coefficient classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CFLimit:
    """Outcome of the constant-CF classifier.

    kind is one of "converges", "diverges_oscillates", "diverges_infinite";
    root is the exact limit (a QuadSurd) when kind == "converges".
    """

    kind: str
    root: QuadSurd | None = None

    CONVERGES = "converges"
    OSCILLATES = "diverges_oscillates"
    INFINITE = "diverges_infinite"


def constant_cf_limit(A, B) -> CFLimit:
    """Classify K B/A with constant rational terms.

    Converges exactly when A != 0 and A^2 + 4B >= 0; the limit is the
    attracting fixed point of z -> B/(A+z), i.e. the root of x^2 + Ax - B
    on sign(A)'s side: x = (-A + sign(A) sqrt(A^2+4B))/2.  A = 0 or a
    negative discriminant oscillates.  B = 0 is outside the domain.

    >>> constant_cf_limit(1, 1).root == QuadSurd(Fraction(-1, 2), Fraction(1, 2), 5)
    True
    >>> constant_cf_limit(-1, 1).root == QuadSurd(Fraction(1, 2), Fraction(-1, 2), 5)
    True
    """
    A, B = rat(A), rat(B)
    if B == 0:
        raise InvalidInput("B = 0 gives an empty continued fraction")
    if A == 0:
        return CFLimit(CFLimit.OSCILLATES)
    disc = A * A + 4 * B
    if disc < 0:
        return CFLimit(CFLimit.OSCILLATES)
    s = 1 if A > 0 else -1
    root = (sqrt_fraction(disc) * s + (-A)) * Fraction(1, 2)
    return CFLimit(CFLimit.CONVERGES, root)
