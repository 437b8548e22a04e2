"""Matrix normal forms for polynomial CF step products.

A 2x2 matrix family M(n) with polynomial entries drives the recurrence
(p_n; q_n) = M(1) ... M(n) (1; 0).  Two normal forms are computed here:

* CF form: a coboundary U(n) = (1, a(n); 0, c(n)) conjugating M into a
  companion shape (0, b; 1, a), so the same p_n, q_n arise from an honest
  continued fraction (possibly with rational-function coefficients; an
  integral variant clears the denominators);
* triangular form: a polynomial family of left eigenvectors (G, F) with
  eigenvalue lambda turns M into an upper triangular T whose products
  collapse to a single telescoping pass.

The Euler-family step matrix (0, -h1 h2; 1, h1 + h2(x+1)) has both
structures explicitly, and the triangular route re-derives its partial
values without touching convergent recurrences.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, RatFunc, is_inf, rat
from .errors import InvalidInput, PoleInFormula, ZeroCEntry, ZeroDiagonal, ZeroF
from .mobius import Mat2


def _sym(x):
    """Coerce an entry to Poly (preferred) or RatFunc."""
    if isinstance(x, RatFunc):
        return x.as_poly() if x.is_poly else x
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a matrix entry")


def _rf(x) -> RatFunc:
    return x if isinstance(x, RatFunc) else RatFunc(x)


def _entry_is_zero(x) -> bool:
    return x.is_zero if isinstance(x, Poly) else x.num.is_zero


class PolyMat2:
    """2x2 matrix over polynomials / rational functions in the index."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a = _sym(a)
        self.b = _sym(b)
        self.c = _sym(c)
        self.d = _sym(d)

    @property
    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    @property
    def is_poly(self) -> bool:
        return all(isinstance(e, Poly) for e in self.entries)

    def det(self):
        return _sym(_rf(self.a) * self.d - _rf(self.b) * self.c)

    def __mul__(self, other: "PolyMat2") -> "PolyMat2":
        if not isinstance(other, PolyMat2):
            return NotImplemented
        a1, b1, c1, d1 = (_rf(e) for e in self.entries)
        a2, b2, c2, d2 = other.entries
        return PolyMat2(
            _sym(a1 * a2 + b1 * c2),
            _sym(a1 * b2 + b1 * d2),
            _sym(c1 * a2 + d1 * c2),
            _sym(c1 * b2 + d1 * d2),
        )

    def shift(self, k) -> "PolyMat2":
        return PolyMat2(*(e.shift(k) for e in self.entries))

    def eval_at(self, i) -> Mat2:
        """Evaluate every entry at index i; entries must be finite there."""
        vals = []
        for e in self.entries:
            v = e(Fraction(i))
            if is_inf(v):
                raise ZeroDivisionError(f"matrix entry has a pole at index {i}")
            vals.append(v)
        return Mat2(*vals)

    def __eq__(self, other):
        if not isinstance(other, PolyMat2):
            return NotImplemented
        return all(_rf(x) == _rf(y) for x, y in zip(self.entries, other.entries))

    def __hash__(self):
        return hash(tuple(_rf(e) for e in self.entries))

    def __repr__(self):
        return f"PolyMat2({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"

    def __str__(self):
        return f"[{self.a}, {self.b}; {self.c}, {self.d}]"


def coboundary_check(m1: PolyMat2, m2: PolyMat2, u: PolyMat2, up_to_scalar: bool = False) -> bool:
    """Does u conjugate the family m2 into m1, i.e. m1(i) u(i+1) == u(i) m2(i)?

    With up_to_scalar=True the two sides may differ by one common
    rational-function factor (the same for all four entries).
    """
    left = m1 * u.shift(1)
    right = u * m2
    if not up_to_scalar:
        return left == right
    ratio = None
    for le, re in zip(left.entries, right.entries):
        lz, rz = _entry_is_zero(le), _entry_is_zero(re)
        if lz != rz:
            return False
        if lz:
            continue
        r = _rf(le) / _rf(re)
        if ratio is None:
            ratio = r
        elif r != ratio:
            return False
    return True


# ---------------------------------------------------------------------------
# CF form
# ---------------------------------------------------------------------------


def to_cf_form(m: PolyMat2) -> tuple[PolyMat2, PolyMat2, Mat2]:
    """Conjugate a polynomial family M(n) into companion (CF) shape.

    Returns (cfm, u, init) with cfm(n) = (0, -(c(n+1)/c(n)) det M(n);
    1, a(n+1) + d(n) c(n+1)/c(n)), the coboundary u(n) = (1, a(n); 0, c(n)),
    and init = u(1) evaluated.  States P_k = init * cfm(1) * ... * cfm(k)
    stack consecutive columns (p_k, p_{k+1}; q_k, q_{k+1}) of the original
    product applied to (1; 0).  Raises ZeroCEntry when the lower-left entry
    is identically zero (no companion shape exists then).
    """
    if not m.is_poly:
        raise TypeError("matrix entries must be polynomials")
    a, b, c, d = m.entries
    if c.is_zero:
        raise ZeroCEntry("lower-left entry is identically zero")
    cratio = RatFunc(c.shift(1), c)
    top = _sym(-(cratio * m.det()))
    bottom = _sym(RatFunc(a.shift(1)) + cratio * d)
    cfm = PolyMat2(0, top, 1, bottom)
    u = PolyMat2(1, a, 0, c)
    init = Mat2(1, a(Fraction(1)), 0, c(Fraction(1)))
    return cfm, u, init


def to_integral_cf_form(m: PolyMat2) -> PolyMat2:
    """Companion shape with polynomial entries: scale step n by c(n-1)c(n).

    cfm(n) = (0, -c(n-1) c(n+1) det M(n); 1, c(n) a(n+1) + d(n) c(n+1)).
    Seeded with (1, c(0)a(1); 0, c(0)c(1)), its state k equals the CF-form
    state with columns scaled by prod_{j=0}^{k-1} c(j) and
    prod_{j=0}^{k} c(j), so convergent ratios and rationality questions
    survive while all arithmetic stays in polynomials.
    """
    if not m.is_poly:
        raise TypeError("matrix entries must be polynomials")
    a, b, c, d = m.entries
    if c.is_zero:
        raise ZeroCEntry("lower-left entry is identically zero")
    top = -(c.shift(-1) * c.shift(1) * m.det())
    bottom = c * a.shift(1) + d * c.shift(1)
    return PolyMat2(0, top, 1, bottom)


def cf_form_states(m: PolyMat2, n: int) -> list[Mat2]:
    """[P_0, ..., P_n] with P_0 = u(1) and P_k = P_{k-1} cfm(k).

    Column k of the original product: P_k = (p_k, p_{k+1}; q_k, q_{k+1})
    where (p_j; q_j) = M(1) ... M(j) (1; 0).
    """
    if n < 0:
        raise InvalidInput("n must be nonnegative")
    cfm, u, init = to_cf_form(m)
    states = [init]
    cur = init
    for k in range(1, n + 1):
        cur = cur * cfm.eval_at(k)
        states.append(cur)
    return states


# ---------------------------------------------------------------------------
# eigen structure and triangular form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EigenSeq:
    """A polynomial eigenvector family for a matrix family M(i).

    side "left":  (g(i), f(i)) M(i) = eigenvalue(i) (g(i+1), f(i+1));
    side "right": M(i) (f(i+1); -g(i+1)) = eigenvalue(i) (f(i); -g(i)).
    The same (g, f) pair can serve both sides with different eigenvalues;
    the two eigenvalues then multiply to det M.
    """

    g: Poly
    f: Poly
    eigenvalue: object
    side: str

    LEFT = "left"
    RIGHT = "right"


def eigen_check(m: PolyMat2, e: EigenSeq) -> bool:
    """Verify the eigenvector identity of e against m, exactly."""
    a, b, c, d = (_rf(x) for x in m.entries)
    g, f, lam = _rf(e.g), _rf(e.f), _rf(e.eigenvalue)
    gp, fp = _rf(e.g.shift(1)), _rf(e.f.shift(1))
    if e.side == EigenSeq.LEFT:
        return g * a + f * c == lam * gp and g * b + f * d == lam * fp
    if e.side == EigenSeq.RIGHT:
        return a * fp - b * gp == lam * f and c * fp - d * gp == -(lam * g)
    raise InvalidInput(f"unknown side {e.side!r}")


def euler_cf_matrix(h1: Poly, h2: Poly) -> PolyMat2:
    """Step matrix (0, -h1 h2; 1, h1 + h2(x+1)) of the trivial family."""
    return PolyMat2(0, -(h1 * h2), 1, h1 + h2.shift(1))


def euler_left_eigen(h1: Poly, h2: Poly) -> EigenSeq:
    """(1, h2(i)) is a left eigenvector of the Euler step matrix, eigenvalue h2."""
    return EigenSeq(Poly.one(), h2, h2, EigenSeq.LEFT)


def euler_right_eigen(h1: Poly, h2: Poly) -> EigenSeq:
    """(h2(i+1); -1) is a right eigenvector of the Euler step matrix, eigenvalue h1."""
    return EigenSeq(Poly.one(), h2, h1, EigenSeq.RIGHT)


def triangularize(m: PolyMat2, left: EigenSeq) -> tuple[PolyMat2, object]:
    """Conjugate m into upper triangular T with diagonal (det/lambda, lambda).

    Uses the unimodular U(i) = (1/f, 0; g, f) built from a verified left
    eigenvector family: T(i) = U(i) M(i) U(i+1)^{-1} = (alpha, b/(f f+);
    0, lambda) with alpha = det M / lambda.  Returns (T, alpha).
    """
    if left.side != EigenSeq.LEFT:
        raise InvalidInput("triangularize needs a left eigenvector family")
    if left.f.is_zero:
        raise ZeroF("eigenvector second component is identically zero")
    if not eigen_check(m, left):
        raise InvalidInput("eigenvector identity fails for this matrix family")
    f, g = left.f, left.g
    fp, gp = f.shift(1), g.shift(1)
    u = PolyMat2(RatFunc(Poly.one(), f), 0, g, f)
    uinv_next = PolyMat2(fp, 0, -gp, RatFunc(Poly.one(), fp))
    t = u * m * uinv_next
    alpha = _sym(_rf(m.det()) / _rf(left.eigenvalue))
    assert _entry_is_zero(t.c) and _rf(t.a) == _rf(alpha) and _rf(t.d) == _rf(left.eigenvalue)
    return t, alpha


def _mat_term(terms, i: int) -> Mat2:
    if callable(terms):
        return terms(i)
    try:
        return terms[i - 1]
    except IndexError:
        raise InvalidInput(f"matrix sequence exhausted at index {i}") from None


def triangular_product(terms, n: int) -> Mat2:
    """prod_{i=1}^{n-1} T(i) for upper triangular T, in one linear pass.

    The diagonal multiplies out directly and the corner obeys
    C_m = C_{m-1} gamma_m + (prod_{i<m} alpha_i) beta_m, so no full matrix
    products are formed.  terms is a callable i -> Mat2 or a list (index i
    at position i-1).
    """
    if n < 1:
        raise InvalidInput("n must be at least 1")
    prod_a = Fraction(1)
    corner = Fraction(0)
    prod_g = Fraction(1)
    for i in range(1, n):
        t = _mat_term(terms, i)
        if t.c != 0:
            raise InvalidInput(f"matrix at index {i} is not upper triangular")
        corner = corner * t.d + prod_a * t.b
        prod_a *= t.a
        prod_g *= t.d
    return Mat2(prod_a, corner, 0, prod_g)


def triangular_product_at_zero(terms, n: int) -> Fraction:
    """[prod_{i=1}^{n-1} T(i)](0) as a telescoping sum.

    Equals sum_{k=1}^{n-1} (beta_k / gamma_k) prod_{i=1}^{k-1}
    (alpha_i / gamma_i); needs every gamma_k nonzero (ZeroDiagonal).
    """
    if n < 1:
        raise InvalidInput("n must be at least 1")
    ratio = Fraction(1)
    total = Fraction(0)
    for k in range(1, n):
        t = _mat_term(terms, k)
        if t.c != 0:
            raise InvalidInput(f"matrix at index {k} is not upper triangular")
        if t.d == 0:
            raise ZeroDiagonal(f"zero lower diagonal entry at index {k}")
        total += ratio * t.b / t.d
        ratio *= t.a / t.d
    return total


def rederive_euler_sum(h1: Poly, h2: Poly, n: int):
    """Partial CF value K_{i=1}^{n-1} b(i)/a(i) of the trivial family, via
    the triangular route only.

    Builds T(i) = (h1(i), -h1(i)/h2(i+1); 0, h2(i)), multiplies them in one
    pass, applies the result to 0 and maps through U(1)^{-1}.  Must agree
    with the summation formula for the same triple; n = 1 gives 0.  Raises
    PoleInFormula when h2 vanishes on 1..n.
    """
    if n < 1:
        raise InvalidInput("n must be at least 1")
    h2_vals = {}
    for k in range(1, n + 1):
        v = h2(Fraction(k))
        if v == 0:
            raise PoleInFormula(k, "h2")
        h2_vals[k] = v

    def term(i: int) -> Mat2:
        h1i = h1(Fraction(i))
        return Mat2(h1i, -h1i / h2_vals[i + 1], 0, h2_vals[i])

    prod = triangular_product(term, n)
    z = prod.apply(Fraction(0))
    u1inv = Mat2(h2_vals[1], 0, -1, 1 / h2_vals[1])
    return u1inv.apply(z)
