"""Euler-family continued fractions.

The sum-to-CF identity turns partial sums of products into continued
fractions:

    sum_{k=0}^{n} prod_{i=1}^{k} r(i)  =  1 / (1 + K_{i=1}^{n} (-r(i)) / (1 + r(i)))

and the polynomial version is driven by triples (h1, h2, f) with

    b(x) = -h1(x) h2(x),
    a(x) = (f(x-1) h1(x) + f(x+1) h2(x+1)) / f(x)       (exact division),

whose finite values have the closed form implemented in
:func:`euler_partial_value`.  The trivial family has f = 1 and
a = h1(x) + h2(x+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import INF, Poly, rat
from .errors import DegenerateTerm, NotDivisible, OrbitPole, PoleInFormula, ZeroScaler
from .mobius import CFSpec


@dataclass(frozen=True)
class EulerTriple:
    """A triple (h1, h2, f) defining an Euler-family CF.

    Construction validates that f(x) divides f(x-1)h1(x) + f(x+1)h2(x+1)
    (raising NotDivisible otherwise), so every instance carries a genuine
    polynomial a.  All three components must be nonzero.
    """

    h1: Poly
    h2: Poly
    f: Poly

    def __post_init__(self):
        for name in ("h1", "h2", "f"):
            p = getattr(self, name)
            if not isinstance(p, Poly) or p.is_zero:
                raise ValueError(f"{name} must be a nonzero polynomial")
        num = self.f.shift(-1) * self.h1 + self.f.shift(1) * self.h2.shift(1)
        q, r = divmod(num, self.f)
        if not r.is_zero:
            raise NotDivisible(
                f"f does not divide f(x-1)h1(x) + f(x+1)h2(x+1) for f = {self.f}"
            )
        object.__setattr__(self, "_a", q)

    @property
    def a(self) -> Poly:
        return self._a

    @property
    def b(self) -> Poly:
        return -(self.h1 * self.h2)


def trivial_triple(h1: Poly, h2: Poly) -> EulerTriple:
    """The f = 1 member: a = h1(x) + h2(x+1)."""
    return EulerTriple(h1, h2, Poly.one())


def build_euler_cf(t: EulerTriple) -> tuple[Poly, Poly]:
    """The CF coefficient pair (a, b) of a triple."""
    return t.a, t.b


def euler_sum(r, n: int) -> Fraction:
    """Partial sum sum_{k=0}^{n} prod_{i=1}^{k} r(i), evaluated directly."""
    total = Fraction(1)
    prod = Fraction(1)
    for k in range(1, n + 1):
        prod *= _at(r, k, k - 1)
        total += prod
    return total


def euler_sum_to_cf(r, length: int | None = None) -> CFSpec:
    """CFSpec with terms b(i) = -r(i), a(i) = 1 + r(i).

    The value identity is euler_sum(r, n) == 1/(1 + cf_value(cf, n)).
    A term r(i) = -1 zeroes the partial denominator; it raises
    DegenerateTerm(i) when the term is materialized.
    """
    if isinstance(r, (list, tuple)) and length is None:
        length = len(r)
    if length is not None:
        bs, as_ = [], []
        for i in range(1, length + 1):
            ri = _at(r, i, i - 1)
            if ri == -1:
                raise DegenerateTerm(i)
            bs.append(-ri)
            as_.append(1 + ri)
        return CFSpec(b=bs, a=as_)

    def b_of(i: int) -> Fraction:
        ri = _at(r, i, i - 1)
        if ri == -1:
            raise DegenerateTerm(i)
        return -ri

    def a_of(i: int) -> Fraction:
        return 1 + _at(r, i, i - 1)

    return CFSpec(b=b_of, a=a_of)


def _at(seq, i: int, pos: int) -> Fraction:
    """Coefficient access: Polys/callables by index i, sequences by position."""
    if isinstance(seq, Poly):
        return seq(Fraction(i))
    if isinstance(seq, (list, tuple)):
        return rat(seq[pos])
    if callable(seq):
        return rat(seq(i))
    raise TypeError(f"cannot read a coefficient sequence from {type(seq).__name__}")


def equivalence_transform(b, a, c, n: int | None = None, shift: int = 0):
    """Rescale a CF without changing its value.

    With scalers c(0), c(1), ... (all nonzero) the CF K b(i)/a(i) equals
    (1/c(0)) * K b'(i)/a'(i) where b'(i) = c(i-1) c(i) b(i) and
    a'(i) = c(i) a(i).

    `shift` reindexes first: the transform is applied to the tail starting
    at original index shift+1, i.e. b and a are read at i+shift while c is
    read at the new index.  (Useful when c(0) would otherwise be zero: peel
    the head term off by hand and transform the tail.)

    Polynomial mode (b, a, c Polys and n None) returns Polys; otherwise n is
    required and explicit lists for indices 1..n are returned.  The third
    element of the result is the front scale 1/c(0).

    Raises ZeroScaler when some needed c(i) is zero.
    """
    if n is None:
        if not (isinstance(b, Poly) and isinstance(a, Poly) and isinstance(c, Poly)):
            raise TypeError("polynomial mode needs b, a, c as Polys (or pass n)")
        c0 = c(Fraction(0))
        if c0 == 0:
            raise ZeroScaler("c(0) = 0")
        b2 = c.shift(-1) * c * b.shift(shift)
        a2 = c * a.shift(shift)
        return b2, a2, 1 / c0
    c_vals = []
    for j in range(0, n + 1):
        cj = _at(c, j, j)
        if cj == 0:
            raise ZeroScaler(f"c({j}) = 0")
        c_vals.append(cj)
    bs, as_ = [], []
    for j in range(1, n + 1):
        bj = _at(b, j + shift, j - 1)
        aj = _at(a, j + shift, j - 1)
        bs.append(c_vals[j - 1] * c_vals[j] * bj)
        as_.append(c_vals[j] * aj)
    return bs, as_, 1 / c_vals[0]


def euler_partial_value(t: EulerTriple, n: int):
    """Closed form for the depth-n value of the CF of a triple.

    Equals cf_value(CFSpec(b=t.b, a=t.a), n) exactly:

        (f(1) h2(1) / f(0)) * (1 / S - 1),
        S = sum_{k=0}^{n} (f(0) f(1) / (f(k) f(k+1))) prod_{i=1}^{k} h1(i)/h2(i+1).

    Raises PoleInFormula(k) when a needed f(k) (0 <= k <= n+1) or h2(k)
    (1 <= k <= n+1) vanishes.  Returns INF when S = 0.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    h1, h2, f = t.h1, t.h2, t.f
    fv = [f(Fraction(k)) for k in range(n + 2)]
    for k, v in enumerate(fv):
        if v == 0:
            raise PoleInFormula(k, "f")
    h2v = [None] + [h2(Fraction(k)) for k in range(1, n + 2)]
    for k in range(1, n + 2):
        if h2v[k] == 0:
            raise PoleInFormula(k, "h2")
    f01 = fv[0] * fv[1]
    total = Fraction(0)
    prod = Fraction(1)  # prod_{i=1}^{k} h1(i)/h2(i+1)
    for k in range(n + 1):
        if k > 0:
            prod *= h1(Fraction(k)) / h2v[k + 1]
        total += f01 / (fv[k] * fv[k + 1]) * prod
    if total == 0:
        return INF
    return (fv[1] * h2v[1] / fv[0]) * (1 / total - 1)


def solve_c_recurrence(b, a, c0, n: int) -> list[Fraction]:
    """Orbit of c(i) = 1 / (a(i) + c(i-1) b(i)) from c(0) = c0.

    Returns [c(0), ..., c(n)].  Each c(i) satisfies the unit-row condition
    c(i) a(i) + c(i-1) c(i) b(i) = 1.  Raises OrbitPole on a zero
    denominator.
    """
    orbit = [rat(c0)]
    for i in range(1, n + 1):
        den = _at(a, i, i - 1) + orbit[-1] * _at(b, i, i - 1)
        if den == 0:
            raise OrbitPole(f"a({i}) + c({i - 1}) b({i}) = 0")
        orbit.append(1 / den)
    return orbit
