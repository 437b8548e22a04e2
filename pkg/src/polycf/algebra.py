"""Exact scalar and polynomial arithmetic.

Everything in this library runs on integers and `fractions.Fraction`; there
is no floating point here or anywhere downstream.  This module provides the
shared ground types:

* ``Rat``       alias for :class:`fractions.Fraction`
* ``INF``       the extra point for the extended rationals (Mobius arithmetic)
* ``QuadSurd``  exact quadratic surds u + v*sqrt(d)
* ``Poly``      dense univariate polynomials with Fraction coefficients
* ``RatFunc``   reduced quotients of two polynomials

plus the text grammar used by the command line tool and the rational-root
machinery that the identification pipeline builds on.

Polynomials are immutable.  The zero polynomial has ``degree None`` (a
distinguished flag, on purpose no integer sentinel), and every formula in the
library that consumes degrees treats that case explicitly.

>>> p = parse_poly("34n^3+51n^2+27n+5")
>>> p.coeffs
(Fraction(5, 1), Fraction(27, 1), Fraction(51, 1), Fraction(34, 1))
>>> p(1)
Fraction(117, 1)
>>> str(p.shift(-1))
'34*n^3 - 51*n^2 + 27*n - 5'
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .errors import PolyParseError

Rat = Fraction


def rat(x) -> Fraction:
    """Coerce ints, strings like '3/4', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Infinity:
    """The single point at infinity of the projective rational line."""

    __slots__ = ()

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self or isinstance(other, Infinity)

    def __hash__(self):
        return hash("polycf-infinity")


INF = Infinity()

# ExtRat values are either Fraction or INF.
ExtRat = "Fraction | Infinity"


def is_inf(v) -> bool:
    return isinstance(v, Infinity)


# ---------------------------------------------------------------------------
# integer helpers (factoring, squarefree parts, exact square roots)
# ---------------------------------------------------------------------------

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_probable_prime(n: int) -> bool:
    # deterministic Miller-Rabin for n < 3.3e24 with the fixed base set
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    # Brent's cycle variant; n must be composite and odd
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"factorization failed for {n}")


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}.  factor_int(0) errors."""
    if n == 0:
        raise ValueError("cannot factor zero")
    n = abs(n)
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack.extend((root, root))
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return out


def squarefree_split(n: int) -> tuple[int, int]:
    """Write |n| = m*m*d with d squarefree; returns (m, d).  n >= 0 expected."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0, 0
    m, d = 1, 1
    for p, e in factor_int(n).items():
        m *= p ** (e // 2)
        if e % 2:
            d *= p
    return m, d


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of q if it is the square of a rational, else None."""
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


class QuadSurd:
    """Exact number u + v*sqrt(d) with rational u, v and squarefree d >= 0.

    Normalization folds d in {0, 1} (and v = 0) back into the rational case,
    where the stored form is (u, 0, 0).  Arithmetic is closed as long as both
    operands share the same radicand; mixing distinct irrational radicands
    raises ValueError.

    >>> r = QuadSurd(Fraction(1, 2), Fraction(1, 2), 5)
    >>> r * r - r            # golden ratio satisfies x^2 - x - 1 = 0
    QuadSurd(1, 0, 0)
    >>> QuadSurd(2, 3, 4)    # sqrt(4) collapses
    QuadSurd(8, 0, 0)
    """

    __slots__ = ("u", "v", "d")

    def __init__(self, u, v=0, d=0):
        u = rat(u)
        v = rat(v)
        d = int(d)
        if d < 0:
            raise ValueError("negative radicand")
        if d and v:
            m, d = squarefree_split(d)
            v *= m
        if d in (0, 1):
            u += v * d
            v = Fraction(0)
            d = 0
        if v == 0:
            d = 0
        self.u = u
        self.v = v
        self.d = d

    @property
    def is_rational(self) -> bool:
        return self.v == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.u

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}, no approximation involved."""
        u, v, d = self.u, self.v, self.d
        if v == 0:
            return (u > 0) - (u < 0)
        if u == 0:
            return 1 if v > 0 else -1
        if u > 0 and v > 0:
            return 1
        if u < 0 and v < 0:
            return -1
        uu, vv = u * u, v * v * d
        if uu == vv:
            return 0
        if u > 0:
            return 1 if uu > vv else -1
        return 1 if vv > uu else -1

    def approx(self, digits: int = 30) -> Fraction:
        """Rational approximation within 10**-digits, via integer isqrt."""
        if self.v == 0:
            return self.u
        scale = 10 ** (digits + 6)
        root = Fraction(math.isqrt(self.d * scale * scale), scale)
        return self.u + self.v * root

    def _coerce(self, other):
        if isinstance(other, QuadSurd):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadSurd(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.d and o.d and self.d != o.d:
            raise ValueError("incompatible radicands")
        d = self.d or o.d
        return QuadSurd(self.u + o.u, self.v + o.v, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadSurd(-self.u, -self.v, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.d and o.d and self.d != o.d:
            raise ValueError("incompatible radicands")
        d = self.d or o.d
        u = self.u * o.u + self.v * o.v * d
        v = self.u * o.v + self.v * o.u
        return QuadSurd(u, v, d)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.u, self.v, self.d) == (o.u, o.v, o.d)

    def __hash__(self):
        if self.is_rational:
            return hash(self.u)
        return hash((self.u, self.v, self.d))

    def __repr__(self):
        return f"QuadSurd({self.u}, {self.v}, {self.d})"

    def __str__(self):
        if self.v == 0:
            return str(self.u)
        tail = f"sqrt({self.d})" if abs(self.v) == 1 else f"{abs(self.v)}*sqrt({self.d})"
        if self.u == 0:
            return tail if self.v > 0 else "-" + tail
        op = "+" if self.v > 0 else "-"
        return f"{self.u} {op} {tail}"


def sqrt_fraction(q: Fraction) -> QuadSurd:
    """Exact sqrt of a nonnegative rational as a QuadSurd."""
    q = rat(q)
    if q < 0:
        raise ValueError("negative radicand")
    # sqrt(p/q) = sqrt(p*q)/q
    return QuadSurd(0, Fraction(1, q.denominator), q.numerator * q.denominator)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Dense univariate polynomial over Fraction, ascending coefficients.

    ``Poly(())`` is the zero polynomial; its ``degree`` is None rather than
    any integer.  Instances are immutable and hashable.

    >>> p = Poly([5, 27, 51, 34])
    >>> p.degree, p.lead
    (3, Fraction(34, 1))
    >>> divmod(p * p, p) == (p, Poly.zero())
    True
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((rat(c),))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    # -- structure ----------------------------------------------------

    @property
    def degree(self):
        """Degree as int, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        """Coefficient of x**k; zero outside range (negative k included)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    # -- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly([self.coeff(i) + o.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        acc = Poly.one()
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn, dd = len(rem) - 1, o.degree
        if dn < dd:
            return Poly.zero(), self
        q = [Fraction(0)] * (dn - dd + 1)
        inv = 1 / o.lead
        for k in range(dn - dd, -1, -1):
            c = rem[k + dd] * inv
            q[k] = c
            if c:
                for j, b in enumerate(o.coeffs):
                    rem[k + j] -= c * b
        return Poly(q), Poly(rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Poly([c / rat(other) for c in self.coeffs])
        return NotImplemented

    # -- evaluation and reindexing --------------------------------------

    def __call__(self, v):
        """Evaluate by Horner's rule.  Accepts Fraction/int or another Poly
        (composition); any value supporting * and + works."""
        if not self.coeffs:
            return Fraction(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * v + c
        return acc

    def shift(self, k) -> "Poly":
        """p.shift(k) is the polynomial x -> p(x + k)."""
        if len(self.coeffs) <= 1:
            return self
        return self(Poly((rat(k), 1)))

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        return self / self.lead

    # -- misc -----------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        return self.to_text()

    def to_text(self, var: str = "n") -> str:
        """Canonical text form, descending powers; parses back exactly."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif mag == 1:
                body = var if k == 1 else f"{var}^{k}"
            else:
                body = f"{mag}*{var}" if k == 1 else f"{mag}*{var}^{k}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def poly_eval(p: Poly, v):
    return p(v)


def poly_shift(p: Poly, k) -> Poly:
    return p.shift(k)


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_divmod(p: Poly, q: Poly):
    return divmod(p, q)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over Q; gcd(0, 0) errors."""
    if p.is_zero and q.is_zero:
        raise ValueError("gcd of two zero polynomials")
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_VAR_NAMES = ("n", "x")


class _Scanner:
    """Tokenizer for the polynomial grammar.  Tokens: INT, VAR, one of +-*/^()."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: list[tuple[str, str, int]] = []
        self._scan()
        self.idx = 0

    def _scan(self):
        t, i = self.text, 0
        while i < len(t):
            ch = t[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < len(t) and t[j].isdigit():
                    j += 1
                self.tokens.append(("INT", t[i:j], i))
                i = j
                continue
            if ch in "+-*/^()":
                self.tokens.append((ch, ch, i))
                i += 1
                continue
            if ch.isalpha():
                if ch in _VAR_NAMES:
                    self.tokens.append(("VAR", ch, i))
                    i += 1
                    continue
                raise PolyParseError(ch, i, t)
            raise PolyParseError(ch, i, t)
        self.tokens.append(("END", "", len(t)))

    def peek(self):
        return self.tokens[self.idx]

    def next(self):
        tok = self.tokens[self.idx]
        if tok[0] != "END":
            self.idx += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise PolyParseError(tok[1] or "end of input", tok[2], self.text)
        return tok


def _parse_uint(sc: _Scanner) -> int:
    tok = sc.expect("INT")
    return int(tok[1])


def _parse_rational(sc: _Scanner) -> Fraction:
    tok = sc.expect("INT")
    num = int(tok[1])
    if sc.peek()[0] == "/":
        sc.next()
        den_tok = sc.expect("INT")
        den = int(den_tok[1])
        if den == 0:
            raise PolyParseError(den_tok[1], den_tok[2], sc.text)
        return Fraction(num, den)
    return Fraction(num)


def _parse_term(sc: _Scanner) -> Poly:
    """term := rational ['*'] [var ['^' uint]] | var ['^' uint]"""
    coeff = Fraction(1)
    have_coeff = False
    if sc.peek()[0] == "INT":
        coeff = _parse_rational(sc)
        have_coeff = True
        if sc.peek()[0] == "*":
            sc.next()
            sc_tok = sc.peek()
            if sc_tok[0] != "VAR":
                raise PolyParseError(sc_tok[1] or "end of input", sc_tok[2], sc.text)
    if sc.peek()[0] == "VAR":
        sc.next()
        power = 1
        if sc.peek()[0] == "^":
            sc.next()
            power = _parse_uint(sc)
        out = [Fraction(0)] * power + [coeff]
        return Poly(out)
    if not have_coeff:
        tok = sc.peek()
        raise PolyParseError(tok[1] or "end of input", tok[2], sc.text)
    return Poly((coeff,))


def _parse_sum(sc: _Scanner, stop=("END",)) -> Poly:
    total = Poly.zero()
    sign = 1
    tok = sc.peek()
    if tok[0] in "+-":
        sc.next()
        sign = -1 if tok[0] == "-" else 1
    while True:
        total = total + sign * _parse_term(sc)
        tok = sc.peek()
        if tok[0] in stop:
            return total
        if tok[0] == "+":
            sign = 1
        elif tok[0] == "-":
            sign = -1
        else:
            raise PolyParseError(tok[1] or "end of input", tok[2], sc.text)
        sc.next()


def parse_poly(text: str) -> Poly:
    """Parse the plain polynomial grammar.

    Signed terms ``c``, ``c*n^k``, ``n^k``, ``n`` with integer or p/q
    coefficients; the ``*`` is optional and whitespace is ignored.  The index
    variable is ``n``, with ``x`` accepted as a synonym.

    >>> parse_poly("-n^2 + 3/2 n - 1") == Poly([-1, Fraction(3, 2), -1])
    True
    """
    sc = _Scanner(text)
    p = _parse_sum(sc)
    sc.expect("END")
    return p


def parse_factored(text: str) -> tuple[Fraction, list[tuple[Poly, int]]]:
    """Parse a factored polynomial: optional rational constant and
    ``(poly)^k`` blocks joined by ``*`` (the ``*`` is optional).

    Returns (constant, [(monic_block, multiplicity), ...]); block leading
    coefficients are folded into the constant, equal blocks are merged.

    >>> c, blocks = parse_factored("-2*(n)^3*(2n-1)")
    >>> c
    Fraction(-4, 1)
    >>> [(str(b), m) for b, m in blocks]
    [('n', 3), ('n - 1/2', 1)]
    """
    sc = _Scanner(text)
    const = Fraction(1)
    raw: list[tuple[Poly, int]] = []
    tok = sc.peek()
    if tok[0] in "+-":
        sc.next()
        if tok[0] == "-":
            const = -const
    first = True
    while True:
        tok = sc.peek()
        if tok[0] == "END":
            if first:
                raise PolyParseError("end of input", tok[2], sc.text)
            break
        if not first:
            if tok[0] == "*":
                sc.next()
                tok = sc.peek()
            elif tok[0] != "(":
                raise PolyParseError(tok[1] or "end of input", tok[2], sc.text)
        if tok[0] == "INT":
            const *= _parse_rational(sc)
        elif tok[0] == "(":
            sc.next()
            block = _parse_sum(sc, stop=(")",))
            sc.expect(")")
            mult = 1
            if sc.peek()[0] == "^":
                sc.next()
                mult = _parse_uint(sc)
            if block.is_zero:
                raise PolyParseError(")", tok[2], sc.text)
            if mult > 0:
                const *= block.lead ** mult
                raw.append((block.monic(), mult))
        else:
            raise PolyParseError(tok[1] or "end of input", tok[2], sc.text)
        first = False
    merged: dict[Poly, int] = {}
    order: list[Poly] = []
    for b, m in raw:
        if b not in merged:
            merged[b] = 0
            order.append(b)
        merged[b] += m
    return const, [(b, merged[b]) for b in order]


def assemble_factored(const: Fraction, blocks: list[tuple[Poly, int]]) -> Poly:
    """Multiply a factored form back out."""
    p = Poly.const(const)
    for b, m in blocks:
        p = p * b**m
    return p


# ---------------------------------------------------------------------------
# rational roots and integer-rooted factorization
# ---------------------------------------------------------------------------


def _divisors(n: int) -> list[int]:
    ds = [1]
    for p, e in factor_int(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def rational_roots(p: Poly) -> dict[Fraction, int]:
    """All rational roots of p with multiplicities, keys in ascending order.

    >>> rational_roots(Poly([0, -1, 2]))     # 2x^2 - x
    {Fraction(0, 1): 1, Fraction(1, 2): 1}
    """
    if p.is_zero:
        raise ValueError("zero polynomial vanishes everywhere")
    if p.degree == 0:
        return {}
    # clear denominators to an integer polynomial
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    # strip the root at zero
    zmult = 0
    while ints[0] == 0:
        ints.pop(0)
        zmult += 1
    found: dict[Fraction, int] = {}
    if len(ints) > 1:
        a0, ad = abs(ints[0]), abs(ints[-1])
        cands = set()
        for num in _divisors(a0):
            for d in _divisors(ad):
                if math.gcd(num, d) == 1:
                    cands.add(Fraction(num, d))
                    cands.add(Fraction(-num, d))
        work = Poly(ints)
        for r in sorted(cands):
            if work(r) == 0:
                lin = Poly((-r, 1))
                mult = 0
                while True:
                    q, rem = divmod(work, lin)
                    if not rem.is_zero:
                        break
                    work, mult = q, mult + 1
                found[r] = mult
    out: dict[Fraction, int] = {}
    for r in sorted(found) if zmult == 0 else sorted(set(found) | {Fraction(0)}):
        if r == 0 and zmult:
            out[Fraction(0)] = zmult
        else:
            out[r] = found[r]
    return out


def factor_integer_rooted(p: Poly) -> tuple[Fraction, list[tuple[Poly, int]], Poly]:
    """Split p into content * product of monic linear factors * residual.

    content is the leading coefficient, factors are (x - r)^m for every
    rational root r in ascending order, and the residual is monic with no
    rational roots (Poly.one() when p splits completely).

    >>> c, fs, res = factor_integer_rooted(Poly([0, 1, -2]))   # -2x^2 + x
    >>> c, [(str(f), m) for f, m in fs], str(res)
    (Fraction(-2, 1), [('n', 1), ('n - 1/2', 1)], '1')
    """
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    content = p.lead
    work = p.monic()
    factors: list[tuple[Poly, int]] = []
    for r, m in rational_roots(p).items():
        lin = Poly((-r, 1))
        factors.append((lin, m))
        for _ in range(m):
            work = work // lin
    return content, factors, work


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class RatFunc:
    """Quotient of two polynomials, stored reduced with a monic denominator.

    >>> f = RatFunc(Poly([0, 1]), Poly([1, 1]))     # x / (x+1)
    >>> f + 1
    RatFunc(2*n + 1, n + 1)
    >>> f(Fraction(1))
    Fraction(1, 2)
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=Poly((1,))):
        num = num if isinstance(num, Poly) else Poly._coerce(num)
        den = den if isinstance(den, Poly) else Poly._coerce(den)
        if num is None or den is None:
            raise TypeError("RatFunc needs polynomial or rational arguments")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num, self.den = Poly.zero(), Poly.one()
            return
        g = poly_gcd(num, den)
        num, den = num // g, den // g
        lead = den.lead
        self.num = num / lead
        self.den = den / lead

    @property
    def is_poly(self) -> bool:
        return self.den == Poly.one()

    def as_poly(self) -> Poly:
        if not self.is_poly:
            raise ValueError(f"{self} is a proper rational function")
        return self.num

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (Poly, int, Fraction)):
            return RatFunc(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def shift(self, k) -> "RatFunc":
        return RatFunc(self.num.shift(k), self.den.shift(k))

    def __call__(self, v):
        dv = self.den(v)
        if dv == 0:
            return INF
        return self.num(v) / dv

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.is_poly:
            return f"RatFunc({self.num})"
        return f"RatFunc({self.num}, {self.den})"

    def __str__(self):
        if self.is_poly:
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def taylor_div(num: Poly, den: Poly, order: int) -> list[Fraction]:
    """First `order` Taylor coefficients of num/den at 0; den(0) != 0."""
    if den.coeff(0) == 0:
        raise ZeroDivisionError("denominator vanishes at the expansion point")
    inv0 = 1 / den.coeff(0)
    out: list[Fraction] = []
    for k in range(order):
        acc = num.coeff(k)
        for j in range(k):
            acc -= out[j] * den.coeff(k - j)
        out.append(acc * inv0)
    return out
