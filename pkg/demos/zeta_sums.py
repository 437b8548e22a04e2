"""Telescoping a CF's underlying series into zeta values.

For equal-degree, equal-lead h1 and h2 with integer roots, the summand
prod h1(i)/h2(i+1) is a rational function whose partial fractions
telescope; the closed form is an exact rational combination of zeta
values, and the CF limit follows as prefactor * (1/S - 1).
"""

from fractions import Fraction

from polycf import (
    CFSpec,
    Poly,
    build_euler_cf,
    cf_limit_from_zeta,
    numeric_limit,
    telescoped_summand,
    telescoping_zeta_sum,
    trivial_triple,
)

X = Poly.x()


def show(t):
    combo = telescoping_zeta_sum(t)
    print(f"h1 = {t.h1}, h2 = {t.h2}")
    print(f"  summand s_k = {telescoped_summand(t)}")
    print(f"  sum  = {combo}")
    if combo.status == combo.DIVERGENT:
        print(f"  cf   = {cf_limit_from_zeta(t, combo).divergent_value()} (sum diverges)")
    else:
        print(f"  cf   = {cf_limit_from_zeta(t, combo)}")
    print()
    return combo


def main():
    # sum 1/k^d: the d-fold repeated root telescopes to a single zeta
    for d in (2, 3):
        show(trivial_triple(X**d, X**d))

    # shifted pairing: half the sum of two consecutive zetas
    show(trivial_triple(X**3 * (X + 2), X**4))

    # mixed pairing with rational leftovers in the closed form
    combo = show(trivial_triple(X**3, X**2 * (X + 1)))

    # the same object numerically: walk the CF until the checkpoint delta
    # drops, then compare against the symbolic value
    t = trivial_triple(X**3, X**2 * (X + 1))
    a, b = build_euler_cf(t)
    est = numeric_limit(CFSpec(b=b, a=a), Fraction(1, 10**6))
    zeta = {2: Fraction(16449340668, 10**10), 3: Fraction(12020569031, 10**10)}
    exact = cf_limit_from_zeta(t, combo).evaluate(zeta)
    print(f"numeric check: depth {est.depth_used}, "
          f"|estimate - closed form| = {float(abs(est.value - exact)):.2e}")

    # one step below the convergent regime the harmonic part survives
    print()
    show(trivial_triple(X**2 * (X + 2), X**3))


if __name__ == "__main__":
    main()
