"""Classic constants out of polynomial continued fractions.

Every value below is computed with exact integer arithmetic; floats only
appear at print time.
"""

from fractions import Fraction

from polycf import CFSpec, Poly, cf_value, constant_cf_limit
from polycf.cli import decimal_string

X = Poly.x()


def show(label, value, digits=30):
    print(f"{label:<28} {decimal_string(value, digits)}")


def main():
    print("exact convergents, printed to 30 digits\n")

    # K i/i = 1/(e-1): thirty terms already pin ~30 digits
    show("K i/i (depth 30)", cf_value(CFSpec(b=X, a=X), 30))

    # K -i/(i+2) = (2-e)/(e-1), same factorial-speed convergence
    show("K -i/(i+2) (depth 30)", cf_value(CFSpec(b=-X, a=X + 2), 30))

    # 3 + K (2i-1)^2/6 walks toward pi polynomially instead
    v = 3 + cf_value(CFSpec(b=(2 * X - 1) ** 2, a=Poly((6,))), 4000)
    show("3 + K (2i-1)^2/6 (depth 4e3)", v, 12)

    # K -i(2i-1)/(3i+1) = 2/pi - 1
    show("K -i(2i-1)/(3i+1) (d. 200)", cf_value(CFSpec(b=-X * (2 * X - 1), a=3 * X + 1), 200), 12)

    # constant terms: the limit is a quadratic surd, classified exactly
    print()
    for a, b in [(1, 1), (2, 1), (0, 1)]:
        lim = constant_cf_limit(Fraction(a), Fraction(b))
        root = f", root {lim.root}" if lim.kind == "converges" else ""
        print(f"K {b}/{a}: {lim.kind}{root}")


if __name__ == "__main__":
    main()
