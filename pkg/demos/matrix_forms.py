"""Matrix products behind CF evaluation, three ways.

A polynomial 2x2 family M(n) converts to companion (CF) shape by an
explicit coboundary; the Euler family also triangularizes, which turns
the whole matrix product into a one-pass diagonal-plus-corner formula.
"""

from functools import reduce

from polycf import (
    Mat2,
    Poly,
    PolyMat2,
    cf_form_states,
    coboundary_check,
    euler_cf_matrix,
    euler_left_eigen,
    euler_partial_value,
    rederive_euler_sum,
    to_cf_form,
    to_integral_cf_form,
    triangularize,
    trivial_triple,
)

X = Poly.x()


def main():
    m = PolyMat2(X + 1, X + 2, X + 3, X + 4)
    cfm, u, init = to_cf_form(m)
    print(f"M(n)          = {m}")
    print(f"cf form       = {cfm}")
    print(f"coboundary    = {u}   holds: {coboundary_check(m, cfm, u)}")
    print(f"integral form = {to_integral_cf_form(m)}")

    # states carry consecutive columns of M(1)...M(k) applied to (1; 0)
    n = 6
    brute = reduce(lambda x, y: x * y, [m.eval_at(i) for i in range(1, n + 1)], Mat2.identity())
    state = cf_form_states(m, n)[n - 1]
    print(f"\ncolumn check at k = {n}: ({brute.a}, {brute.c}) == ({state.b}, {state.d})")
    assert (brute.a, brute.c) == (state.b, state.d)

    # Euler step matrices triangularize along the (1, h2) eigenvector
    h1, h2 = X + 1, X + 2
    t, alpha = triangularize(euler_cf_matrix(h1, h2), euler_left_eigen(h1, h2))
    print(f"\nEuler step for h1 = {h1}, h2 = {h2}")
    print(f"T     = {t}")
    print(f"alpha = {alpha}")

    # the triangular route and the summation formula agree on partials
    for depth in (2, 4, 8):
        via_t = rederive_euler_sum(h1, h2, depth)
        via_sum = euler_partial_value(trivial_triple(h1, h2), depth - 1)
        print(f"K_1^{depth - 1} = {via_t}  (summation route: {via_sum})")
        assert via_t == via_sum


if __name__ == "__main__":
    main()
