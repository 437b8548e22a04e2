"""Convergent engine and Mobius machinery."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polycf import (
    CFLimit,
    CFSpec,
    InvalidInput,
    Mat2,
    Poly,
    QuadSurd,
    SingularMatrix,
    cf_step_matrix,
    cf_value,
    constant_cf_limit,
    convergents,
    convergents_from_terms,
    is_inf,
    mobius_apply,
    parse_poly,
    product_apply,
    INF,
)


# --- worked oracle: 4/11 = 1/(2 + 1/(1 + 1/3)) ---


def test_four_elevenths_explicit():
    cf = CFSpec(b=[1, 1, 1], a=[2, 1, 3])
    assert cf_value(cf, 3) == Fraction(4, 11)
    states = list(convergents(cf))
    assert [s.value for s in states[1:]] == [
        Fraction(1, 2),
        Fraction(1, 3),
        Fraction(4, 11),
    ]
    assert states[-1].reduced() == (4, 11)


def test_four_elevenths_polynomial_route():
    # a(1), a(2), a(3) = 2, 1, 3 interpolated by one quadratic
    a = parse_poly("3/2n^2-11/2n+6")
    assert [a(Fraction(i)) for i in (1, 2, 3)] == [2, 1, 3]
    assert cf_value(CFSpec(b=Poly.one(), a=a), 3) == Fraction(4, 11)


def test_head_and_depth_two():
    # -1/(3 + (-2)/4) = -2/5
    cf = CFSpec(b=parse_poly("-n"), a=parse_poly("n+2"))
    assert cf_value(cf, 2) == Fraction(-2, 5)
    assert cf_value(CFSpec(b=parse_poly("-n"), a=parse_poly("n+2"), head=Fraction(3)), 2) == Fraction(13, 5)


def test_depth_zero_is_head():
    cf = CFSpec(b=Poly.one(), a=Poly.one(), head=Fraction(7, 2))
    assert cf_value(cf, 0) == Fraction(7, 2)


# --- Mat2 case table ---


def test_mobius_cases():
    m = Mat2(1, 2, 3, 4)
    assert m.apply(Fraction(1)) == Fraction(3, 7)
    assert m.apply(Fraction(-4, 3)) is INF  # cz + d = 0
    assert m.apply(INF) == Fraction(1, 3)  # a/c
    assert Mat2(1, 2, 0, 4).apply(INF) is INF  # c = 0
    assert mobius_apply(Mat2(5, 0, 0, 5), Fraction(9, 7)) == Fraction(9, 7)
    assert Mat2(0, 1, 1, 0).apply(Fraction(0)) is INF


def test_inverse_and_singular():
    m = Mat2(1, 2, 3, 4)
    assert m * m.inverse() == Mat2.identity()
    with pytest.raises(SingularMatrix):
        Mat2(1, 2, 2, 4).inverse()


def test_step_matrix_composition():
    # state matrix equals the literal product of step matrices
    rng = random.Random(7)
    bs = [Fraction(rng.randint(1, 9)) for _ in range(12)]
    as_ = [Fraction(rng.randint(-5, 5)) for _ in range(12)]
    prod = Mat2.identity()
    states = list(convergents_from_terms(zip(bs, as_)))
    assert states[0].as_matrix() == prod
    for k, (b, a) in enumerate(zip(bs, as_)):
        prod = prod * cf_step_matrix(b, a)
        assert states[k + 1].as_matrix() == prod


# --- determinant identity ---


def test_det_identity_fixed():
    cf = CFSpec(b=parse_poly("-n^2"), a=parse_poly("2n+1"))
    prod = Fraction(1)
    for state in convergents(cf):
        n = state.n
        if n > 1:
            prod *= -(-Fraction(n - 1) ** 2)
        lhs = state.p_prev * state.q - state.p * state.q_prev
        assert lhs == prod
        if n >= 30:
            break


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.tuples(
            st.fractions(min_value=-5, max_value=5).filter(lambda x: x != 0),
            st.fractions(min_value=-5, max_value=5),
        ),
        min_size=1,
        max_size=25,
    )
)
def test_det_identity_random(pairs):
    prod = Fraction(1)
    for state in convergents_from_terms(pairs):
        lhs = state.p_prev * state.q - state.p * state.q_prev
        assert lhs == prod
        if state.n <= len(pairs):
            prod *= -pairs[state.n - 1][0]


# --- truncation and poles ---


def test_truncation_freezes_value():
    cf = CFSpec(b=[2, 3, 0, 5], a=[1, 1, 1, 1])
    states = list(convergents(cf))
    assert states[-1].truncated
    frozen = states[-1].value
    assert frozen == cf_value(cf, 2)
    # any depth past the zero term returns the frozen value
    assert cf_value(cf, 3) == frozen
    assert cf_value(cf, 4) == frozen


def test_zero_b_first_term():
    cf = CFSpec(b=[0], a=[9])
    assert cf_value(cf, 1) == 0


def test_pole_mid_stream_is_not_truncation():
    # b=1, a=0 gives alternating INF / 0 convergents, stream keeps going
    cf = CFSpec(b=Poly.one(), a=Poly.zero())
    states = []
    for s in convergents(cf):
        states.append(s)
        if len(states) == 6:
            break
    vals = [s.value for s in states[1:]]
    assert vals[0] is INF and vals[2] is INF
    assert vals[1] == 0 and vals[3] == 0
    assert not any(s.truncated for s in states)


def test_finite_sequence_ends_stream():
    cf = CFSpec(b=[1, 1], a=[1, 1])
    assert len(list(convergents(cf))) == 3
    with pytest.raises(InvalidInput):
        cf_value(cf, 3)


def test_int_fast_path():
    states = list(convergents_from_terms([(2, 3), (Fraction(1, 2), 1), (4, 5)]))
    assert isinstance(states[1].p, int) and isinstance(states[1].q, int)
    assert isinstance(states[2].p, Fraction)


# --- product_apply ---


def test_product_apply_endpoints():
    cf = CFSpec(b=[1, 1, 1], a=[2, 1, 3])
    # at 0: the depth-n convergent; at INF: the previous one
    assert product_apply(cf, 3, Fraction(0)) == Fraction(4, 11)
    assert product_apply(cf, 3, INF) == Fraction(1, 3)
    # applying the tail value reproduces deeper truncations exactly
    tail = Fraction(1, 3)  # value of K_3^3 = 1/3
    assert product_apply(cf, 2, tail) == Fraction(4, 11)


# --- constant-coefficient classifier ---


def test_constant_classifier_domain():
    with pytest.raises(InvalidInput):
        constant_cf_limit(3, 0)


def test_constant_classifier_oscillation():
    assert constant_cf_limit(0, 2).kind == CFLimit.OSCILLATES
    assert constant_cf_limit(1, -1).kind == CFLimit.OSCILLATES  # disc = -3
    assert constant_cf_limit(2, -2).kind == CFLimit.OSCILLATES  # disc = -4


def test_constant_classifier_golden():
    res = constant_cf_limit(1, 1)
    assert res.kind == CFLimit.CONVERGES
    assert res.root == QuadSurd(Fraction(-1, 2), Fraction(1, 2), 5)
    # mirrored sign picks the other root
    neg = constant_cf_limit(-1, 1)
    assert neg.root == QuadSurd(Fraction(1, 2), Fraction(-1, 2), 5)


def test_constant_classifier_rational_root():
    # A=3, B=4: x^2+3x-4 = (x+4)(x-1), attracting root 1
    res = constant_cf_limit(3, 4)
    assert res.root.is_rational and res.root.as_fraction() == 1
    # convergents of K 4/3 approach 1
    v = cf_value(CFSpec(b=Poly.const(4), a=Poly.const(3)), 40)
    assert abs(v - 1) < Fraction(1, 10**10)


def test_constant_classifier_matches_iteration():
    # exact root is the attracting fixed point: x_{n+1} = B/(A+x_n)
    for A, B in [(1, 1), (-1, 1), (2, 1), (-3, 2), (5, -2)]:
        res = constant_cf_limit(A, B)
        assert res.kind == CFLimit.CONVERGES
        root = res.root
        # root solves x^2 + Ax - B = 0
        assert root * root + root * A - B == QuadSurd(0)
        # and iteration from 0 approaches it
        x = Fraction(0)
        for _ in range(60):
            x = Fraction(B) / (A + x)
        gap = x - root.approx(30)
        assert abs(gap) < Fraction(1, 10**6)
