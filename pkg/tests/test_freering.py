"""Free skew polynomial arithmetic against a reference expander.

The reference multiplier below recurses on words from the *left* end
(production code pushes constants in from the right), so agreement on
random inputs exercises both the product formula and associativity of
the expansion order.
"""

import pytest

from skewpoly import (
    BOTTOM,
    RingMismatch,
    SkewPolynomial,
    ZeroPolynomial,
    constant,
    conventional_frame,
    from_terms,
    mono_key,
    monomial,
    mul,
    mul_monomial_constant,
    one,
    poly_from_json,
    variable,
    zero,
)
from conftest import random_nonzero_poly, random_point, random_poly


def ref_word_times_constant(frame, word, a):
    """(word) * a, recursing on the leftmost character."""
    if a.is_zero():
        return {}
    if not word:
        return {(): a}
    rest = ref_word_times_constant(frame, word[1:], a)
    i = word[0]
    out = {}
    for w, c in rest.items():
        sig = frame.sigma_at(c)[i - 1]
        for j in range(frame.n):
            if not sig[j].is_zero():
                key = (j + 1,) + w
                out[key] = out.get(key, frame.ring.zero()) + sig[j]
        d = frame.delta_at(c)[i - 1]
        if not d.is_zero():
            out[w] = out.get(w, frame.ring.zero()) + d
    return {w: c for w, c in out.items() if not c.is_zero()}


def reference_mul(F, G):
    frame = F.frame
    out = {}
    for mw, fc in F.terms.items():
        for nw, gc in G.terms.items():
            for w, c in ref_word_times_constant(frame, mw, gc).items():
                key = w + nw
                out[key] = out.get(key, frame.ring.zero()) + fc * c
    return SkewPolynomial(frame, out)


# ---------------------------------------------------------------------------
# Module operations
# ---------------------------------------------------------------------------

def test_add_identities(conv_gf5_2, rng):
    F = random_poly(conv_gf5_2, rng)
    assert F + zero(conv_gf5_2) == F
    assert F.scale_left(conv_gf5_2.ring.zero()) == zero(conv_gf5_2)
    assert F - F == zero(conv_gf5_2)


def test_add_over_gf2():
    import skewpoly as sp

    gf2 = sp.FiniteField(2)
    f = conventional_frame(gf2, 1)
    x = variable(f, 1)
    assert (x + one(f)) + x == one(f)


def test_scale_left_is_left_action(frob_gf4_2, rng):
    gf4 = frob_gf4_2.ring
    w = gf4.gen()
    F = random_poly(frob_gf4_2, rng)
    assert w * F == F.scale_left(w)
    assert (w * F).coefficient((1,)) == w * F.coefficient((1,))


def test_frame_mismatch_raises(conv_gf5_2, gf5):
    other = conventional_frame(gf5, 2)
    with pytest.raises(RingMismatch):
        variable(conv_gf5_2, 1) + variable(other, 1)
    with pytest.raises(RingMismatch):
        mul(variable(conv_gf5_2, 1), variable(other, 1))


def test_mul_monomial_constant_examples(conv_gf5_2, frob_gf4_2):
    gf5 = conv_gf5_2.ring
    a = gf5(3)
    assert mul_monomial_constant(conv_gf5_2, (), a) == constant(conv_gf5_2, a)
    # conventional frame: constants slide through unchanged
    assert mul_monomial_constant(conv_gf5_2, (1, 2), a) == monomial(conv_gf5_2, (1, 2), a)
    # Frobenius twist: x1 * w = w^2 x1
    gf4 = frob_gf4_2.ring
    w = gf4.gen()
    assert mul_monomial_constant(frob_gf4_2, (1,), w) == monomial(frob_gf4_2, (1,), w * w)


def test_mul_gf4_frobenius_hand_value(frob_gf4_2):
    gf4 = frob_gf4_2.ring
    w = gf4.gen()
    got = mul(variable(frob_gf4_2, 1), w * variable(frob_gf4_2, 1))
    assert got == monomial(frob_gf4_2, (1, 1), w * w)


def test_monomials_concatenate(conv_gf5_2, frob_gf4_2, quat_inner_2):
    for frame in (conv_gf5_2, frob_gf4_2, quat_inner_2):
        m = monomial(frame, (1, 2))
        n = monomial(frame, (2, 1, 1))
        assert mul(m, n) == monomial(frame, (1, 2, 2, 1, 1))


def test_free_variables_do_not_commute(conv_gf5_2):
    x1, x2 = variable(conv_gf5_2, 1), variable(conv_gf5_2, 2)
    assert mul(x1, x2) == monomial(conv_gf5_2, (1, 2))
    assert mul(x2, x1) == monomial(conv_gf5_2, (2, 1))
    assert mul(x1, x2) != mul(x2, x1)


def test_degree_and_bottom(conv_gf5_2):
    assert zero(conv_gf5_2).degree() is BOTTOM
    assert repr(BOTTOM) == "BOTTOM"
    F = monomial(conv_gf5_2, (1, 2)) + variable(conv_gf5_2, 1)
    assert F.degree() == 2
    with pytest.raises(TypeError):
        BOTTOM + 1  # the sentinel refuses arithmetic


def test_leading_monomial_order(conv_gf5_2):
    # graded first, then rightmost character decides
    F = monomial(conv_gf5_2, (1, 2)) + monomial(conv_gf5_2, (2, 1))
    assert F.leading_monomial() == (1, 2)
    assert mono_key((2, 1)) < mono_key((1, 2))
    assert mono_key((1,)) < mono_key((2, 2))  # degree dominates
    with pytest.raises(ZeroPolynomial):
        zero(conv_gf5_2).leading_monomial()


def test_right_append_raises_leading_monomial(conv_gf5_2, frob_gf4_2, rng):
    # multiplying by (x_n - a_n) must append x_n to the leading monomial
    for frame in (conv_gf5_2, frob_gf4_2):
        n = frame.n
        a = random_point(frame, rng)[0]
        rhs = variable(frame, n) - constant(frame, a)
        for _ in range(25):
            G = random_nonzero_poly(frame, rng)
            assert mul(G, rhs).leading_monomial() == G.leading_monomial() + (n,)


def test_reference_mul_agrees(conv_gf5_2, frob_gf4_2, frob_gf9_2, quat_inner_2, rng):
    for frame in (conv_gf5_2, frob_gf4_2, frob_gf9_2, quat_inner_2):
        rounds = 40 if frame.ring.is_finite else 15
        for _ in range(rounds):
            F = random_poly(frame, rng, max_deg=3, max_terms=3)
            G = random_poly(frame, rng, max_deg=3, max_terms=3)
            assert mul(F, G) == reference_mul(F, G)


def test_degree_additivity(conv_gf5_2, frob_gf4_2, frob_gf9_2, quat_inner_2, rng):
    for frame in (conv_gf5_2, frob_gf4_2, frob_gf9_2, quat_inner_2):
        rounds = 60 if frame.ring.is_finite else 20
        for _ in range(rounds):
            F = random_nonzero_poly(frame, rng)
            G = random_nonzero_poly(frame, rng)
            assert mul(F, G).degree() == F.degree() + G.degree()


def test_associativity_random(conv_gf5_2, frob_gf4_2, quat_inner_2, rng):
    for frame in (conv_gf5_2, frob_gf4_2, quat_inner_2):
        rounds = 25 if frame.ring.is_finite else 8
        for _ in range(rounds):
            F = random_poly(frame, rng, max_deg=2, max_terms=3)
            G = random_poly(frame, rng, max_deg=2, max_terms=3)
            H = random_poly(frame, rng, max_deg=2, max_terms=3)
            assert mul(mul(F, G), H) == mul(F, mul(G, H))


def test_distributivity_random(frob_gf9_2, quat_inner_2, rng):
    for frame in (frob_gf9_2, quat_inner_2):
        rounds = 30 if frame.ring.is_finite else 10
        for _ in range(rounds):
            F, G, H = (random_poly(frame, rng) for _ in range(3))
            assert mul(F, G + H) == mul(F, G) + mul(F, H)
            assert mul(F + G, H) == mul(F, H) + mul(G, H)


def test_conventional_frame_reduces_to_free_algebra(conv_gf5_2, rng):
    # with sigma = Id and delta = 0 the product is the free-algebra one:
    # coefficients commute out front, words concatenate
    for _ in range(40):
        F = random_poly(conv_gf5_2, rng)
        G = random_poly(conv_gf5_2, rng)
        expect = {}
        zero_el = conv_gf5_2.ring.zero()
        for mw, fc in F.terms.items():
            for nw, gc in G.terms.items():
                key = mw + nw
                expect[key] = expect.get(key, zero_el) + fc * gc
        assert mul(F, G) == SkewPolynomial(conv_gf5_2, expect)


def test_one_is_identity(frob_gf4_2, quat_inner_2, rng):
    for frame in (frob_gf4_2, quat_inner_2):
        F = random_poly(frame, rng)
        assert mul(one(frame), F) == F
        assert mul(F, one(frame)) == F


def test_text_rendering(conv_gf5_2):
    gf5 = conv_gf5_2.ring
    F = from_terms(conv_gf5_2, [((1, 2, 1), gf5(3)), ((), gf5(2))])
    assert F.to_text() == "3*x1.x2.x1 + 2*1"
    assert zero(conv_gf5_2).to_text() == "0"


def test_json_round_trip(conv_gf5_2, frob_gf9_2, quat_inner_2, rng):
    for frame in (conv_gf5_2, frob_gf9_2, quat_inner_2):
        F = random_poly(frame, rng)
        assert poly_from_json(frame, F.to_json()) == F
    obj = random_poly(conv_gf5_2, rng).to_json()
    for term in obj:
        assert set(term) == {"monomial", "coeff"}
