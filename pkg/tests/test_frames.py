"""Frame construction, validation and application."""

import pytest

from skewpoly import (
    InvalidFrame,
    LinearMap,
    conventional_frame,
    diagonal_frame,
    frame_from_json,
    frobenius_frame,
    inner_frame,
    validate_frame,
)
from skewpoly.frames import QuatMap, apply_delta, apply_sigma, block_frame


def test_conventional_frame_valid(gf5):
    f = conventional_frame(gf5, 2)
    assert validate_frame(f).valid
    a = gf5(3)
    sig = apply_sigma(f, a)
    assert sig[0][0] == a and sig[1][1] == a
    assert sig[0][1].is_zero() and sig[1][0].is_zero()
    assert all(d.is_zero() for d in apply_delta(f, a))


def test_frobenius_frame_exhaustive_validation(gf4, gf9):
    # the validator runs over every pair for fields this small
    for fld, frame in ((gf4, frobenius_frame(gf4, 2)), (gf9, frobenius_frame(gf9, 2))):
        report = validate_frame(frame)
        assert report.valid, report.summary()
        for a in fld.elements():
            for b in fld.elements():
                sa, sb, sab = (frame.sigma_at(x) for x in (a, b, a * b))
                assert sab[0][0] == sa[0][0] * sb[0][0]


def test_frobenius_application(gf4):
    f = frobenius_frame(gf4, 2)
    w = gf4.gen()
    sig = apply_sigma(f, w)
    assert sig[0][0] == w * w and sig[1][1] == w * w


def test_delta_vanishes_at_zero_and_one(gf4, gf9, quat_inner_2):
    frames = [frobenius_frame(gf4, 2), frobenius_frame(gf9, 1), quat_inner_2]
    for f in frames:
        assert all(d.is_zero() for d in apply_delta(f, f.ring.zero()))
        assert all(d.is_zero() for d in apply_delta(f, f.ring.one()))


def test_invalid_unit_not_preserved(gf4):
    # sigma sending 1 to 0 cannot be a matrix morphism
    bad = LinearMap.zero(gf4)
    with pytest.raises(InvalidFrame) as exc:
        diagonal_frame(gf4, [bad])
    assert "unit" in str(exc.value)


def test_invalid_shifted_frobenius(gf4):
    # a -> a^2 + 1 is not additive-multiplicative
    shift = LinearMap.from_images(gf4, [b ** 2 + gf4.one() for b in (gf4(1), gf4.gen())])
    with pytest.raises(InvalidFrame):
        diagonal_frame(gf4, [shift])


def test_invalid_frame_report_carries_witness(gf4):
    cube = LinearMap.from_images(gf4, [gf4(1) ** 3, gf4.gen() ** 3])
    # a -> a^3 is additive on the basis but not multiplicative on GF(4)
    from skewpoly.frames import Frame

    f = Frame(gf4, [[cube]], [LinearMap.zero(gf4)])
    report = validate_frame(f)
    assert not report.valid
    law, a, b = report.failures[0]
    assert "sigma" in law
    # the witness pair really does violate the law
    assert f.sigma_at(a * b)[0][0] != f.sigma_at(a)[0][0] * f.sigma_at(b)[0][0]


def test_inner_frame_zero_beta_gives_zero_delta(gf9):
    f0 = frobenius_frame(gf9, 2)
    f = inner_frame(gf9, f0.sigma, (gf9.zero(), gf9.zero()))
    a = gf9.gen()
    assert all(d.is_zero() for d in apply_delta(f, a))


def test_inner_frame_commutative_identity_sigma_gives_zero_delta(gf5):
    f0 = conventional_frame(gf5, 2)
    f = inner_frame(gf5, f0.sigma, (gf5(1), gf5(2)))
    assert all(d.is_zero() for d in apply_delta(f, gf5(3)))


def test_inner_frame_quaternion_example(quat):
    f0 = conventional_frame(quat, 1)
    f = inner_frame(quat, f0.sigma, (quat.i(),))
    j = quat.j()
    # delta(j) = j i - i j = -2k
    assert apply_delta(f, j)[0] == quat(0, 0, 0, -2)


def test_inner_frame_validates(gf4, gf9, quat_inner_2, rng):
    f0 = frobenius_frame(gf4, 2)
    f = inner_frame(gf4, f0.sigma, (gf4.gen(), gf4(1)))
    assert validate_frame(f).valid
    assert validate_frame(quat_inner_2).valid


def test_frame_laws_hold_on_samples(gf4, gf9, quat_inner_2, rng):
    frames = [frobenius_frame(gf4, 2), frobenius_frame(gf9, 2), quat_inner_2]
    for f in frames:
        ring = f.ring
        for _ in range(60):
            if ring.is_finite:
                a, b = ring.random_element(rng), ring.random_element(rng)
            else:
                a, b = ring.random_element(rng, 3), ring.random_element(rng, 3)
            sa, sb, sab = f.sigma_at(a), f.sigma_at(b), f.sigma_at(a * b)
            for i in range(f.n):
                for j in range(f.n):
                    acc = ring.zero()
                    for k in range(f.n):
                        acc = acc + sa[i][k] * sb[k][j]
                    assert sab[i][j] == acc
            da, db, dab = f.delta_at(a), f.delta_at(b), f.delta_at(a * b)
            for i in range(f.n):
                acc = da[i] * b
                for j in range(f.n):
                    acc = acc + sa[i][j] * db[j]
                assert dab[i] == acc


def test_additive_map_application_matches_matrix(gf9):
    fr = LinearMap.frobenius(gf9)
    for a in gf9.elements():
        assert fr.apply(a) == a ** 3


def test_quat_map_catalog(quat):
    u = quat(1, 1, 0, 0)
    inner = QuatMap.inner_automorphism(quat, u)
    a = quat.j()
    assert inner.apply(a) == u * a * u.inv()
    conj = QuatMap(quat, "conj")
    assert conj.apply(quat(1, 2, 3, 4)) == quat(1, -2, -3, -4)
    s = QuatMap(quat, "sum", maps=(QuatMap(quat, "lmul", quat.i()), conj))
    assert s.apply(a) == quat.i() * a + a.conjugate()


def test_block_frame_validates(gf4):
    f1 = frobenius_frame(gf4, 1)
    f2 = conventional_frame(gf4, 1)
    joined = block_frame(f1, f2)
    assert joined.n == 2
    assert validate_frame(joined).valid
    w = gf4.gen()
    sig = apply_sigma(joined, w)
    assert sig[0][0] == w * w  # frobenius block
    assert sig[1][1] == w      # conventional block
    assert sig[0][1].is_zero() and sig[1][0].is_zero()


def test_frame_json_round_trip(gf9, quat_inner_2):
    for f in (frobenius_frame(gf9, 2), quat_inner_2):
        obj = f.to_json()
        again = frame_from_json(f.ring, obj)
        for a in ([e for e in gf9.elements()][:5] if f.ring.is_finite else
                  [f.ring.one(), f.ring.i(), f.ring(1, 2, 3, 4)]):
            assert again.sigma_at(a) == f.sigma_at(a)
            assert again.delta_at(a) == f.delta_at(a)


def test_frame_json_rejects_invalid(gf4):
    f = frobenius_frame(gf4, 1)
    obj = f.to_json()
    obj["sigma"][0][0]["matrix"] = [[0, 1], [1, 1]]  # not a morphism
    with pytest.raises(InvalidFrame):
        frame_from_json(gf4, obj)
