import random

import pytest

from g31.gaussian import GaussRat, I, ONE
from g31.matrices import Mat, det
from g31.signed_perm import (
    EXPECTED_ORDERS,
    MEMBERSHIP,
    NotMonomial,
    Perm6,
    ScaledSignedPerm,
    all_perms,
    from_matrix,
    group_generators,
    mu0,
    rho,
    t0,
)


def rand_perm(rng):
    images = list(range(6))
    rng.shuffle(images)
    return Perm6(images)


def rand_ssp(rng):
    return ScaledSignedPerm(
        rng.randint(0, 1),
        rand_perm(rng),
        [rng.choice((1, -1)) for _ in range(6)],
    )


def test_from_cycles():
    p = Perm6.from_cycles((1, 2, 3))
    assert p(0) == 1 and p(1) == 2 and p(2) == 0 and p(3) == 3
    with pytest.raises(ValueError):
        Perm6.from_cycles((1, 2), (2, 3))  # overlapping points


def test_perm_group_laws():
    rng = random.Random(0)
    e = Perm6.identity()
    for _ in range(50):
        a, b, c = rand_perm(rng), rand_perm(rng), rand_perm(rng)
        assert (a * b) * c == a * (b * c)
        assert a * a.inverse() == e
        assert a * e == a and e * a == a


def test_mul_applies_right_factor_first():
    a = Perm6.from_cycles((1, 2))
    b = Perm6.from_cycles((2, 3))
    assert (a * b)(1) == 2  # b: 2 -> 3 is 1-based; 0-based: b(1)=2, a(2)=2


def test_sign_multiplicative():
    rng = random.Random(1)
    for _ in range(50):
        a, b = rand_perm(rng), rand_perm(rng)
        assert (a * b).sign() == a.sign() * b.sign()
    assert Perm6.from_cycles((1, 2)).sign() == -1


def test_cycle_type_and_cycles():
    p = Perm6.from_cycles((1, 2, 3), (4, 5))
    assert p.cycle_type() == (3, 2, 1)
    # cycles() lists the nontrivial cycles; point 6 is fixed
    assert sorted(len(c) for c in p.cycles()) == [2, 3]


def test_all_perms():
    perms = all_perms()
    assert len(perms) == 720
    assert len({p.images for p in perms}) == 720


def test_perm_to_matrix_homomorphism():
    rng = random.Random(2)
    for _ in range(50):
        a, b = rand_perm(rng), rand_perm(rng)
        assert (a * b).to_matrix() == a.to_matrix() * b.to_matrix()


def test_ssp_matches_matrix_arithmetic():
    rng = random.Random(3)
    for _ in range(100):
        a, b = rand_ssp(rng), rand_ssp(rng)
        assert (a * b).to_matrix() == a.to_matrix() * b.to_matrix()
        assert a.inverse().to_matrix() == a.to_matrix().inv()
        assert a.det() == det(a.to_matrix())
        assert a.trace() == a.to_matrix().trace()
        assert (-a).to_matrix() == a.to_matrix().scalar_mul(-ONE)
        assert a.scale_i().to_matrix() == a.to_matrix().scalar_mul(I)


def test_from_matrix_round_trip():
    rng = random.Random(4)
    for _ in range(50):
        a = rand_ssp(rng)
        assert from_matrix(a.to_matrix()) == a
    with pytest.raises(NotMonomial):
        from_matrix(Mat.identity(6) + Mat.identity(6).transpose())
    with pytest.raises(NotMonomial):
        from_matrix(Mat.diagonal([GaussRat(2)] + [ONE] * 5))


def test_scale_canonicalized():
    a = rand_ssp(random.Random(5))
    assert a.scale_i().scale_i() == -a
    assert a.scale_i().scale_i().scale_i().scale_i() == a
    assert a.k in (0, 1) and a.scale_i().k in (0, 1)


def test_gamma_is_a_character():
    rng = random.Random(6)
    for _ in range(100):
        a, b = rand_ssp(rng), rand_ssp(rng)
        assert (a * b).gamma() == a.gamma() * b.gamma()


def test_named_elements():
    m = mu0()
    assert m.trace() == GaussRat(0)
    assert (m * m).to_matrix() == Mat.identity(6).scalar_mul(-ONE)
    assert m.gamma() == -1
    # rho has sign product -1, so only i*rho lands in the scaled kernel
    assert rho().gamma() == -1
    assert MEMBERSHIP["cW6prime"](rho().scale_i())
    assert t0().det() == -ONE


def test_membership_predicates_consistent():
    rng = random.Random(7)
    for _ in range(200):
        a = rand_ssp(rng)
        if a.k == 0:
            assert MEMBERSHIP["W6"](a)
            assert MEMBERSHIP["W6plus"](a) == (a.det() == ONE)
            assert MEMBERSHIP["W6prime"](a) == (a.gamma() == 1)
        assert MEMBERSHIP["cW6prime"](a) == (
            MEMBERSHIP["cW6"](a) and a.gamma() == 1
        )


def test_generator_membership():
    for name, gens in (
        (n, group_generators(n)) for n in EXPECTED_ORDERS
        if n in MEMBERSHIP
    ):
        pred = MEMBERSHIP[name]
        assert all(pred(g) for g in gens), name


def test_small_group_orders_by_brute_force():
    # the two diagonal groups are small enough to enumerate directly
    import itertools

    diag_all = [
        ScaledSignedPerm(0, Perm6.identity(), signs)
        for signs in itertools.product((1, -1), repeat=6)
    ]
    assert len(diag_all) == EXPECTED_ORDERS["A6"]
    even = [d for d in diag_all if d.prod_signs() == 1]
    assert len(even) == EXPECTED_ORDERS["A6prime"]
