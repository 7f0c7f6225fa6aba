import random

import pytest

from g31 import extsq
from g31.extsq import (
    GRAM_B,
    P,
    PAIRS,
    SqrtNotInField,
    compound2,
    factor_decomposable,
    is_decomposable,
    lambda2,
    spin_lift,
    symplectic_transvection,
    wedge_form,
    wedge_vectors,
)
from g31.gaussian import GaussRat, I, ONE, ZERO
from g31.matrices import Mat, det


def rand_gauss(rng):
    return GaussRat(rng.randint(-3, 3), rng.randint(-3, 3))


def rand_vec(rng, n):
    return [rand_gauss(rng) for _ in range(n)]


def rand_invertible(rng):
    while True:
        m = Mat(4, 4, [rand_gauss(rng) for _ in range(16)])
        if det(m):
            return m


def test_gram_matches_wedge_pairings():
    # oracle: recompute all 21 pairings of the B basis from raw wedges
    basis = [tuple(ONE if k == t else ZERO for k in range(6)) for t in range(6)]
    for a in range(6):
        for b in range(a, 6):
            assert wedge_form(basis[a], basis[b]) == GRAM_B[a, b]


def test_basis_e_is_orthonormal():
    cols = [P.col(j) for j in range(6)]
    for a in range(6):
        for b in range(6):
            expected = ONE if a == b else ZERO
            assert wedge_form(cols[a], cols[b]) == expected


def test_wedge_form_symmetric_bilinear():
    rng = random.Random(0)
    for _ in range(20):
        x, y, z = rand_vec(rng, 6), rand_vec(rng, 6), rand_vec(rng, 6)
        c = rand_gauss(rng)
        assert wedge_form(x, y) == wedge_form(y, x)
        xc = [a * c for a in x]
        assert wedge_form(xc, y) == c * wedge_form(x, y)
        xz = [a + b for a, b in zip(x, z)]
        assert wedge_form(xz, y) == wedge_form(x, y) + wedge_form(z, y)


def test_wedge_vectors_alternating():
    rng = random.Random(1)
    for _ in range(20):
        v, w = rand_vec(rng, 4), rand_vec(rng, 4)
        vw = wedge_vectors(v, w)
        wv = wedge_vectors(w, v)
        assert all(a == -b for a, b in zip(vw, wv))
        assert all(x == ZERO for x in wedge_vectors(v, v))


def test_compound2_entries_are_2x2_minors():
    rng = random.Random(2)
    g = rand_invertible(rng)
    c = compound2(g)
    for r, (i1, i2) in enumerate(PAIRS):
        for s, (j1, j2) in enumerate(PAIRS):
            minor = g[i1, j1] * g[i2, j2] - g[i1, j2] * g[i2, j1]
            assert c[r, s] == minor


def test_lambda2_multiplicative_and_det_cube():
    rng = random.Random(3)
    for _ in range(10):
        g = rand_invertible(rng)
        h = rand_invertible(rng)
        assert lambda2(g * h) == lambda2(g) * lambda2(h)
        assert det(lambda2(g)) == det(g) * det(g) * det(g)
    assert lambda2(Mat.identity(4)) == Mat.identity(6)


def test_lambda2_form_equivariance():
    rng = random.Random(4)
    for _ in range(10):
        g = rand_invertible(rng)
        L = lambda2(g)
        x, y = rand_vec(rng, 6), rand_vec(rng, 6)
        lx = (L * Mat(6, 1, x)).entries
        ly = (L * Mat(6, 1, y)).entries
        assert wedge_form(lx, ly, "E") == det(g) * wedge_form(x, y, "E")


def test_decomposable_iff_self_wedge_zero():
    rng = random.Random(5)
    for _ in range(20):
        v, w = rand_vec(rng, 4), rand_vec(rng, 4)
        x = wedge_vectors(v, w)
        assert is_decomposable(x)
    # a generic sum of two disjoint wedges is not decomposable
    x = [ONE, ZERO, ZERO, ZERO, ZERO, ONE]
    assert not is_decomposable(x)


def test_factor_decomposable_round_trip():
    rng = random.Random(6)
    done = 0
    while done < 20:
        v, w = rand_vec(rng, 4), rand_vec(rng, 4)
        x = wedge_vectors(v, w)
        if not any(x):
            continue
        a, b = factor_decomposable(x)
        assert wedge_vectors(a.entries, b.entries) == x
        done += 1
    with pytest.raises(ValueError):
        factor_decomposable([ZERO] * 6)
    with pytest.raises(ValueError):
        factor_decomposable([ONE, ZERO, ZERO, ZERO, ZERO, ONE])


def test_spin_lift_inverts_lambda2_up_to_sign():
    rng = random.Random(7)
    for _ in range(10):
        g = rand_invertible(rng)
        h = spin_lift(lambda2(g))
        assert h == g or h == g.scalar_mul(-ONE)


def test_spin_lift_sign_canonical():
    rng = random.Random(8)
    g = rand_invertible(rng)
    assert spin_lift(lambda2(g)) == spin_lift(lambda2(g.scalar_mul(-ONE)))


def test_spin_lift_rejects_non_image():
    with pytest.raises(extsq.NotInImage):
        spin_lift(Mat.diagonal([GaussRat(2)] + [ONE] * 5))


def test_spin_lift_sqrt_failure_is_flagged():
    from g31.signed_perm import mu0

    # mu0 has sign-product -1: its lift would need sqrt(i), which is not
    # in Q(i), while i*mu0 lies in the liftable index-2 subgroup
    with pytest.raises(SqrtNotInField):
        spin_lift(mu0().to_matrix())
    g = spin_lift(mu0().scale_i().to_matrix())
    assert lambda2(g) == mu0().scale_i().to_matrix()


def test_symplectic_transvections_preserve_form():
    rng = random.Random(9)
    rows = [[ZERO] * 4 for _ in range(4)]
    rows[0][1], rows[1][0] = ONE, -ONE
    rows[2][3], rows[3][2] = ONE, -ONE
    J = Mat.from_rows(rows)
    for _ in range(10):
        u = rand_vec(rng, 4)
        if not any(u):
            continue
        t = symplectic_transvection(u, J)
        assert t.transpose() * J * t == J
        assert det(t) == ONE
        assert extsq.check_sp_stabilizes(t, J)
