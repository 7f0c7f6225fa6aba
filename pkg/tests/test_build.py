"""Context-level checks that are cheap given the shared session fixture.

The heavyweight claims live in test_acceptance; here we probe pieces of the
construction that the acceptance criteria use only indirectly.
"""

import numpy as np

from g31.gaussian import GaussRat, I, ONE
from g31.matrices import Mat, charpoly, det, element_order, rank
from g31.signed_perm import ScaledSignedPerm, from_matrix


def test_membership_counts_match_closures(ctx):
    from g31.signed_perm import EXPECTED_ORDERS, MEMBERSHIP

    for name in MEMBERSHIP:
        assert ctx.membership_count(name) == EXPECTED_ORDERS[name] == len(
            ctx.table(name)
        )


def test_class_M_members_are_conjugate_rotations(ctx):
    target = charpoly(ctx.mu0.to_matrix())
    for m in ctx.class_M[:10]:
        assert charpoly(m.to_matrix()) == target
        assert (m * m) == -ScaledSignedPerm.identity()


def test_reflection_lift_properties(ctx):
    for g in ctx.reflections[:10]:
        assert g.trace() == GaussRat(2)
        assert element_order(g, 4) == 2
        assert rank(g - Mat.identity(4)) == 1
        assert det(g) == -ONE


def test_lambda_index_is_homomorphism_on_samples(ctx):
    import random

    rng = random.Random(0)
    g31 = ctx.g31
    cw = ctx.cw6prime
    lam = ctx.lam
    n = len(g31)
    for _ in range(100):
        i, j = rng.randrange(n), rng.randrange(n)
        k = g31.mul_idx(i, j)
        assert lam[k] == cw.mul_idx(int(lam[i]), int(lam[j]))


def test_lambda_index_matches_exterior_square_on_samples(ctx):
    import random

    from g31 import extsq

    rng = random.Random(1)
    g31 = ctx.g31
    cw = ctx.cw6prime
    for _ in range(25):
        i = rng.randrange(len(g31))
        image = extsq.lambda2(g31.elements[i])
        assert from_matrix(image) == cw.elements[int(ctx.lam[i])]


def test_scalar_i_is_central_of_order_4(ctx):
    g31 = ctx.g31
    s = g31.index_of(Mat.identity(4).scalar_mul(I))
    assert g31.element_order_idx(s) == 4
    assert s in set(int(x) for x in g31.center_indices())


def test_five_generators_are_reflections(ctx):
    refl_keys = {g.key for g in ctx.reflections}
    for g in ctx.five_generators():
        assert g.key in refl_keys


def test_mu_elements_project_onto_coxeter_under_tau(ctx):
    from g31.outer_s6 import get_tau
    from g31.signed_perm import Perm6

    tau = get_tau()
    for j, m in zip(range(1, 6), ctx.mu_elements):
        assert tau(m.p) == Perm6.from_cycles((j, j + 1))


def test_o2_identification_family(ctx):
    for name in ("W6prime", "W6plus", "cW6prime"):
        rep = ctx.o2_identification(name)
        assert rep["o2_order"] == 32 and rep["o2_is_diagonal_kernel"]
    assert ctx.o2_identification("S6perm")["o2_order"] == 1


def test_prop_max_spot_trials(ctx):
    rep = ctx.prop_max_trials(trials=25, seed=123)
    assert rep["counterexamples"] == 0


def test_prop_max_known_cases(ctx):
    # the five reflections: both sides of the biconditional true
    g31 = ctx.g31
    gens = [g31.index_of(g) for g in ctx.five_generators()]
    assert g31.subgroup_indices(gens, stop_above=len(g31) // 2) is None
    # the largest normal 2-subgroup: both sides false (pi-image trivial)
    o2 = max(ctx.g31_normal_2_subgroups, key=len)
    sub = g31.subgroup_indices([int(i) for i in o2.tolist()])
    images = {ctx.phi[int(i)].images for i in sub}
    assert len(sub) == 64 and len(images) == 1
