import itertools

from g31.outer_s6 import enumerate_synthemes, enumerate_totals, get_tau
from g31.signed_perm import Perm6, all_perms


def brute_force_matchings():
    """Oracle: all perfect matchings of {1..6} by raw enumeration of
    partitions into unordered pairs."""
    found = set()
    for perm in itertools.permutations(range(1, 7)):
        pairs = tuple(
            sorted(tuple(sorted(perm[i : i + 2])) for i in (0, 2, 4))
        )
        found.add(pairs)
    return found


def test_syntheme_count_against_oracle():
    syns = enumerate_synthemes()
    assert len(syns) == 15
    assert set(syns) == brute_force_matchings()


def test_totals_cover_each_duad_once():
    totals = enumerate_totals()
    assert len(totals) == 6
    for total in totals:
        duads = [d for syn in total for d in syn]
        assert len(duads) == 15 and len(set(duads)) == 15


def test_totals_pairwise_share_one_syntheme():
    # any two distinct totals intersect in exactly one syntheme
    totals = enumerate_totals()
    for a, b in itertools.combinations(totals, 2):
        assert len(set(a) & set(b)) == 1


def test_tau_normalization():
    tau = get_tau()
    m0 = Perm6.from_cycles((1, 2), (3, 4), (5, 6))
    assert tau(m0) == Perm6.from_cycles((1, 2))


def test_tau_bijective_homomorphism_spot():
    tau = get_tau()
    import random

    rng = random.Random(0)
    perms = all_perms()
    for _ in range(200):
        a, b = rng.choice(perms), rng.choice(perms)
        assert tau(a * b) == tau(a) * tau(b)
    assert len({tau(p).images for p in perms}) == 720


def test_tau_inverse():
    tau = get_tau()
    for p in all_perms()[::37]:
        assert tau.inverse(tau(p)) == p


def test_tau_swaps_transposition_classes():
    # the hallmark of the outer automorphism: transpositions map to
    # triple transpositions and vice versa
    tau = get_tau()
    t = Perm6.from_cycles((3, 5))
    assert tau(t).cycle_type() == (2, 2, 2)
    m = Perm6.from_cycles((1, 4), (2, 5), (3, 6))
    assert tau(m).cycle_type() == (2, 1, 1, 1, 1)


def test_tau_not_inner():
    assert not get_tau().is_inner()


def test_tau_preserves_order():
    tau = get_tau()
    for p in all_perms()[::53]:
        k = 1
        q = p
        while q != Perm6.identity():
            q = q * p
            k += 1
        tk = 1
        q = tau(p)
        while q != Perm6.identity():
            q = q * tau(p)
            tk += 1
        assert k == tk
