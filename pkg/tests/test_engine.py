import random

import numpy as np
import pytest

from g31.engine import (
    CapExceeded,
    ExtensionSpec,
    GroupTable,
    complement_exists,
    is_elementary_abelian_2,
    normal_2_subgroups,
    quotient_by_central,
    two_power_order_indices,
    verify_complement,
    verify_exact_sequence,
)
from g31.signed_perm import Perm6, ScaledSignedPerm, group_generators


@pytest.fixture(scope="module")
def s6():
    return GroupTable.closure(group_generators("S6perm"), cap=720)


@pytest.fixture(scope="module")
def a6():
    return GroupTable.closure(group_generators("A6"), cap=64)


def test_closure_order_and_idempotence(s6):
    assert len(s6) == 720
    again = GroupTable.closure([s6.elements[i] for i in s6.gen_indices], cap=720)
    assert {e.key for e in again.elements} == {e.key for e in s6.elements}


def test_closure_cap_enforced():
    with pytest.raises(CapExceeded):
        GroupTable.closure(group_generators("S6perm"), cap=100)


def test_index_arithmetic_matches_elements(s6):
    rng = random.Random(0)
    n = len(s6)
    for _ in range(200):
        i, j = rng.randrange(n), rng.randrange(n)
        prod = s6.elements[i] * s6.elements[j]
        assert s6.elements[s6.mul_idx(i, j)] == prod
        assert s6.elements[s6.inv_idx(i)] == s6.elements[i].inverse()
        conj = s6.elements[i] * s6.elements[j] * s6.elements[i].inverse()
        assert s6.elements[s6.conj_idx(i, j)] == conj


def test_mul_many(s6):
    arr = np.arange(len(s6), dtype=np.int32)
    j = 17
    out = s6.mul_many(arr, j)
    for i in (0, 5, 100, 719):
        assert out[i] == s6.mul_idx(i, j)


def test_element_orders_and_histogram(s6):
    hist = s6.order_histogram()
    assert sum(hist.values()) == 720
    assert hist[1] == 1
    # 15 transpositions + 45 double transpositions + 15 triples = 75
    assert hist[2] == 75
    idx = s6.index_of(ScaledSignedPerm.from_perm(Perm6.from_cycles((1, 2, 3))))
    assert s6.element_order_idx(idx) == 3


def test_subgroup_and_generated(s6):
    t = s6.index_of(ScaledSignedPerm.from_perm(Perm6.from_cycles((1, 2))))
    c = s6.index_of(
        ScaledSignedPerm.from_perm(Perm6.from_cycles((1, 2, 3, 4, 5, 6)))
    )
    idxs = s6.subgroup_indices([t, c])
    assert len(idxs) == 720
    idxs_t = s6.subgroup_indices([t])
    assert len(idxs_t) == 2
    assert s6.subgroup_indices([t, c], stop_above=100) is None


def test_conjugacy_classes_and_center(s6):
    classes = s6.conjugacy_classes()
    assert len(classes) == 11  # the partition count of 6
    assert sum(len(c) for c in classes) == 720
    assert len(s6.center_indices()) == 1


def test_centralizer(s6):
    t = s6.index_of(ScaledSignedPerm.from_perm(Perm6.from_cycles((1, 2))))
    cent = s6.centralizer_indices(t)
    # centralizer of a transposition in S6: 2 * 4! = 48
    assert len(cent) == 48


def test_derived_subgroup(s6):
    d = s6.derived_subgroup()
    assert len(d) == 360
    assert all(e.p.sign() == 1 for e in d.elements)


def test_normal_closure(s6):
    t = s6.index_of(ScaledSignedPerm.from_perm(Perm6.from_cycles((1, 2))))
    nc = s6.normal_closure_indices([t])
    assert nc is not None and len(nc) == 720
    a = s6.index_of(ScaledSignedPerm.from_perm(Perm6.from_cycles((1, 2, 3))))
    nca = s6.normal_closure_indices([a])
    assert nca is not None and len(nca) == 360
    assert s6.normal_closure_indices([t], cap=10) is None


def test_two_power_orders_and_elementary_abelian(a6):
    assert len(two_power_order_indices(a6)) == 64
    assert is_elementary_abelian_2(a6, list(range(len(a6))))


def test_normal_2_subgroups_abelian_oracle():
    # in an abelian group every subgroup is normal, so the result must be
    # every subgroup; (Z/2)^5 has 374 subgroups (sum of the 2-binomials)
    a6p = GroupTable.closure(group_generators("A6prime"), cap=32)
    subs = normal_2_subgroups(a6p)
    assert len(subs) == 374
    orders = sorted({len(s) for s in subs})
    assert orders == [1, 2, 4, 8, 16, 32]


def test_normal_2_subgroups_s6():
    s6 = GroupTable.closure(group_generators("S6perm"), cap=720)
    subs = normal_2_subgroups(s6)
    assert [len(s) for s in subs] == [1]


def test_irreducibility_sum(s6, a6):
    # the 6-dim natural permutation representation of S6 is reducible
    assert not s6.irreducibility_sum(6)
    assert not a6.irreducibility_sum(6)


def test_quotient_by_central():
    w6 = GroupTable.closure(group_generators("W6"), cap=46080)
    minus = -ScaledSignedPerm.identity()
    q = quotient_by_central(w6, [w6.identity_index, w6.index_of(minus)])
    assert len(q) == 23040
    rng = random.Random(1)
    for _ in range(50):
        i, j = rng.randrange(23040), rng.randrange(23040)
        assert q.elements[q.mul_idx(i, j)] == q.elements[i] * q.elements[j]


def _s6_spec(table):
    phi = [e.p for e in table.elements]
    ident = Perm6.identity()
    kernel = [i for i, p in enumerate(phi) if p == ident]
    return ExtensionSpec(
        group=table, kernel_indices=kernel, phi_values=phi,
        quotient="S6", name="test",
    )


def test_exact_sequence_and_complement(s6):
    spec = _s6_spec(s6)
    rep = verify_exact_sequence(spec)
    assert rep["ok"] and rep["kernel_order"] == 1
    status, witness = complement_exists(spec)
    assert status == "witness"
    assert verify_complement(spec, witness, expected_order=720)["ok"]


def test_complement_search_exhausts_on_empty_fibers(s6):
    # a section must send the Coxeter generators into their fibers; with a
    # trivial projection those fibers contain no involutions over the
    # transpositions, so the search exhausts immediately
    spec = _s6_spec(s6)
    bad = ExtensionSpec(
        group=spec.group,
        kernel_indices=spec.kernel_indices,
        phi_values=[Perm6.identity() for _ in spec.phi_values],
        quotient="S6",
        name="empty-fibers",
    )
    status, nodes = complement_exists(bad)
    assert status == "exhausted" and nodes == 0
