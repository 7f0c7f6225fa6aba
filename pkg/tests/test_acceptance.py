"""The acceptance gate: every headline claim, with exact equality throughout.

Each test maps to one numbered acceptance criterion; the shared session
context keeps the heavy artifacts (closures, total lift) built once.
"""

import json
import time

from g31.checks import RunConfig, run_checks
from g31.signed_perm import EXPECTED_ORDERS


def test_01_orders(ctx):
    assert len(ctx.w6) == 46080
    assert len(ctx.cw6) == 46080
    assert len(ctx.w6prime) == 23040
    assert len(ctx.w6plus) == 23040
    assert len(ctx.cw6prime) == 23040
    assert len(ctx.dw6) == 11520
    assert len(ctx.a6) == 64
    assert len(ctx.a6prime) == 32
    for name, order in EXPECTED_ORDERS.items():
        assert len(ctx.table(name)) == order


def test_02_theorem_main(ctx):
    rep = ctx.theorem_main_report()
    assert rep["order"] == 46080
    assert rep["irreducible_dim4"]       # sum |tr|^2 == 46080 exactly
    assert rep["reflections_generate"]   # closure == whole group elementwise


def test_03_reflections(ctx):
    rep = ctx.reflection_report()
    assert rep["count"] == 60
    assert rep["equals_lifted_set"]
    assert rep["single_class"]
    assert rep["orders_all_2"]
    assert rep["fibers_ok"]


def test_04_lambda_properties(ctx):
    rep = ctx.lambda_properties_report(samples=200, seed=0)
    assert rep["det_cube_ok"] == 200
    assert rep["equivariance_ok"] == 200
    assert rep["multiplicative_ok"] == 200
    kernel = ctx.kernel_property_report()
    assert kernel["kernel_size"] == 2 and kernel["kernel_is_pm_id"]
    total = ctx.total_lift_report()
    assert total["lifted"] == 23040
    assert total["failures"] == 0          # zero missing square roots
    assert total["fibers_cover_group"]


def test_05_splitting_table(ctx):
    start = time.monotonic()
    rep = ctx.scindage_report()
    g31_rep = ctx.g31_splitting_report()
    elapsed = time.monotonic() - start
    assert rep["split_W6"]["ok"]
    assert rep["split_W6prime"]["ok"]
    assert rep["split_DW6"]["ok"]
    assert rep["search_W6plus"]["status"] == "exhausted"
    assert rep["search_cW6"]["status"] == "exhausted"
    assert rep["search_cW6prime"]["status"] == "exhausted"
    assert rep["search_cw6prime_mod_center"]["status"] == "exhausted"
    assert g31_rep["full"]["status"] == "exhausted"
    assert g31_rep["mod_center"]["status"] == "exhausted"
    assert elapsed < 300  # all complement searches within the 5-minute budget


def test_06_structure(ctx):
    derived = ctx.derived_report()
    assert derived["index"] == 2
    assert derived["derived_equals_sl_part"]
    center = ctx.center_report()
    assert center["center_order"] == 4
    assert center["center_is_scalar_i_group"]
    assert center["center_in_derived"]
    o2 = ctx.o2_report()
    assert o2["o2_order"] == 64
    assert o2["o2_equals_preimage_of_even_diagonals"]
    assert o2["nonabelian_witness"] is not None
    assert o2["squares_in_pm_id"] and o2["commutators_in_pm_id"]
    assert o2["quotient_rank"] == 5
    assert o2["normal_2_subgroup_orders"] == [1, 2, 4, 64]
    # the explicit witness pair really fails to commute
    a, b = o2["nonabelian_witness"]
    g31 = ctx.g31
    assert g31.mul_idx(a, b) != g31.mul_idx(b, a)


def test_07_five_generate_four_cannot(ctx):
    five = ctx.prop5_report()
    assert five["mus_in_M"]
    assert five["five_reflections_generate"]
    four = ctx.four_impossible_report()
    assert four["quads_tested"] == 1365
    assert four["quads_generating_s6"] == 0
    assert four["images_are_triple_transposition_class"]


def test_08_outer_automorphism():
    from g31.outer_s6 import get_tau
    from g31.signed_perm import Perm6

    tau = get_tau()
    assert tau(Perm6.from_cycles((1, 2), (3, 4), (5, 6))) == Perm6.from_cycles(
        (1, 2)
    )
    assert tau.is_homomorphism_exhaustive()   # all 720 x 720 pairs
    assert not tau.is_inner()                 # all 720 conjugators fail


def test_09_class_counts_and_traces(ctx):
    counts = ctx.class_count_report()
    assert counts["W6prime_classes"] == 37
    assert counts["cW6prime_classes"] == 37
    traces = ctx.irrational_trace_report()
    assert traces["w6prime_all_integer_traces"]
    assert traces["irho_in_cw6prime"] and traces["irho_trace_is_2i"]


def test_10_centers_and_centralizer(ctx):
    centers = ctx.centers_report()
    assert centers["center_W6"] == 2
    assert centers["center_cW6"] == 4
    class_m = ctx.class_M_report()
    assert class_m["centralizer_in_w6plus"]


def test_11_property_suites(ctx):
    prop_max = ctx.prop_max_trials(trials=1000, seed=0)
    assert prop_max["trials"] == 1000
    assert prop_max["counterexamples"] == 0
    scholie = ctx.scholie_report()
    assert scholie["gf2_rank"] == 5 and scholie["span_is_A6prime"]
    b2c2 = ctx.b2c2_report(samples=100, seed=0)
    assert b2c2["stabilized"] == 100


def test_12_determinism(ctx):
    ids = ["scholie-eng", "remark-b2c2", "prop-max-random", "remark-irrational-trace"]
    cfg = RunConfig(seed=42, trials=200)

    def snapshot():
        results = run_checks(ctx, ids, cfg)
        for r in results:
            r.pop("timing_ms")
        return json.dumps(results, sort_keys=True, default=str)

    assert snapshot() == snapshot()
