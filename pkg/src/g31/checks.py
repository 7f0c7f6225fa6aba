"""Registry of named verification checks over a shared build context.

Each check returns (status, detail) with status "pass", "fail" or
"inconclusive"; inconclusive exists only for the one-sided isomorphism
comparison, which refuses to claim anything when its invariants agree.
The registry order is the report order.

The paper_ref string in each entry states the mathematical claim the check
certifies, so reports are readable without the registry source.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .build import G31Context
from .engine import GroupTable, normal_2_subgroups
from .signed_perm import EXPECTED_ORDERS, MEMBERSHIP, Perm6
from .outer_s6 import get_tau


@dataclass
class RunConfig:
    seed: int = 0
    trials: int = 1000


@dataclass
class Check:
    check_id: str
    description: str
    claim: str
    run: Callable[[G31Context, RunConfig], tuple[str, dict]]


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


# --- individual checks ----------------------------------------------------------


def check_orders(ctx: G31Context, cfg: RunConfig):
    closure_orders = {name: len(ctx.table(name)) for name in EXPECTED_ORDERS}
    counts = {name: ctx.membership_count(name) for name in MEMBERSHIP}
    ok = closure_orders == EXPECTED_ORDERS and all(
        counts[name] == EXPECTED_ORDERS[name] for name in counts
    )
    return _status(ok), {"closure_orders": closure_orders, "membership_counts": counts}


def check_lambda_properties(ctx: G31Context, cfg: RunConfig):
    samples = max(200, cfg.trials // 5)
    rep = ctx.lambda_properties_report(samples, cfg.seed)
    kernel = ctx.kernel_property_report()
    ok = (
        rep["det_cube_ok"] == samples
        and rep["equivariance_ok"] == samples
        and rep["multiplicative_ok"] == samples
        and kernel["kernel_is_pm_id"]
    )
    return _status(ok), {**rep, **kernel}


def check_spin_lift_total(ctx: G31Context, cfg: RunConfig):
    rep = ctx.total_lift_report()
    ok = rep["failures"] == 0 and rep["fibers_cover_group"]
    return _status(ok), rep


def check_scholie(ctx: G31Context, cfg: RunConfig):
    rep = ctx.scholie_report()
    ok = rep["gf2_rank"] == 5 and rep["span_is_A6prime"] and rep["a6prime_elementary_abelian"]
    return _status(ok), rep


def check_lemma_irreducible(ctx: G31Context, cfg: RunConfig):
    dw6_irr = ctx.dw6.irreducibility_sum(6)
    a6_red = not ctx.a6.irreducibility_sum(6)
    return _status(dw6_irr and a6_red), {
        "dw6_irreducible_dim6": dw6_irr,
        "diagonal_group_reducible": a6_red,
    }


def check_exact_sequences(ctx: G31Context, cfg: RunConfig):
    rep = ctx.exact_sequences_report()
    ok = all(v["ok"] for v in rep.values())
    return _status(ok), rep


def check_class_m(ctx: G31Context, cfg: RunConfig):
    rep = ctx.class_M_report()
    ok = (
        rep["size"] == 60
        and rep["neg_mu0_in_w6_class"]
        and not rep["neg_mu0_in_M"]
        and rep["w6_class_is_M_union_negM"]
        and rep["M_disjoint_negM"]
        and rep["charpolys_ok"]
        and rep["centralizer_in_w6plus"]
    )
    return _status(ok), rep


def check_lemma_conju_mu(ctx: G31Context, cfg: RunConfig):
    rep = ctx.reflection_report()
    ok = rep["fibers_ok"] and rep["single_class"] and rep["equals_lifted_set"]
    return _status(ok), rep


def check_theorem_main(ctx: G31Context, cfg: RunConfig):
    rep = ctx.theorem_main_report()
    ok = rep["order"] == 46080 and rep["irreducible_dim4"] and rep["reflections_generate"]
    return _status(ok), rep


def check_scindage_a(ctx: G31Context, cfg: RunConfig):
    rep = ctx.scindage_report()
    ok = (
        rep["split_W6"]["ok"]
        and rep["split_W6prime"]["ok"]
        and rep["split_DW6"]["ok"]
    )
    detail = {k: rep[k] for k in ("split_W6", "split_W6prime", "split_DW6")}
    return _status(ok), detail


def check_scindage_b(ctx: G31Context, cfg: RunConfig):
    rep = ctx.scindage_report()
    search = rep["search_cw6prime_mod_center"]
    split = rep["split_w6prime_mod_center"]
    ok = search["status"] == "exhausted" and split["ok"]
    return _status(ok), {
        "scaled_quotient_search": search,
        "plain_quotient_split": split,
        "deduction": "the central quotients differ on a splitting invariant "
        "over their common largest normal 2-subgroup, so they are not isomorphic",
    }


def check_scindage_c(ctx: G31Context, cfg: RunConfig):
    rep = ctx.scindage_report()
    keys = ("search_W6plus", "search_cW6", "search_cW6prime")
    ok = all(rep[k]["status"] == "exhausted" for k in keys)
    return _status(ok), {k: rep[k] for k in keys}


def check_scindage_d(ctx: G31Context, cfg: RunConfig):
    rep = ctx.centers_report()
    ok = rep["center_W6"] == 2 and rep["center_cW6"] == 4
    return _status(ok), {
        **rep,
        "deduction": "center orders differ, so the full group and its "
        "i-scaled variant are not isomorphic",
    }


def check_scindage_e(ctx: G31Context, cfg: RunConfig):
    rep = ctx.scindage_report()
    o2p = ctx.o2_identification("W6prime")
    o2c = ctx.o2_identification("cW6prime")
    ok = (
        rep["split_W6prime"]["ok"]
        and rep["search_cW6prime"]["status"] == "exhausted"
        and o2p["o2_is_diagonal_kernel"]
        and o2c["o2_is_diagonal_kernel"]
    )
    return _status(ok), {
        "plain_split": rep["split_W6prime"],
        "scaled_search": rep["search_cW6prime"],
        "o2_plain": o2p,
        "o2_scaled": o2c,
        "deduction": "both groups have the even-sign diagonal group as their "
        "largest normal 2-subgroup, and splitting over it differs, so they "
        "are not isomorphic",
    }


def check_scindage_f(ctx: G31Context, cfg: RunConfig):
    rep = ctx.scindage_report()
    o2p = ctx.o2_identification("W6plus")
    o2d = ctx.o2_identification("W6prime")
    ok = (
        rep["split_W6prime"]["ok"]
        and rep["search_W6plus"]["status"] == "exhausted"
        and o2p["o2_is_diagonal_kernel"]
        and o2d["o2_is_diagonal_kernel"]
    )
    return _status(ok), {
        "plain_split": rep["split_W6prime"],
        "plus_search": rep["search_W6plus"],
        "o2_plus": o2p,
        "o2_plain": o2d,
        "deduction": "same splitting-over-O2 invariant separates the "
        "determinant-kernel and sign-product-kernel subgroups",
    }


def check_centre_derive_a(ctx: G31Context, cfg: RunConfig):
    rep = ctx.reflection_report()
    ok = rep["count"] == 60 and rep["single_class"] and rep["equals_lifted_set"]
    return _status(ok), rep


def check_centre_derive_b(ctx: G31Context, cfg: RunConfig):
    rep = ctx.derived_report()
    ok = (
        rep["index"] == 2
        and rep["derived_equals_sl_part"]
        and rep["all_dets_pm1"]
    )
    return _status(ok), rep


def check_centre_derive_c(ctx: G31Context, cfg: RunConfig):
    rep = ctx.center_report()
    ok = (
        rep["center_order"] == 4
        and rep["center_is_scalar_i_group"]
        and rep["center_in_derived"]
    )
    return _status(ok), rep


def check_centre_derive_d(ctx: G31Context, cfg: RunConfig):
    rep = ctx.derived_quotient_report()
    ok = rep["image_equals_DW6"] and rep["two_to_one"] and rep["kernel_in_derived"]
    return _status(ok), rep


def check_centre_derive_e(ctx: G31Context, cfg: RunConfig):
    rep = ctx.o2_report()
    s6_o2 = ctx.o2_identification("S6perm")
    ok = (
        rep["o2_order"] == 64
        and rep["o2_equals_preimage_of_even_diagonals"]
        and rep["o2_in_derived"]
        and rep["nonabelian_witness"] is not None
        and rep["squares_in_pm_id"]
        and rep["commutators_in_pm_id"]
        and rep["quotient_rank"] == 5
        and s6_o2["o2_order"] == 1
    )
    g31 = ctx.g31
    witness = rep["nonabelian_witness"]
    detail = dict(rep)
    if witness is not None:
        detail["nonabelian_witness"] = [
            g31.elements[witness[0]].to_json(),
            g31.elements[witness[1]].to_json(),
        ]
    detail["o2_of_permutation_group"] = s6_o2
    return _status(ok), detail


def check_centre_derive_f(ctx: G31Context, cfg: RunConfig):
    rep = ctx.o2_report()
    ok = rep["normal_2_subgroup_orders"] == [1, 2, 4, 64]
    return _status(ok), {"normal_2_subgroup_orders": rep["normal_2_subgroup_orders"]}


def check_centre_derive_g(ctx: G31Context, cfg: RunConfig):
    rep = ctx.g31_splitting_report()
    ok = (
        rep["full"]["status"] == "exhausted"
        and rep["mod_center"]["status"] == "exhausted"
    )
    return _status(ok), rep


def check_centre_derive_h(ctx: G31Context, cfg: RunConfig):
    ident = ctx.quotient_identification_report()
    scind = ctx.scindage_report()
    ok = (
        ident["coset_images_are_pairs"]
        and ident["distinct_pairs"] == ident["expected"]
        and scind["search_cw6prime_mod_center"]["status"] == "exhausted"
        and scind["split_w6prime_mod_center"]["ok"]
    )
    return _status(ok), {
        **ident,
        "deduction": "the central quotient of the built group is carried "
        "bijectively by the scaled quotient, which differs from the plain "
        "quotient on the splitting invariant, so they are not isomorphic",
    }


def check_prop_max(ctx: G31Context, cfg: RunConfig):
    rep = ctx.prop_max_trials(cfg.trials, cfg.seed)
    return _status(rep["counterexamples"] == 0), rep


def check_prop_5(ctx: G31Context, cfg: RunConfig):
    rep = ctx.prop5_report()
    ok = all(
        rep[k]
        for k in (
            "mus_in_M",
            "pi_images_are_tau_inverse_transpositions",
            "pi_images_generate_s6",
            "five_reflections_generate",
        )
    )
    return _status(ok), rep


def check_prop_4(ctx: G31Context, cfg: RunConfig):
    rep = ctx.four_impossible_report()
    ok = (
        rep["reflection_image_count"] == 15
        and rep["images_are_triple_transposition_class"]
        and rep["quads_tested"] == 1365
        and rep["quads_generating_s6"] == 0
        and rep["tau_image_is_transposition_class"]
    )
    return _status(ok), rep


def check_outer_tau(ctx: G31Context, cfg: RunConfig):
    tau = get_tau()
    m0 = Perm6.from_cycles((1, 2), (3, 4), (5, 6))
    normalized = tau(m0) == Perm6.from_cycles((1, 2))
    hom = tau.is_homomorphism_exhaustive()
    non_inner = not tau.is_inner()
    bijective = len({v.images for v in tau.table.values()}) == 720
    ok = normalized and hom and non_inner and bijective
    return _status(ok), {
        "normalized": normalized,
        "homomorphism_720x720": hom,
        "non_inner_720_conjugators": non_inner,
        "bijective": bijective,
    }


def check_b2c2(ctx: G31Context, cfg: RunConfig):
    samples = max(100, cfg.trials // 10)
    rep = ctx.b2c2_report(samples, cfg.seed)
    return _status(rep["stabilized"] == samples), rep


def check_class_counts(ctx: G31Context, cfg: RunConfig):
    rep = ctx.class_count_report()
    ok = rep["W6prime_classes"] == 37 and rep["cW6prime_classes"] == 37
    return _status(ok), rep


def check_irrational_trace(ctx: G31Context, cfg: RunConfig):
    rep = ctx.irrational_trace_report()
    ok = (
        rep["w6prime_all_integer_traces"]
        and rep["irho_in_cw6prime"]
        and rep["irho_trace_is_2i"]
    )
    return _status(ok), rep


def check_w6plus_vs_cw6prime(ctx: G31Context, cfg: RunConfig):
    rep = ctx.w6plus_vs_cw6prime_report()
    if rep["distinct"]:
        return "pass", rep
    return "inconclusive", rep


REGISTRY: list[Check] = [
    Check(
        "orders",
        "orders of the whole signed-permutation family",
        "the family has orders 46080, 23040, 11520, 64 and 32 as displayed",
        check_orders,
    ),
    Check(
        "lambda-properties",
        "determinant cube, form equivariance, multiplicativity, exact kernel",
        "the exterior-square map cubes determinants, scales the wedge form "
        "by the determinant, and has kernel {Id, -Id}",
        check_lambda_properties,
    ),
    Check(
        "spin-lift-total",
        "explicit lift of all 23040 scaled orthogonal elements",
        "every element of the index-2 scaled group lifts exactly, with "
        "2-element fibers covering the built group",
        check_spin_lift_total,
    ),
    Check(
        "scholie-eng",
        "commutator span of the even-sign diagonal group",
        "commutators of even permutations with even-sign diagonals span the "
        "whole rank-5 diagonal group over GF(2)",
        check_scholie,
    ),
    Check(
        "lemma-irreducible",
        "irreducibility of the derived subgroup in dimension 6",
        "the derived subgroup of the hyperoctahedral group acts irreducibly",
        check_lemma_irreducible,
    ),
    Check(
        "exact-sequences",
        "the six extensions over the symmetric/alternating quotients",
        "each family member is an extension of S6 (or A6) by its diagonal "
        "kernel, with the stated kernel orders",
        check_exact_sequences,
    ),
    Check(
        "class-M",
        "the 60-element conjugacy class of the block-rotation element",
        "the class has size 60, is disjoint from its negative, and its "
        "centralizer lies in the determinant-1 subgroup",
        check_class_m,
    ),
    Check(
        "lemma-conju-mu",
        "fiber structure and conjugacy of the 60 reflections",
        "each class element has a 2-element reflection fiber and the "
        "reflections form one conjugacy class",
        check_lemma_conju_mu,
    ),
    Check(
        "theorem-main",
        "order, irreducibility and reflection generation of the built group",
        "the built group has order 46080, is irreducible in dimension 4, and "
        "is generated by its 60 reflections",
        check_theorem_main,
    ),
    Check(
        "scindage-a",
        "explicit complements for the three split sequences",
        "the plain, sign-product-kernel and derived-subgroup extensions "
        "split via permutation matrices",
        check_scindage_a,
    ),
    Check(
        "scindage-b",
        "non-splitting of the scaled central-quotient sequence",
        "the scaled quotient does not split over S6 while the plain quotient "
        "does; the quotients are not isomorphic",
        check_scindage_b,
    ),
    Check(
        "scindage-c",
        "exhausted searches for the three non-split sequences",
        "the determinant-kernel and both i-scaled extensions over S6 do not "
        "split",
        check_scindage_c,
    ),
    Check(
        "scindage-d",
        "center orders distinguish the full group from its scaled variant",
        "the centers have orders 2 and 4 respectively",
        check_scindage_d,
    ),
    Check(
        "scindage-e",
        "the scaled and plain index-2 groups are not isomorphic",
        "splitting over the common largest normal 2-subgroup differs",
        check_scindage_e,
    ),
    Check(
        "scindage-f",
        "the determinant-kernel and sign-product-kernel groups differ",
        "splitting over the common largest normal 2-subgroup differs",
        check_scindage_f,
    ),
    Check(
        "centre-derive-a",
        "unique reflection class",
        "the 60 reflections are the only reflections and form one class",
        check_centre_derive_a,
    ),
    Check(
        "centre-derive-b",
        "derived subgroup equals the determinant-1 part, index 2",
        "the derived subgroup is exactly the special-linear part",
        check_centre_derive_b,
    ),
    Check(
        "centre-derive-c",
        "center generated by the scalar i, inside the derived subgroup",
        "the center is the order-4 scalar group",
        check_centre_derive_c,
    ),
    Check(
        "centre-derive-d",
        "derived subgroup maps 2-to-1 onto the hyperoctahedral derived group",
        "the exterior square induces an isomorphism modulo {Id, -Id}",
        check_centre_derive_d,
    ),
    Check(
        "centre-derive-e",
        "largest normal 2-subgroup: preimage of even-sign diagonals",
        "it has order 64, is nonabelian, and is elementary abelian of rank 5 "
        "modulo {Id, -Id}",
        check_centre_derive_e,
    ),
    Check(
        "centre-derive-f",
        "complete list of normal 2-subgroups",
        "exactly four normal 2-subgroups, of orders 1, 2, 4 and 64",
        check_centre_derive_f,
    ),
    Check(
        "centre-derive-g",
        "neither extension of the built group over S6 splits",
        "both the full group and its central quotient fail to split over S6",
        check_centre_derive_g,
    ),
    Check(
        "centre-derive-h",
        "central quotient differs from the plain hyperoctahedral quotient",
        "the quotient is carried by the scaled quotient, whose splitting "
        "invariant differs from the plain one",
        check_centre_derive_h,
    ),
    Check(
        "prop-max-random",
        "randomized maximality biconditional",
        "a random subgroup projects onto all of S6 exactly when it is the "
        "whole group",
        check_prop_max,
    ),
    Check(
        "prop-5-generation",
        "five reflections generate",
        "the five reflections derived from the outer automorphism generate "
        "all 46080 elements",
        check_prop_5,
    ),
    Check(
        "prop-4-impossible",
        "no four reflections can generate",
        "no 4-subset of the 15 projected triple transpositions generates S6 "
        "(1365 cases)",
        check_prop_4,
    ),
    Check(
        "outer-tau",
        "outer automorphism of S6 via synthematic totals",
        "the normalized total action is an exhaustive-checked non-inner "
        "automorphism",
        check_outer_tau,
    ),
    Check(
        "remark-b2c2",
        "symplectic subgroup stabilizes the dual bivector",
        "products of symplectic transvections fix the dual bivector and its "
        "orthogonal complement",
        check_b2c2,
    ),
    Check(
        "remark-class-counts",
        "conjugacy class counts of the two index-2 groups",
        "both the plain and scaled index-2 groups have 37 conjugacy classes",
        check_class_counts,
    ),
    Check(
        "remark-irrational-trace",
        "integer traces versus the trace 2i witness",
        "all plain-group traces are integers while the scaled group contains "
        "an element of trace 2i",
        check_irrational_trace,
    ),
    Check(
        "remark-w6plus-vs-cw6prime",
        "one-sided invariant comparison of the two order-23040 groups",
        "a certified invariant distinction is reported if one exists; "
        "otherwise the comparison is inconclusive",
        check_w6plus_vs_cw6prime,
    ),
]

CHECK_IDS = [c.check_id for c in REGISTRY]
_BY_ID = {c.check_id: c for c in REGISTRY}


def get_check(check_id: str) -> Check:
    return _BY_ID[check_id]


def run_checks(
    ctx: G31Context, ids: list[str] | None, cfg: RunConfig
) -> list[dict]:
    """Run the selected checks in registry order; unknown ids raise KeyError."""
    if ids is None:
        selected = REGISTRY
    else:
        unknown = [i for i in ids if i not in _BY_ID]
        if unknown:
            raise KeyError(unknown[0])
        wanted = set(ids)
        selected = [c for c in REGISTRY if c.check_id in wanted]
    out = []
    for check in selected:
        t0 = time.monotonic()
        status, detail = check.run(ctx, cfg)
        elapsed_ms = int((time.monotonic() - t0) * 1000)
        out.append(
            {
                "check_id": check.check_id,
                "paper_ref": check.claim,
                "status": status,
                "witness": detail,
                "timing_ms": elapsed_ms,
            }
        )
    return out
