"""The outer automorphism of S6 via synthemes and synthematic totals.

A syntheme is a perfect matching of the six points, a synthematic total a
pentad of five synthemes using each of the 15 duads exactly once.  There
are 15 synthemes and exactly 6 totals; S6 permutes the totals, and that
action, read as a permutation of 6 ordered totals, is an automorphism of
S6 that is not inner.

The raw action depends on the ordering of the totals, so it is normalized
by an inner twist: tau is post-composed with conjugation by the
lexicographically least c such that tau((1,2)(3,4)(5,6)) = (1,2).  With
this normalization the triple-transposition class maps onto the
transposition class in a pinned-down way that the five-reflection
generator construction relies on.
"""

from __future__ import annotations

import itertools
import json

from .signed_perm import Perm6, all_perms


def enumerate_synthemes() -> list[tuple]:
    """The 15 perfect matchings of {1..6}, each a sorted tuple of 3 duads.

    Points are 1-based in the serialized form to match cycle notation.
    """
    out = []
    points = (1, 2, 3, 4, 5, 6)
    first = points[0]
    for b in points[1:]:
        rest = [x for x in points if x not in (first, b)]
        c = rest[0]
        for d in rest[1:]:
            e, f = [x for x in rest if x not in (c, d)]
            out.append(tuple(sorted(((first, b), (c, d), (e, f)))))
    return sorted(out)


def enumerate_totals() -> list[tuple]:
    """The 6 synthematic totals, canonically ordered.

    Each total is a sorted tuple of 5 synthemes that are pairwise disjoint
    as duad sets (hence together cover all 15 duads).
    """
    syns = enumerate_synthemes()
    totals = []
    for combo in itertools.combinations(syns, 5):
        duads = set()
        for syn in combo:
            duads.update(syn)
        if len(duads) == 15:
            totals.append(tuple(sorted(combo)))
    return sorted(totals)


def _apply_to_total(sigma: Perm6, total: tuple) -> tuple:
    im = sigma.images

    def duad(d):
        return tuple(sorted((im[d[0] - 1] + 1, im[d[1] - 1] + 1)))

    return tuple(sorted(tuple(sorted(duad(d) for d in syn)) for syn in total))


class OuterAutomorphism:
    """tau and its inverse as 720-entry lookup tables."""

    def __init__(self):
        totals = enumerate_totals()
        total_index = {t: a for a, t in enumerate(totals)}
        self.totals = totals
        raw = {}
        for sigma in all_perms():
            images = [total_index[_apply_to_total(sigma, t)] for t in totals]
            raw[sigma.images] = Perm6(images)
        m0 = Perm6.from_cycles((1, 2), (3, 4), (5, 6))
        target = Perm6.from_cycles((1, 2))
        conjugator = None
        for c in all_perms():
            if c * raw[m0.images] * c.inverse() == target:
                if conjugator is None or c.images < conjugator.images:
                    conjugator = c
        if conjugator is None:
            raise AssertionError("no conjugator normalizes the total action")
        self.conjugator = conjugator
        cinv = conjugator.inverse()
        self.table = {
            k: conjugator * v * cinv for k, v in raw.items()
        }
        self.inverse_table = {v.images: Perm6(k) for k, v in self.table.items()}
        if len(self.inverse_table) != 720:
            raise AssertionError("total action is not injective")

    def __call__(self, sigma: Perm6) -> Perm6:
        return self.table[sigma.images]

    def inverse(self, sigma: Perm6) -> Perm6:
        return self.inverse_table[sigma.images]

    def is_homomorphism_exhaustive(self) -> bool:
        perms = all_perms()
        t = self.table
        for a in perms:
            ta = t[a.images]
            for b in perms:
                if t[(a * b).images] != ta * t[b.images]:
                    return False
        return True

    def is_inner(self) -> bool:
        """Exhaustive scan over all 720 candidate conjugators."""
        perms = all_perms()
        for c in perms:
            cinv = c.inverse()
            if all(self.table[s.images] == c * s * cinv for s in perms):
                return True
        return False

    def to_json(self) -> str:
        entries = [
            {"from": list(k), "to": list(v.images)}
            for k, v in sorted(self.table.items())
        ]
        return json.dumps(
            {"points": 6, "one_based": False, "entries": entries}, indent=1
        )


_CACHED: OuterAutomorphism | None = None


def get_tau() -> OuterAutomorphism:
    global _CACHED
    if _CACHED is None:
        _CACHED = OuterAutomorphism()
    return _CACHED
