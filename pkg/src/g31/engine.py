"""Generic engine for finite matrix groups of order up to ~10^5.

Elements only need the small protocol `a * b`, `a.inverse()`, `a.key`,
hashability and (for character sums) `a.trace()`; both exact matrices and
scaled signed permutations qualify.  Membership is by hashing canonical
keys -- at these orders a full element table beats Schreier-Sims.

The expensive part of any closure is the element products, so the table
records, for every element, its BFS word in the generators and the
right-multiplication permutation arrays R_k[x] = index(x * gen_k).  After
the build, products, inverses, conjugations, centralizers, subgroup
closures and quotients all run in integer index space (numpy int32),
with no further matrix arithmetic.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .gaussian import GaussRat
from .signed_perm import Perm6


class CapExceeded(RuntimeError):
    """Closure grew past its cap; almost always a wrong generator list."""


class MembershipError(KeyError):
    pass


class GroupTable:
    """An enumerated finite group: elements in BFS discovery order."""

    def __init__(self, elements, index, gens, gen_indices, rmul, words):
        self.elements = elements
        self.index = index
        self.gens = gens
        self.gen_indices = gen_indices
        self.rmul = rmul  # list of int32 arrays, one per generator
        self.words = words
        self.identity_index = 0
        self._rmul_inv = None
        self._inv = None
        self._lmul = None
        self._conj = None
        self._key_rank = None

    # --- construction -------------------------------------------------------

    @classmethod
    def closure(cls, gens: Sequence, cap: int = 100000) -> "GroupTable":
        """Breadth-first closure of the generators under right products."""
        gens = list(gens)
        if not gens:
            raise ValueError("need at least one generator")
        ident = gens[0] * gens[0].inverse()
        elements = [ident]
        index = {ident.key: 0}
        words: list[tuple] = [()]
        rmul_lists: list[list[int]] = [[] for _ in gens]
        qi = 0
        while qi < len(elements):
            x = elements[qi]
            for k, g in enumerate(gens):
                y = x * g
                yk = y.key
                yi = index.get(yk)
                if yi is None:
                    yi = len(elements)
                    if yi >= cap:
                        raise CapExceeded(
                            f"closure exceeded cap {cap}; wrong generators?"
                        )
                    index[yk] = yi
                    elements.append(y)
                    words.append(words[qi] + (k,))
                rmul_lists[k].append(yi)
            qi += 1
        rmul = [np.array(r, dtype=np.int32) for r in rmul_lists]
        gen_indices = [index[g.key] for g in gens]
        return cls(elements, index, gens, gen_indices, rmul, words)

    @classmethod
    def from_parent_indices(
        cls, parent: "GroupTable", gen_parent_indices: Sequence[int], cap: int = 100000
    ) -> "GroupTable":
        """Closure of a subgroup of an already-built table, in index space.

        No element arithmetic happens; products go through the parent's word
        machinery.  Elements are shared with the parent.
        """
        gpi = list(gen_parent_indices)
        if not gpi:
            gpi = [parent.identity_index]
        sub_of_parent = [parent.identity_index]
        sub_index = {parent.identity_index: 0}
        words: list[tuple] = [()]
        rmul_lists: list[list[int]] = [[] for _ in gpi]
        qi = 0
        while qi < len(sub_of_parent):
            xp = sub_of_parent[qi]
            for k, gp in enumerate(gpi):
                yp = parent.mul_idx(xp, gp)
                yi = sub_index.get(yp)
                if yi is None:
                    yi = len(sub_of_parent)
                    if yi >= cap:
                        raise CapExceeded(
                            f"closure exceeded cap {cap}; wrong generators?"
                        )
                    sub_index[yp] = yi
                    sub_of_parent.append(yp)
                    words.append(words[qi] + (k,))
                rmul_lists[k].append(yi)
            qi += 1
        elements = [parent.elements[i] for i in sub_of_parent]
        index = {e.key: i for i, e in enumerate(elements)}
        rmul = [np.array(r, dtype=np.int32) for r in rmul_lists]
        gens = [parent.elements[i] for i in gpi]
        gen_indices = [sub_index[i] for i in gpi]
        table = cls(elements, index, gens, gen_indices, rmul, words)
        table.parent_indices = sub_of_parent
        return table

    # --- basics ---------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, element) -> bool:
        return element.key in self.index

    def index_of(self, element) -> int:
        try:
            return self.index[element.key]
        except KeyError:
            raise MembershipError("element is not in the group") from None

    @property
    def rmul_inv(self):
        if self._rmul_inv is None:
            self._rmul_inv = [_invert_perm(r) for r in self.rmul]
        return self._rmul_inv

    @property
    def inv_indices(self):
        """inv[x] = index of elements[x]^-1, via reversed words."""
        if self._inv is None:
            n = len(self.elements)
            rinv = self.rmul_inv
            out = np.empty(n, dtype=np.int32)
            for i, w in enumerate(self.words):
                y = 0
                for a in reversed(w):
                    y = rinv[a][y]
                out[i] = y
            self._inv = out
        return self._inv

    @property
    def lmul(self):
        """L_k[x] = index of gen_k * elements[x]."""
        if self._lmul is None:
            inv = self.inv_indices
            self._lmul = [inv[r[inv]] for r in self.rmul_inv]
        return self._lmul

    @property
    def conj_arrays(self):
        """C_k[x] = index of gen_k * elements[x] * gen_k^-1."""
        if self._conj is None:
            self._conj = [l[r] for l, r in zip(self.lmul, self.rmul_inv)]
        return self._conj

    @property
    def key_rank(self):
        """rank[x] = position of elements[x] in canonical key order."""
        if self._key_rank is None:
            order = sorted(range(len(self.elements)), key=lambda i: self.elements[i].key)
            rank = np.empty(len(order), dtype=np.int32)
            for pos, i in enumerate(order):
                rank[i] = pos
            self._key_rank = rank
        return self._key_rank

    # --- index-space products ---------------------------------------------------

    def mul_idx(self, i: int, j: int) -> int:
        y = i
        for a in self.words[j]:
            y = self.rmul[a][y]
        return int(y)

    def mul_many(self, arr, j: int):
        arr = np.asarray(arr, dtype=np.int32)
        for a in self.words[j]:
            arr = self.rmul[a][arr]
        return arr

    def inv_idx(self, i: int) -> int:
        return int(self.inv_indices[i])

    def conj_idx(self, g: int, x: int) -> int:
        """g x g^-1 by index."""
        return self.mul_idx(self.mul_idx(g, x), self.inv_idx(g))

    def element_order_idx(self, i: int) -> int:
        k = 1
        y = i
        while y != self.identity_index:
            y = self.mul_idx(y, i)
            k += 1
        return k

    def order_histogram(self) -> Counter:
        return Counter(self.element_order_idx(i) for i in range(len(self.elements)))

    # --- subgroup machinery -----------------------------------------------------

    def subgroup_indices(
        self, gen_idxs: Sequence[int], stop_above: int | None = None
    ):
        """Sorted indices of the subgroup generated by the given elements.

        With stop_above set, returns None as soon as the count exceeds it
        (the caller knows what that implies, e.g. by Lagrange).
        """
        n = len(self.elements)
        member = np.zeros(n, dtype=bool)
        member[self.identity_index] = True
        frontier = np.unique(
            np.array([self.identity_index] + list(gen_idxs), dtype=np.int32)
        )
        member[frontier] = True
        count = int(member.sum())
        gen_idxs = [g for g in dict.fromkeys(gen_idxs)]
        while frontier.size:
            new_parts = []
            for g in gen_idxs:
                prods = self.mul_many(frontier, g)
                fresh = prods[~member[prods]]
                if fresh.size:
                    member[fresh] = True
                    new_parts.append(np.unique(fresh))
            if not new_parts:
                break
            frontier = np.unique(np.concatenate(new_parts))
            count = int(member.sum())
            if stop_above is not None and count > stop_above:
                return None
        return np.flatnonzero(member).astype(np.int32)

    def generated_subgroup(self, seeds: Sequence[int]):
        """Like subgroup_indices but prunes redundant generators first."""
        member = None
        effective: list[int] = []
        for s in dict.fromkeys(seeds):
            if member is not None and member[s]:
                continue
            effective.append(s)
            idxs = self.subgroup_indices(effective)
            member = np.zeros(len(self.elements), dtype=bool)
            member[idxs] = True
        if member is None:
            return np.array([self.identity_index], dtype=np.int32), []
        return np.flatnonzero(member).astype(np.int32), effective

    def conjugation_orbit(self, i: int):
        """Conjugacy class of elements[i] as a sorted index array."""
        conj = self.conj_arrays
        seen = {int(i)}
        queue = deque([int(i)])
        while queue:
            x = queue.popleft()
            for c in conj:
                y = int(c[x])
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return np.array(sorted(seen), dtype=np.int32)

    def conjugacy_classes(self) -> list:
        """Partition of the group into conjugacy classes (index arrays)."""
        n = len(self.elements)
        assigned = np.zeros(n, dtype=bool)
        classes = []
        for i in range(n):
            if not assigned[i]:
                orbit = self.conjugation_orbit(i)
                assigned[orbit] = True
                classes.append(orbit)
        return classes

    def class_of(self, element):
        return self.conjugation_orbit(self.index_of(element))

    def center_indices(self):
        n = len(self.elements)
        central = np.ones(n, dtype=bool)
        for l, r in zip(self.lmul, self.rmul):
            central &= l == r
        return np.flatnonzero(central).astype(np.int32)

    def centralizer_indices(self, i: int):
        n = len(self.elements)
        everyone = np.arange(n, dtype=np.int32)
        xg = self.mul_many(everyone, i)
        inv = self.inv_indices
        gx = inv[self.mul_many(inv, self.inv_idx(i))]
        return np.flatnonzero(xg == gx).astype(np.int32)

    def normal_closure_indices(self, seeds: Sequence[int], cap: int | None = None):
        """Smallest normal subgroup containing the seeds, or None past cap."""
        conj = self.conj_arrays
        closed_seeds: set[int] = set()
        queue = deque(int(s) for s in seeds)
        while queue:
            x = queue.popleft()
            if x in closed_seeds:
                continue
            closed_seeds.add(x)
            if cap is not None and len(closed_seeds) > cap:
                return None
            for c in conj:
                queue.append(int(c[x]))
        member = None
        effective: list[int] = []
        for s in sorted(closed_seeds):
            if member is not None and member[s]:
                continue
            effective.append(s)
            idxs = self.subgroup_indices(effective, stop_above=cap)
            if idxs is None:
                return None
            member = np.zeros(len(self.elements), dtype=bool)
            member[idxs] = True
        if member is None:
            return np.array([self.identity_index], dtype=np.int32)
        return np.flatnonzero(member).astype(np.int32)

    def is_normal(self, sub_idxs) -> bool:
        member = np.zeros(len(self.elements), dtype=bool)
        member[np.asarray(sub_idxs)] = True
        for c in self.conj_arrays:
            if not member[c[np.asarray(sub_idxs)]].all():
                return False
        return True

    def derived_subgroup(self) -> "GroupTable":
        """Commutator subgroup, as a new table sharing this one's elements."""
        gi = self.gen_indices
        inv = self.inv_indices
        comms = []
        for a in gi:
            for b in gi:
                comms.append(
                    self.mul_idx(self.mul_idx(self.mul_idx(a, b), int(inv[a])), int(inv[b]))
                )
        idxs = self.normal_closure_indices(comms)
        _, effective = self.generated_subgroup(list(idxs))
        return GroupTable.from_parent_indices(self, effective)

    # --- traces / characters ------------------------------------------------------

    def irreducibility_sum(self, dim: int) -> bool:
        """Sum of |tr g|^2 over the group equals |G| iff the representation
        given by the elements themselves is irreducible."""
        first = self.elements[0]
        if hasattr(first, "rows") and first.rows != dim:
            raise ValueError(f"elements act in dimension {first.rows}, not {dim}")
        total = 0
        for e in self.elements:
            t = e.trace()
            if t.d != 1:
                raise ValueError("irreducibility sum expects algebraic-integer traces")
            total += t.rn * t.rn + t.in_ * t.in_
        return total == len(self.elements)


def _invert_perm(arr):
    out = np.empty_like(arr)
    out[arr] = np.arange(len(arr), dtype=arr.dtype)
    return out


# --- central quotients ------------------------------------------------------


class CosetElem:
    """Canonical coset representative in a central quotient.

    Multiplication happens in the parent's index space and re-canonicalizes
    to the key-minimal representative of the product coset.
    """

    __slots__ = ("ctx", "rep")

    def __init__(self, ctx: "CentralQuotientContext", rep: int):
        self.ctx = ctx
        self.rep = rep

    def __mul__(self, other: "CosetElem") -> "CosetElem":
        ctx = self.ctx
        return CosetElem(ctx, int(ctx.rep_map[ctx.parent.mul_idx(self.rep, other.rep)]))

    def inverse(self) -> "CosetElem":
        ctx = self.ctx
        return CosetElem(ctx, int(ctx.rep_map[ctx.parent.inv_idx(self.rep)]))

    @property
    def key(self):
        return self.ctx.parent.elements[self.rep].key

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CosetElem)
            and self.ctx is other.ctx
            and self.rep == other.rep
        )

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.rep))

    def __repr__(self) -> str:
        return f"Coset({self.ctx.parent.elements[self.rep]!r})"


class CentralQuotientContext:
    def __init__(self, parent: GroupTable, central_indices):
        self.parent = parent
        self.central_indices = list(int(c) for c in central_indices)
        center = set(int(i) for i in parent.center_indices())
        if not set(self.central_indices) <= center:
            raise ValueError("quotient requires a central subgroup")
        sub = parent.subgroup_indices(self.central_indices)
        if len(sub) != len(self.central_indices):
            raise ValueError("central indices do not form a subgroup")
        n = len(parent.elements)
        everyone = np.arange(n, dtype=np.int32)
        cands = np.stack([parent.mul_many(everyone, c) for c in self.central_indices])
        ranks = parent.key_rank[cands]
        choice = np.argmin(ranks, axis=0)
        self.rep_map = cands[choice, np.arange(n)]


def quotient_by_central(g: GroupTable, central_indices) -> GroupTable:
    """G / C for a central subgroup C, as a table of canonical coset reps."""
    ctx = CentralQuotientContext(g, central_indices)
    gens = [CosetElem(ctx, int(ctx.rep_map[i])) for i in g.gen_indices]
    q = GroupTable.closure(gens, cap=len(g.elements))
    expect = len(g.elements) // len(ctx.central_indices)
    if len(q.elements) != expect:
        raise AssertionError(
            f"quotient has order {len(q.elements)}, expected {expect}"
        )
    q.quotient_ctx = ctx
    return q


# --- exact sequences and complements -----------------------------------------


@dataclass
class ExtensionSpec:
    """1 -> K -> G -> Q -> 1 with Q a permutation group on 6 points."""

    group: GroupTable
    kernel_indices: Sequence[int]
    phi_values: list  # Perm6 per element, aligned with group.elements
    quotient: str  # "S6" or "A6"
    name: str = ""

    def fiber(self, target: Perm6) -> list[int]:
        return [i for i, p in enumerate(self.phi_values) if p == target]


def verify_exact_sequence(spec: ExtensionSpec) -> dict:
    """Checks kernel, image, normality and the order equation; returns a report."""
    g = spec.group
    n = len(g.elements)
    problems = []
    # phi is a homomorphism: checked on (x, gen) pairs, which spans all products
    for k, garr in enumerate(g.rmul):
        pg = spec.phi_values[g.gen_indices[k]]
        for x in range(n):
            if spec.phi_values[int(garr[x])] != spec.phi_values[x] * pg:
                problems.append(f"phi not multiplicative at ({x}, gen {k})")
                break
    ident = Perm6.identity()
    kernel = {i for i, p in enumerate(spec.phi_values) if p == ident}
    if kernel != set(int(i) for i in spec.kernel_indices):
        problems.append("kernel of phi differs from the declared kernel")
    if not g.is_normal(np.array(sorted(kernel), dtype=np.int32)):
        problems.append("kernel is not normal")
    image = {p.images for p in spec.phi_values}
    expected_q = 720 if spec.quotient == "S6" else 360
    if spec.quotient == "A6" and any(
        Perm6(im).sign() < 0 for im in image
    ):
        problems.append("image contains odd permutations")
    if len(image) != expected_q:
        problems.append(f"image has {len(image)} elements, expected {expected_q}")
    if n != len(kernel) * expected_q:
        problems.append("order equation |G| = |K| * |Q| fails")
    return {
        "name": spec.name,
        "ok": not problems,
        "kernel_order": len(kernel),
        "quotient_order": expected_q,
        "group_order": n,
        "problems": problems,
    }


# Coxeter presentation of S6 on adjacent transpositions t1..t5:
#   ti^2, (ti tj)^3 for |i-j| = 1, (ti tj)^2 for |i-j| >= 2
S6_COXETER_GENS = [Perm6.from_cycles((j, j + 1)) for j in range(1, 6)]


def complement_exists(spec: ExtensionSpec):
    """Search for a homomorphic section of phi over the S6 Coxeter generators.

    Returns ("witness", [indices]) or ("exhausted", nodes_visited).  A found
    tuple satisfies the full presentation, so it extends to a section; this
    is re-verified a posteriori (order 720, trivial kernel intersection).
    """
    if spec.quotient != "S6":
        raise ValueError("search only implements the S6 Coxeter presentation")
    g = spec.group
    e = g.identity_index
    rank = g.key_rank
    fibers = []
    for t in S6_COXETER_GENS:
        fib = [i for i in spec.fiber(t) if g.mul_idx(i, i) == e]
        fib.sort(key=lambda i: int(rank[i]))
        fibers.append(fib)
    nodes = 0

    def ok_pair(i: int, gi: int, j: int, gj: int) -> bool:
        prod = g.mul_idx(gi, gj)
        m = 3 if abs(i - j) == 1 else 2
        y = prod
        for _ in range(m - 1):
            y = g.mul_idx(y, prod)
        return y == e

    chosen: list[int] = []

    def backtrack(level: int):
        nonlocal nodes
        if level == 5:
            return list(chosen)
        for cand in fibers[level]:
            nodes += 1
            if all(ok_pair(j, chosen[j], level, cand) for j in range(level)):
                chosen.append(cand)
                found = backtrack(level + 1)
                if found is not None:
                    return found
                chosen.pop()
        return None

    witness = backtrack(0)
    if witness is None:
        return ("exhausted", nodes)
    report = verify_complement(spec, witness, expected_order=720)
    if not report["ok"]:
        raise AssertionError(f"witness failed verification: {report}")
    return ("witness", witness)


def verify_complement(spec: ExtensionSpec, lift_indices: Sequence[int], expected_order: int) -> dict:
    """Check that the lifted generators generate a complement to the kernel."""
    g = spec.group
    idxs = g.subgroup_indices(list(lift_indices))
    kernel = set(int(i) for i in spec.kernel_indices)
    inter = [i for i in idxs.tolist() if i in kernel]
    images = {spec.phi_values[i].images for i in idxs.tolist()}
    ok = (
        len(idxs) == expected_order
        and inter == [g.identity_index]
        and len(images) == expected_order
    )
    return {
        "ok": ok,
        "order": int(len(idxs)),
        "kernel_intersection": len(inter),
        "image_size": len(images),
    }


# --- normal 2-subgroups -------------------------------------------------------


def two_power_order_indices(g: GroupTable):
    """Indices of elements of 2-power order, by repeated squaring."""
    n = len(g.elements)
    v2 = _two_valuation(n)
    cur = np.arange(n, dtype=np.int32)
    for _ in range(v2):
        cur = np.array([g.mul_idx(int(x), int(x)) for x in cur], dtype=np.int32)
        # squaring element-wise: x -> x^2, so after v2 rounds cur[i] = i^(2^v2)
    return np.flatnonzero(cur == g.identity_index).astype(np.int32)


def _two_valuation(n: int) -> int:
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v


def normal_2_subgroups(g: GroupTable) -> list:
    """All normal 2-subgroups, as sorted index arrays (increasing order).

    Every normal 2-subgroup is the join of the normal closures of the
    conjugacy classes it contains, so the whole lattice is generated under
    joins by the class-closure atoms.  The product of two normal 2-subgroups
    is again a normal 2-subgroup (its order divides the product of theirs),
    so the fixpoint below never leaves the lattice and terminates.
    """
    n = len(g.elements)
    cap = 2 ** _two_valuation(n)
    candidates = two_power_order_indices(g)
    cand_set = set(candidates.tolist())
    assigned: set[int] = set()
    atoms: list[frozenset] = []
    for i in candidates.tolist():
        if i in assigned:
            continue
        orbit = g.conjugation_orbit(i)
        assigned.update(orbit.tolist())
        if len(orbit) >= cap:
            continue
        closure = g.normal_closure_indices([i], cap=cap)
        if closure is None:
            continue
        if all(int(x) in cand_set for x in closure):
            atoms.append(frozenset(int(x) for x in closure.tolist()))
    atoms = sorted(set(atoms), key=lambda s: (len(s), sorted(s)))
    trivial = frozenset({g.identity_index})
    subgroups = {trivial}
    frontier = [trivial]
    while frontier:
        cur = frontier.pop()
        for a in atoms:
            if a <= cur:
                continue
            joined = g.normal_closure_indices(sorted(cur | a), cap=cap)
            if joined is None:
                continue
            js = frozenset(int(x) for x in joined.tolist())
            if js not in subgroups:
                subgroups.add(js)
                frontier.append(js)
    return [
        np.array(sorted(s), dtype=np.int32)
        for s in sorted(subgroups, key=lambda s: (len(s), sorted(s)))
    ]


def is_elementary_abelian_2(g: GroupTable, idxs) -> bool:
    """Exponent <= 2 forces commutativity, so only orders need checking."""
    e = g.identity_index
    return all(g.mul_idx(int(i), int(i)) == e for i in np.asarray(idxs).tolist())
