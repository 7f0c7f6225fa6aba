"""Scaled signed permutations of the orthonormal bivector basis.

The hyperoctahedral family lives inside the monomial subgroup of GL6: every
element acts by e_j -> i^k * s_j * e_{p(j)} with a global 4th root of unity
i^k, a permutation p of 6 points and a sign vector s.  The canonical form
keeps k in {0, 1} by folding i^2 = -1 into the signs, so each element has a
unique representation.

Characters on the family:
    gamma   = (-1)^k * prod(s)          (determinant of the diagonal part)
    det     = (-1)^k * prod(s) * sign(p)
"""

from __future__ import annotations

import itertools

from .gaussian import GaussRat, I, ONE, ZERO
from .matrices import Mat


class NotMonomial(ValueError):
    pass


class Perm6:
    """Permutation of {1..6}, stored as a 0-based image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != [0, 1, 2, 3, 4, 5]:
            raise ValueError(f"not a permutation of 6 points: {images}")
        self.images = images

    @classmethod
    def identity(cls) -> "Perm6":
        return cls((0, 1, 2, 3, 4, 5))

    @classmethod
    def from_cycles(cls, *cycles) -> "Perm6":
        """Cycles use 1-based points, e.g. from_cycles((1, 2), (3, 4))."""
        images = list(range(6))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b - 1
        return cls(images)

    def __call__(self, j: int) -> int:
        return self.images[j]

    def __mul__(self, other: "Perm6") -> "Perm6":
        # (a * b)(j) = a(b(j)), matching matrix products
        return Perm6(tuple(self.images[x] for x in other.images))

    def inverse(self) -> "Perm6":
        out = [0] * 6
        for j, x in enumerate(self.images):
            out[x] = j
        return Perm6(out)

    def sign(self) -> int:
        s = 1
        for a, b in itertools.combinations(range(6), 2):
            if self.images[a] > self.images[b]:
                s = -s
        return s

    def cycle_type(self) -> tuple:
        seen = [False] * 6
        lens = []
        for j in range(6):
            if not seen[j]:
                length = 0
                x = j
                while not seen[x]:
                    seen[x] = True
                    x = self.images[x]
                    length += 1
                lens.append(length)
        return tuple(sorted(lens, reverse=True))

    def cycles(self) -> list[tuple]:
        """Nontrivial cycles, 1-based, for display."""
        seen = [False] * 6
        out = []
        for j in range(6):
            if not seen[j]:
                cyc = []
                x = j
                while not seen[x]:
                    seen[x] = True
                    cyc.append(x + 1)
                    x = self.images[x]
                if len(cyc) > 1:
                    out.append(tuple(cyc))
        return out

    @property
    def key(self):
        return self.images

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm6) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        cyc = self.cycles()
        return "".join(str(c) for c in cyc) if cyc else "()"

    def to_matrix(self) -> Mat:
        return Mat.from_rows(
            [
                [ONE if self.images[j] == r else ZERO for j in range(6)]
                for r in range(6)
            ]
        )


def all_perms() -> list[Perm6]:
    return [Perm6(p) for p in itertools.permutations(range(6))]


class ScaledSignedPerm:
    """i^k times a signed permutation matrix; canonical k in {0, 1}."""

    __slots__ = ("k", "p", "s")

    def __init__(self, k: int, p: Perm6, s):
        s = tuple(s)
        if len(s) != 6 or any(x not in (1, -1) for x in s):
            raise ValueError("signs must be six values in {+1, -1}")
        k %= 4
        if k >= 2:
            k -= 2
            s = tuple(-x for x in s)
        self.k = k
        self.p = p
        self.s = s

    @classmethod
    def identity(cls) -> "ScaledSignedPerm":
        return cls(0, Perm6.identity(), (1,) * 6)

    @classmethod
    def from_perm(cls, p: Perm6) -> "ScaledSignedPerm":
        return cls(0, p, (1,) * 6)

    @classmethod
    def diagonal(cls, signs) -> "ScaledSignedPerm":
        return cls(0, Perm6.identity(), signs)

    @classmethod
    def scalar_i(cls) -> "ScaledSignedPerm":
        return cls(1, Perm6.identity(), (1,) * 6)

    def __mul__(self, other: "ScaledSignedPerm") -> "ScaledSignedPerm":
        # (a*b) e_j = a(i^kb sb_j e_{pb(j)})
        pb = other.p.images
        sa = self.s
        return ScaledSignedPerm(
            self.k + other.k,
            self.p * other.p,
            tuple(sb_j * sa[pb_j] for sb_j, pb_j in zip(other.s, pb)),
        )

    def inverse(self) -> "ScaledSignedPerm":
        pinv = self.p.inverse()
        s = tuple(self.s[pinv.images[j]] for j in range(6))
        return ScaledSignedPerm(-self.k, pinv, s)

    def pi(self) -> Perm6:
        return self.p

    def gamma(self) -> int:
        g = -1 if self.k else 1
        for x in self.s:
            g *= x
        return g

    def det(self) -> GaussRat:
        d = self.gamma() * self.p.sign()
        return GaussRat(d)

    def prod_signs(self) -> int:
        g = 1
        for x in self.s:
            g *= x
        return g

    def trace(self) -> GaussRat:
        t = sum(self.s[j] for j in range(6) if self.p.images[j] == j)
        return GaussRat(t) if self.k == 0 else GaussRat(0, t)

    def __neg__(self) -> "ScaledSignedPerm":
        return ScaledSignedPerm(self.k, self.p, tuple(-x for x in self.s))

    def scale_i(self) -> "ScaledSignedPerm":
        """i times this element."""
        return ScaledSignedPerm(self.k + 1, self.p, self.s)

    @property
    def key(self):
        return (self.k, self.p.images, self.s)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ScaledSignedPerm)
            and self.k == other.k
            and self.p == other.p
            and self.s == other.s
        )

    def __hash__(self) -> int:
        return hash((self.k, self.p.images, self.s))

    def serialize(self) -> str:
        perm = ",".join(str(x + 1) for x in self.p.images)
        signs = "".join("+" if x > 0 else "-" for x in self.s)
        return f"i^{self.k} * perm[{perm}] * signs[{signs}]"

    __repr__ = serialize

    def to_matrix(self) -> Mat:
        scale = I if self.k else ONE
        rows = [[ZERO] * 6 for _ in range(6)]
        for j in range(6):
            rows[self.p.images[j]][j] = scale * GaussRat(self.s[j])
        return Mat.from_rows(rows)


def from_matrix(m: Mat) -> ScaledSignedPerm:
    """Inverse of to_matrix; raises NotMonomial on anything else."""
    if m.rows != 6 or m.cols != 6:
        raise NotMonomial("expected a 6x6 matrix")
    allowed = {GaussRat(1): (0, 1), GaussRat(-1): (0, -1), I: (1, 1), -I: (1, -1)}
    k = None
    images = [None] * 6
    signs = [0] * 6
    for j in range(6):
        col = m.col(j)
        nz = [(r, e) for r, e in enumerate(col) if e]
        if len(nz) != 1 or nz[0][1] not in allowed:
            raise NotMonomial(f"column {j} is not a single entry from {{+-1, +-i}}")
        r, e = nz[0]
        ek, es = allowed[e]
        if k is None:
            k = ek
        elif k != ek:
            raise NotMonomial("mixed real and imaginary entries")
        images[j] = r
        signs[j] = es
    return ScaledSignedPerm(k, Perm6(images), signs)


# --- named constants from the construction ---------------------------------

def mu0() -> ScaledSignedPerm:
    """Block rotation by 90 degrees in three coordinate planes."""
    return ScaledSignedPerm(
        0, Perm6.from_cycles((1, 2), (3, 4), (5, 6)), (-1, 1, -1, 1, -1, 1)
    )


def rho() -> ScaledSignedPerm:
    """diag(-1,1,1,1,1,1) composed with the transposition (5,6)."""
    return ScaledSignedPerm(0, Perm6.from_cycles((5, 6)), (-1, 1, 1, 1, 1, 1))


def t0() -> ScaledSignedPerm:
    return ScaledSignedPerm.diagonal((1, -1, 1, -1, 1, -1))


# --- membership predicates ---------------------------------------------------

def in_W6(a: ScaledSignedPerm) -> bool:
    return a.k == 0


def in_W6plus(a: ScaledSignedPerm) -> bool:
    return a.k == 0 and a.det() == 1


def in_W6prime(a: ScaledSignedPerm) -> bool:
    return a.k == 0 and a.gamma() == 1


def in_cW6(a: ScaledSignedPerm) -> bool:
    # <W6+, i Id> = W6+ together with i * W6+
    return a.prod_signs() * a.p.sign() == 1


def in_cW6prime(a: ScaledSignedPerm) -> bool:
    return in_cW6(a) and a.gamma() == 1


def in_A6(a: ScaledSignedPerm) -> bool:
    return a.k == 0 and a.p == Perm6.identity()


def in_A6prime(a: ScaledSignedPerm) -> bool:
    return in_A6(a) and a.prod_signs() == 1


MEMBERSHIP = {
    "W6": in_W6,
    "W6plus": in_W6plus,
    "W6prime": in_W6prime,
    "cW6": in_cW6,
    "cW6prime": in_cW6prime,
    "A6": in_A6,
    "A6prime": in_A6prime,
}

EXPECTED_ORDERS = {
    "W6": 46080,
    "W6plus": 23040,
    "W6prime": 23040,
    "cW6": 46080,
    "cW6prime": 23040,
    "DW6": 11520,
    "A6": 64,
    "A6prime": 32,
    "S6perm": 720,
    "A6alt": 360,
}


def group_generators(name: str) -> list[ScaledSignedPerm]:
    """Generator lists for the hyperoctahedral family.

    The choices are validated by closure-order assertions downstream; a wrong
    list fails loudly against EXPECTED_ORDERS.
    """
    perm = lambda *cyc: ScaledSignedPerm.from_perm(Perm6.from_cycles(*cyc))
    diag = ScaledSignedPerm.diagonal
    if name == "W6":
        return [perm((1, 2)), perm((1, 2, 3, 4, 5, 6)), diag((-1, 1, 1, 1, 1, 1))]
    if name == "W6prime":
        return [perm((j, j + 1)) for j in range(1, 6)] + [
            diag((-1, -1, 1, 1, 1, 1))
        ]
    if name == "W6plus":
        return [
            perm((1, 2, 3)),
            perm((2, 3, 4, 5, 6)),
            diag((-1, -1, 1, 1, 1, 1)),
            rho(),
        ]
    if name == "cW6":
        return group_generators("W6plus") + [ScaledSignedPerm.scalar_i()]
    if name == "cW6prime":
        return [
            perm((1, 2, 3)),
            perm((2, 3, 4, 5, 6)),
            diag((-1, -1, 1, 1, 1, 1)),
            rho().scale_i(),
        ]
    if name == "DW6":
        return [
            perm((1, 2, 3)),
            perm((2, 3, 4, 5, 6)),
            diag((-1, -1, 1, 1, 1, 1)),
        ]
    if name == "A6":
        return [
            diag(tuple(-1 if i == j else 1 for i in range(6))) for j in range(6)
        ]
    if name == "A6prime":
        return [
            diag(tuple(-1 if i in (j, j + 1) else 1 for i in range(6)))
            for j in range(5)
        ]
    if name == "S6perm":
        return [perm((1, 2)), perm((1, 2, 3, 4, 5, 6))]
    if name == "A6alt":
        return [perm((1, 2, 3)), perm((2, 3, 4, 5, 6))]
    raise ValueError(f"unknown group name {name!r}")
