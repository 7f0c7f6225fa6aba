"""Exterior square of a 4-dimensional space over Q(i).

Fixes the bivector basis B = (e1^e2, e1^e3, e1^e4, e2^e3, e2^e4, e3^e4) and
the volume generator eps = e1^e2^e3^e4, giving the symmetric wedge form
b(x, y) = coefficient of x^y on eps.  An orthonormal basis E for b is chosen
inside Q(i) (no sqrt(2) available) out of hyperbolic pairs:

    E1 = e12 + (1/2)e34        E2 = i(e12 - (1/2)e34)
    E3 = e13 + (1/2)e42        E4 = i(e13 - (1/2)e42)
    E5 = e14 + (1/2)e23        E6 = i(e14 - (1/2)e23)

The Gram matrix of E is asserted to be the identity at import time.

lambda2 is the exterior-square homomorphism GL4 -> GL6 expressed in basis E;
spin_lift inverts it (up to the kernel {Id, -Id}) by exact linear algebra:
factor the images of the decomposable bivectors e1^ej into planes, intersect
the planes to recover the image line of e1, solve for the remaining columns,
and fix the overall scale with a square root in Q(i).
"""

from __future__ import annotations

from fractions import Fraction

from .gaussian import GaussRat, I, ONE, ZERO, sqrt_gaussian
from .matrices import Mat, kernel_basis, rank, rref, solve


class NotInImage(ValueError):
    """The 6x6 input is not the exterior square of any 4x4 matrix."""


class SqrtNotInField(ValueError):
    """The rescaling constant has no square root in Q(i)."""


# index pairs of the bivector basis B, 0-based
PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_PAIR_INDEX = {p: k for k, p in enumerate(PAIRS)}

# b(B_I, B_J): nonzero only on complementary pairs, with the sign of the
# permutation (I, J) of (1,2,3,4)
_COMPLEMENT = {0: (5, 1), 1: (4, -1), 2: (3, 1), 3: (2, 1), 4: (1, -1), 5: (0, 1)}

GRAM_B = Mat.from_rows(
    [
        [
            GaussRat(_COMPLEMENT[i][1]) if _COMPLEMENT[i][0] == j else ZERO
            for j in range(6)
        ]
        for i in range(6)
    ]
)

HALF = GaussRat(Fraction(1, 2))
IHALF = GaussRat(0, Fraction(1, 2))

# columns of P = coordinates of E1..E6 in basis B
P = Mat.from_rows(
    [
        # e12    e13    e14    e23    e24     e34
        [ONE, I, ZERO, ZERO, ZERO, ZERO],
        [ZERO, ZERO, ONE, I, ZERO, ZERO],
        [ZERO, ZERO, ZERO, ZERO, ONE, I],
        [ZERO, ZERO, ZERO, ZERO, HALF, -IHALF],
        [ZERO, ZERO, -HALF, IHALF, ZERO, ZERO],
        [HALF, -IHALF, ZERO, ZERO, ZERO, ZERO],
    ]
)
P_INV = P.inv()

VOLUME_GENERATOR = "e1^e2^e3^e4"


class BivectorBasisInfo:
    """Frozen basis conventions; Gram(E) = Id is asserted on construction."""

    def __init__(self):
        self.pairs = PAIRS
        self.gram_b = GRAM_B
        self.p = P
        self.p_inv = P_INV
        gram_e = P.transpose() * GRAM_B * P
        if gram_e != Mat.identity(6):
            raise AssertionError("orthonormal basis E failed its Gram check")


BASIS_INFO = BivectorBasisInfo()


def _as_coords(x) -> tuple:
    if isinstance(x, Mat):
        if x.cols != 1 or x.rows != 6:
            raise ValueError("bivector must be a 6-entry column or sequence")
        return x.entries
    xs = tuple(GaussRat(v) if not isinstance(v, GaussRat) else v for v in x)
    if len(xs) != 6:
        raise ValueError("bivector needs 6 coordinates")
    return xs


def to_basis_b(x, basis: str) -> tuple:
    xs = _as_coords(x)
    if basis == "B":
        return xs
    if basis == "E":
        return (P * Mat(6, 1, xs)).entries
    raise ValueError(f"unknown basis tag {basis!r}")


def wedge_form(x, y, basis: str = "B") -> GaussRat:
    """b(x, y): coefficient of x^y on the volume generator."""
    xb = to_basis_b(x, basis)
    yb = to_basis_b(y, basis)
    acc = ZERO
    for i, (j, s) in _COMPLEMENT.items():
        if xb[i] and yb[j]:
            term = xb[i] * yb[j]
            acc = acc + (term if s > 0 else -term)
    return acc


def wedge_vectors(v, w) -> tuple:
    """v ^ w for v, w in V, as basis-B bivector coordinates."""
    v = _vec4(v)
    w = _vec4(w)
    return tuple(v[i] * w[j] - v[j] * w[i] for (i, j) in PAIRS)


def _vec4(v) -> tuple:
    if isinstance(v, Mat):
        if v.cols != 1 or v.rows != 4:
            raise ValueError("vector must be a 4-entry column or sequence")
        return v.entries
    vs = tuple(GaussRat(x) if not isinstance(x, GaussRat) else x for x in v)
    if len(vs) != 4:
        raise ValueError("vector needs 4 coordinates")
    return vs


def compound2(g: Mat) -> Mat:
    """Second compound matrix of a 4x4: action of g^g on basis B."""
    if g.rows != 4 or g.cols != 4:
        raise ValueError("compound2 expects a 4x4 matrix")
    e = g.entries
    out = []
    for (i1, i2) in PAIRS:
        for (j1, j2) in PAIRS:
            out.append(e[i1 * 4 + j1] * e[i2 * 4 + j2] - e[i1 * 4 + j2] * e[i2 * 4 + j1])
    return Mat._raw(6, 6, tuple(out))


def lambda2(g: Mat) -> Mat:
    """Matrix of g^g on the exterior square, in the orthonormal basis E."""
    return P_INV * compound2(g) * P


def is_decomposable(x, basis: str = "B") -> bool:
    """x is a pure wedge v^w iff x^x = 0."""
    xb = to_basis_b(x, basis)
    return not wedge_form(xb, xb)


def _antisym_matrix(xb: tuple) -> Mat:
    rows = [[ZERO] * 4 for _ in range(4)]
    for k, (i, j) in enumerate(PAIRS):
        rows[i][j] = xb[k]
        rows[j][i] = -xb[k]
    return Mat.from_rows(rows)


def factor_decomposable(x, basis: str = "B") -> tuple[Mat, Mat]:
    """Vectors (v, w) with v^w = x, for nonzero decomposable x."""
    xb = to_basis_b(x, basis)
    if not any(xb):
        raise ValueError("cannot factor the zero bivector")
    if not is_decomposable(xb):
        raise ValueError("bivector is not decomposable")
    m = _antisym_matrix(xb)
    cols = [Mat(4, 1, m.col(j)) for j in range(4)]
    v = next(c for c in cols if any(c.entries))
    w = next(
        (c for c in cols if rank(Mat(4, 2, _interleave(v.entries, c.entries))) == 2),
        None,
    )
    if w is None:
        raise ValueError("bivector coordinate matrix has rank < 2")
    prod = wedge_vectors(v, w)
    k = next(i for i in range(6) if xb[i])
    if not prod[k]:
        raise ValueError("factorization failed")  # cannot happen for rank-2 input
    scale = xb[k] / prod[k]
    return v, w.scalar_mul(scale)


def _interleave(a: tuple, b: tuple) -> list:
    out = []
    for x, y in zip(a, b):
        out.extend((x, y))
    return out


def spin_lift(L: Mat) -> Mat:
    """A 4x4 g with lambda2(g) = L, canonical sign.

    Raises NotInImage when L is not an exterior square over Q(i) up to the
    final scale, and SqrtNotInField when the scale constant is not a square
    in Q(i).  The returned lift is verified exactly before returning.
    """
    if L.rows != 6 or L.cols != 6:
        raise ValueError("spin_lift expects a 6x6 matrix")
    lb = P * L * P_INV
    # images of e1^ej, j = 2, 3, 4 are the first three basis-B columns
    images = [Mat(6, 1, lb.col(k)) for k in range(3)]
    planes = []
    for img in images:
        if not any(img.entries) or not is_decomposable(img.entries):
            raise NotInImage("image of a decomposable bivector is not decomposable")
        planes.append(factor_decomposable(img.entries))
    constraints: list[list[GaussRat]] = []
    for v, w in planes:
        span = Mat(2, 4, list(v.entries) + list(w.entries))
        for kv in kernel_basis(span):
            constraints.append(list(kv.entries))
    inter = kernel_basis(Mat(len(constraints), 4, [x for row in constraints for x in row]))
    if len(inter) != 1:
        raise NotInImage("plane intersection is not a line")
    v1 = inter[0]
    # wedge-by-v1 map as a 6x4 matrix, columns v1 ^ e_k
    wmat_cols = [wedge_vectors(v1, Mat(4, 1, [ONE if r == k else ZERO for r in range(4)])) for k in range(4)]
    wmat = Mat(6, 4, [wmat_cols[k][r] for r in range(6) for k in range(4)])
    xs = []
    for img in images:
        x = solve(wmat, img)
        if x is None:
            raise NotInImage("no column solves v1 ^ x = L(e1 ^ ej)")
        xs.append(x)
    # unknowns (t2, t3, t4, c):
    #   (x_j + t_j v1) ^ (x_k + t_k v1) = c * L(ej ^ ek)
    rows: list[list[GaussRat]] = []
    rhs: list[GaussRat] = []
    pair_to_col = {(0, 1): 3, (0, 2): 4, (1, 2): 5}
    for (a, b), lcol in pair_to_col.items():
        xa, xb_ = xs[a], xs[b]
        w_ab = wedge_vectors(xa, xb_)
        v1_xb = wedge_vectors(v1, xb_)
        xa_v1 = wedge_vectors(xa, v1)
        lcol_coords = lb.col(lcol)
        for r in range(6):
            row = [ZERO, ZERO, ZERO, ZERO]
            row[a] = v1_xb[r]
            row[b] = xa_v1[r]
            row[3] = -lcol_coords[r]
            rows.append(row)
            rhs.append(-w_ab[r])
    sol = solve(
        Mat(len(rows), 4, [x for row in rows for x in row]),
        Mat(len(rhs), 1, rhs),
    )
    if sol is None:
        raise NotInImage("inconsistent rescaling constraints")
    t2, t3, t4, c = sol.entries
    if not c:
        raise NotInImage("rescaling constant is zero")
    lam = sqrt_gaussian(c)
    if lam is None:
        raise SqrtNotInField(f"rescaling constant {c} is not a square in Q(i)")
    lam_inv = lam.inv()
    cols = [v1.scalar_mul(lam)]
    for x, t in zip(xs, (t2, t3, t4)):
        col = Mat(4, 1, [xe + t * ve for xe, ve in zip(x.entries, v1.entries)])
        cols.append(col.scalar_mul(lam_inv))
    g = Mat(4, 4, [cols[j].entries[i] for i in range(4) for j in range(4)])
    if lambda2(g) != L:
        raise NotInImage("candidate lift failed exact verification")
    return canonical_sign(g)


def canonical_sign(g: Mat) -> Mat:
    """Of g and -g, the one whose first nonzero entry is lexicographically
    positive (re > 0, or re = 0 and im > 0)."""
    lead = next((e for e in g.entries if e), None)
    if lead is None:
        return g
    if lead.rn < 0 or (lead.rn == 0 and lead.in_ < 0):
        return -g
    return g


def symplectic_dual(psi_star: Mat) -> tuple:
    """The bivector psi with b(psi, .) equal to the functional psi_star
    defines on the exterior square; coordinates in basis B."""
    _check_alternating(psi_star)
    phi = Mat(6, 1, [psi_star[i, j] for (i, j) in PAIRS])
    psi = solve(GRAM_B, phi)
    if psi is None:
        raise ValueError("wedge form is degenerate")  # cannot happen, GRAM_B invertible
    return psi.entries


def _check_alternating(psi_star: Mat) -> None:
    if psi_star.rows != 4 or psi_star.cols != 4:
        raise ValueError("psi_star must be 4x4")
    if psi_star.transpose() != -psi_star or any(psi_star[i, i] for i in range(4)):
        raise ValueError("psi_star must be alternating")
    from .matrices import det as _det

    if not _det(psi_star):
        raise ValueError("psi_star must be non-degenerate")


def check_sp_stabilizes(g: Mat, psi_star: Mat) -> bool:
    """For symplectic g: does lambda2(g) fix psi and preserve its
    b-orthogonal complement?"""
    _check_alternating(psi_star)
    if g.transpose() * psi_star * g != psi_star:
        raise ValueError("g does not preserve psi_star")
    psi = symplectic_dual(psi_star)
    c2 = compound2(g)
    if (c2 * Mat(6, 1, psi)).entries != psi:
        return False
    # psi-perp: kernel of the row b(psi, .)
    row = Mat(1, 6, (Mat(1, 6, psi) * GRAM_B).entries)
    for kv in kernel_basis(row):
        if wedge_form(psi, (c2 * kv).entries):
            return False
    return True


def symplectic_transvection(u, psi_star: Mat) -> Mat:
    """x -> x + psi_star(x, u) u; symplectic for every u."""
    u = Mat(4, 1, _vec4(u))
    su = psi_star * u  # psi_star(x, u) = x . (psi_star u)
    rows = []
    for i in range(4):
        row = [
            (ONE if i == j else ZERO) + u.entries[i] * su.entries[j] for j in range(4)
        ]
        rows.append(row)
    return Mat.from_rows(rows)
