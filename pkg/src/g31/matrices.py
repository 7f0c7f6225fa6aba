"""Dense exact matrices over Q(i).

Sizes are tiny (4x4 and 6x6 dominate) but the volume of products is large:
group closures multiply hundreds of thousands of matrices.  Mat is therefore
immutable, hashes on its entry tuple, and the product skips zero entries,
which makes monomial matrices cheap.

Determinants use Bareiss-style fraction-free elimination on a denominator-
cleared Gaussian-integer matrix; characteristic polynomials use
Faddeev-LeVerrier (all divisions are by small integers, exact in Q(i)).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .gaussian import GaussRat, ONE, ZERO, _coerce


class DimensionError(ValueError):
    pass


def _gr(x) -> GaussRat:
    g = _coerce(x)
    if g is None:
        g = GaussRat(x)
    return g


class Mat:
    """Immutable dense matrix over Q(i), row-major entries."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(_gr(x) for x in entries)
        if len(entries) != rows * cols:
            raise DimensionError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = None

    @classmethod
    def _raw(cls, rows: int, cols: int, entries: tuple) -> "Mat":
        self = object.__new__(cls)
        self.rows, self.cols, self.entries = rows, cols, entries
        self._hash = None
        return self

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Mat":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = [x for row in rows for x in row]
        return cls(r, c, flat)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls._raw(
            n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n))
        )

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Mat":
        return cls._raw(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def diagonal(cls, diag: Sequence) -> "Mat":
        n = len(diag)
        return cls(
            n, n, [diag[i] if i == j else ZERO for i in range(n) for j in range(n)]
        )

    def __getitem__(self, ij) -> GaussRat:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j :: self.cols]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash((self.rows, self.cols, self.entries))
        return h

    @property
    def key(self):
        """Canonical sortable/hashable key: the entry value tuple."""
        return tuple((e.rn, e.in_, e.d) for e in self.entries)

    def canonical_string(self) -> str:
        return ";".join(e.serialize() for e in self.entries)

    def __mul__(self, other) -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * m : (i + 1) * m]
            acc = [ZERO] * p
            for k in range(m):
                aik = arow[k]
                if not aik:
                    continue
                brow = b[k * p : (k + 1) * p]
                for j in range(p):
                    bkj = brow[j]
                    if bkj:
                        acc[j] = acc[j] + aik * bkj
            out.extend(acc)
        return Mat._raw(n, p, tuple(out))

    def __add__(self, other) -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in add")
        return Mat._raw(
            self.rows,
            self.cols,
            tuple(x + y for x, y in zip(self.entries, other.entries)),
        )

    def __sub__(self, other) -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in sub")
        return Mat._raw(
            self.rows,
            self.cols,
            tuple(x - y for x, y in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> "Mat":
        return Mat._raw(self.rows, self.cols, tuple(-x for x in self.entries))

    def scalar_mul(self, c) -> "Mat":
        c = _gr(c)
        return Mat._raw(self.rows, self.cols, tuple(c * x for x in self.entries))

    def transpose(self) -> "Mat":
        return Mat._raw(
            self.cols,
            self.rows,
            tuple(
                self.entries[i * self.cols + j]
                for j in range(self.cols)
                for i in range(self.rows)
            ),
        )

    def conj_entrywise(self) -> "Mat":
        return Mat._raw(self.rows, self.cols, tuple(x.conj() for x in self.entries))

    def trace(self) -> GaussRat:
        if self.rows != self.cols:
            raise DimensionError("trace of a non-square matrix")
        t = ZERO
        for i in range(self.rows):
            t = t + self.entries[i * self.cols + i]
        return t

    def is_identity(self) -> bool:
        n = self.rows
        if n != self.cols:
            return False
        e = self.entries
        return all(e[i * n + j] == (ONE if i == j else ZERO) for i in range(n) for j in range(n))

    def inv(self) -> "Mat":
        """Inverse via Gauss-Jordan; raises on singular input."""
        if self.rows != self.cols:
            raise DimensionError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.row(i)) + list(Mat.identity(n).row(i)) for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col]), None)
            if piv is None:
                raise ZeroDivisionError("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv_p = aug[col][col].inv()
            aug[col] = [x * inv_p for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return Mat.from_rows([row[n:] for row in aug])

    # group-element protocol used by the engine
    def inverse(self) -> "Mat":
        return self.inv()

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [e.serialize() for e in self.entries],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Mat":
        from .gaussian import parse

        return cls(obj["rows"], obj["cols"], [parse(s) for s in obj["entries"]])

    def __repr__(self) -> str:
        rows = [
            "[" + ", ".join(str(x) for x in self.row(i)) + "]"
            for i in range(self.rows)
        ]
        return "Mat[" + "; ".join(rows) + "]"


def det(a: Mat) -> GaussRat:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Denominators are cleared first so the elimination runs over Gaussian
    integers; every division in the Bareiss recurrence is then exact.
    """
    if a.rows != a.cols:
        raise DimensionError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return ONE
    lcm = 1
    for e in a.entries:
        lcm = lcm * e.d // _gcd(lcm, e.d)
    m = [[e * lcm for e in a.row(i)] for i in range(n)]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not m[k][k]:
            piv = next((r for r in range(k + 1, n) if m[r][k]), None)
            if piv is None:
                return ZERO
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / prev
            m[i][k] = ZERO
        prev = pivot
    d = m[n - 1][n - 1]
    if sign < 0:
        d = -d
    return d / GaussRat(Fraction(lcm) ** n)


def det_naive(a: Mat) -> GaussRat:
    """Determinant by plain fraction elimination; cross-check for det()."""
    if a.rows != a.cols:
        raise DimensionError("determinant of a non-square matrix")
    n = a.rows
    m = [list(a.row(i)) for i in range(n)]
    d = ONE
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k]), None)
        if piv is None:
            return ZERO
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            d = -d
        d = d * m[k][k]
        inv_p = m[k][k].inv()
        for r in range(k + 1, n):
            if m[r][k]:
                f = m[r][k] * inv_p
                m[r] = [x - f * y for x, y in zip(m[r], m[k])]
    return d


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class Poly:
    """Polynomial over Q(i), coefficients low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [_gr(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.coeffs or not other.coeffs:
            return Poly([])
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Poly(out)

    def __call__(self, x) -> GaussRat:
        x = _gr(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return "Poly[" + ", ".join(str(c) for c in self.coeffs) + "]"


def charpoly(a: Mat) -> Poly:
    """Monic characteristic polynomial det(X*Id - a) by Faddeev-LeVerrier."""
    if a.rows != a.cols:
        raise DimensionError("charpoly of a non-square matrix")
    n = a.rows
    coeffs = [ONE]  # X^n coefficient; we collect c_{n-1}..c_0 below
    m = Mat.zero(n, n)
    c = ONE
    lower = []
    for k in range(1, n + 1):
        m = a * (m + Mat.identity(n).scalar_mul(c))
        c = -(m.trace() / GaussRat(k))
        lower.append(c)
    # char poly = X^n + c_1 X^{n-1} + ... + c_n with c_k as produced above
    return Poly(list(reversed(lower)) + [ONE])


def rref(a: Mat) -> tuple[list[list[GaussRat]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    m = [list(a.row(i)) for i in range(a.rows)]
    pivots: list[int] = []
    r = 0
    for col in range(a.cols):
        piv = next((i for i in range(r, a.rows) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv_p = m[r][col].inv()
        m[r] = [x * inv_p for x in m[r]]
        for i in range(a.rows):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == a.rows:
            break
    return m, pivots


def rank(a: Mat) -> int:
    return len(rref(a)[1])


def kernel_basis(a: Mat) -> list[Mat]:
    """Basis of the right kernel, as column vectors.

    Each basis vector is normalized so its first nonzero coordinate is 1.
    """
    m, pivots = rref(a)
    free = [j for j in range(a.cols) if j not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * a.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -m[r][f]
        lead = next(x for x in v if x)
        inv_l = lead.inv()
        basis.append(Mat(a.cols, 1, [x * inv_l for x in v]))
    return basis


def solve(a: Mat, b: Mat) -> Mat | None:
    """One solution of a x = b (b a column), or None when inconsistent."""
    if b.rows != a.rows or b.cols != 1:
        raise DimensionError("rhs must be a column of matching height")
    aug = Mat(a.rows, a.cols + 1, [
        x
        for i in range(a.rows)
        for x in (*a.row(i), b[i, 0])
    ])
    m, pivots = rref(aug)
    if a.cols in pivots:
        return None
    x = [ZERO] * a.cols
    for r, p in enumerate(pivots):
        x[p] = m[r][a.cols]
    return Mat(a.cols, 1, x)


def element_order(a: Mat, cap: int = 10000) -> int | None:
    """Least k <= cap with a^k = Id, or None. a must be invertible."""
    if a.rows != a.cols:
        raise DimensionError("order of a non-square matrix")
    ident = Mat.identity(a.rows)
    p = a
    for k in range(1, cap + 1):
        if p == ident:
            return k
        p = p * a
    return None
