"""Exact arithmetic in Q and Q(i).

Everything downstream (matrices, group tables, lifts) is built on GaussRat,
an element of Q(i) stored as a pair of reduced big-integer fractions.  No
floating point is used anywhere in this package.

The canonical string form "re_num/re_den+im_num/im_den*i" is unique per
value and is the serialization used in all JSON exports.
"""

from __future__ import annotations

import math
import re as _re
from fractions import Fraction

Rational = Fraction

_CANON_RE = _re.compile(r"^(-?\d+)/(\d+)\+(-?\d+)/(\d+)\*i$")


class GaussRat:
    """An element of Q(i), immutable and hashable.

    Stored as (re_num, im_num, den) with den > 0 and gcd(re_num, im_num, den) = 1,
    so equality and hashing are structural.
    """

    __slots__ = ("rn", "in_", "d")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussRat):
            if im != 0:
                raise TypeError("cannot add an imaginary part to a GaussRat")
            self.rn, self.in_, self.d = re.rn, re.in_, re.d
            return
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // math.gcd(
            re.denominator, im.denominator
        )
        rn = re.numerator * (d // re.denominator)
        inum = im.numerator * (d // im.denominator)
        self.rn, self.in_, self.d = rn, inum, d

    @classmethod
    def _raw(cls, rn: int, inum: int, d: int) -> "GaussRat":
        # d > 0 and the triple already reduced
        self = object.__new__(cls)
        self.rn, self.in_, self.d = rn, inum, d
        return self

    @classmethod
    def _make(cls, rn: int, inum: int, d: int) -> "GaussRat":
        if d < 0:
            rn, inum, d = -rn, -inum, -d
        g = math.gcd(math.gcd(rn, inum), d)
        if g > 1:
            rn //= g
            inum //= g
            d //= g
        self = object.__new__(cls)
        self.rn, self.in_, self.d = rn, inum, d
        return self

    @property
    def re(self) -> Fraction:
        return Fraction(self.rn, self.d)

    @property
    def im(self) -> Fraction:
        return Fraction(self.in_, self.d)

    def __bool__(self) -> bool:
        return self.rn != 0 or self.in_ != 0

    def is_rational(self) -> bool:
        return self.in_ == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussRat):
            return self.rn == other.rn and self.in_ == other.in_ and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self.in_ == 0 and Fraction(self.rn, self.d) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.rn, self.in_, self.d))

    def __add__(self, other) -> "GaussRat":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussRat._make(
            self.rn * other.d + other.rn * self.d,
            self.in_ * other.d + other.in_ * self.d,
            self.d * other.d,
        )

    __radd__ = __add__

    def __sub__(self, other) -> "GaussRat":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussRat._make(
            self.rn * other.d - other.rn * self.d,
            self.in_ * other.d - other.in_ * self.d,
            self.d * other.d,
        )

    def __rsub__(self, other) -> "GaussRat":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> "GaussRat":
        return GaussRat._raw(-self.rn, -self.in_, self.d)

    def __mul__(self, other) -> "GaussRat":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, e = self.rn, self.in_, other.rn, other.in_
        return GaussRat._make(a * c - b * e, a * e + b * c, self.d * other.d)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussRat":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other) -> "GaussRat":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def inv(self) -> "GaussRat":
        if not self:
            raise ZeroDivisionError("inverse of 0 in Q(i)")
        n = self.rn * self.rn + self.in_ * self.in_
        return GaussRat._make(self.rn * self.d, -self.in_ * self.d, n)

    def conj(self) -> "GaussRat":
        return GaussRat._raw(self.rn, -self.in_, self.d)

    def norm(self) -> Fraction:
        """re^2 + im^2 as an exact rational."""
        return Fraction(self.rn * self.rn + self.in_ * self.in_, self.d * self.d)

    def lexkey(self):
        """(re, im) comparison key; used for canonical sign choices."""
        return (self.re, self.im)

    def serialize(self) -> str:
        re = self.re
        im = self.im
        return f"{re.numerator}/{re.denominator}+{im.numerator}/{im.denominator}*i"

    def __repr__(self) -> str:
        return f"GaussRat({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        return self.serialize()


def _coerce(x):
    if isinstance(x, GaussRat):
        return x
    if isinstance(x, int):
        return GaussRat._raw(x, 0, 1)
    if isinstance(x, Fraction):
        return GaussRat._raw(x.numerator, 0, x.denominator)
    return None


ZERO = GaussRat(0)
ONE = GaussRat(1)
I = GaussRat(0, 1)


def parse(s: str) -> GaussRat:
    """Inverse of GaussRat.serialize."""
    m = _CANON_RE.match(s)
    if m is None:
        raise ValueError(f"not a canonical Q(i) string: {s!r}")
    rn, rd, inum, id_ = (int(m.group(k)) for k in (1, 2, 3, 4))
    return GaussRat(Fraction(rn, rd), Fraction(inum, id_))


def sqrt_rational(r: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None when r is not a square.

    Total: negative and non-square inputs return None.
    """
    r = Fraction(r)
    if r < 0:
        return None
    n, d = r.numerator, r.denominator
    sn = math.isqrt(n)
    sd = math.isqrt(d)
    if sn * sn != n or sd * sd != d:
        return None
    return Fraction(sn, sd)


def sqrt_gaussian(z: GaussRat) -> GaussRat | None:
    """Exact square root in Q(i), or None when no root exists in the field.

    Solves x^2 - y^2 = re(z), 2xy = im(z) with x^2 + y^2 = sqrt(norm(z)),
    which requires the norm to be a rational square.  Of the two roots the
    one with lexicographically maximal (re, im) is returned, so lifts that
    depend on a square root are deterministic.
    """
    if not z:
        return ZERO
    s = sqrt_rational(z.norm())
    if s is None:
        return None
    re = z.re
    x2 = (re + s) / 2
    x = sqrt_rational(x2)
    if x is None:
        return None
    if x != 0:
        root = GaussRat(x, z.im / (2 * x))
    else:
        y = sqrt_rational(-re)
        if y is None:
            return None
        root = GaussRat(0, y)
    if root * root != z:
        return None
    neg = -root
    return root if root.lexkey() >= neg.lexkey() else neg
