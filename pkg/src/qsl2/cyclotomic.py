"""Exact arithmetic in the cyclotomic fields Q(zeta_N) for N a power of two.

Elements are polynomials in zeta_N = exp(2*pi*i/N), reduced modulo the N-th
cyclotomic polynomial x^(N/2) + 1.  The level-4 theory lives in Q(zeta_16),
degree 8 over Q: every root of unity, quantum integer and normalization
constant it needs is an element of that field, so all invariants come out
exact.

Internally a value is an integer coefficient vector over a common positive
denominator; this keeps products cheap (integer convolution plus one gcd).
The public ``coeffs`` view is a tuple of Fractions in the power basis
1, zeta, ..., zeta^(N/2 - 1).
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from math import gcd


class CycError(ValueError):
    """Ill-formed cyclotomic operation (bad order, order mismatch, 1/0)."""


class ApproximateOnlyError(CycError):
    """Exact arithmetic was requested at a level where it is not provided."""


def _degree(order: int) -> int:
    if order < 1 or order & (order - 1):
        raise CycError(f"order must be a power of two, got {order}")
    return max(1, order // 2)


def _vec_gcd(nums, den):
    g = den
    for n in nums:
        g = gcd(g, n)
        if g == 1:
            return 1
    return g


class CycNum:
    """An element of Q(zeta_N), N a power of two, in canonical form.

    Values are immutable; all arithmetic returns new objects.  Mixed
    arithmetic with int and Fraction works; two CycNums must share the
    same order (use ``lift`` to move into a larger field explicitly).
    """

    __slots__ = ("order", "den", "nums")

    def __init__(self, order: int, nums, den: int = 1):
        d = _degree(order)
        nums = list(nums)
        if len(nums) != d:
            raise CycError(f"need {d} coefficients for order {order}, got {len(nums)}")
        if den == 0:
            raise CycError("zero denominator")
        if den < 0:
            den = -den
            nums = [-n for n in nums]
        g = _vec_gcd(nums, den)
        if g > 1:
            den //= g
            nums = [n // g for n in nums]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "nums", tuple(nums))

    def __setattr__(self, name, value):
        raise AttributeError("CycNum is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(order: int = 16) -> "CycNum":
        return CycNum(order, [0] * _degree(order))

    @staticmethod
    def one(order: int = 16) -> "CycNum":
        return CycNum.from_int(1, order)

    @staticmethod
    def from_int(n: int, order: int = 16) -> "CycNum":
        v = [0] * _degree(order)
        v[0] = n
        return CycNum(order, v)

    @staticmethod
    def from_fraction(f, order: int = 16) -> "CycNum":
        f = Fraction(f)
        v = [0] * _degree(order)
        v[0] = f.numerator
        return CycNum(order, v, f.denominator)

    @staticmethod
    def zeta(order: int = 16, power: int = 1) -> "CycNum":
        """zeta_order ** power, folded into the power basis."""
        d = _degree(order)
        v = [0] * d
        e = power % order
        if order == 1:
            v[0] = 1
        elif e < d:
            v[e] = 1
        else:
            v[e - d] = -1
        return CycNum(order, v)

    @staticmethod
    def from_coeffs(coeffs, order: int = 16) -> "CycNum":
        """Build from a sequence of Fractions (or ints) in the power basis."""
        fracs = [Fraction(c) for c in coeffs]
        den = math.lcm(*[f.denominator for f in fracs]) if fracs else 1
        nums = [f.numerator * (den // f.denominator) for f in fracs]
        return CycNum(order, nums, den)

    # -- views -------------------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        return tuple(Fraction(n, self.den) for n in self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise CycError(f"{self!r} is not rational")
        return Fraction(self.nums[0], self.den)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.order != self.order:
                raise CycError(f"order mismatch: {self.order} vs {other.order}")
            return other
        if isinstance(other, int):
            return CycNum.from_int(other, self.order)
        if isinstance(other, Fraction):
            return CycNum.from_fraction(other, self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        da, db = self.den, o.den
        nums = [na * db + nb * da for na, nb in zip(self.nums, o.nums)]
        return CycNum(self.order, nums, da * db)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.order, [-n for n in self.nums], self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = len(self.nums)
        acc = [0] * d
        nb = o.nums
        for i, ci in enumerate(self.nums):
            if not ci:
                continue
            for j, cj in enumerate(nb):
                if not cj:
                    continue
                k = i + j
                if k < d:
                    acc[k] += ci * cj
                else:
                    acc[k - d] -= ci * cj  # zeta^d = -1
        return CycNum(self.order, acc, self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> "CycNum":
        """Multiplicative inverse, by solving the linear system of
        multiplication-by-self in the power basis."""
        if not self:
            raise CycError("division by zero in Q(zeta_N)")
        d = len(self.nums)
        if d == 1:
            return CycNum.from_fraction(1 / Fraction(self.nums[0], self.den), self.order)
        # columns of M are self * zeta^j
        cols = []
        cur = self
        zeta = CycNum.zeta(self.order)
        for _ in range(d):
            cols.append(cur.coeffs)
            cur = cur * zeta
        a = [[Fraction(cols[j][i]) for j in range(d)] for i in range(d)]
        rhs = [Fraction(1 if i == 0 else 0) for i in range(d)]
        sol = _solve_fraction_system(a, rhs)
        return CycNum.from_coeffs(sol, self.order)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.inv()
            exponent = -exponent
        acc = CycNum.one(self.order)
        while exponent:
            if exponent & 1:
                acc = acc * base
            base = base * base
            exponent >>= 1
        return acc

    def conj(self) -> "CycNum":
        """Complex conjugation, zeta -> zeta^(-1)."""
        d = len(self.nums)
        out = [0] * d
        out[0] = self.nums[0]
        if self.order <= 2:
            return CycNum(self.order, list(self.nums), self.den)
        for e in range(1, d):
            c = self.nums[e]
            if not c:
                continue
            k = self.order - e  # zeta^(-e)
            if k < d:
                out[k] += c
            else:
                out[k - d] -= c
        return CycNum(self.order, out, self.den)

    def lift(self, order: int) -> "CycNum":
        """Embed into Q(zeta_order) for a larger power-of-two order."""
        if order == self.order:
            return self
        if order % self.order:
            raise CycError(f"cannot lift order {self.order} into {order}")
        step = order // self.order
        d = _degree(order)
        out = [0] * d
        for e, c in enumerate(self.nums):
            if not c:
                continue
            k = e * step
            if k < d:
                out[k] += c
            else:
                out[k - d] -= c
        return CycNum(order, out, self.den)

    # -- float embedding ---------------------------------------------------

    def approx(self) -> tuple:
        """Float embedding zeta_N -> exp(2*pi*i/N), as (real, imag)."""
        re = im = 0.0
        cs, sn = _root_table(self.order)
        for e, n in enumerate(self.nums):
            if not n:
                continue
            c = n / self.den
            re += c * cs[e]
            im += c * sn[e]
        return (re, im)

    def approx_complex(self) -> complex:
        re, im = self.approx()
        return complex(re, im)

    # -- protocol ----------------------------------------------------------

    def __bool__(self):
        return any(self.nums)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return (self.order, self.den, self.nums) == (other.order, other.den, other.nums)

    def __hash__(self):
        return hash((self.order, self.den, self.nums))

    def __repr__(self):
        if not self:
            return "0"
        parts = []
        for e, n in enumerate(self.nums):
            if not n:
                continue
            c = Fraction(n, self.den)
            if e == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"z{e}" if e > 1 else "z")
            elif c == -1:
                parts.append(f"-z{e}" if e > 1 else "-z")
            else:
                parts.append(f"{c}*z{e}" if e > 1 else f"{c}*z")
        s = " + ".join(parts).replace("+ -", "- ")
        return s

    def to_json(self) -> dict:
        re, im = self.approx()
        return {
            "order": self.order,
            "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs],
            "approx": [re, im],
        }


@lru_cache(maxsize=None)
def _root_table(order: int):
    d = _degree(order)
    cs = tuple(math.cos(2.0 * math.pi * e / order) for e in range(d))
    sn = tuple(math.sin(2.0 * math.pi * e / order) for e in range(d))
    return cs, sn


def _solve_fraction_system(a, rhs):
    """Gaussian elimination over Q; a is modified in place."""
    n = len(a)
    x = list(rhs)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise CycError("singular multiplication matrix")
        a[col], a[piv] = a[piv], a[col]
        x[col], x[piv] = x[piv], x[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        x[col] *= inv
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
                x[r] -= f * x[col]
    return x


def arith(op: str, a: CycNum, b=None) -> CycNum:
    """Named-operation dispatcher over the field operations.

    op is one of add, sub, mul, neg, inv, conj, pow; b may be a CycNum,
    an int, or (for pow) an integer exponent.
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    if op == "conj":
        return a.conj()
    if op == "pow":
        return a ** b
    raise CycError(f"unknown operation {op!r}")


def sqrt2(order: int = 16) -> CycNum:
    """The element zeta^2 - zeta^6 of Q(zeta_16) (or its lift), which
    squares to 2."""
    if order % 16:
        raise CycError("sqrt(2) needs order divisible by 16")
    z = CycNum.zeta(order)
    k = order // 16
    return z ** (2 * k) - z ** (6 * k)


class LevelConstants:
    """Root-of-unity and normalization constants of the level-r theory.

    Two fourth-root conventions coexist in the surgery formulas: the
    crossing operators are built from t_rmatrix = exp(-2*pi*i/4r), while
    the writhe-correction bridge between the two invariant engines uses
    t = exp(+2*pi*i/4r).  Both are exposed; they are never unified.
    """

    __slots__ = ("r", "exact", "t", "t_rmatrix", "b", "c", "sqrt2", "order")

    def __init__(self, r, exact, t, t_rmatrix, b, c, s2, order):
        for name, val in zip(self.__slots__, (r, exact, t, t_rmatrix, b, c, s2, order)):
            object.__setattr__(self, name, val)

    def __setattr__(self, name, value):
        raise AttributeError("LevelConstants is immutable")

    def __repr__(self):
        mode = "exact" if self.exact else "approx"
        return f"LevelConstants(r={self.r}, {mode})"


def constants(r: int, exact: bool = True) -> LevelConstants:
    """Normalization constants at level r.

    Exact values exist only at r = 4, where everything lives in Q(zeta_16):
    t = zeta_16, b = 1/2, c = zeta_16^(-3), sqrt2 = zeta^2 - zeta^6.  For
    any other level only the float/complex embedding is provided; asking
    for exact values raises ApproximateOnlyError.
    """
    if r < 2:
        raise CycError(f"level must be at least 2, got {r}")
    if exact:
        if r != 4:
            raise ApproximateOnlyError(
                f"exact constants are only realized at level 4, not {r}; "
                "request approximate mode explicitly"
            )
        z = CycNum.zeta(16)
        return LevelConstants(
            r=4,
            exact=True,
            t=z,                      # exp(+2*pi*i/16)
            t_rmatrix=z ** (-1),      # exp(-2*pi*i/16)
            b=CycNum.from_fraction(Fraction(1, 2), 16),
            c=z ** (-3),              # exp(-6*pi*i*(r-2)/8r) at r = 4
            s2=sqrt2(16),
            order=16,
        )
    t = cmath.exp(2j * cmath.pi / (4 * r))
    return LevelConstants(
        r=r,
        exact=False,
        t=t,
        t_rmatrix=t.conjugate(),
        b=math.sqrt(2.0 / r) * math.sin(math.pi / r),
        c=cmath.exp(-6j * cmath.pi * (r - 2) / (8 * r)),
        s2=math.sqrt(2.0),
        order=0,
    )
