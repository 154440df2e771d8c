"""Exact scalars extending the rationals by square roots and by i.

The unitary-structure tables need numbers like 1/sqrt(3) and complex
entries; floating point would turn exact identities into tolerance
checks.  ``SqrtNum`` is a finite sum sum_r c_r * sqrt(r) over squarefree
nonnegative integers r, closed under + and *.  ``CNum`` is a + i*b with
SqrtNum parts.
"""

from __future__ import annotations

from fractions import Fraction


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = s^2 * r with r squarefree; return (s, r)."""
    if n < 0:
        raise ValueError("negative radicand")
    s, r, d = 1, n, 2
    while d * d <= r:
        while r % (d * d) == 0:
            r //= d * d
            s *= d
        d += 1
    return s, r


class SqrtNum:
    """Sum of rational multiples of square roots of squarefree integers."""

    __slots__ = ("parts",)

    def __init__(self, parts=None):
        clean: dict[int, Fraction] = {}
        if parts:
            for r, c in parts.items():
                c = Fraction(c)
                if c:
                    clean[r] = c
        self.parts = clean

    @classmethod
    def of(cls, v) -> "SqrtNum":
        if isinstance(v, SqrtNum):
            return v
        return cls({1: Fraction(v)})

    @classmethod
    def sqrt(cls, n) -> "SqrtNum":
        """Exact square root of a nonnegative rational."""
        f = Fraction(n)
        if f < 0:
            raise ValueError("negative radicand")
        if f == 0:
            return cls()
        # sqrt(p/q) = sqrt(p*q)/q
        sn, rn = _squarefree_split(f.numerator * f.denominator)
        return cls({rn: Fraction(sn, f.denominator)})

    def is_zero(self) -> bool:
        return not self.parts

    def __bool__(self):
        return bool(self.parts)

    def is_rational(self) -> bool:
        return not self.parts or set(self.parts) == {1}

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.parts.get(1, Fraction(0))

    def __add__(self, other):
        other = SqrtNum.of(other)
        parts = dict(self.parts)
        for r, c in other.parts.items():
            s = parts.get(r, Fraction(0)) + c
            if s:
                parts[r] = s
            else:
                parts.pop(r, None)
        return SqrtNum(parts)

    __radd__ = __add__

    def __neg__(self):
        return SqrtNum({r: -c for r, c in self.parts.items()})

    def __sub__(self, other):
        return self + (-SqrtNum.of(other))

    def __rsub__(self, other):
        return SqrtNum.of(other) + (-self)

    def __mul__(self, other):
        other = SqrtNum.of(other)
        parts: dict[int, Fraction] = {}
        for r1, c1 in self.parts.items():
            for r2, c2 in other.parts.items():
                s, r = _squarefree_split(r1 * r2)
                c = c1 * c2 * s
                t = parts.get(r, Fraction(0)) + c
                if t:
                    parts[r] = t
                else:
                    parts.pop(r, None)
        return SqrtNum(parts)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = SqrtNum.of(other)
        if not other.parts:
            raise ZeroDivisionError
        if len(other.parts) == 1:
            ((r, c),) = other.parts.items()
            # 1/(c*sqrt(r)) = sqrt(r)/(c*r)
            return self * SqrtNum({r: Fraction(1, 1) / (c * r)})
        raise NotImplementedError("division by multi-radical sums not needed")

    def __rtruediv__(self, other):
        return SqrtNum.of(other) / self

    def __eq__(self, other):
        try:
            other = SqrtNum.of(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(frozenset(self.parts.items()))

    def __float__(self):
        import math

        return sum(float(c) * math.sqrt(r) for r, c in self.parts.items())

    def __str__(self):
        if not self.parts:
            return "0"
        bits = []
        for r in sorted(self.parts):
            c = self.parts[r]
            bits.append(str(c) if r == 1 else f"{c}*sqrt({r})")
        return " + ".join(bits).replace("+ -", "- ")

    __repr__ = __str__


class CNum:
    """Complex number with SqrtNum real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = SqrtNum.of(re)
        self.im = SqrtNum.of(im)

    @classmethod
    def of(cls, v) -> "CNum":
        if isinstance(v, CNum):
            return v
        if isinstance(v, complex):
            if v.imag or v.real != int(v.real):
                raise TypeError("use exact constructors for complex values")
            return cls(int(v.real))
        return cls(v)

    I = None  # set below

    def is_zero(self):
        return self.re.is_zero() and self.im.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = CNum.of(other)
        return CNum(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return CNum(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-CNum.of(other))

    def __rsub__(self, other):
        return CNum.of(other) + (-self)

    def __mul__(self, other):
        other = CNum.of(other)
        return CNum(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conj(self):
        return CNum(self.re, -self.im)

    def __truediv__(self, other):
        other = CNum.of(other)
        if other.im.is_zero():
            return CNum(self.re / other.re, self.im / other.re)
        if other.re.is_zero():
            # 1/(i b) = -i/b
            return CNum(self.im / other.im, -(self.re / other.im))
        n = self * other.conj()
        d = other.re * other.re + other.im * other.im
        return CNum(n.re / d, n.im / d)

    def __rtruediv__(self, other):
        return CNum.of(other) / self

    def __eq__(self, other):
        try:
            other = CNum.of(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        if self.im.is_zero():
            return str(self.re)
        if self.re.is_zero():
            return f"({self.im})*i"
        return f"({self.re}) + ({self.im})*i"

    __repr__ = __str__


CNum.I = CNum(0, 1)
