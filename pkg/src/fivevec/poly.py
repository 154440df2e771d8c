"""Exact polynomial scalar fields on a four-dimensional Lorentz chart.

Everything downstream (connections, curvature, Noether currents, gauge
tables) is built from ``Poly4``: a multivariate polynomial in the chart
coordinates x0..x3 with exact rational coefficients.  Identities are
checked to *equality*, never to a tolerance, so no floating point enters
here.  ``RatPoly`` extends the ring to quotients for the few places where
a metric inverse is not polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exp = tuple[int, int, int, int]

DEFAULT_DEGREE_CAP = 12
_degree_cap = DEFAULT_DEGREE_CAP


class DegreeCapError(ArithmeticError):
    """Raised when a product would exceed the configured total degree."""


def set_degree_cap(cap: int) -> None:
    global _degree_cap
    if cap < 1:
        raise ValueError("degree cap must be positive")
    _degree_cap = cap


def get_degree_cap() -> int:
    return _degree_cap


def _as_coeff(c):
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    return c


class Poly4:
    """Polynomial in x0..x3, stored sparsely as {exponent 4-tuple: coeff}.

    Coefficients are ``Fraction`` by default but any commutative-ring
    element supporting ``+ - *`` and truthiness works (the gauge sector
    uses complex sqrt-extended scalars).  Instances are immutable by
    convention: no method mutates ``terms`` after construction.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exp, object] | None = None):
        clean: dict[Exp, object] = {}
        if terms:
            for exp, c in terms.items():
                c = _as_coeff(c)
                if c:
                    if len(exp) != 4 or any(e < 0 for e in exp):
                        raise ValueError(f"bad exponent tuple {exp!r}")
                    clean[tuple(exp)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def const(cls, c) -> "Poly4":
        c = _as_coeff(c)
        return cls({(0, 0, 0, 0): c} if c else {})

    @classmethod
    def zero(cls) -> "Poly4":
        return cls()

    @classmethod
    def one(cls) -> "Poly4":
        return cls.const(1)

    @classmethod
    def variable(cls, i: int) -> "Poly4":
        if i not in (0, 1, 2, 3):
            raise ValueError("variable index must be 0..3")
        exp = [0, 0, 0, 0]
        exp[i] = 1
        return cls({tuple(exp): Fraction(1)})

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0, 0, 0)}

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms.get((0, 0, 0, 0), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    # -- ring operations ------------------------------------------------

    def __add__(self, other) -> "Poly4":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            s = terms.get(exp, 0) + c
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        out = Poly4.__new__(Poly4)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self) -> "Poly4":
        out = Poly4.__new__(Poly4)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other) -> "Poly4":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Poly4":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Poly4.zero()
            out = Poly4.__new__(Poly4)
            out.terms = {e: k * c for e, k in self.terms.items()}
            return out
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return Poly4.zero()
        if self.total_degree() + other.total_degree() > _degree_cap:
            raise DegreeCapError(
                f"product degree {self.total_degree() + other.total_degree()} "
                f"exceeds cap {_degree_cap}"
            )
        terms: dict[Exp, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                s = terms.get(exp, 0) + c1 * c2
                if s:
                    terms[exp] = s
                else:
                    terms.pop(exp, None)
        out = Poly4.__new__(Poly4)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly4":
        if n < 0:
            raise ValueError("negative power")
        out = Poly4.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c) -> "Poly4":
        return self * c

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- calculus -------------------------------------------------------

    def partial(self, mu: int) -> "Poly4":
        """Exact formal partial derivative along x^mu, mu in 0..3."""
        if mu not in (0, 1, 2, 3):
            raise ValueError("axis index must be 0..3")
        terms: dict[Exp, object] = {}
        for exp, c in self.terms.items():
            k = exp[mu]
            if k == 0:
                continue
            new = list(exp)
            new[mu] = k - 1
            terms[tuple(new)] = c * k
        out = Poly4.__new__(Poly4)
        out.terms = terms
        return out

    def compose(self, repl: Sequence["Poly4"]) -> "Poly4":
        """Substitute repl[i] for x_i; repl must have 4 entries."""
        if len(repl) != 4:
            raise ValueError("need 4 replacement polynomials")
        out = Poly4.zero()
        pow_cache: dict[tuple[int, int], Poly4] = {}

        def _pow(i: int, n: int) -> Poly4:
            key = (i, n)
            if key not in pow_cache:
                pow_cache[key] = repl[i] ** n
            return pow_cache[key]

        for exp, c in self.terms.items():
            term = Poly4.const(c)
            for i, e in enumerate(exp):
                if e:
                    term = term * _pow(i, e)
            out = out + term
        return out

    def eval(self, point: Sequence[Fraction]):
        """Exact evaluation at a rational point."""
        total = Fraction(0)
        first = True
        for exp, c in self.terms.items():
            v = c
            for i, e in enumerate(exp):
                for _ in range(e):
                    v = v * point[i]
            if first:
                total = v
                first = False
            else:
                total = total + v
        return total

    def eval_float(self, point: Sequence[float]) -> complex | float:
        total = 0.0
        for exp, c in self.terms.items():
            v = float(c) if isinstance(c, Fraction) else c
            for i, e in enumerate(exp):
                v *= point[i] ** e
            total += v
        return total

    # -- display --------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for exp in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(exp) if e
            )
            if mono:
                bits.append(f"{c}*{mono}" if c != 1 else mono)
            else:
                bits.append(str(c))
        return " + ".join(bits).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Poly4({self})"


def _coerce(other):
    if isinstance(other, Poly4):
        return other
    if isinstance(other, (int, Fraction)):
        return Poly4.const(other)
    return NotImplemented


ZERO = Poly4.zero()
ONE = Poly4.one()
X = tuple(Poly4.variable(i) for i in range(4))


# -- parsing -------------------------------------------------------------


class PolyParseError(ValueError):
    pass


def parse_poly(text: str) -> Poly4:
    """Parse the model-file polynomial grammar.

    Terms like ``3/2*x0^2*x3 - x1``; whitespace-insensitive; variables
    exactly x0..x3; no parentheses.
    """
    s = text.replace(" ", "").replace("\t", "")
    if not s:
        raise PolyParseError("empty polynomial string")
    # split into signed terms
    out = Poly4.zero()
    i = 0
    n = len(s)
    while i < n:
        sign = 1
        while i < n and s[i] in "+-":
            if s[i] == "-":
                sign = -sign
            i += 1
        j = i
        while j < n and s[j] not in "+-":
            j += 1
        term = s[i:j]
        if not term:
            raise PolyParseError(f"dangling sign in {text!r}")
        out = out + _parse_term(term, sign, text)
        i = j
    return out


def _parse_term(term: str, sign: int, full: str) -> Poly4:
    coeff = Fraction(sign)
    exp = [0, 0, 0, 0]
    for factor in term.split("*"):
        if not factor:
            raise PolyParseError(f"empty factor in {full!r}")
        if factor[0] == "x":
            base, _, power = factor.partition("^")
            if len(base) != 2 or base[1] not in "0123":
                raise PolyParseError(f"unknown variable {base!r} in {full!r}")
            k = 1
            if power:
                try:
                    k = int(power)
                except ValueError:
                    raise PolyParseError(f"bad exponent {power!r} in {full!r}")
                if k < 0:
                    raise PolyParseError(f"negative exponent in {full!r}")
            exp[int(base[1])] += k
        else:
            try:
                coeff *= Fraction(factor)
            except (ValueError, ZeroDivisionError):
                raise PolyParseError(f"bad coefficient {factor!r} in {full!r}")
    return Poly4({tuple(exp): coeff})


# -- exact division and rational functions --------------------------------


def divexact(a: Poly4, b: Poly4):
    """Return q with a == q*b, or None if b does not divide a exactly.

    Leading-term division in graded-lex order; only valid for Fraction
    coefficients.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return Poly4.zero()
    if b.is_constant():
        return a * (Fraction(1) / b.constant_value())
    key = lambda e: (sum(e), e)
    b_lead = max(b.terms, key=key)
    b_c = b.terms[b_lead]
    rem = a
    q = Poly4.zero()
    while not rem.is_zero():
        r_lead = max(rem.terms, key=key)
        diff = tuple(r_lead[i] - b_lead[i] for i in range(4))
        if any(d < 0 for d in diff):
            return None
        c = rem.terms[r_lead] / b_c
        mono = Poly4({diff: c})
        q = q + mono
        rem = rem - mono * b
        if not rem.is_zero() and key(max(rem.terms, key=key)) >= key(r_lead):
            return None
    return q


class RatPoly:
    """Quotient of two Poly4, for metrics whose inverse is not polynomial.

    Reduction is opportunistic (exact division attempt only); zero tests
    never need a gcd since num == 0 decides them.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly4, den: Poly4 = ONE):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = ONE
        elif not den.is_constant():
            q = divexact(num, den)
            if q is not None:
                num, den = q, ONE
        if den.is_constant():
            c = den.constant_value()
            if c != 1:
                num = num * (Fraction(1) / c)
                den = ONE
        self.num = num
        self.den = den

    @classmethod
    def from_any(cls, v) -> "RatPoly":
        if isinstance(v, RatPoly):
            return v
        if isinstance(v, Poly4):
            return cls(v)
        return cls(Poly4.const(v))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        other = RatPoly.from_any(other)
        if self.den == other.den:
            return RatPoly(self.num + other.num, self.den)
        return RatPoly(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = RatPoly.__new__(RatPoly)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        return self + (-RatPoly.from_any(other))

    def __rsub__(self, other):
        return RatPoly.from_any(other) + (-self)

    def __mul__(self, other):
        other = RatPoly.from_any(other)
        return RatPoly(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatPoly.from_any(other)
        return RatPoly(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatPoly.from_any(other) / self

    def __eq__(self, other):
        other = RatPoly.from_any(other)
        return (self.num * other.den - other.num * self.den).is_zero()

    def partial(self, mu: int) -> "RatPoly":
        if self.den.is_constant():
            return RatPoly(self.num.partial(mu), self.den)
        return RatPoly(
            self.num.partial(mu) * self.den - self.num * self.den.partial(mu),
            self.den * self.den,
        )

    def eval(self, point):
        return self.num.eval(point) / self.den.eval(point)

    def eval_float(self, point):
        return self.num.eval_float(point) / self.den.eval_float(point)

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatPoly({self})"


# -- points and five-vector operators --------------------------------------


class Point4:
    """A rational chart point x^alpha."""

    __slots__ = ("x",)

    def __init__(self, x: Iterable):
        vals = tuple(Fraction(v) for v in x)
        if len(vals) != 4:
            raise ValueError("Point4 needs 4 coordinates")
        self.x = vals

    def __getitem__(self, i):
        return self.x[i]

    def __iter__(self):
        return iter(self.x)

    def __eq__(self, other):
        return isinstance(other, Point4) and self.x == other.x

    def __repr__(self):
        return f"Point4({list(self.x)})"


class FiveOpField:
    """Differential-algebraic operator u^a d/dx^a + u5 * identity.

    Components are ordered (0,1,2,3,5); slot 4 carries the algebraic
    (label-5) part.
    """

    __slots__ = ("u",)

    def __init__(self, u: Sequence[Poly4]):
        comps = tuple(_coerce_any(c) for c in u)
        if len(comps) != 5:
            raise ValueError("FiveOpField needs exactly 5 components")
        self.u = comps

    @classmethod
    def coordinate_basis(cls, A: int) -> "FiveOpField":
        """e_alpha = d/dx^alpha for A<4; e_5 = identity operator."""
        comps = [ZERO] * 5
        comps[A] = ONE
        return cls(comps)

    def apply(self, f: Poly4) -> Poly4:
        """u^alpha df/dx^alpha + u^5 f."""
        f = _coerce(f)
        out = self.u[4] * f
        for mu in range(4):
            if self.u[mu]:
                out = out + self.u[mu] * f.partial(mu)
        return out

    def commutator(self, other: "FiveOpField") -> "FiveOpField":
        """[u,v] with components u^a d_a v^B - v^a d_a u^B (B over 0..3,5)."""
        comps = []
        for B in range(5):
            w = ZERO
            for a in range(4):
                w = w + self.u[a] * other.u[B].partial(a) - other.u[a] * self.u[B].partial(a)
            comps.append(w)
        return FiveOpField(comps)

    def __eq__(self, other):
        return isinstance(other, FiveOpField) and self.u == other.u

    def __repr__(self):
        return f"FiveOpField({[str(c) for c in self.u]})"


def _coerce_any(v):
    if isinstance(v, RatPoly):
        return v.num if v.den.is_constant() else v
    p = _coerce(v)
    if p is NotImplemented:
        raise TypeError(f"cannot use {v!r} as a polynomial component")
    return p


def substitute_chart(f: Poly4, Lambda, a) -> Poly4:
    """Re-express f in primed coordinates x' = Lambda x + a.

    Returns f(x(x')) where x = Lambda^-1 (x' - a).  Lambda is a 4x4
    rational matrix (rows of 4) and must be invertible.
    """
    from .matrix import frac_inverse

    L = [[Fraction(v) for v in row] for row in Lambda]
    av = [Fraction(v) for v in a]
    Linv = frac_inverse(L)  # raises on singular
    repl = []
    for i in range(4):
        p = Poly4.zero()
        for j in range(4):
            if Linv[i][j]:
                p = p + (X[j] - Poly4.const(av[j])) * Linv[i][j]
        repl.append(p)
    return f.compose(repl)
