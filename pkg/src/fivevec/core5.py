"""Pointwise and fieldwise algebra of the five-dimensional tangent space.

The space splits into a four-dimensional "differential" part (indices
0..3) and a one-dimensional "algebraic" part (index written 5, stored in
array slot 4).  The degenerate product g sees only the four-part; its
nondegenerate completion h adds xi * u5 * v5.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .matrix import poly_inverse, rat_inverse, ring_det
from .poly import ONE, ZERO, Poly4, RatPoly, _coerce_any

ETA4 = (1, -1, -1, -1)

IDX5 = (0, 1, 2, 3, 4)  # slot 4 carries the label-5 component


@dataclass(frozen=True)
class BasisSpec:
    """A five-vector basis given by its matrix field N over the canonical
    orthonormal frame of a fixed fiducial chart: b_A = e_B N^B_A.
    """

    N: tuple = None  # 5x5 tuple of Poly4, or None for the canonical frame
    tags: frozenset = field(default_factory=frozenset)

    def has(self, tag: str) -> bool:
        return tag in self.tags


O_BASIS = BasisSpec(None, frozenset({"standard", "regular", "normalized", "active", "coordinate", "O"}))


def _check5(comps):
    comps = tuple(_coerce_any(c) for c in comps)
    if len(comps) != 5:
        raise ValueError("need exactly 5 components")
    return comps


def _check4(comps):
    comps = tuple(_coerce_any(c) for c in comps)
    if len(comps) != 4:
        raise ValueError("need exactly 4 components")
    return comps


class FiveVecField:
    __slots__ = ("u", "basis")

    def __init__(self, u, basis: BasisSpec = O_BASIS):
        self.u = _check5(u)
        self.basis = basis

    def __getitem__(self, A):
        return self.u[A]

    def __add__(self, other):
        _same_basis(self, other)
        return FiveVecField([a + b for a, b in zip(self.u, other.u)], self.basis)

    def __sub__(self, other):
        _same_basis(self, other)
        return FiveVecField([a - b for a, b in zip(self.u, other.u)], self.basis)

    def scale(self, c):
        return FiveVecField([a * c for a in self.u], self.basis)

    def __eq__(self, other):
        return isinstance(other, FiveVecField) and self.u == other.u

    def __repr__(self):
        return f"FiveVecField({[str(c) for c in self.u]})"


class FourVecField:
    __slots__ = ("U", "basis")

    def __init__(self, U, basis: BasisSpec = O_BASIS):
        self.U = _check4(U)
        self.basis = basis

    def __getitem__(self, a):
        return self.U[a]

    def __add__(self, other):
        return FourVecField([a + b for a, b in zip(self.U, other.U)], self.basis)

    def __sub__(self, other):
        return FourVecField([a - b for a, b in zip(self.U, other.U)], self.basis)

    def scale(self, c):
        return FourVecField([a * c for a in self.U], self.basis)

    def __eq__(self, other):
        return isinstance(other, FourVecField) and self.U == other.U

    def __repr__(self):
        return f"FourVecField({[str(c) for c in self.U]})"


class FiveFormField:
    __slots__ = ("w", "basis")

    def __init__(self, w, basis: BasisSpec = O_BASIS):
        self.w = _check5(w)
        self.basis = basis

    def __getitem__(self, A):
        return self.w[A]

    def __eq__(self, other):
        return isinstance(other, FiveFormField) and self.w == other.w

    def pair(self, u: FiveVecField) -> Poly4:
        out = ZERO
        for A in range(5):
            out = out + self.w[A] * u.u[A]
        return out

    def __repr__(self):
        return f"FiveFormField({[str(c) for c in self.w]})"


class Bivector5Field:
    __slots__ = ("A",)

    def __init__(self, comps):
        rows = tuple(tuple(_coerce_any(v) for v in row) for row in comps)
        if len(rows) != 5 or any(len(r) != 5 for r in rows):
            raise ValueError("need a 5x5 component array")
        for i in range(5):
            for j in range(i, 5):
                if not (rows[i][j] + rows[j][i]).is_zero():
                    raise ValueError(f"not antisymmetric at ({i},{j})")
        self.A = rows

    def __getitem__(self, ij):
        i, j = ij
        return self.A[i][j]

    def __add__(self, other):
        return Bivector5Field(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.A, other.A)]
        )

    def scale(self, c):
        return Bivector5Field([[v * c for v in row] for row in self.A])

    def __eq__(self, other):
        return isinstance(other, Bivector5Field) and self.A == other.A

    def __repr__(self):
        return f"Bivector5Field({[[str(v) for v in r] for r in self.A]})"


class MetricG:
    """Symmetric 4x4 metric; as a five-index object its 5-row and 5-column
    vanish identically."""

    __slots__ = ("g",)

    def __init__(self, g):
        rows = tuple(tuple(_coerce_any(v) for v in row) for row in g)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("need a 4x4 matrix")
        for i in range(4):
            for j in range(i + 1, 4):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("metric must be symmetric")
        self.g = rows

    @classmethod
    def eta(cls) -> "MetricG":
        return cls([[Poly4.const(ETA4[i]) if i == j else ZERO for j in range(4)] for i in range(4)])

    def __getitem__(self, ij):
        i, j = ij
        if i == 4 or j == 4:
            return ZERO
        return self.g[i][j]

    def inverse(self):
        """4x4 inverse; Poly4 entries when the determinant is constant,
        rational-function entries otherwise."""
        try:
            return poly_inverse([list(r) for r in self.g])
        except ValueError:
            return rat_inverse([list(r) for r in self.g])

    def det(self):
        return ring_det([list(r) for r in self.g])

    def five_matrix(self):
        m = [[ZERO] * 5 for _ in range(5)]
        for i in range(4):
            for j in range(4):
                m[i][j] = self.g[i][j]
        return m

    def __eq__(self, other):
        return isinstance(other, MetricG) and self.g == other.g


@dataclass(frozen=True)
class ProductH:
    g: MetricG
    xi: Fraction = Fraction(1)

    def __post_init__(self):
        if self.xi == 0:
            raise ValueError("xi must be nonzero")

    def five_matrix(self):
        m = self.g.five_matrix()
        m[4][4] = Poly4.const(self.xi)
        return m


def _same_basis(u, v):
    if u.basis is not v.basis and u.basis != v.basis:
        raise ValueError("fields are given in different bases")


def _require_regular(f):
    if not f.basis.has("regular"):
        raise ValueError("operation requires a regular basis")


def inner_g(u: FiveVecField, v: FiveVecField, g: MetricG) -> Poly4:
    _same_basis(u, v)
    _require_regular(u)
    out = ZERO
    for a in range(4):
        for b in range(4):
            out = out + g[a, b] * u[a] * v[b]
    return out


def inner_h(u: FiveVecField, v: FiveVecField, h: ProductH) -> Poly4:
    out = inner_g(u, v, h.g)
    return out + u[4] * v[4] * h.xi


def lower_with(u: FiveVecField, which: str, h_or_g) -> FiveFormField:
    """Index-lowering maps; 'g' annihilates the algebraic subspace,
    'h' is invertible."""
    _require_regular(u)
    if which == "g":
        mat = h_or_g.five_matrix() if isinstance(h_or_g, MetricG) else h_or_g.g.five_matrix()
        if isinstance(h_or_g, ProductH):
            mat = h_or_g.g.five_matrix()
    elif which == "h":
        if not isinstance(h_or_g, ProductH):
            raise TypeError("lowering with h requires a ProductH")
        mat = h_or_g.five_matrix()
    else:
        raise ValueError("which must be 'g' or 'h'")
    comps = []
    for A in range(5):
        c = ZERO
        for B in range(5):
            c = c + mat[A][B] * u[B]
        comps.append(c)
    return FiveFormField(comps, u.basis)


def raise_with(w: FiveFormField, which: str, h: ProductH) -> FiveVecField:
    if which == "g":
        raise ValueError(
            "raising indices with the degenerate product is possible only on "
            "the four-dimensional subspace; use 'h'"
        )
    if which != "h":
        raise ValueError("which must be 'h'")
    mat = h.five_matrix()
    try:
        inv = poly_inverse(mat)
    except ValueError:
        inv = rat_inverse(mat)
    comps = []
    for A in range(5):
        c = None
        for B in range(5):
            t = inv[A][B] * w[B]
            c = t if c is None else c + t
        comps.append(c if not isinstance(c, RatPoly) or not c.den.is_constant() else c)
    # unwrap rational entries that reduced to polynomials
    out = []
    for c in comps:
        if isinstance(c, RatPoly) and c.den.is_constant():
            out.append(c.num)
        else:
            out.append(c)
    return FiveVecField(out, w.basis)


def split_ZE(u: FiveVecField):
    _require_regular(u)
    z = FiveVecField([u[0], u[1], u[2], u[3], ZERO], u.basis)
    e = FiveVecField([ZERO, ZERO, ZERO, ZERO, u[4]], u.basis)
    return z, e


def quotient_to_four(u: FiveVecField) -> FourVecField:
    if not u.basis.has("standard"):
        raise ValueError("quotient requires a standard basis")
    return FourVecField(u.u[:4], u.basis)


def wedge(u: FiveVecField, v: FiveVecField) -> Bivector5Field:
    _same_basis(u, v)
    return Bivector5Field(
        [[u[A] * v[B] - u[B] * v[A] for B in range(5)] for A in range(5)]
    )


def bivector_split(A: Bivector5Field):
    """Four-bivector block and the four-vector carrying the A^{alpha 5}
    components."""
    zpart = [[A[a, b] for b in range(4)] for a in range(4)]
    epart = FourVecField([A[a, 4] for a in range(4)])
    return zpart, epart


def bivector_assemble(zpart, epart: FourVecField) -> Bivector5Field:
    m = [[ZERO] * 5 for _ in range(5)]
    for a in range(4):
        for b in range(4):
            m[a][b] = _coerce_any(zpart[a][b])
    for a in range(4):
        m[a][4] = epart[a]
        m[4][a] = -epart[a]
    return Bivector5Field(m)


def _invert5(L):
    try:
        return poly_inverse(L)
    except ValueError:
        inv = rat_inverse(L)
        out = [[None] * 5 for _ in range(5)]
        for i in range(5):
            for j in range(5):
                v = inv[i][j]
                out[i][j] = v.num if v.den.is_constant() else v
        return out


def change_basis(x, L, standard: bool = True):
    """Components after the basis change b'_A = b_B L^B_A.

    Vectors pick up L^-1, forms pick up L.  When both bases are standard
    the four-into-fifth block of L must vanish.
    """
    L = [[_coerce_any(v) for v in row] for row in L]
    if len(L) != 5 or any(len(r) != 5 for r in L):
        raise ValueError("need a 5x5 matrix")
    if standard:
        for a in range(4):
            if not L[a][4].is_zero():
                raise ValueError(
                    "a standard-to-standard change cannot mix the algebraic "
                    "basis vector into the four-part"
                )
    if isinstance(x, FiveVecField):
        Linv = _invert5(L)
        comps = []
        for A in range(5):
            c = None
            for B in range(5):
                t = Linv[A][B] * x[B]
                c = t if c is None else c + t
            comps.append(c)
        return FiveVecField(comps, BasisSpec(tuple(tuple(r) for r in L), x.basis.tags))
    if isinstance(x, FiveFormField):
        comps = []
        for A in range(5):
            c = ZERO
            for B in range(5):
                c = c + x[B] * L[B][A]
            comps.append(c)
        return FiveFormField(comps, BasisSpec(tuple(tuple(r) for r in L), x.basis.tags))
    raise TypeError("change_basis acts on five-vector or five-form fields")
