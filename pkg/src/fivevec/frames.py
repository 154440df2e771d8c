"""Flat-spacetime frame machinery.

Two families of frames over a Lorentz chart: the orthonormal frame tied
to the chart (constant, not self-parallel) and the self-parallel frame
p_alpha = e_alpha + x_alpha e5, p_5 = e5, which is orthonormal only at
the origin.  Both transformation laws, the invariant position form, and
the two Poincare-parameter tensors live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core5 import ETA4, BasisSpec, FiveFormField, FiveVecField
from .matrix import frac_inverse, mat_mul
from .poly import ONE, X, ZERO, Poly4


def _cov(x):
    """Covariant components x_alpha = eta_{alpha beta} x^beta."""
    return [ETA4[a] * x[a] for a in range(4)]


def is_lorentz(L) -> bool:
    L = [[Fraction(v) for v in row] for row in L]
    for a in range(4):
        for b in range(4):
            s = sum(L[k][a] * ETA4[k] * L[k][b] for k in range(4))
            if s != (ETA4[a] if a == b else 0):
                return False
    return True


@dataclass(frozen=True)
class LorentzChart:
    """x'^mu = Lambda^mu_nu x^nu + a^mu with Lambda^T eta Lambda = eta."""

    Lambda: tuple
    a: tuple

    def __init__(self, Lambda, a):
        Lm = tuple(tuple(Fraction(v) for v in row) for row in Lambda)
        av = tuple(Fraction(v) for v in a)
        if len(Lm) != 4 or any(len(r) != 4 for r in Lm) or len(av) != 4:
            raise ValueError("need a 4x4 matrix and a 4-translation")
        if not is_lorentz(Lm):
            raise ValueError("matrix does not preserve diag(+1,-1,-1,-1)")
        object.__setattr__(self, "Lambda", Lm)
        object.__setattr__(self, "a", av)

    def compose(self, other: "LorentzChart") -> "LorentzChart":
        """self after other: x -> other -> self."""
        Lm = mat_mul([list(r) for r in self.Lambda], [list(r) for r in other.Lambda])
        av = [
            sum(self.Lambda[i][j] * other.a[j] for j in range(4)) + self.a[i]
            for i in range(4)
        ]
        return LorentzChart(Lm, av)

    def inverse_matrix(self):
        return frac_inverse([list(r) for r in self.Lambda])


IDENTITY_CHART = LorentzChart([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], [0, 0, 0, 0])


def o_basis_change(chart: LorentzChart):
    """5x5 matrix N with e'_A = e_B N^B_A: the inverse Lorentz block plus
    an untouched fifth vector; translations act trivially."""
    Linv = chart.inverse_matrix()
    N = [[Fraction(0)] * 5 for _ in range(5)]
    for i in range(4):
        for j in range(4):
            N[i][j] = Linv[i][j]
    N[4][4] = Fraction(1)
    return N


def o_component_matrix(chart: LorentzChart):
    """Component law for the orthonormal frame: v'^A = T^A_B v^B."""
    T = [[Fraction(0)] * 5 for _ in range(5)]
    for i in range(4):
        for j in range(4):
            T[i][j] = chart.Lambda[i][j]
    T[4][4] = Fraction(1)
    return T


def p_basis_fields() -> BasisSpec:
    """Self-parallel frame over the canonical chart: N^5_alpha = x_alpha."""
    N = [[ONE if i == j else ZERO for j in range(5)] for i in range(5)]
    xcov = _cov(X)
    for a in range(4):
        N[4][a] = xcov[a]
    return BasisSpec(tuple(tuple(r) for r in N), frozenset({"standard", "regular", "P"}))


def p_component_matrix(chart: LorentzChart):
    """Component law in the self-parallel frame: v'^alpha = Lambda v,
    v'^5 = v^5 - a_alpha Lambda^alpha_beta v^beta (entries are constants)."""
    T = [[Fraction(0)] * 5 for _ in range(5)]
    acov = _cov(chart.a)
    for i in range(4):
        for j in range(4):
            T[i][j] = chart.Lambda[i][j]
        T[4][i] = -sum(acov[k] * chart.Lambda[k][i] for k in range(4))
    T[4][4] = Fraction(1)
    return T


def p_component_transform(v, chart: LorentzChart, kind: str = "vector"):
    """Transform components given in the self-parallel frame of the source
    chart into the frame of the composed chart."""
    if kind == "vector":
        T = p_component_matrix(chart)
        out = []
        for A in range(5):
            c = _zero_like(v)
            for B in range(5):
                c = c + T[A][B] * v[B]
            out.append(c)
        return tuple(out)
    if kind == "form":
        acov = _cov(chart.a)
        Linv = chart.inverse_matrix()
        out = []
        for a in range(4):
            c = _zero_like(v)
            for b in range(4):
                c = c + v[b] * Linv[b][a]
            out.append(c + v[4] * acov[a])
        out.append(v[4])
        return tuple(out)
    raise ValueError("kind must be 'vector' or 'form'")


def _zero_like(v):
    return v[0] - v[0]


def h_matrix_p_basis(x, kappa) -> list:
    """h in the self-parallel frame: eta_{ab} + k^2 x_a x_b on the
    four-block, k^2 x_a in the mixed slots, k^2 in the corner (xi = 1)."""
    kappa = Fraction(kappa)
    if kappa == 0:
        raise ValueError("kappa must be nonzero")
    xcov = _cov([Fraction(c) for c in x])
    k2 = kappa * kappa
    m = [[Fraction(0)] * 5 for _ in range(5)]
    for a in range(4):
        for b in range(4):
            m[a][b] = (ETA4[a] if a == b else 0) + k2 * xcov[a] * xcov[b]
        m[a][4] = m[4][a] = k2 * xcov[a]
    m[4][4] = k2
    return m


def recover_coords(hmat, kappa):
    """Read the chart point back off the h matrix: x_a = h_{a5}/kappa^2."""
    kappa = Fraction(kappa)
    if kappa == 0:
        raise ValueError("kappa must be nonzero")
    k2 = kappa * kappa
    xcov = [Fraction(hmat[a][4]) / k2 for a in range(4)]
    return tuple(ETA4[a] * xcov[a] for a in range(4))


def covariant_position_form(basis: str = "O") -> FiveFormField:
    """The invariant 1-form whose pairing with a five-vector at x gives
    x_alpha u^alpha + u^5.  Constant in the orthonormal dual, literal
    coordinates in the self-parallel dual."""
    if basis == "O":
        return FiveFormField([ZERO, ZERO, ZERO, ZERO, ONE])
    if basis == "P":
        xcov = _cov(X)
        return FiveFormField(xcov + [ONE])
    raise ValueError("basis must be 'O' or 'P'")


@dataclass(frozen=True)
class PoincareParams:
    """Finite parameters (L, b_alpha) of a Poincare transformation, stored
    against a chart's self-parallel frame."""

    L: tuple
    b: tuple

    def __init__(self, L, b):
        Lm = tuple(tuple(Fraction(v) for v in row) for row in L)
        bv = tuple(Fraction(v) for v in b)
        if not is_lorentz(Lm):
            raise ValueError("L must be a Lorentz matrix")
        object.__setattr__(self, "L", Lm)
        object.__setattr__(self, "b", bv)

    def as_tensor(self):
        """(1,1) five-tensor: four-block L, fifth row b, corner 1."""
        T = [[Fraction(0)] * 5 for _ in range(5)]
        for i in range(4):
            for j in range(4):
                T[i][j] = self.L[i][j]
            T[4][i] = self.b[i]
        T[4][4] = Fraction(1)
        return T


@dataclass(frozen=True)
class InfinitesimalPoincare:
    """Generator parameters: antisymmetric omega^{mu nu} plus b^mu."""

    omega: tuple
    b: tuple

    def __init__(self, omega, b):
        om = tuple(tuple(Fraction(v) for v in row) for row in omega)
        bv = tuple(Fraction(v) for v in b)
        for i in range(4):
            for j in range(4):
                if om[i][j] != -om[j][i]:
                    raise ValueError("omega must be antisymmetric")
        object.__setattr__(self, "omega", om)
        object.__setattr__(self, "b", bv)

    def as_tensor(self):
        """Antisymmetric (2,0) five-tensor: omega block, fifth column b."""
        R = [[Fraction(0)] * 5 for _ in range(5)]
        for i in range(4):
            for j in range(4):
                R[i][j] = self.omega[i][j]
            R[i][4] = self.b[i]
            R[4][i] = -self.b[i]
        return R


def poincare_T_transform(p: PoincareParams, chart: LorentzChart) -> PoincareParams:
    Lam = [list(r) for r in chart.Lambda]
    Laminv = chart.inverse_matrix()
    Lp = mat_mul(mat_mul(Lam, [list(r) for r in p.L]), Laminv)
    acov = _cov(chart.a)
    LLinv = mat_mul([list(r) for r in p.L], Laminv)
    bp = []
    for beta in range(4):
        v = sum(p.b[t] * Laminv[t][beta] for t in range(4)) + acov[beta]
        v -= sum(acov[r] * chart.Lambda[r][s] * LLinv[s][beta] for r in range(4) for s in range(4))
        bp.append(v)
    return PoincareParams(Lp, bp)


def poincare_R_transform(inf: InfinitesimalPoincare, chart: LorentzChart) -> InfinitesimalPoincare:
    Lam = chart.Lambda
    acov = _cov(chart.a)
    om = [
        [
            sum(Lam[m][a] * Lam[n][b] * inf.omega[a][b] for a in range(4) for b in range(4))
            for n in range(4)
        ]
        for m in range(4)
    ]
    bp = []
    for m in range(4):
        inner = [
            inf.b[n] - sum(acov[a] * Lam[a][b] * inf.omega[n][b] for a in range(4) for b in range(4))
            for n in range(4)
        ]
        bp.append(sum(Lam[m][n] * inner[n] for n in range(4)))
    return InfinitesimalPoincare(om, bp)
