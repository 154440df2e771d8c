"""Exact 4x4 complex matrix realization of the SO(3,2) anticommutation
relations Gamma_A Gamma_B + Gamma_B Gamma_A = -2 eta_AB, with
eta = diag(+1,-1,-1,-1,+1), and the reconstruction of the usual Dirac
matrices from the five constituents.
"""

from __future__ import annotations

from fractions import Fraction

from .exactnum import CNum

ETA5 = (1, -1, -1, -1, 1)
ETA4 = (1, -1, -1, -1)

_0 = CNum(0)
_1 = CNum(1)
_I = CNum.I


def cmat(rows):
    return tuple(tuple(CNum.of(v) if not isinstance(v, CNum) else v for v in row) for row in rows)


def cmat_mul(A, B):
    n = len(A)
    return tuple(
        tuple(sum((A[i][k] * B[k][j] for k in range(n)), CNum(0)) for j in range(n))
        for i in range(n)
    )


def cmat_add(A, B):
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def cmat_scale(A, c):
    c = CNum.of(c) if not isinstance(c, CNum) else c
    return tuple(tuple(c * v for v in row) for row in A)


def cmat_eq(A, B):
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def cmat_eye(n=4, scale=1):
    s = CNum.of(scale)
    return tuple(tuple(s if i == j else CNum(0) for j in range(n)) for i in range(n))


ZERO4 = cmat_eye(4, 0)


def _dirac_gammas():
    # standard Dirac representation
    g0 = cmat([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])
    g1 = cmat([[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]])
    g2 = cmat(
        [[_0, _0, _0, -_I], [_0, _0, _I, _0], [_0, _I, _0, _0], [-_I, _0, _0, _0]]
    )
    g3 = cmat([[0, 0, 1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, 1, 0, 0]])
    return (g0, g1, g2, g3)


class GammaSet:
    """Five matrices satisfying the SO(3,2) Clifford relations exactly."""

    __slots__ = ("gammas",)

    def __init__(self, gammas):
        if len(gammas) != 5:
            raise ValueError("need 5 matrices")
        self.gammas = tuple(gammas)
        for A in range(5):
            for B in range(A, 5):
                anti = cmat_add(
                    cmat_mul(self.gammas[A], self.gammas[B]),
                    cmat_mul(self.gammas[B], self.gammas[A]),
                )
                eta_ab = ETA5[A] if A == B else 0
                if not cmat_eq(anti, cmat_eye(4, -2 * eta_ab)):
                    raise ValueError(f"anticommutation relation fails for ({A},{B})")

    def __eq__(self, other):
        return isinstance(other, GammaSet) and all(
            cmat_eq(a, b) for a, b in zip(self.gammas, other.gammas)
        )


def build_gamma_set() -> GammaSet:
    """Concrete constituents: G5 = g0 g1 g2 g3 (so G5^2 = -I) and
    G_mu = i * g_mu * G5, built from the Dirac-basis g_mu."""
    g = _dirac_gammas()
    G5 = cmat_mul(cmat_mul(g[0], g[1]), cmat_mul(g[2], g[3]))
    Gs = [cmat_scale(cmat_mul(gm, G5), _I) for gm in g]
    Gs.append(G5)
    return GammaSet(Gs)


def gamma4_from(gs: GammaSet):
    """Recover the Dirac matrices: (i/2)(G_mu G5 - G5 G_mu)."""
    G5 = gs.gammas[4]
    half_i = CNum(0, Fraction(1, 2))
    out = []
    for mu in range(4):
        Gm = gs.gammas[mu]
        comm = cmat_add(cmat_mul(Gm, G5), cmat_scale(cmat_mul(G5, Gm), -1))
        out.append(cmat_scale(comm, half_i))
    return tuple(out)


def is_o32(O) -> bool:
    """Check O^T eta O = eta exactly for a 5x5 rational matrix."""
    O = [[Fraction(v) for v in row] for row in O]
    for A in range(5):
        for B in range(5):
            s = sum(O[K][A] * ETA5[K] * O[K][B] for K in range(5))
            if s != (ETA5[A] if A == B else 0):
                return False
    return True


def transform_o32(gs: GammaSet, O) -> GammaSet:
    """Gamma'_A = Gamma_B O^B_A for a pseudo-orthogonal O."""
    if not is_o32(O):
        raise ValueError("matrix does not preserve diag(+1,-1,-1,-1,+1)")
    O = [[Fraction(v) for v in row] for row in O]
    new = []
    for A in range(5):
        m = ZERO4
        for B in range(5):
            if O[B][A]:
                m = cmat_add(m, cmat_scale(gs.gammas[B], O[B][A]))
        new.append(m)
    return GammaSet(new)
