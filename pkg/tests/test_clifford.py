from fractions import Fraction

import pytest

from fivevec.clifford import (
    ETA5,
    GammaSet,
    build_gamma_set,
    cmat_add,
    cmat_eq,
    cmat_eye,
    cmat_mul,
    cmat_scale,
    gamma4_from,
    is_o32,
    transform_o32,
)


def anticommutator(a, b):
    return cmat_add(cmat_mul(a, b), cmat_mul(b, a))


def test_gamma_set_relations():
    gs = build_gamma_set()
    for A in range(5):
        for B in range(5):
            want = cmat_eye(4, -2 * (ETA5[A] if A == B else 0))
            assert cmat_eq(anticommutator(gs.gammas[A], gs.gammas[B]), want)


def test_gamma4_dirac_algebra():
    g4 = gamma4_from(build_gamma_set())
    eta4 = (1, -1, -1, -1)
    for a in range(4):
        for b in range(4):
            want = cmat_eye(4, 2 * (eta4[a] if a == b else 0))
            assert cmat_eq(anticommutator(g4[a], g4[b]), want)


def test_gamma_set_validates():
    gs = build_gamma_set()
    bad = list(gs.gammas)
    bad[0] = cmat_scale(bad[0], 2)
    with pytest.raises(ValueError):
        GammaSet(bad)


def _rot(i, j, c, s):
    M = [[Fraction(int(a == b)) for b in range(5)] for a in range(5)]
    M[i][i] = M[j][j] = Fraction(c)
    M[i][j] = -Fraction(s)
    M[j][i] = Fraction(s)
    return M


def _boost(i, j, ch, sh):
    M = [[Fraction(int(a == b)) for b in range(5)] for a in range(5)]
    M[i][i] = M[j][j] = Fraction(ch)
    M[i][j] = M[j][i] = Fraction(sh)
    return M


def test_transform_preserves_relations():
    gs = build_gamma_set()
    # rotation in the two plus-signature axes, a spatial rotation, and a boost
    for O in (
        _rot(0, 4, Fraction(3, 5), Fraction(4, 5)),
        _rot(1, 2, Fraction(5, 13), Fraction(12, 13)),
        _boost(0, 1, Fraction(5, 4), Fraction(3, 4)),
        _boost(4, 3, Fraction(13, 12), Fraction(5, 12)),
    ):
        assert is_o32(O)
        transform_o32(gs, O)  # constructor re-checks the relations


def test_transform_rejects_non_isometry():
    gs = build_gamma_set()
    M = [[Fraction(int(a == b)) for b in range(5)] for a in range(5)]
    M[0][0] = Fraction(2)
    assert not is_o32(M)
    with pytest.raises(ValueError):
        transform_o32(gs, M)
