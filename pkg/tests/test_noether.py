from fractions import Fraction

import pytest

from fivevec import frames, randomize
from fivevec.connection import build_H, christoffel
from fivevec.core5 import ETA4
from fivevec.matrix import frac_inverse
from fivevec.noether import (
    MatterModel,
    MTensor,
    SymPoly,
    M_to_O_basis,
    M_to_P_basis,
    assemble_M,
    canonical_currents,
    flat_conservation_residual_O,
    flat_conservation_residual_P,
    m5_sigma5_cancellation,
    transform_chart,
)
from fivevec.poly import X, Poly4, substitute_chart

from conftest import curved_models

ZERO = Poly4.zero()
ONE = Poly4.one()


def random_sources(rng):
    theta = [[randomize.poly(rng, 2, 2) for _ in range(4)] for _ in range(4)]
    sig = [[[ZERO] * 4 for _ in range(4)] for _ in range(4)]
    for m in range(4):
        for a in range(4):
            for b in range(a + 1, 4):
                p = randomize.poly(rng, 1, 2)
                sig[m][a][b] = p
                sig[m][b][a] = -p
    return theta, sig


def test_assemble_blocks():
    theta = [[X[0] if i == j else ZERO for j in range(4)] for i in range(4)]
    sig = [[[ZERO] * 4 for _ in range(4)] for _ in range(4)]
    M = assemble_M(theta, sig)
    for m in range(4):
        for a in range(4):
            assert (M[m, 4, a] - theta[m][a]).is_zero()
            assert (M[m, a, 4] + theta[m][a]).is_zero()
        assert M[m, 4, 4].is_zero()
    for B in range(5):
        for C in range(5):
            assert M[4, B, C].is_zero()


def test_transform_law_matches_source_transform(rng):
    for _ in range(10):
        chart = frames.LorentzChart(randomize.lorentz(rng), randomize.translation(rng))
        L = [list(r) for r in chart.Lambda]
        Linv = frac_inverse(L)
        theta, sig = random_sources(rng)
        got = transform_chart(assemble_M(theta, sig), chart)

        def sub(p):
            return substitute_chart(p, L, list(chart.a))

        theta_p = [
            [
                sub(
                    sum(
                        (theta[p][q].scale(L[m][p] * Linv[q][n]) for p in range(4) for q in range(4)),
                        ZERO,
                    )
                )
                for n in range(4)
            ]
            for m in range(4)
        ]
        sig_p = [
            [
                [
                    sub(
                        sum(
                            (
                                sig[p][q][r].scale(L[m][p] * Linv[q][a] * Linv[r][b])
                                for p in range(4)
                                for q in range(4)
                                for r in range(4)
                            ),
                            ZERO,
                        )
                    )
                    for b in range(4)
                ]
                for a in range(4)
            ]
            for m in range(4)
        ]
        want = assemble_M(theta_p, sig_p)
        for A in range(4):
            for B in range(5):
                for C in range(5):
                    assert (got[A, B, C] - want[A, B, C]).is_zero()


def test_basis_change_roundtrip_and_spin_block(rng):
    theta, sig = random_sources(rng)
    M = assemble_M(theta, sig)
    MO = M_to_O_basis(M)
    back = M_to_P_basis(MO)
    for A in range(5):
        for B in range(5):
            for C in range(5):
                assert (back[A, B, C] - M[A, B, C]).is_zero()
    # the moment terms drop out of the orthonormal four-block
    for m in range(4):
        for a in range(4):
            for b in range(4):
                assert (MO[m, a, b] - sig[m][a][b]).is_zero()


def test_flat_conservation_both_frames():
    # constant symmetric stress with no spin is conserved in either frame
    theta = [[Poly4.const(ETA4[i] if i == j else 0) for j in range(4)] for i in range(4)]
    sig = [[[ZERO] * 4 for _ in range(4)] for _ in range(4)]
    M = assemble_M(theta, sig)
    for row in flat_conservation_residual_P(M):
        for v in row:
            assert v.is_zero()
    for row in flat_conservation_residual_O(M_to_O_basis(M)):
        for v in row:
            assert v.is_zero()


def test_fifth_component_cancellation(rng):
    g, S = curved_models()[0]
    H = build_H(g, S, christoffel(g))
    M5_s5 = [randomize.poly(rng, 1, 2) for _ in range(4)]
    lhs, rhs = m5_sigma5_cancellation(M5_s5, H, g, S)
    for a, b in zip(lhs, rhs):
        assert (a - b).is_zero()


def test_canonical_currents_free_scalar():
    # L = 1/2 eta^{mn} d_m phi d_n phi for phi = x0 gives energy 1/2
    phi = SymPoly.var("f")
    half = Fraction(1, 2)
    L = SymPoly.const(0)
    for m, lbl in enumerate(("0", "1", "2", "3")):
        d = SymPoly.var(f"D{lbl}_f")
        L = L + d * d * (half * ETA4[m])
    model = MatterModel(["f"], L)
    M = canonical_currents(model, {"f": X[0]}, None)
    # slot value L - dL/d(d_0 phi) d_0 phi = 1/2 - 1 = -1/2
    assert (M[0, 0, 4] + Poly4.const(half)).is_zero()
    # momentum components vanish for this configuration
    for m in range(1, 4):
        assert M[m, 0, 4].is_zero()


def test_matter_model_rejects_unknown_symbols():
    with pytest.raises(KeyError):
        MatterModel(["f"], SymPoly.var("g"))


def test_antisymmetry_enforced():
    bad = [[[ONE] * 5 for _ in range(5)] for _ in range(5)]
    with pytest.raises(ValueError):
        MTensor(bad)
