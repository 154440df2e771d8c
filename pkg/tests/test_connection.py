from fractions import Fraction

import pytest

from fivevec import frames, randomize
from fivevec.connection import (
    ConnectionG,
    Curve,
    SForm,
    build_G,
    build_H,
    christoffel,
    five_torsion,
    four_torsion,
    nabla_five,
    nabla_form,
    nabla_metric5,
    pentad_metric5,
    transport_along,
)
from fivevec.core5 import FiveVecField, MetricG
from fivevec.poly import ZERO, Poly4

from conftest import curved_models


def test_transport_table_defaults():
    g = MetricG.eta()
    G = build_G(g, Fraction(1), christoffel(g), mode="active")
    for b in range(4):
        for m in range(4):
            assert (G[4, b, m] + g[b, m]).is_zero()
    for A in range(5):
        for m in range(4):
            assert G[A, 4, m].is_zero()


def test_normalized_mode_scales_fifth_row():
    g = MetricG.eta()
    k = Fraction(2, 3)
    G = build_G(g, k, christoffel(g), mode="normalized")
    for b in range(4):
        for m in range(4):
            assert (G[4, b, m] + g[b, m].scale(k)).is_zero()


def test_self_parallel_frame():
    g = MetricG.eta()
    G = build_G(g, Fraction(1), christoffel(g), mode="active")
    N = frames.p_basis_fields().N
    for a in range(5):
        p_field = FiveVecField([N[B][a] for B in range(5)])
        for mu in range(4):
            for c in nabla_five(p_field, G, mu).u:
                assert c.is_zero()


def test_transport_matches_closed_form():
    # along x0 = t the first frame vector drifts into the algebraic slot
    g = MetricG.eta()
    G = build_G(g, Fraction(1), christoffel(g), mode="active")
    curve = Curve([[Fraction(0), Fraction(1)], [0], [0], [0]])
    V = transport_along([1, 0, 0, 0, 0], curve, G, steps=1000)
    want = [1.0, 0.0, 0.0, 0.0, 1.0]
    assert max(abs(a - b) for a, b in zip(V, want)) < 1e-9


def test_transport_commutes_with_quotient(rng):
    g = MetricG.eta()
    G = build_G(g, Fraction(1), christoffel(g), mode="active")
    G4 = ConnectionG(
        [
            [[G[a, b, m] for m in range(4)] if a < 4 and b < 4 else [ZERO] * 4 for b in range(5)]
            for a in range(5)
        ]
    )
    for _ in range(5):
        cv = Curve([[randomize.rational(rng, 2), randomize.rational(rng, 2)] for _ in range(4)])
        u0 = [randomize.rational(rng, 3) for _ in range(5)]
        V5 = transport_along(u0, cv, G, steps=400)
        V4 = transport_along([u0[0], u0[1], u0[2], u0[3], 0], cv, G4, steps=400)
        assert max(abs(a - b) for a, b in zip(V5[:4], V4[:4])) < 1e-9


def test_vector_form_pairing_covariant(rng):
    g, S = curved_models()[0]
    G5 = build_H(g, S, christoffel(g))
    G = ConnectionG([[[G5[A, B, m] for m in range(4)] for B in range(5)] for A in range(5)])
    u = FiveVecField(randomize.fivevec_components(rng, degree=1))
    w = randomize.fivevec_components(rng, degree=1)
    for mu in range(4):
        du = nabla_five(u, G, mu)
        dw = nabla_form(w, G, mu)
        lhs = sum((w[A] * du[A] + dw[A] * u[A] for A in range(5)), ZERO)
        rhs = sum((w[A] * u[A] for A in range(5)), ZERO).partial(mu)
        assert (lhs - rhs).is_zero()


@pytest.mark.parametrize("idx", [0, 1, 2])
def test_metric_compatibility(idx):
    g, S = curved_models()[idx]
    H = build_H(g, S, christoffel(g))
    g5 = g.five_matrix()
    for C in range(5):
        for row in pentad_metric5(g5, H, C):
            for v in row:
                assert v.is_zero()


def test_levi_civita_compatibility():
    g, _ = curved_models()[1]
    G = build_G(g, Fraction(1), christoffel(g), mode="active")
    g5 = g.five_matrix()
    for mu in range(4):
        out = nabla_metric5(g5, G, mu)
        for a in range(4):
            for b in range(4):
                assert out[a][b].is_zero()


def test_torsion_from_sform():
    g, S = curved_models()[0]
    H = build_H(g, S, christoffel(g))
    T5 = five_torsion(H)
    T4 = four_torsion(g, S)
    # the four-block torsion of H is minus twice the antisymmetrized s-part
    for a in range(4):
        for b in range(4):
            for m in range(4):
                assert (T5[m][a][b] + T4[a][b][m].scale(2)).is_zero()


def test_curve_evaluation():
    cv = Curve([[Fraction(1), Fraction(2)], [0], [Fraction(0), Fraction(0), Fraction(1)], [0]])
    x = cv.at(0.5)
    v = cv.velocity(0.5)
    assert abs(x[0] - 2.0) < 1e-15 and abs(x[2] - 0.25) < 1e-15
    assert abs(v[0] - 2.0) < 1e-15 and abs(v[2] - 1.0) < 1e-15
