"""
Parallel transport with an algebraic fifth slot
===============================================

The transport table extends the Levi-Civita connection by one extra row
that feeds the four-part of a vector into its algebraic component.  Even
in flat space the frame therefore drifts: carrying e_0 along the x0 axis
for unit time picks up exactly one unit in the fifth slot.  Around a
small closed loop the drift measures curvature.
"""

from fractions import Fraction

from fivevec.connection import Curve, build_G, build_H, christoffel, transport_along
from fivevec.core5 import MetricG
from fivevec.curvature import curvature_from_H, holonomy_curvature_estimate
from fivevec.connection import ConnectionG, SForm
from fivevec.poly import X, Poly4

# flat space: closed-form drift along the time axis
g = MetricG.eta()
G = build_G(g, Fraction(1), christoffel(g), mode="active")
curve = Curve([[Fraction(0), Fraction(1)], [0], [0], [0]])
V = transport_along([1, 0, 0, 0, 0], curve, G, steps=1000)
print("transported e_0:", [f"{v:.12f}" for v in V])  # fifth slot -> 1

# a curved model: unimodular metric plus a torsion-generating form
one, zero = Poly4.one(), Poly4.zero()
L = [[one, X[2], zero, zero], [zero, one, zero, X[0].scale(Fraction(1, 2))],
     [zero, zero, one, zero], [zero, zero, zero, one]]
eta = (1, -1, -1, -1)
gm = MetricG([[sum(((L[k][i] * L[k][j]).scale(eta[k]) for k in range(4)), zero)
               for j in range(4)] for i in range(4)])
S = SForm.from_entries([(0, 1, 4, Poly4.const(Fraction(1, 3))),
                        (2, 3, 0, Poly4.const(Fraction(1, 2))),
                        (1, 2, 4, one)])
H = build_H(gm, S, christoffel(gm))
R = curvature_from_H(H)

# numeric holonomy around a small square in the (x0, x1) plane matches
# the symbolic curvature table entry by entry
Gtab = ConnectionG([[[H.H[A][B][m] for m in range(4)] for B in range(5)] for A in range(5)])
base = (Fraction(1, 8),) * 4
est = holonomy_curvature_estimate(Gtab, 0, 1, 1e-3, base)
fb = [float(c) for c in base]
worst = 0.0
for A in range(5):
    for B in range(5):
        v = R[A][B][0][1]
        want = v.eval_float(fb) if hasattr(v, "eval_float") else float(v)
        worst = max(worst, abs(est[A][B] - want))
print(f"holonomy vs symbolic curvature, worst entry: {worst:.3e}")
