"""
Stress-energy and angular momentum in one object
================================================

A single rank-(1,2) tensor on the extended tangent space carries both
the stress-energy current (in its mixed slots) and the orbital-plus-spin
angular momentum current (in its four-block).  Moving to the
self-parallel frame makes the flat conservation law a plain divergence;
moving back to the orthonormal frame strips the moment terms off the
four-block, leaving the spin part.
"""

from fractions import Fraction

from fivevec.core5 import ETA4
from fivevec.noether import (
    MatterModel,
    SymPoly,
    M_to_O_basis,
    assemble_M,
    canonical_currents,
    flat_conservation_residual_O,
    flat_conservation_residual_P,
)
from fivevec.poly import X, Poly4

ZERO = Poly4.zero()

# constant symmetric stress, no spin: conserved in both frames
theta = [[Poly4.const(ETA4[i] if i == j else 0) for j in range(4)] for i in range(4)]
sig = [[[ZERO] * 4 for _ in range(4)] for _ in range(4)]
M = assemble_M(theta, sig)
rP = flat_conservation_residual_P(M)
rO = flat_conservation_residual_O(M_to_O_basis(M))
print("self-parallel residual zero:", all(v.is_zero() for row in rP for v in row))
print("orthonormal residual zero:  ", all(v.is_zero() for row in rO for v in row))

# the orthonormal four-block is exactly the spin part
sig[0][1][2] = X[3]
sig[0][2][1] = -X[3]
MO = M_to_O_basis(assemble_M(theta, sig))
print("orthonormal (0,1,2) block entry:", MO[0, 1, 2], "(the spin input)")

# canonical currents of a free scalar from a formal Lagrangian
half = Fraction(1, 2)
Lag = SymPoly.const(0)
for m, lbl in enumerate("0123"):
    d = SymPoly.var(f"D{lbl}_f")
    Lag = Lag + d * d * (half * ETA4[m])
model = MatterModel(["f"], Lag)
Mc = canonical_currents(model, {"f": X[0]}, None)
print("free-scalar current entry (energy slot):", Mc[0, 0, 4])
