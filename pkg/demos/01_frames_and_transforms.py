"""
Five-component tangent vectors and their frames
================================================

A tangent object here has four differential components and one purely
algebraic one.  Two natural frames coexist over any inertial chart: an
orthonormal one and a self-parallel one whose fifth row drifts with the
coordinates.  This script builds both, moves them between charts, and
shows that the coordinates can be read back off the completed product.
"""

from fractions import Fraction

from fivevec import frames
from fivevec.core5 import FiveVecField, MetricG, ProductH, inner_h
from fivevec.poly import X, Poly4

# a boost mixing x0 and x1 plus a translation
chart = frames.LorentzChart(
    [[Fraction(5, 4), Fraction(3, 4), 0, 0],
     [Fraction(3, 4), Fraction(5, 4), 0, 0],
     [0, 0, 1, 0],
     [0, 0, 0, 1]],
    [1, 0, -2, 0],
)

# component laws in the two frames; the self-parallel one feels the
# translation through its fifth row
print("orthonormal component matrix:")
for row in frames.o_component_matrix(chart):
    print("  ", [str(v) for v in row])
print("self-parallel component matrix:")
for row in frames.p_component_matrix(chart):
    print("  ", [str(v) for v in row])

# the completed product h on the self-parallel frame encodes the position:
# its matrix at a point determines the coordinates of that point
pt = (Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(3))
hm = frames.h_matrix_p_basis(pt, Fraction(1))
print("recovered coordinates:", frames.recover_coords(hm, Fraction(1)))

# the degenerate product ignores the algebraic slot, the completion does not
g = MetricG.eta()
h = ProductH(g, Fraction(1))
u = FiveVecField([Poly4.one(), Poly4.zero(), Poly4.zero(), Poly4.zero(), X[0]])
print("h(u,u) =", inner_h(u, u, h))
