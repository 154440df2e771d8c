"""
Extended gauge multiplets and the conjugation asymmetry
=======================================================

An (n+1)-component multiplet pairs an SU(n) x U(1) connection with one
extra column of couplings X.  When X vanishes, the derivative of the
conjugate multiplet follows from the same connection data.  When X does
not vanish, the mismatch between the two derivative laws is exactly the
X terms -- nothing else survives -- so the extra column is what breaks
the conjugation symmetry.
"""

import random
from fractions import Fraction

from fivevec import randomize
from fivevec.exactnum import CNum, SqrtNum
from fivevec.gauge import (
    GaugeConnection,
    MultipletField,
    c_violation,
    compose_nn,
    expected_column_terms,
    gellmann_generators,
    pairs_collapse,
    pairs_is_zero,
)

rng = random.Random(7)
n, g = 2, Fraction(1)
dim = n * n - 1

ts = gellmann_generators(n)
print(f"SU({n}) generators: {len(ts)}, normalized so tr(t_a t_b) = 2 d_ab")

c_a = [[Fraction(rng.randint(-3, 3)) for _ in range(dim)] for _ in range(5)]
c_0 = [Fraction(rng.randint(-3, 3)) for _ in range(5)]
nn = compose_nn(n, [[CNum.of(v) for v in r] for r in c_a], [CNum.of(v) for v in c_0], g)
amp_norm = SqrtNum.sqrt(Fraction(n, 2 * (n + 1)))
amp = [-(CNum.I * CNum(amp_norm) * CNum.of(c_0[A]) * CNum.of(g)) for A in range(5)]

for label, col in (
    ("X = 0", [[CNum.of(0)] * n for _ in range(5)]),
    ("X != 0", [[CNum(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(n)] for _ in range(5)]),
):
    conn = GaugeConnection(n, nn, col, amp)
    comp = [[(CNum.of(rng.randint(-3, 3)), randomize.poly(rng, 1, 2))] for _ in range(n + 1)]
    u = MultipletField(n, comp)
    empty = True
    matches = True
    for A in range(5):
        got = c_violation(u, conn, g, A)
        want = expected_column_terms(u, conn, A)
        for slot in range(n + 1):
            if not pairs_is_zero(got[slot]):
                empty = False
            if not (pairs_collapse(got[slot]) - pairs_collapse(want[slot])).is_zero():
                matches = False
    print(f"{label}: violation empty = {empty}, equals the X-column terms = {matches}")
