"""The canonical cluster 2-form on the space of friezes.

In diagonal coordinates the form is sum da_i ^ da_{i+1} / (a_i a_{i+1}).
Its coordinate expression looks chart-dependent, but exact jet pushforwards
show the same value in every zigzag chart (with a sign flip on SW steps), and
the geometric polygon evaluation agrees as well.  The form is symplectic
exactly when the width is even.
"""

from fractions import Fraction as Fr

import frieze_lab as fl
from frieze_lab.frieze import SE, SW

d = fl.DiagonalCoords(base=4, values=(Fr(1), Fr(2)))
e1, e2 = (Fr(1), Fr(0)), (Fr(0), Fr(1))

print("base diagonal (a1, a2) = (1, 2)")
print("omega(e1, e2) in diagonal coordinates:", fl.omega_diagonal(d, e1, e2))

path = fl.ZigzagPath(start=2, moves=(SW,))
t1, t2 = fl.pushforward_many(d, path, [e1, e2])
print("\npushforward to the SW zigzag chart at start 2:")
print("  J e1 =", t1.components, "  J e2 =", t2.components)
print("  omega' in that chart (SW step carries a -1):", fl.omega_zigzag(t1.base, t1, t2))

poly, g1 = fl.polygon_tangent_from_diagonal(d, e1)
_, g2 = fl.polygon_tangent_from_diagonal(d, e2)
print("\ngeometric evaluation on the fundamental polygon:", fl.omega_geometric(poly, g1, g2))

print("\nexact Jacobian of the chart change (hand-checkable):")
for row in fl.chart_jacobian(d, fl.ZigzagPath(start=0, moves=(SE,))):
    print("  ", [str(x) for x in row])

print("\nrank parity of the form (w even: symplectic, w odd: 1-dim kernel):")
import random
rng = random.Random(1)
for w in range(1, 7):
    while True:
        vals = tuple(Fr(rng.randint(1, 5), rng.randint(1, 5)) for _ in range(w))
        try:
            fl.diagonal_to_frieze(vals)
            break
        except fl.ZeroEntryEncountered:
            continue
    print(f"  w = {w}: rank {fl.omega_rank(fl.DiagonalCoords(base=0, values=vals))}")
