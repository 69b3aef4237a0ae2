"""The discretization bridge: cluster form -> Kirillov's orbit form.

Sampling a unit-bracket lift at n points (with 1/sqrt(step) weights) gives a
polygon that is an approximate closed frieze; sampling a gauged variation of
the curve gives polygon tangents.  The geometric cluster-form sum on that
data converges, as n grows, to

    int (xi_2 eta_2' - xi_2' eta_2) / Gamma_2^2 dx
      = -1/(4c) * [ -c int (xi' eta'' - xi'' eta') / f'^2 dx ],

the right side being the curve expression of the orbit 2-form (numerically
equal to twice its vector-field expression under xi = X f').
"""

import math

import frieze_lab as fl
from frieze_lab.curves import trig_poly
from frieze_lab.hill import HillPotential

T = math.pi
xi = trig_poly(T, {0: (0.5, 0.0), 1: (-0.5, 0.0)})  # sin^2 x
eta = trig_poly(T, {0: (0.25, 0.0), 1: (0.0, 0.5), 2: (-0.25, 0.0)})

cur = fl.tan_family(0.2, c=0.5)
print("curve family: tan(x + 0.2 sin 2x), central constant c = 1/2\n")

pot = HillPotential(kappa=fl.lift_curve(cur).kappa, c=cur.c, period=T, dkappa=cur.dkappa)
X = fl.field_from_variation(cur, xi)
Y = fl.field_from_variation(cur, eta)
line1, line2 = fl.kirillov_form_fields_both(pot, X, Y)
curve_val = fl.kirillov_form_curve(cur, xi, eta)
print("orbit form, vector-field expression (both displayed lines):")
print(f"  {line1:.12f}  /  {line2:.12f}")
print(f"orbit form, curve expression: {curve_val:.12f}  (= 2x the field value)")

report = fl.convergence_study(cur, xi, eta, [100, 200, 400, 800])
print(f"\ncontinuum integral of the cluster form: {report.integral:.12f}")
print(f"-1/(4c) * curve expression:             {report.kirillov_scaled:.12f}")
print("\n   n     discrete sum      error        order   det defect")
orders = ("  --  ",) + tuple(f"{o:6.3f}" for o in report.observed_orders)
for rec, order in zip(report.records, orders):
    print(f"{rec.n:5d}  {rec.discrete:+.10f}  {rec.err_integral:.3e}  {order}  {rec.det_defect:.2e}")
print("\nerrors decrease monotonically:", report.errors_decreasing())
print("final relative error:", f"{report.final_relative_error():.2e}")
