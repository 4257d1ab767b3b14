"""
Squeezing a thin ellipsoid into a 4-ball
========================================

Walks through the bounds for E(1, a) -> B^4(A), all in units of pi.
"""
from symb import Ellipsoid, Family, TargetFamily, best_lower_bound, l_eb, s_eb
from symb.folding import closed_form_a_n, fold_states

ball = TargetFamily(Family.BALL, 2)

# For a <= 2 nothing beats the inclusion: the Ekeland-Hofer capacity c_2
# already forces A >= a.
for a in (1.2, 1.6, 2.0):
    lb = best_lower_bound(Ellipsoid((1, a)), ball)
    print(f"a = {a}: lower bound {lb.value} from {lb.method.value}, upper bound {s_eb(a).value}")

# Past a = 2 folding starts to pay off.  At a = 4 the best fold point
# gives a ball of capacity about 2.69.
bound = s_eb(4.0, 1e-9)
print(f"\ns_EB(4) = {bound.value:.6f}, fold point u0 = {bound.certificate['u0']:.6f}, "
      f"{bound.certificate['folds']} folds")

# Each loop-head state of the recurrence at that fold point: floor j has
# length u_j, r_j is still to be folded.
for state in fold_states(4.0, bound.certificate["u_feasible"]):
    print(f"  j={state.j}  u_j={state.u_j:.5f}  r_j={state.r_j:.5f}")

# Folding once, twice or three times has closed forms; more folds help.
print("\n a     1 fold   2 folds  3 folds  optimum  Lagrangian")
for a in (3, 4, 6, 8, 12):
    cf = [closed_form_a_n(a, n) for n in (1, 2, 3)]
    print(f"{a:3d}  " + "  ".join(f"{v:7.4f}" for v in cf)
          + f"  {s_eb(a).value:7.4f}  {l_eb(a).value:7.4f}")
