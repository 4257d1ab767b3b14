"""
Cubes and polydiscs
===================

Folding bounds for E(1, a) into a cube and for polydiscs P(1, a) into balls
and cubes, next to the volume constraint.
"""
import math

from symb import s_ec, s_pb, s_pc, s_pc_2n
from symb.folding import s_ec_closed_form

# Below a = 2 + sqrt(5) the cube bound has a rational closed form.
print(" a     s_EC      closed form")
for a in (1.5, 2.0, 3.0, 4.0):
    print(f"{a:4.1f}  {s_ec(a).value:.7f}  {s_ec_closed_form(a):.7f}")

# Polydisc bounds are piecewise: flat pieces alternate with sloped ones.
print("\n  a   s_PB    s_PC    sqrt(a)")
for a in range(2, 21, 2):
    print(f"{a:3d}  {s_pb(a).value:6.3f}  {s_pc(a).value:6.3f}  {math.sqrt(a):6.3f}")

# In higher dimensions the same folding stacks layers in every direction.
for n in (2, 3, 4):
    print(f"\nP(1, ..., 1, 30) into C^{2 * n}: {s_pc_2n(30, n).value}")
