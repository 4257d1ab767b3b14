"""
Lagrangian folding with integer matrices
========================================

A box wraps around the torus once a unimodular matrix is injective on it
modulo the lattice.  Coprime k's make that work; here we check it by exact
sampling, then turn the dual matrices into capacity bounds.
"""
from fractions import Fraction

from symb import (ball_bound_n, find_coprime_ks, l_eb, l_pc,
                  polydisc_bound_n, torus_injectivity_check)
from symb.lagrangian import m_matrix, n_star_matrix

box = (Fraction(1, 2), Fraction(1, 3), 6)
print("M(2,3) injective on its box:", torus_injectivity_check(m_matrix((2, 3)), box, 8))
box = (Fraction(1, 2), Fraction(1, 4), 8)
print("M(2,4) injective on its box:", torus_injectivity_check(m_matrix((2, 4)), box, 8))

print("\nN* for k = (2, 3):")
for row in n_star_matrix((2, 3)).entries:
    print("  ", "  ".join(f"{str(x):>5}" for x in row))

# In dimension four the construction gives explicit piecewise bounds.
print("\n  a    l_EB   l_PC")
for a in (3, 5, 8, 12, 20, 35):
    print(f"{a:3d}  {l_eb(a).value:6.3f}  {l_pc(a).value:6.3f}")

# Six-dimensional examples with k = (k, k).
for k in (2, 3, 4):
    ball = ball_bound_n((k, k), (k**3, k**3)).value
    cube = max(polydisc_bound_n((k, k), ((k - 1) * k * k,) * 2))
    print(f"k = {k}: E(1, {k**3}, {k**3}) into B^6({ball:g}),"
          f" P(1, {(k - 1) * k * k}, {(k - 1) * k * k}) into C^6({cube:g})")

print("\ncoprime k's below caps (100, 100, 100):", find_coprime_ks((100, 100, 100)))
