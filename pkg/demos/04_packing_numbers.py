"""
Packing numbers and how much rigidity is left
==============================================

Upper bounds on capacities become lower bounds on packing numbers.  The
deficiency measures the distance to the volume constraint.
"""
from symb import asymptotic_ratio, jiang_lower_bound, ruled_surface_packing
from symb.packing import alternation_report, deficiency_report

print("  a     EB      EC      PB      PC")
for a in (2, 5, 10, 50, 200, 1000):
    row = [asymptotic_ratio(p, a) for p in ("EB", "EC", "PB", "PC")]
    print(f"{a:5d}  " + "  ".join(f"{r:.4f}" for r in row))

for kind in ("EB", "PB", "PC"):
    rep = deficiency_report(kind, 100)
    first, last = rep.points[0][1], rep.points[-1][1]
    print(f"\n{kind}: deficiency maxima go from {first:.4f} to {last:.4f},"
          f" {rep.direction} toward {rep.limit}")

print("\nWhich four-dimensional bound is smaller?")
for row in alternation_report(6):
    print(f"  k={row.k}: Lagrangian smaller at k(k+1): {row.lagrangian_wins_at_k_k1},"
          f" folding smaller at k(k+2): {row.folding_wins_at_k_k2}")

print("\nruled surfaces: S2 x S2 (2, 1) ->", ruled_surface_packing(0, 2, 1))
print("                T2 x S2 (1, 3) ->", ruled_surface_packing(1, 1, 3))
print("T2 x Sigma(a) lower bounds:", [round(jiang_lower_bound(a), 4) for a in (1, 4, 12, 40)])
