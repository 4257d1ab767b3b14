"""Bounds for symplectic embeddings of ellipsoids and polydiscs into balls
and cubes, in units of pi."""
from .capacities import (best_lower_bound, eh_capacity, eh_lower_bound,
                         ellipsoid_e_invariants, linear_embeds, spectrum_prefix,
                         rigidity_excludes, theorem1_excludes,
                         volume_lower_bound)
from .domain import (Accuracy, Bound, Direction, Ellipsoid, Family, Method,
                     Polydisc, TargetFamily, normalize, volume)
from .folding import (closed_form_a_n, diagonal_cube_bound, fold_feasible,
                      fold_height, s_eb, s_ec, s_pb, s_pc, s_pc_2n)
from .lagrangian import (ball_bound_m, ball_bound_n, cube_bound_m,
                         find_coprime_ks, l_eb, l_pc, n_star_matrix,
                         pairwise_coprime, polydisc_bound_n,
                         torus_injectivity_check)
from .packing import (asymptotic_ratio, deficiency, deficiency_maxima,
                      jiang_lower_bound, packing_number, ruled_surface_packing,
                      width_from_squeezing)
from .sweep import crossover

__version__ = "0.1.0"
