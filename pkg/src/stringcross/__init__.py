"""
Crossing formulas for crystals of type A.

Reduced words of w0, wiring diagrams, Reineke crossings and rigorous paths,
the crystal structures on string data and Lusztig data that they describe,
string cones and polytopes, and the Kashiwara *-involution, together with
independent oracles used to cross-check all of it.
"""

from .crossings import CrossingPath, enumerate_crossings, enumerate_rigorous, precedes
from .lusztig import F_inv, F_map, G_inv, G_map, lusztig_e, lusztig_eps, lusztig_f, phi_transition
from .polytopes import bz_ineqs, lattice_points, nz_ineqs, string_cone_ineqs, weyl_dim
from .star import star_lusztig, star_matrix_iota0, star_string, str_from_lusztig_iota0
from .string_crystal import (binf_e, binf_f, bz_e, bz_f, eps_star, eta, nz_e, nz_f, psi,
                             star_e, star_f)
from .wiring import build as wiring_diagram
from .words import enumerate_words, iota0, is_reduced_longest, move_path, reflection_ordering

__version__ = "0.1.0"
