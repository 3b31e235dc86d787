"""Group-annihilator graphs of finite abelian groups."""

from .groups import (FiniteAbelianGroup, GroupElement, IdealZ, Orbit, annihilator, annihilator_bruteforce,
                     annihilator_cyclic, annihilator_homogeneous, annihilator_rank3, cyclic, make_group, p_valuation)
from .graph import AnnGraph, Graph, build_graph, cyclic_orbits, degree_sequence, metrics, quotient, twin_orbits
from .linalg import Spectrum, symmetric_eigenvalues
from .polynomials import IntPoly, charpoly, real_roots
from .threshold import (CreationSequence, IntPartition, closed_form_creation_sequence, conjugate,
                        find_alternating_4cycle, graph_from_creation_sequence, laplacian_multiplicity_table,
                        laplacian_spectrum_threshold, peel_creation_sequence)
from .spectra import adjacency_mult_closed_form, classify_energy, conjecture_scan, energy, verify_thm6
from .orbits import bruteforce_aut_orbits, miller_orbit_count, ss_orbit_count_experimental

__version__ = "0.1.0"
