"""Euclid-reduced 2x2 integer matrices, sublattices of Z^2 and their sails."""

from .counting import (
    bad_count_formula,
    count_coprime_bruteforce,
    count_coprime_formula,
    count_reduced_bruteforce,
    count_reduced_formula,
    sequence,
    sublattice_count,
    sublattice_count_general,
)
from .enumeration import Orbit, Solution, enumerate_solutions, orbit_table
from .lattice import Sublattice2, Vec2, enumerate_sublattices, from_basis
from .mat2 import Mat2, det, in_P, is_euclid_reduced, reduce
from .sail import Sail, SailBasis, central_sailbasis, compute_sail, enumerate_bad, is_bad

__version__ = "0.1.0"

__all__ = [
    "Mat2", "Orbit", "Sail", "SailBasis", "Solution", "Sublattice2", "Vec2",
    "bad_count_formula", "central_sailbasis", "compute_sail", "count_coprime_bruteforce",
    "count_coprime_formula", "count_reduced_bruteforce", "count_reduced_formula", "det",
    "enumerate_bad", "enumerate_solutions", "enumerate_sublattices", "from_basis", "in_P",
    "is_bad", "is_euclid_reduced", "orbit_table", "reduce", "sequence", "sublattice_count",
    "sublattice_count_general",
]
