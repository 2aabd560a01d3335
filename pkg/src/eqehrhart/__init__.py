"""Equivariant Ehrhart theory: permutation characters of lattice points in
dilates of a polytope with a finite symmetry group, and the equivariant
h*-series that encodes them."""

from .ehrhart import (EhrhartSeries, QuasiPolynomial, VerificationMismatch, ehrhart_series,
                      eulerian_polynomial, hstar_data, quasi_polynomial, reciprocity_check)
from .equivariant import (EquivariantHStar, EquivariantInstance, InternalMismatch, NotASimplex,
                          box_points_hstar, chi_mP, chi_star_mP, criterion_all_fixed_lattice,
                          criterion_bad_element, criterion_face_fixed_points,
                          equivariant_hstar, equivariant_reciprocity_check,
                          free_sum_identity_check, leading_coefficients,
                          orbit_quasipolynomials, palindrome_reflexive_check, phi_at_one)
from .exact_arith import CyclotomicValue, IntPolynomial, PoleError, RationalFunction
from .fixed_locus import NotInvariant, fixed_polytope
from .lattice_group import (AffineLatticeAutomorphism, CharacterTable, ClassFunction,
                            FiniteMatrixGroup, character_table, generate_group)
from .polytope import EmptyPolytope, NotFullDimensional, RationalPolytope

__version__ = "0.1.0"
