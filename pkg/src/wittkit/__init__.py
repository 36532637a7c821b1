"""Exact computations with unimodular rows, alternating matrices and their
stabilized elementary equivalence over finitely presented k-algebras."""

from .fields import GF, QQ, Field
from .groebner import groebner_basis, ideal_membership
from .matrices import (AlternatingMatrix, ElementaryGenerator, ElementaryProduct, Matrix,
                       MatrixError, det, evaluate, factor_integer_sl, orth_sum, pfaffian,
                       verify_congruence)
from .poly import Poly, PolyRing, parse_poly
from .rings import RingElement, RingHom, RingPresentation, ZeroRingError, apply_hom, normal_form
from .symbols import (factorial_completion_3, pushforward, suslin_matrix, vaserstein_matrix,
                      vaserstein_symbol, verify_factorial_completion)
from .umrows import (RowWithSection, UnimodularColumn, UnimodularRow, act_left, act_right,
                     check_unimodular, find_elementary_reduction, power_last, section,
                     standard_column, standard_row, verify_elementary_reduction)
from .witt import (SLWitness, WittRepresentative, WittWitness, compose_witnesses,
                   elementary_symplectic, hyperbolic, hyperbolic_matrix, orbit_bruteforce, psi,
                   verify_transitivity_certificate, verify_witt_equiv, verify_wsl_equiv)

__version__ = "0.1.0"
