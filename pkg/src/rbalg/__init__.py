"""Exact verification and construction of Rota-Baxter algebraic
structures: algebras and coalgebras with Rota-Baxter operators, their
bialgebras, matched pairs, Frobenius doubles, admissible Yang-Baxter
elements, O-operators and dendriform splittings.

All arithmetic is exact (rationals or a prime field); every axiom check
returns a report of residuals on basis tuples, and every constructive
statement of the theory is executable.
"""

from .algebra import (Algebra, BilinearForm, Coalgebra, Representation, check_associativity,
                      check_bimodule, check_coassociativity, direct_sum, direct_sum_coalgebra,
                      dual_bimodule, dualize, dualize_algebra, mult_operators)
from .bialgebra import (ASIBialgebra, FrobeniusData, MatchedPairData, RBASIBialgebra,
                        adjoint_operator, adjoint_wrt, build_double_construction,
                        build_matched_product, check_asi_bialgebra, check_frobenius,
                        check_matched_pair, check_rb_asi_bialgebra, check_triple_equivalence,
                        double_bialgebra, dual_bialgebra, induced_pair_from_duals, pairing_form,
                        restrict_bialgebra)
from .dendriform import (DendriformAlgebra, RBDendriform, associated_algebra, check_cocycle_pairing,
                         check_dendriform, check_manin_triple, check_rb_dendriform,
                         check_two_cocycle, dendriform_bialgebras, dendriform_rep,
                         four_bialgebras, induced_dendriform)
from .errors import (BudgetExceeded, DimensionMismatch, FieldMismatch, InvalidStructure,
                     KindMismatch, LiftPreconditionFailed, NotABialgebra, NotABimodule,
                     NotAMatchedPair, NotAntisymmetric, NotARBRepresentation, NotDendriform,
                     NotInvertible, NotQAdmissible, NotWeightZero, ParseError, RBError,
                     ResolutionError, SingularMatrix, UnknownCheck)
from .fields import GF2, GF3, PrimeField, QQ, Rationals
from .linalg import (Matrix, Tensor2, Tensor3, flip, invert, map_to_tensor, tensor_to_map,
                     transpose)
from .reports import CheckReport, EquivalenceReport
from .rota_baxter import (AdmissibleQuadruple, RBAlgebra, RBCoalgebra, RBRepresentation,
                          check_admissible, check_equivalence, check_rb_algebra,
                          check_rb_coalgebra, check_rb_representation, semidirect_product)
from .yang_baxter import (LiftResult, OOperatorData, PiSpec, RElement, admissibility_conditions,
                          aybe_residual, check_o_operator, check_weak_o_operator,
                          coboundary_conditions, coboundary_delta, connes_check,
                          connes_correspondence, cons2_bialgebra, frobenius_rb_correspondence,
                          lift_o_operator, omega_from_r, operator_form_check,
                          pi_admissible_check, r_from_p, semidirect_dual_admissibility)

__all__ = [name for name in dir() if not name.startswith("_")]
