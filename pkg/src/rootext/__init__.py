"""Exact bounded root functionals of square polynomial systems and their
extension through Bezoutian determinants of difference derivatives."""

from .bezout import (BezoutConfig, BezoutKernel, bezout_poly, choice_addend_witness,
                     extend_step, product_functional, verify_commutativity)
from .diffderiv import (CovectorXY, DiscrepancyDecomposition, decompose_difference, nabla,
                        nabla_product, nabla_swapped)
from .errors import (ColumnCapExceeded, DegreeOverflowError, NotAnnihilatingError,
                     PreconditionError, TelescopingError)
from .functional import (Functional, apply_in_y, eval_functional, functional_apply,
                         functional_lincomb)
from .ideal import (BoundedRootBasis, MacaulayMatrix, MembershipWitness, annihilates,
                    macaulay_matrix, membership, root_functional_basis, truncated_generators)
from .ring import (MINUS_INFINITY, Poly, PolyParseError, PolyXY, SystemProfile, embed_x,
                   embed_y, poly_add, poly_eval, poly_mul, poly_parse, poly_print, poly_scale,
                   polyxy_parse, subst_swap_xy)

__version__ = "0.1.0"
