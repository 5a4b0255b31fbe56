"""Annihilator (b,c)-inverses and related generalized inverses in finite rings."""

from .inverses import (InverseCertificate, PreconditionError, SidedSolutionSet, TheoremViolation,
                       ann_bc_inverse, bc_inverse, compose_sided, core_inverse, drazin,
                       inverse_along, moore_penrose, regularize_lann, regularize_rann,
                       sided_ann_inverses, sided_bc_inverses)
from .ring import (FiniteRing, RingAxiomError, RingError, SizeCapError, adjoin_identity,
                   attach_involution, make_direct_product, make_johnson_ring, make_matrix_ring,
                   make_upper_triangular, make_zmod, subring_closure, transpose_involution,
                   validate_axioms)
from .sets import (SubsetMask, bicommutant, commutant, is_left_faithful, is_right_faithful,
                   left_annihilator, multiples, right_annihilator, ring_kernels, sandwich_set)

__version__ = "0.1.0"
